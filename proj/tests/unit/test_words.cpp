#include <doctest.h>

#include <random>
#include <set>

#include "gpres/abelian.hpp"
#include "gpres/rational.hpp"
#include "gpres/solver.hpp"
#include "gpres/words.hpp"

using namespace gpres;

namespace {
  Alphabet const h2(2);
  Alphabet const h4(4);

  Word w2(char const* s) { return h2.parse(s); }
  Word w4(char const* s) { return h4.parse(s); }

  std::vector<Word> words_up_to(Alphabet const& ab, std::size_t n) {
    return ball(ab, n);
  }
}  // namespace

TEST_SUITE("words") {
  TEST_CASE("letters order a < a' < b < b' < c1") {
    CHECK(h2.parse_letter("a") < h2.parse_letter("a'"));
    CHECK(h2.parse_letter("a'") < h2.parse_letter("b"));
    CHECK(h2.parse_letter("b'") < h2.parse_letter("c1"));
    CHECK(h2.parse_letter("c1").inverse() == h2.parse_letter("c1'"));
  }

  TEST_CASE("text syntax") {
    CHECK(h4.format(w4("a b' c1")) == "a b' c1");
    CHECK(h4.format(Word{}) == "1");
    CHECK(w4("1").empty());
    CHECK(w4("  ").empty());
    CHECK_THROWS_AS(h4.parse("c5"), ParseError);
    CHECK_THROWS_AS(h4.parse("x"), ParseError);
    CHECK_THROWS_AS(h4.parse("a''"), ParseError);
    CHECK_THROWS_AS(Alphabet(3), Error);
    CHECK_THROWS_AS(Alphabet(0), Error);
  }

  TEST_CASE("reduce examples") {
    Letter const a = h2.parse_letter("a"), A = a.inverse(), b = h2.parse_letter("b");
    std::vector<Letter> raw1{a, A, b};
    CHECK(Word::reduce(raw1) == w2("b"));
    CHECK(Word::reduce({}).empty());
    std::vector<Letter> raw2{a, b, b.inverse(), a};
    CHECK(Word::reduce(raw2) == w2("a a"));
    std::vector<Letter> bad{Letter(7, false)};
    CHECK_THROWS_AS(h2.reduce(bad), Error);
  }

  TEST_CASE("reduce is idempotent and never lengthens (all raw sequences up to 8 letters, h=2)") {
    std::vector<Letter> raw;
    std::size_t         checked = 0;
    for (std::size_t len = 0; len <= 8; ++len) {
      std::vector<std::uint16_t> codes(len, 0);
      for (;;) {
        raw.clear();
        for (auto c : codes) {
          raw.push_back(Letter::from_code(c));
        }
        Word const r = Word::reduce(raw);
        if (r.size() > len || Word::reduce(r.letters()) != r) {
          FAIL("reduce property broken");
        }
        ++checked;
        std::size_t i = 0;
        while (i < len && ++codes[i] == 8) {
          codes[i++] = 0;
        }
        if (i == len) {
          break;
        }
      }
    }
    CHECK(checked == 19173961);  // sum of 8^k for k = 0..8
  }

  TEST_CASE("concat and invert examples") {
    CHECK(concat(w2("a b"), w2("b'")) == w2("a"));
    CHECK(concat(w2("a"), w2("b")) == w2("a b"));
    CHECK(invert(w2("a b")) == w2("b' a'"));
    CHECK(invert(Word{}).empty());
    CHECK(invert(w2("c1")) == w2("c1'"));
  }

  TEST_CASE("group laws on reduced words") {
    auto const small = words_up_to(h2, 5);
    CHECK(small.size() == 22409);
    for (auto const& x : small) {
      REQUIRE(concat(x, invert(x)).empty());
      REQUIRE(concat(invert(x), x).empty());
      REQUIRE(concat(x, Word{}) == x);
      REQUIRE(concat(Word{}, x) == x);
      REQUIRE(invert(invert(x)) == x);
    }
    auto const tiny = words_up_to(h2, 2);
    for (auto const& x : tiny) {
      for (auto const& y : tiny) {
        Word const xy = concat(x, y);
        REQUIRE(xy.size() <= x.size() + y.size());
        for (auto const& z : tiny) {
          REQUIRE(concat(xy, z) == concat(x, concat(y, z)));
        }
      }
    }
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, small.size() - 1);
    for (int i = 0; i < 20000; ++i) {
      auto const& x = small[pick(rng)];
      auto const& y = small[pick(rng)];
      auto const& z = small[pick(rng)];
      REQUIRE(concat(concat(x, y), z) == concat(x, concat(y, z)));
    }
  }

  TEST_CASE("cyclic reduction") {
    auto const r1 = cyclic_reduce(w2("a b a'"));
    CHECK(r1.core.word() == w2("b"));
    CHECK(r1.conjugator == w2("a"));
    auto const r2 = cyclic_reduce(w2("a b"));
    CHECK(r2.core.word() == w2("a b"));
    CHECK(r2.conjugator.empty());
    CHECK(cyclic_reduce(h2.reduce(w2("a b").letters())).core.size() == 2);
    CHECK(cyclic_reduce(concat(w2("a b"), w2("b' a'"))).core.empty());

    for (auto const& w : words_up_to(h2, 4)) {
      auto const r = cyclic_reduce(w);
      REQUIRE(concat({r.conjugator, r.core.word(), invert(r.conjugator)}) == w);
      REQUIRE(is_cyclically_reduced(r.core.word()));
    }
  }

  TEST_CASE("canonical rotation puts positive letters first") {
    CHECK(CyclicWord(w2("b a")).word() == w2("a b"));
    CHECK(CyclicWord(w2("a' b")).word() == w2("a' b"));
    CHECK(CyclicWord(w2("b a'")).word() == w2("a' b"));
    // w and w^-1 stay distinct classes
    CHECK(CyclicWord(w2("a b")) != CyclicWord(invert(w2("a b"))));
    CHECK_THROWS(CyclicWord(w2("a b a'")));
  }

  TEST_CASE("free conjugacy examples") {
    auto z = is_conjugate_free(w2("a b a'"), w2("b"));
    REQUIRE(z);
    CHECK(*z == w2("a"));
    auto z2 = is_conjugate_free(w2("a b"), w2("b a"));
    REQUIRE(z2);
    CHECK(concat({invert(*z2), w2("a b"), *z2}) == w2("b a"));
    CHECK(!is_conjugate_free(w2("a"), w2("b")));
    CHECK(!is_conjugate_free(w2("a b"), w2("b' a'")));
  }

  TEST_CASE("free conjugacy agrees with brute-force conjugator search (h=2, lengths <= 2)") {
    auto const ws = words_up_to(h2, 2);
    for (auto const& x : ws) {
      for (auto const& y : ws) {
        auto const fast  = is_conjugate_free(x, y);
        auto const brute = brute_conjugator_free(h2, x, y, x.size() + y.size());
        REQUIRE(fast.has_value() == brute.has_value());
        if (fast) {
          REQUIRE(concat({invert(*fast), x, *fast}) == y);
        }
      }
    }
  }

  TEST_CASE("proper powers") {
    auto const p1 = proper_power_root(w2("a b a b"));
    CHECK(p1.root == w2("a b"));
    CHECK(p1.k == 2);
    auto const p2 = proper_power_root(w2("a"));
    CHECK(p2.root == w2("a"));
    CHECK(p2.k == 1);
    auto const p3 = proper_power_root(w2("a b a'"));
    CHECK(p3.root == w2("a b a'"));
    CHECK(p3.k == 1);
    auto const p4 = proper_power_root(w2("c1 a b a b c1'"));
    CHECK(p4.root == w2("c1 a b c1'"));
    CHECK(p4.k == 2);
    CHECK_THROWS(proper_power_root(Word{}));

    for (auto const& w : words_up_to(h2, 4)) {
      if (w.empty()) {
        continue;
      }
      auto const p = proper_power_root(w);
      REQUIRE(Word::power(p.root, p.k) == w);
      auto const core_w    = cyclic_core(w).second;
      auto const core_root = cyclic_core(p.root).second;
      REQUIRE(static_cast<std::size_t>(p.k) * core_root.size() == core_w.size());
      REQUIRE(proper_power_root(p.root).k == 1);
    }
    CHECK(proper_power_root(Word::power(w2("a b c1"), 3)).k == 3);
  }

  TEST_CASE("abelianization") {
    CHECK(abelianize(h4, w4("a b c1 a'")) == AbelianVector{0, 1, 1, 0, 0, 0});
    CHECK(abelianize(h4, Word{}).is_zero());
    CHECK(abelianize(h4, Word::power(w4("a b"), -3)) == AbelianVector{-3, -3, 0, 0, 0, 0});
    auto const ws = words_up_to(h2, 3);
    for (auto const& x : ws) {
      for (auto const& y : ws) {
        REQUIRE(abelianize(h2, concat(x, y)) == abelianize(h2, x) + abelianize(h2, y));
      }
    }
  }

  TEST_CASE("abelian congruence") {
    std::vector<AbelianVector> g4{AbelianVector{0, 0, 1, 1, 1, 1}};
    CHECK(abelian_congruent(h4, w4("a b"), w4("a b"), g4));
    CHECK(abelian_congruent(h4, w4("b a"), w4("a b"), g4));
    std::vector<AbelianVector> g2{AbelianVector{0, 0, 1, 1}};
    CHECK(!abelian_congruent(h2, w2("c1 c2"), w2("a b"), g2));
    CHECK(abelian_congruent(h2, w2("a c1 b c2"), w2("a b"), g2));
    CHECK(abelian_congruent(h2, w2("a c1' b c2'"), w2("a b"), g2));
  }

  TEST_CASE("lattice membership agrees with a brute-force span search") {
    std::vector<AbelianVector> gens{AbelianVector{2, 4, 0}, AbelianVector{0, 6, 3},
                                    AbelianVector{4, 2, 3}};
    Lattice const l(3, gens);
    std::set<std::vector<std::int64_t>> span;
    for (int i = -6; i <= 6; ++i) {
      for (int j = -6; j <= 6; ++j) {
        for (int k = -6; k <= 6; ++k) {
          span.insert((gens[0] * i + gens[1] * j + gens[2] * k).values());
        }
      }
    }
    for (int x = -4; x <= 4; ++x) {
      for (int y = -4; y <= 4; ++y) {
        for (int z = -4; z <= 4; ++z) {
          AbelianVector v{x, y, z};
          REQUIRE(l.contains(v) == (span.count(v.values()) != 0));
        }
      }
    }
  }

  TEST_CASE("killing generators") {
    std::vector<Gen> const cs{h4.c(1), h4.c(2), h4.c(3), h4.c(4)};
    CHECK(kill_generators(w4("a c1 b c2'"), cs) == w4("a b"));
    CHECK(kill_generators(w4("c1 c2"), cs).empty());
    CHECK(kill_generators(w4("b a' c1 a"), cs) == w4("b"));

    std::vector<Gen> const c2{h2.c(1), h2.c(2)};
    auto const ws = words_up_to(h2, 3);
    for (auto const& x : ws) {
      auto const ax = abelianize(h2, x);
      auto const ak = abelianize(h2, kill_generators(x, c2));
      REQUIRE(ak == AbelianVector{ax[0], ax[1], 0, 0});
      for (auto const& y : ws) {
        REQUIRE(kill_generators(concat(x, y), c2)
                == concat(kill_generators(x, c2), kill_generators(y, c2)));
      }
    }
  }

  TEST_CASE("enumeration of reduced words") {
    auto const one = enumerate_reduced(h2, 1);
    CHECK(one.size() == 8);
    CHECK(h2.format(one.front()) == "a");
    CHECK(h2.format(one.back()) == "c2'");
    auto const zero = enumerate_reduced(h2, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());
    auto const ab = enumerate_reduced(h2, 2, [](Word const& w) {
      return abelianize(h2, w) == AbelianVector{1, 1, 0, 0};
    });
    CHECK(ab == std::vector<Word>{w2("a b"), w2("b a")});

    for (std::size_t len = 1; len <= 5; ++len) {
      auto const all = enumerate_reduced(h2, len);
      std::size_t expected = 8;
      for (std::size_t i = 1; i < len; ++i) {
        expected *= 7;
      }
      REQUIRE(all.size() == expected);
      REQUIRE(std::is_sorted(all.begin(), all.end()));
      REQUIRE(std::adjacent_find(all.begin(), all.end()) == all.end());
      for (auto const& w : all) {
        REQUIRE(w.size() == len);
        REQUIRE(Word::reduce(w.letters()) == w);
      }
    }
  }

  TEST_CASE("rationals") {
    CHECK(Rational::parse("3/10") == Rational(3, 10));
    CHECK(Rational::parse("6/20").str() == "3/10");
    CHECK(Rational(10, 3).ceil() == 4);
    CHECK(Rational(9, 3).ceil() == 3);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(1, 3) < Rational(3, 8));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("0.3"));
  }
}
