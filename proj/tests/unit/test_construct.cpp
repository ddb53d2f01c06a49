#include <doctest.h>

#include <set>

#include "gpres/condition_r.hpp"
#include "gpres/construct.hpp"

using namespace gpres;

namespace {
  Params small_params() {
    Params p;
    p.alpha = Rational(1, 3);
    p.h     = 2;
    p.d     = 2;
    p.n     = 3;
    return p;
  }

  GradedPresentation empty_to(Params const& prm, int rank) {
    GradedPresentation p(prm);
    for (int i = 1; i <= rank; ++i) {
      p.push_rank({});
    }
    return p;
  }

  // Independent filter: raw letter sequences, reduced, with a and b sums 1
  // and equal c sums.
  std::set<Word> brute_candidates(Alphabet const& ab, std::size_t len) {
    std::set<Word>     out;
    auto const         letters = ab.letter_count();
    std::vector<std::size_t> idx(len, 0);
    for (;;) {
      std::vector<Letter> raw;
      std::vector<long long> sums(ab.size(), 0);
      bool reduced = true;
      for (std::size_t k = 0; k < len; ++k) {
        Letter const l = Letter::from_code(static_cast<std::uint16_t>(idx[k]));
        if (!raw.empty() && raw.back() == l.inverse()) {
          reduced = false;
        }
        raw.push_back(l);
        sums[l.gen()] += l.is_inverse() ? -1 : 1;
      }
      bool ok = reduced && sums[0] == 1 && sums[1] == 1;
      for (std::size_t g = 3; g < sums.size(); ++g) {
        ok = ok && sums[g] == sums[2];
      }
      if (ok) {
        out.insert(Word::from_reduced(raw));
      }
      std::size_t k = 0;
      while (k < len && ++idx[k] == letters) {
        idx[k++] = 0;
      }
      if (k == len) {
        break;
      }
    }
    return out;
  }
}  // namespace

TEST_SUITE("construct") {
  TEST_CASE("period candidates match an independent filter") {
    auto const p = empty_to(small_params(), 1);
    BuildConfig const cfg;
    auto const two = period_candidates(p, 2, cfg);
    CHECK(two == std::vector<Word>{p.alphabet().parse("a b"), p.alphabet().parse("b a")});
    for (int i = 2; i <= 4; ++i) {
      auto const got = period_candidates(p, i, cfg);
      auto const want = brute_candidates(p.alphabet(), static_cast<std::size_t>(i));
      CHECK(std::set<Word>(got.begin(), got.end()) == want);
      CHECK(std::is_sorted(got.begin(), got.end()));
    }
    // odd ranks have no candidates: the length parity is even
    CHECK(period_candidates(p, 3, cfg).empty());
    auto const q = empty_to(Params{}, 2);
    CHECK(period_candidates(q, 3, cfg).empty());
    CHECK_THROWS_AS(period_candidates(q, 5, cfg), Error);
  }

  TEST_CASE("targeted candidates") {
    auto const p = empty_to(Params{}, 2);
    auto const& ab = p.alphabet();
    BuildConfig cfg;
    cfg.targeted = std::map<int, std::vector<Word>>{
        {4, {ab.parse("a c1 b c1'"), ab.parse("a a b a'"), ab.parse("a b a b")}}};
    auto const got = period_candidates(p, 4, cfg);
    // a b a b abelianizes to (2,2,...) and drops out
    CHECK(got == std::vector<Word>{ab.parse("a a b a'"), ab.parse("a c1 b c1'")});
    CHECK(period_candidates(p, 6, cfg).empty());
    cfg.targeted = std::map<int, std::vector<Word>>{{4, {ab.parse("a b")}}};
    CHECK_THROWS_AS(period_candidates(p, 4, cfg), Error);
  }

  TEST_CASE("period selection") {
    auto const p  = empty_to(small_params(), 1);
    auto const& ab = p.alphabet();
    BuildConfig const cfg;
    BuildLog log;
    auto const x = select_periods(p, 2, {ab.parse("a b"), ab.parse("b a")}, cfg, &log);
    REQUIRE(x.size() == 1);
    CHECK(x[0].word == ab.parse("a b"));
    CHECK(log.lines.size() == 1);
    CHECK(log.lines[0].find("clause 2 fail") != std::string::npos);
    CHECK(select_periods(p, 2, {}, cfg).empty());

    auto const q = empty_to(small_params(), 3);
    BuildLog   log4;
    // a a b a' is conjugate to a b, a word of smaller length
    auto const y = select_periods(q, 4, {ab.parse("a a b a'"), ab.parse("a c1 b c1'")}, cfg, &log4);
    REQUIRE(y.size() == 1);
    CHECK(y[0].word == ab.parse("a c1 b c1'"));
    CHECK(log4.lines[0].find("clause 1 fail") != std::string::npos);
  }

  TEST_CASE("minimal conjugate words") {
    auto const p  = empty_to(Params{}, 3);
    auto const& ab = p.alphabet();
    BuildConfig const cfg;
    CHECK(minimal_conjugate_words(p, 4, 2, {}, cfg) == std::vector<Word>{ab.parse("c2")});
    CHECK(minimal_conjugate_words(p, 4, 1, ab.parse("a"), cfg)
          == std::vector<Word>{ab.parse("a c1 a'")});
    BuildLog log;
    Word     z = ab.parse("a b a b a b a b a b a b a b a b");  // 2*16 + 1 >= 32
    CHECK(minimal_conjugate_words(p, 4, 1, z, cfg, &log).empty());
    CHECK(log.lines.size() == 1);

    // with [a, c1] = 1 at rank 1, a c1 a' shortens to c1
    GradedPresentation c(Params{});
    RankLayer          first;
    first.relators.push_back(Relator::raw(ab.parse("a c1 a' c1'"), 1));
    c.push_rank(std::move(first));
    c.push_rank({});
    c.push_rank({});
    BuildConfig small;
    small.solver.node_budget = 20000;
    CHECK(minimal_conjugate_words(c, 4, 1, ab.parse("a"), small) == std::vector<Word>{ab.parse("c1")});
  }

  TEST_CASE("build_relator") {
    auto const prm = small_params();
    Alphabet const ab(2);
    auto const r = build_relator(prm, ab.parse("a b"), {ab.parse("c1"), ab.parse("c2")});
    CHECK(r.flattened() == ab.parse("c1 b' a' b' a' b' a' c2 a b a b a b"));
    CHECK(r.flattened().size() == 14);
    CHECK(abelianize(ab, r.flattened()) == AbelianVector{0, 0, 1, 1});
    CHECK(r.exponents() == std::vector<long long>{-3, 3});
    CHECK_THROWS_AS(build_relator(prm, ab.parse("a b"), {ab.parse("c1")}), Error);
    CHECK_THROWS_AS(build_relator(prm, ab.parse("a b"), {ab.parse("c1 a a a"), ab.parse("c2")}), Error);
  }

  TEST_CASE("extend_rank with one period and small pools") {
    auto const prm = small_params();
    auto const p   = empty_to(prm, 3);
    auto const& ab = p.alphabet();
    BuildConfig cfg;
    cfg.targeted = std::map<int, std::vector<Word>>{{4, {ab.parse("a c1 b c1'")}}};
    auto const one = extend_rank(p, 4, ZPool::explicit_words({Word{}}), cfg);
    CHECK(one.layer(4).periods.size() == 1);
    CHECK(one.layer(4).relators.size() == 1);

    // ball(1): distinct relators up to cyclic conjugacy and inversion
    BuildLog   log;
    auto const many = extend_rank(p, 4, ZPool::ball(1), cfg, &log);
    auto const zs   = ZPool::ball(1).words(ab);
    std::set<CyclicWord> classes;
    for (auto const& z : zs) {
      std::vector<Word> t;
      for (int j = 1; j <= prm.h; ++j) {
        t.push_back(concat({z, Word::letter(Letter(ab.c(j), false)), invert(z)}));
      }
      auto const r = build_relator(prm, ab.parse("a c1 b c1'"), t, z);
      auto const x = cyclic_reduce(r.flattened()).core;
      auto const y = cyclic_reduce(invert(r.flattened())).core;
      classes.insert(std::min(x, y));
    }
    CHECK(many.layer(4).relators.size() == classes.size());
    CHECK(log.lines.size() == zs.size() - classes.size());
    CHECK_THROWS_AS(extend_rank(p, 5, ZPool::ball(0), cfg), Error);

    BuildConfig none;
    none.targeted = std::map<int, std::vector<Word>>{};
    CHECK(extend_rank(p, 4, ZPool::ball(1), none).layer(4).relators.empty());
  }

  TEST_CASE("build: free at rank 2, determinism, prefix property, invariants") {
    auto const prm = small_params();
    BuildConfig const cfg;
    auto const f = build(prm, 2, ZPool::ball(1), cfg);
    CHECK(f.relators_up_to(2).empty());
    CHECK_THROWS_AS(build(prm, 1, ZPool::ball(1), cfg), Error);

    auto const p4a = build(prm, 4, ZPool::ball(1), cfg);
    auto const p4b = build(prm, 4, ZPool::ball(1), cfg);
    CHECK(serialize(p4a) == serialize(p4b));
    CHECK(p4a.relator_count(4) > 0);
    auto const p3 = build(prm, 3, ZPool::ball(1), cfg);
    CHECK(serialize(p4a.truncated(3)) == serialize(p3));

    auto const& ab = p4a.alphabet();
    for (auto const* r : p4a.relators_up_to(4)) {
      CHECK(abelianize(ab, r->flattened()) == AbelianVector{0, 0, 1, 1});
      CHECK(r->exponents() == std::vector<long long>{-prm.n, prm.n});
      for (auto const& t : r->pieces()) {
        CHECK(t.size() < static_cast<std::size_t>(prm.d * r->rank()));
      }
    }
    for (auto const& x : p4a.layer(4).periods) {
      CHECK(x.word.size() == 4);
      CHECK(abelian_congruent(ab, x.word, ab.parse("a b"), std::vector<AbelianVector>{{0, 0, 1, 1}}));
    }
    CHECK(parse_presentation(serialize(p4a)) == p4a);
  }

  TEST_CASE("generated rank-4 presentation passes condition R") {
    BuildConfig const cfg;
    auto const p = build(Params{}, 4, ZPool::ball(1), cfg);
    CHECK(p.layer(4).periods.size() == 8);
    CHECK(p.relator_count(4) > 0);
    for (auto const* r : p.relators_up_to(4)) {
      CHECK(r->flattened().size() >= static_cast<std::size_t>(min_relator_length(p.params(), 4)));
    }
    auto const rep = check_presentation(p, cfg.solver);
    CHECK(!rep.any_fail());
    CHECK(rep.count(Outcome::Unknown) == 0);
  }

  TEST_CASE("period pool file") {
    Alphabet const ab(4);
    auto const pool = parse_period_pool(ab, "# pool\nrank 4\na c1 b c1'\n\nrank 6\na' b a b' a b\n");
    REQUIRE(pool.size() == 2);
    CHECK(pool.at(4) == std::vector<Word>{ab.parse("a c1 b c1'")});
    CHECK(pool.at(6).size() == 1);
    CHECK_THROWS_AS(parse_period_pool(ab, "a b\n"), ParseError);
    CHECK_THROWS_AS(parse_period_pool(ab, "rank 4\na b\n"), ParseError);
    CHECK_THROWS_AS(parse_period_pool(ab, "rank x\n"), ParseError);
  }
}
