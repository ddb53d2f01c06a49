#pragma once

// Free-group words over the alphabet {a, b, c1, ..., ch}.
//
// A letter is stored as a single code 2*g + s where g is the generator index
// (a = 0, b = 1, c_j = j + 1) and s = 1 for an inverse letter. Comparing
// codes therefore gives the fixed letter order a < a' < b < b' < c1 < ...,
// and the inverse of a letter is `code ^ 1`.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gpres {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class ParseError : public Error {
   public:
    using Error::Error;
  };

  using Gen = std::uint16_t;

  class Letter {
   public:
    constexpr Letter() = default;
    constexpr Letter(Gen gen, bool inverse)
        : code_(static_cast<std::uint16_t>(2 * gen + (inverse ? 1 : 0))) {}

    static constexpr Letter from_code(std::uint16_t code) {
      Letter l;
      l.code_ = code;
      return l;
    }

    constexpr Gen gen() const { return static_cast<Gen>(code_ >> 1); }
    constexpr bool is_inverse() const { return (code_ & 1U) != 0; }
    constexpr int sign() const { return is_inverse() ? -1 : 1; }
    constexpr std::uint16_t code() const { return code_; }
    constexpr Letter inverse() const {
      return from_code(static_cast<std::uint16_t>(code_ ^ 1U));
    }

    constexpr auto operator<=>(Letter const&) const = default;

   private:
    std::uint16_t code_ = 0;
  };

  // Freely reduced word. Equality is letter-sequence equality; ordering is
  // shortlex (length first, then lexicographic in letter order).
  class Word {
   public:
    Word() = default;

    // Freely reduces `raw`; no alphabet bound check.
    static Word reduce(std::span<Letter const> raw);
    // Wraps letters known to be reduced. Checked in debug builds only.
    static Word from_reduced(std::vector<Letter> letters);

    static Word letter(Letter l) { return from_reduced({l}); }
    static Word power(Word const& w, long long k);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    Letter front() const { return letters_.front(); }
    Letter back() const { return letters_.back(); }
    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }
    std::span<Letter const> letters() const noexcept { return letters_; }
    std::vector<Letter> const& vec() const noexcept { return letters_; }

    Word subword(std::size_t pos, std::size_t len) const;

    bool operator==(Word const& other) const = default;
    std::strong_ordering operator<=>(Word const& other) const;

   private:
    std::vector<Letter> letters_;
  };

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept;
  };

  class Alphabet {
   public:
    // h is the number of c-generators; it must be even and at least 2.
    explicit Alphabet(int h);

    int h() const noexcept { return h_; }
    // Number of generators, h + 2.
    std::size_t size() const noexcept {
      return static_cast<std::size_t>(h_) + 2;
    }
    std::size_t letter_count() const noexcept { return 2 * size(); }

    static constexpr Gen a() { return 0; }
    static constexpr Gen b() { return 1; }
    // c_j for j = 1..h.
    Gen c(int j) const;

    std::string gen_name(Gen g) const;
    std::string format(Letter l) const;
    std::string format(Word const& w) const;

    bool contains(Letter l) const noexcept { return l.gen() < size(); }
    void check(std::span<Letter const> letters) const;

    // Space-separated tokens `a`, `b`, `c1`..`c<h>`, trailing `'` for inverse;
    // `1` is the empty word. Throws ParseError.
    Word parse(std::string_view text) const;
    Letter parse_letter(std::string_view token) const;

    // Checked free reduction.
    Word reduce(std::span<Letter const> raw) const;

    bool operator==(Alphabet const&) const = default;

   private:
    int h_;
  };

  Word concat(Word const& x, Word const& y);
  Word concat(std::initializer_list<Word> parts);
  Word invert(Word const& w);
  // Cyclic shift: letters w[k..] followed by w[..k].
  Word rotate(Word const& w, std::size_t k);

  // A cyclically reduced word stored in its canonical (least) rotation.
  class CyclicWord {
   public:
    CyclicWord() = default;
    // `w` must be cyclically reduced.
    explicit CyclicWord(Word const& w);

    Word const& word() const noexcept { return canonical_; }
    std::size_t size() const noexcept { return canonical_.size(); }
    bool empty() const noexcept { return canonical_.empty(); }

    bool operator==(CyclicWord const&) const = default;
    auto operator<=>(CyclicWord const& o) const {
      return canonical_ <=> o.canonical_;
    }

   private:
    Word canonical_;
  };

  // Index of the lexicographically least rotation of `letters`.
  std::size_t least_rotation(std::span<Letter const> letters);

  bool is_cyclically_reduced(Word const& w);

  struct CyclicReduction {
    CyclicWord core;
    // w = conjugator * (core as stored rotation) * conjugator^-1.
    Word conjugator;
  };
  CyclicReduction cyclic_reduce(Word const& w);

  // Splits w = u * core * u^-1 with core cyclically reduced (no rotation).
  std::pair<Word, Word> cyclic_core(Word const& w);

  // Some Z with Z^-1 x Z = y in the free group, if x and y are conjugate.
  std::optional<Word> is_conjugate_free(Word const& x, Word const& y);

  struct PowerRoot {
    Word root;
    long long k = 1;
  };
  // root^k == w with k maximal. Throws on the empty word.
  PowerRoot proper_power_root(Word const& w);

  // Image in the free group on the generators outside `killed`.
  Word kill_generators(Word const& w, std::span<Gen const> killed);

  // Occurrence positions of `pattern` inside `text` (KMP).
  std::vector<std::size_t> find_all(std::span<Letter const> text,
                                    std::span<Letter const> pattern);

  // Shortlex enumeration of all freely reduced words of one length, over the
  // first `gens` generators (defaults to the whole alphabet).
  class ReducedWordEnumerator {
   public:
    ReducedWordEnumerator(Alphabet const& alphabet, std::size_t length);
    ReducedWordEnumerator(std::size_t gens, std::size_t length);

    // Next word in shortlex order, or nullopt when exhausted.
    std::optional<Word> next();

   private:
    bool advance_from(std::size_t pos);

    std::size_t letters_;
    std::size_t length_;
    std::vector<std::uint16_t> codes_;
    bool started_ = false;
    bool done_ = false;
  };

  std::vector<Word>
  enumerate_reduced(Alphabet const&                        alphabet,
                    std::size_t                            length,
                    std::function<bool(Word const&)> const& filter = {});

  // All reduced words of length <= radius, shortlex order.
  std::vector<Word> ball(Alphabet const& alphabet, std::size_t radius);

}  // namespace gpres
