#include "gpres/words.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <sstream>

namespace gpres {

  ////////////////////////////////////////////////////////////////////////
  // Word
  ////////////////////////////////////////////////////////////////////////

  Word Word::reduce(std::span<Letter const> raw) {
    Word out;
    out.letters_.reserve(raw.size());
    for (Letter l : raw) {
      if (!out.letters_.empty() && out.letters_.back() == l.inverse()) {
        out.letters_.pop_back();
      } else {
        out.letters_.push_back(l);
      }
    }
    return out;
  }

  Word Word::from_reduced(std::vector<Letter> letters) {
#ifndef NDEBUG
    for (std::size_t i = 1; i < letters.size(); ++i) {
      assert(letters[i] != letters[i - 1].inverse());
    }
#endif
    Word out;
    out.letters_ = std::move(letters);
    return out;
  }

  Word Word::power(Word const& w, long long k) {
    if (k == 0 || w.empty()) {
      return Word();
    }
    Word const base = k > 0 ? w : invert(w);
    auto const count = static_cast<std::size_t>(k > 0 ? k : -k);
    auto [u, core] = cyclic_core(base);
    std::vector<Letter> out;
    out.reserve(2 * u.size() + count * core.size());
    out.insert(out.end(), u.begin(), u.end());
    for (std::size_t i = 0; i < count; ++i) {
      out.insert(out.end(), core.begin(), core.end());
    }
    Word const ui = invert(u);
    out.insert(out.end(), ui.begin(), ui.end());
    return from_reduced(std::move(out));
  }

  Word Word::subword(std::size_t pos, std::size_t len) const {
    return from_reduced(std::vector<Letter>(
        letters_.begin() + static_cast<std::ptrdiff_t>(pos),
        letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
  }

  std::strong_ordering Word::operator<=>(Word const& other) const {
    if (auto c = size() <=> other.size(); c != 0) {
      return c;
    }
    return std::lexicographical_compare_three_way(letters_.begin(),
                                                  letters_.end(),
                                                  other.letters_.begin(),
                                                  other.letters_.end());
  }

  std::size_t WordHash::operator()(Word const& w) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Letter l : w) {
      h ^= l.code();
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  Alphabet::Alphabet(int h) : h_(h) {
    if (h < 2 || h % 2 != 0) {
      throw Error("alphabet: h must be an even integer >= 2, got "
                  + std::to_string(h));
    }
  }

  Gen Alphabet::c(int j) const {
    if (j < 1 || j > h_) {
      throw Error("alphabet: c-index out of range: " + std::to_string(j));
    }
    return static_cast<Gen>(j + 1);
  }

  std::string Alphabet::gen_name(Gen g) const {
    if (g == 0) {
      return "a";
    } else if (g == 1) {
      return "b";
    }
    return "c" + std::to_string(g - 1);
  }

  std::string Alphabet::format(Letter l) const {
    std::string s = gen_name(l.gen());
    if (l.is_inverse()) {
      s += '\'';
    }
    return s;
  }

  std::string Alphabet::format(Word const& w) const {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    out.reserve(w.size() * 3);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += format(w[i]);
    }
    return out;
  }

  void Alphabet::check(std::span<Letter const> letters) const {
    for (Letter l : letters) {
      if (!contains(l)) {
        throw Error("letter with generator index " + std::to_string(l.gen())
                    + " is outside an alphabet of " + std::to_string(size())
                    + " generators");
      }
    }
  }

  Letter Alphabet::parse_letter(std::string_view token) const {
    bool inverse = false;
    if (!token.empty() && token.back() == '\'') {
      inverse = true;
      token.remove_suffix(1);
    }
    if (token == "a") {
      return Letter(a(), inverse);
    } else if (token == "b") {
      return Letter(b(), inverse);
    } else if (token.size() >= 2 && token[0] == 'c') {
      int j = 0;
      auto [ptr, ec]
          = std::from_chars(token.data() + 1, token.data() + token.size(), j);
      if (ec == std::errc() && ptr == token.data() + token.size() && j >= 1
          && j <= h_) {
        return Letter(c(j), inverse);
      }
    }
    throw ParseError("unknown letter '" + std::string(token) + "'");
  }

  Word Alphabet::parse(std::string_view text) const {
    std::vector<Letter> raw;
    std::size_t         i      = 0;
    bool                seen_1 = false;
    while (i < text.size()) {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) {
        ++i;
      }
      std::size_t j = i;
      while (j < text.size() && text[j] != ' ' && text[j] != '\t') {
        ++j;
      }
      if (j > i) {
        auto token = text.substr(i, j - i);
        if (token == "1") {
          seen_1 = true;
        } else {
          raw.push_back(parse_letter(token));
        }
      }
      i = j;
    }
    if (seen_1 && !raw.empty()) {
      throw ParseError("'1' must stand alone in a word");
    }
    return Word::reduce(raw);
  }

  Word Alphabet::reduce(std::span<Letter const> raw) const {
    check(raw);
    return Word::reduce(raw);
  }

  ////////////////////////////////////////////////////////////////////////
  // Group operations
  ////////////////////////////////////////////////////////////////////////

  Word concat(Word const& x, Word const& y) {
    // Cancellation only happens at the junction.
    std::size_t k = 0;
    while (k < x.size() && k < y.size()
           && x[x.size() - 1 - k] == y[k].inverse()) {
      ++k;
    }
    std::vector<Letter> out;
    out.reserve(x.size() + y.size() - 2 * k);
    out.insert(out.end(), x.begin(), x.end() - static_cast<std::ptrdiff_t>(k));
    out.insert(out.end(), y.begin() + static_cast<std::ptrdiff_t>(k), y.end());
    return Word::from_reduced(std::move(out));
  }

  Word concat(std::initializer_list<Word> parts) {
    Word out;
    for (Word const& p : parts) {
      out = concat(out, p);
    }
    return out;
  }

  Word invert(Word const& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto it = w.vec().rbegin(); it != w.vec().rend(); ++it) {
      out.push_back(it->inverse());
    }
    return Word::from_reduced(std::move(out));
  }

  Word rotate(Word const& w, std::size_t k) {
    if (w.empty()) {
      return w;
    }
    k %= w.size();
    std::vector<Letter> out(w.begin() + static_cast<std::ptrdiff_t>(k),
                            w.end());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    // Rotating a cyclically reduced word keeps it reduced; otherwise reduce.
    return Word::reduce(out);
  }

  std::size_t least_rotation(std::span<Letter const> s) {
    std::size_t const n = s.size();
    if (n == 0) {
      return 0;
    }
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
      Letter const x = s[(i + k) % n];
      Letter const y = s[(j + k) % n];
      if (x == y) {
        ++k;
        continue;
      }
      if (x > y) {
        i += k + 1;
      } else {
        j += k + 1;
      }
      if (i == j) {
        ++j;
      }
      k = 0;
    }
    return std::min(i, j);
  }

  bool is_cyclically_reduced(Word const& w) {
    return w.size() <= 1 || w.front() != w.back().inverse();
  }

  CyclicWord::CyclicWord(Word const& w) {
    if (!is_cyclically_reduced(w)) {
      throw Error("CyclicWord: word is not cyclically reduced");
    }
    canonical_ = rotate(w, least_rotation(w.letters()));
  }

  std::pair<Word, Word> cyclic_core(Word const& w) {
    std::size_t t = 0;
    std::size_t n = w.size();
    while (2 * t + 1 < n && w[t] == w[n - 1 - t].inverse()) {
      ++t;
    }
    return {w.subword(0, t), w.subword(t, n - 2 * t)};
  }

  CyclicReduction cyclic_reduce(Word const& w) {
    auto [u, core] = cyclic_core(w);
    if (core.empty()) {
      return {CyclicWord(), Word()};
    }
    std::size_t const r = least_rotation(core.letters());
    Word const        p = core.subword(0, r);
    return {CyclicWord(core), concat(u, p)};
  }

  std::optional<Word> is_conjugate_free(Word const& x, Word const& y) {
    auto cx = cyclic_reduce(x);
    auto cy = cyclic_reduce(y);
    if (cx.core != cy.core) {
      return std::nullopt;
    }
    return concat(cx.conjugator, invert(cy.conjugator));
  }

  PowerRoot proper_power_root(Word const& w) {
    if (w.empty()) {
      throw Error("proper_power_root: empty word");
    }
    auto [u, core] = cyclic_core(w);
    std::size_t const        m = core.size();
    std::vector<std::size_t> pi(m, 0);
    for (std::size_t i = 1; i < m; ++i) {
      std::size_t k = pi[i - 1];
      while (k > 0 && core[i] != core[k]) {
        k = pi[k - 1];
      }
      if (core[i] == core[k]) {
        ++k;
      }
      pi[i] = k;
    }
    std::size_t const p = m - pi[m - 1];
    if (p == m || m % p != 0) {
      return {w, 1};
    }
    Word const r = core.subword(0, p);
    return {concat({u, r, invert(u)}), static_cast<long long>(m / p)};
  }

  Word kill_generators(Word const& w, std::span<Gen const> killed) {
    std::vector<Letter> kept;
    kept.reserve(w.size());
    for (Letter l : w) {
      if (std::find(killed.begin(), killed.end(), l.gen()) == killed.end()) {
        kept.push_back(l);
      }
    }
    return Word::reduce(kept);
  }

  std::vector<std::size_t> find_all(std::span<Letter const> text,
                                    std::span<Letter const> pattern) {
    std::vector<std::size_t> hits;
    std::size_t const        m = pattern.size();
    if (m == 0 || m > text.size()) {
      return hits;
    }
    std::vector<std::size_t> pi(m, 0);
    for (std::size_t i = 1; i < m; ++i) {
      std::size_t k = pi[i - 1];
      while (k > 0 && pattern[i] != pattern[k]) {
        k = pi[k - 1];
      }
      if (pattern[i] == pattern[k]) {
        ++k;
      }
      pi[i] = k;
    }
    std::size_t k = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      while (k > 0 && text[i] != pattern[k]) {
        k = pi[k - 1];
      }
      if (text[i] == pattern[k]) {
        ++k;
      }
      if (k == m) {
        hits.push_back(i + 1 - m);
        k = pi[k - 1];
      }
    }
    return hits;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  ReducedWordEnumerator::ReducedWordEnumerator(Alphabet const& alphabet,
                                               std::size_t     length)
      : ReducedWordEnumerator(alphabet.size(), length) {}

  ReducedWordEnumerator::ReducedWordEnumerator(std::size_t gens,
                                               std::size_t length)
      : letters_(2 * gens), length_(length), codes_(length, 0) {
    if (gens == 0 && length > 0) {
      done_ = true;
    }
  }

  // Sets codes_[pos..] to the least valid suffix; false if impossible.
  bool ReducedWordEnumerator::advance_from(std::size_t pos) {
    for (std::size_t i = pos; i < length_; ++i) {
      std::uint16_t c = 0;
      if (i > 0 && c == (codes_[i - 1] ^ 1U)) {
        ++c;
      }
      if (c >= letters_) {
        return false;
      }
      codes_[i] = c;
    }
    return true;
  }

  std::optional<Word> ReducedWordEnumerator::next() {
    if (done_) {
      return std::nullopt;
    }
    if (!started_) {
      started_ = true;
      if (!advance_from(0)) {
        done_ = true;
        return std::nullopt;
      }
    } else {
      // Increment the rightmost position that admits a larger valid code.
      std::size_t pos = length_;
      bool        ok  = false;
      while (pos > 0) {
        --pos;
        std::uint16_t c = codes_[pos] + 1;
        if (pos > 0 && c == (codes_[pos - 1] ^ 1U)) {
          ++c;
        }
        if (c < letters_) {
          codes_[pos] = c;
          if (advance_from(pos + 1)) {
            ok = true;
            break;
          }
        }
      }
      if (!ok) {
        done_ = true;
        return std::nullopt;
      }
    }
    std::vector<Letter> letters;
    letters.reserve(length_);
    for (auto c : codes_) {
      letters.push_back(Letter::from_code(c));
    }
    return Word::from_reduced(std::move(letters));
  }

  std::vector<Word>
  enumerate_reduced(Alphabet const&                        alphabet,
                    std::size_t                            length,
                    std::function<bool(Word const&)> const& filter) {
    std::vector<Word>     out;
    ReducedWordEnumerator it(alphabet, length);
    while (auto w = it.next()) {
      if (!filter || filter(*w)) {
        out.push_back(std::move(*w));
      }
    }
    return out;
  }

  std::vector<Word> ball(Alphabet const& alphabet, std::size_t radius) {
    std::vector<Word> out;
    for (std::size_t len = 0; len <= radius; ++len) {
      auto layer = enumerate_reduced(alphabet, len);
      out.insert(out.end(),
                 std::make_move_iterator(layer.begin()),
                 std::make_move_iterator(layer.end()));
    }
    return out;
  }

}  // namespace gpres
