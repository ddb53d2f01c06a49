#include "gpres/solver.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace gpres {

  namespace {
    __extension__ using u128 = unsigned __int128;

    // Polynomial hashing modulo 2^61 - 1.
    constexpr std::uint64_t kMod  = (std::uint64_t{1} << 61) - 1;
    constexpr std::uint64_t kBase = 1000003;

    std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
      u128          p = static_cast<u128>(a) * b;
      std::uint64_t r = static_cast<std::uint64_t>(p & kMod)
                        + static_cast<std::uint64_t>(p >> 61);
      return r >= kMod ? r - kMod : r;
    }

    std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
      std::uint64_t r = a + b;
      return r >= kMod ? r - kMod : r;
    }

    std::uint64_t submod(std::uint64_t a, std::uint64_t b) {
      return a >= b ? a - b : a + kMod - b;
    }

    std::vector<std::uint64_t> prefix_hashes(std::span<Letter const> s) {
      std::vector<std::uint64_t> h(s.size() + 1, 0);
      for (std::size_t i = 0; i < s.size(); ++i) {
        h[i + 1] = addmod(mulmod(h[i], kBase), s[i].code() + 1U);
      }
      return h;
    }

    std::uint64_t window(std::vector<std::uint64_t> const& h,
                         std::size_t                       i,
                         std::size_t                       m,
                         std::uint64_t                     pow_m) {
      return submod(h[i + m], mulmod(h[i], pow_m));
    }

    std::uint64_t power(std::uint64_t b, std::size_t e) {
      std::uint64_t r = 1;
      while (e > 0) {
        if ((e & 1U) != 0) {
          r = mulmod(r, b);
        }
        b = mulmod(b, b);
        e >>= 1U;
      }
      return r;
    }

    // C^s followed by C^s again, so every rotation is a contiguous window.
    std::vector<Letter> doubled(Word const& core, int sign) {
      Word const          c = sign > 0 ? core : invert(core);
      std::vector<Letter> d = c.vec();
      d.insert(d.end(), c.begin(), c.end());
      return d;
    }

    struct Splice {
      std::size_t keep_left;   // letters of the prefix that survive
      std::size_t mid_begin;   // surviving window of the inserted word
      std::size_t mid_end;
      std::size_t right_skip;  // letters of the suffix that cancel

      std::size_t length(std::size_t right_size) const {
        return keep_left + (mid_end - mid_begin) + (right_size - right_skip);
      }
    };

    // Free reduction of left * mid * right where each part is reduced;
    // cancellation only happens at the two junctions.
    Splice splice(std::span<Letter const> left,
                  std::span<Letter const> mid,
                  std::span<Letter const> right) {
      std::size_t i = left.size();
      std::size_t j = 0;
      std::size_t e = mid.size();
      std::size_t k = 0;
      while (i > 0 && j < e && left[i - 1] == mid[j].inverse()) {
        --i;
        ++j;
      }
      if (j < e) {
        while (e > j && k < right.size() && mid[e - 1] == right[k].inverse()) {
          --e;
          ++k;
        }
      }
      if (j == e) {
        while (i > 0 && k < right.size() && left[i - 1] == right[k].inverse()) {
          --i;
          ++k;
        }
      }
      return {i, j, e, k};
    }

    Word materialize(std::span<Letter const> left,
                     std::span<Letter const> mid,
                     std::span<Letter const> right,
                     Splice const&           s) {
      std::vector<Letter> out;
      out.reserve(s.length(right.size()));
      out.insert(out.end(), left.begin(), left.begin() + static_cast<std::ptrdiff_t>(s.keep_left));
      out.insert(out.end(), mid.begin() + static_cast<std::ptrdiff_t>(s.mid_begin),
                 mid.begin() + static_cast<std::ptrdiff_t>(s.mid_end));
      out.insert(out.end(), right.begin() + static_cast<std::ptrdiff_t>(s.right_skip),
                 right.end());
      return Word::from_reduced(std::move(out));
    }

    std::vector<Gen> c_generators(Alphabet const& ab) {
      std::vector<Gen> out;
      for (int j = 1; j <= ab.h(); ++j) {
        out.push_back(ab.c(j));
      }
      return out;
    }

    // Number of reduced words of length <= radius, saturating at `cap`.
    std::size_t ball_size(std::size_t letters, std::size_t radius, std::size_t cap) {
      std::size_t total = 1;
      std::size_t layer = letters;
      for (std::size_t r = 1; r <= radius; ++r) {
        total += layer;
        if (total > cap) {
          return cap + 1;
        }
        layer *= (letters - 1);
      }
      return total;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Config and text
  ////////////////////////////////////////////////////////////////////////

  void SolverConfig::validate() const {
    if (!(alpha > Rational(0) && alpha < Rational(1, 2))) {
      throw Error("solver: alpha must lie in (0, 1/2)");
    }
    if (node_budget < 1) {
      throw Error("solver: node budget must be >= 1");
    }
    if (max_intermediate_length && *max_intermediate_length < 1) {
      throw Error("solver: max intermediate length must be >= 1");
    }
  }

  SolverConfig SolverConfig::for_presentation(GradedPresentation const& p) {
    SolverConfig cfg;
    cfg.alpha = p.params().alpha;
    return cfg;
  }

  std::string to_string(VerdictValue v) {
    switch (v) {
      case VerdictValue::Trivial: return "trivial";
      case VerdictValue::Nontrivial: return "nontrivial";
      case VerdictValue::Unknown: return "unknown";
    }
    return "unknown";
  }

  std::string to_string(Obstruction o) {
    switch (o) {
      case Obstruction::None: return "none";
      case Obstruction::Abelian: return "abelian";
      case Obstruction::FreeQuotient: return "free-quotient";
      case Obstruction::LengthCutFree: return "length-cut-free";
      case Obstruction::FiniteQuotient: return "finite-quotient";
    }
    return "none";
  }

  std::string format_verdict(Alphabet const& alphabet, Verdict const& v) {
    std::ostringstream os;
    os << "verdict=" << to_string(v.value)
       << " obstruction=" << to_string(v.obstruction);
    if (v.residual) {
      os << " datum=" << v.residual->str();
    } else if (!v.witness.empty()) {
      os << " datum=\"" << alphabet.format(v.witness) << "\"";
    } else if (v.quotient_order != 0) {
      os << " datum=order:" << v.quotient_order;
    }
    if (v.trivial()) {
      os << " certificate=";
      if (v.certificate.empty()) {
        os << "-";
      }
      for (std::size_t i = 0; i < v.certificate.size(); ++i) {
        auto const& s = v.certificate[i];
        os << (i == 0 ? "" : ";") << '(' << s.index << ',' << s.position << ','
           << s.shift << ',' << s.sign << ')';
      }
    }
    if (v.unknown()) {
      os << " explored=" << v.explored;
    }
    if (v.conjugator) {
      os << " conjugator=\"" << alphabet.format(*v.conjugator) << "\"";
    }
    return os.str();
  }

  bool below_cut(std::size_t relator_length, std::size_t word_length,
                 Rational const& alpha) {
    // |R| < |w| / (1 - p/q)  <=>  |R| (q - p) < |w| q
    u128 lhs = static_cast<u128>(relator_length)
               * static_cast<u128>(alpha.den() - alpha.num());
    u128 rhs = static_cast<u128>(word_length) * static_cast<u128>(alpha.den());
    return lhs < rhs;
  }

  std::size_t conjugator_radius(std::size_t x_length, std::size_t y_length,
                                Rational const& alpha) {
    auto const r = (Rational(1, 2) + alpha)
                   * Rational(static_cast<std::int64_t>(x_length + y_length));
    return static_cast<std::size_t>(r.ceil());
  }

  std::vector<Relator const*> relevant_relators(GradedPresentation const& p,
                                                std::size_t word_length,
                                                SolverConfig const& cfg) {
    std::vector<Relator const*> out;
    for (auto const* r : p.relators_up_to(p.built_rank())) {
      if (below_cut(r->flattened().size(), word_length, cfg.alpha)) {
        out.push_back(r);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Dehn index
  ////////////////////////////////////////////////////////////////////////

  struct detail::DehnIndex {
    struct Entry {
      std::size_t rel;
      int         sign;
      std::size_t rot;
    };
    struct Group {
      std::size_t                                           m;
      std::uint64_t                                         pow_m;
      std::unordered_map<std::uint64_t, std::vector<Entry>> table;
    };

    std::vector<Word>                               cores;
    std::vector<std::array<std::vector<Letter>, 2>> twice;  // [rel][sign<0]
    std::vector<Group>                              groups;

    explicit DehnIndex(std::vector<Word> cs) : cores(std::move(cs)) {
      std::map<std::size_t, std::size_t> by_m;
      for (std::size_t i = 0; i < cores.size(); ++i) {
        twice.push_back({doubled(cores[i], 1), doubled(cores[i], -1)});
        std::size_t const len = cores[i].size();
        if (len == 0) {
          continue;
        }
        std::size_t const m = len / 2 + 1;
        auto [it, fresh]    = by_m.try_emplace(m, groups.size());
        if (fresh) {
          groups.push_back({m, power(kBase, m), {}});
        }
        Group& g = groups[it->second];
        for (int s = 0; s < 2; ++s) {
          auto const& d = twice[i][static_cast<std::size_t>(s)];
          auto const  h = prefix_hashes(d);
          for (std::size_t r = 0; r < len; ++r) {
            g.table[window(h, r, m, g.pow_m)].push_back({i, s == 0 ? 1 : -1, r});
          }
        }
      }
    }

    std::vector<Letter> const& letters(std::size_t rel, int sign) const {
      return twice[rel][sign > 0 ? 0 : 1];
    }

    // Leftmost subword of w longer than half a relator rotation; returns the
    // replacement step, or nullopt.
    std::optional<RelatorApplication> find(Word const& w) const {
      auto const h = prefix_hashes(w.letters());

      std::optional<RelatorApplication> best;
      std::size_t                       best_pos = w.size() + 1;
      std::size_t                       best_len = 0;
      for (auto const& g : groups) {
        if (w.size() < g.m) {
          continue;
        }
        for (std::size_t p = 0; p + g.m <= w.size() && p <= best_pos; ++p) {
          auto it = g.table.find(window(h, p, g.m, g.pow_m));
          if (it == g.table.end()) {
            continue;
          }
          for (auto const& e : it->second) {
            auto const&       d = letters(e.rel, e.sign);
            std::size_t const L = cores[e.rel].size();
            std::size_t       len = 0;
            while (len < L && p + len < w.size() && w[p + len] == d[e.rot + len]) {
              ++len;
            }
            if (len < g.m) {
              continue;  // hash collision
            }
            if (p < best_pos || (p == best_pos && len > best_len)) {
              best_pos = p;
              best_len = len;
              best     = RelatorApplication{e.rel, p, (L - e.rot) % L, -e.sign};
            }
          }
          if (best && best_pos == p) {
            break;
          }
        }
      }
      return best;
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Solver
  ////////////////////////////////////////////////////////////////////////

  Solver::Solver(GradedPresentation const& p, int rank, SolverConfig cfg)
      : p_(&p), rank_(rank), cfg_(std::move(cfg)), lattice_(p.alphabet().size()) {
    cfg_.validate();
    if (rank < 0 || rank > p.built_rank()) {
      throw Error("solver: rank " + std::to_string(rank)
                  + " exceeds built rank " + std::to_string(p.built_rank()));
    }
    relators_        = p.relators_up_to(rank);
    auto const kills = c_generators(p.alphabet());
    for (auto const* r : relators_) {
      cores_.push_back(cyclic_core(r->flattened()).second);
      lattice_.add(abelianize(p.alphabet(), r->flattened()));
      all_die_ = all_die_ && kill_generators(r->flattened(), kills).empty();
      longest_ = std::max(longest_, r->flattened().size());
    }
  }

  Solver::~Solver()                            = default;
  Solver::Solver(Solver&&) noexcept            = default;
  Solver& Solver::operator=(Solver&&) noexcept = default;

  std::vector<std::size_t> Solver::relevant(std::size_t word_length) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < relators_.size(); ++i) {
      if (below_cut(relators_[i]->flattened().size(), word_length, cfg_.alpha)) {
        out.push_back(i);
      }
    }
    return out;
  }

  bool Solver::free_up_to(std::size_t word_length) const {
    return relevant(word_length).empty();
  }

  detail::DehnIndex const& Solver::dehn_index() const {
    if (!dehn_) {
      dehn_ = std::make_unique<detail::DehnIndex>(cores_);
    }
    return *dehn_;
  }

  Word Solver::apply(Word const& w, RelatorApplication const& step) const {
    if (step.index >= cores_.size() || step.position > w.size()
        || (step.sign != 1 && step.sign != -1)) {
      throw Error("malformed relator application");
    }
    Word const& c = cores_[step.index];
    Word const  r = rotate(step.sign > 0 ? c : invert(c), c.empty() ? 0 : step.shift % c.size());
    auto const  left  = w.letters().subspan(0, step.position);
    auto const  right = w.letters().subspan(step.position);
    return materialize(left, r.letters(), right, splice(left, r.letters(), right));
  }

  Word Solver::replay(Word const& w, std::vector<RelatorApplication> const& cert) const {
    Word cur = w;
    for (auto const& s : cert) {
      cur = apply(cur, s);
    }
    return cur;
  }

  std::pair<Word, std::vector<RelatorApplication>>
  Solver::dehn_reduce(Word const& w) const {
    std::vector<RelatorApplication> steps;
    if (cores_.empty()) {
      return {w, steps};
    }
    auto const& index = dehn_index();
    Word        cur   = w;
    while (auto step = index.find(cur)) {
      cur = apply(cur, *step);
      steps.push_back(*step);
    }
    return {cur, steps};
  }

  std::optional<Verdict> Solver::obstruction(Word const& w) const {
    auto const& ab = p_->alphabet();
    auto        residual = lattice_.reduce(abelianize(ab, w));
    if (!residual.is_zero()) {
      Verdict v;
      v.value       = VerdictValue::Nontrivial;
      v.obstruction = Obstruction::Abelian;
      v.residual    = std::move(residual);
      return v;
    }
    if (all_die_) {
      auto const kills = c_generators(ab);
      Word       image = kill_generators(w, kills);
      if (!image.empty()) {
        Verdict v;
        v.value       = VerdictValue::Nontrivial;
        v.obstruction = Obstruction::FreeQuotient;
        v.witness     = std::move(image);
        return v;
      }
    }
    return std::nullopt;
  }

  Verdict Solver::bfs(Word const& w0, std::vector<std::size_t> const& rels,
                      std::size_t max_len) const {
    struct Node {
      std::size_t        parent;
      RelatorApplication step;
    };
    struct Move {
      std::size_t                rel;
      int                        sign;
      std::vector<Letter> const* letters;
      std::size_t                len;
    };

    std::vector<Move> moves;
    auto const&       index = dehn_index();
    for (std::size_t r : rels) {
      for (int s : {1, -1}) {
        moves.push_back({r, s, &index.letters(r, s), cores_[r].size()});
      }
    }

    std::vector<Node>                      nodes{{0, {}}};
    std::unordered_map<std::size_t, Word>  words{{0, w0}};
    std::unordered_set<Word, WordHash>     seen;
    std::size_t                            generated = 0;

    auto path_to = [&](std::size_t id) {
      std::vector<RelatorApplication> out;
      while (id != 0) {
        out.push_back(nodes[id].step);
        id = nodes[id].parent;
      }
      std::reverse(out.begin(), out.end());
      return out;
    };

    for (std::size_t id = 0; id < nodes.size(); ++id) {
      if (id != 0) {
        words.emplace(id, apply(words.at(nodes[id].parent), nodes[id].step));
      }
      Word const& cur = words.at(id);
      if (!seen.insert(cur).second) {
        continue;
      }
      for (auto const& mv : moves) {
        for (std::size_t shift = 0; shift < mv.len; ++shift) {
          std::span<Letter const> mid(mv.letters->data() + shift, mv.len);
          for (std::size_t pos = 0; pos <= cur.size(); ++pos) {
            auto const left  = cur.letters().subspan(0, pos);
            auto const right = cur.letters().subspan(pos);
            auto const sp    = splice(left, mid, right);
            std::size_t const len = sp.length(right.size());
            ++generated;
            RelatorApplication step{mv.rel, pos, shift, mv.sign};
            if (len == 0) {
              Verdict v;
              v.value       = VerdictValue::Trivial;
              v.certificate = path_to(id);
              v.certificate.push_back(step);
              v.explored = generated;
              return v;
            }
            if (len <= max_len) {
              nodes.push_back({id, step});
            }
            if (generated >= cfg_.node_budget) {
              Verdict v;
              v.explored = generated;
              v.reason   = "node budget exhausted";
              return v;
            }
          }
        }
      }
    }
    Verdict v;
    v.explored = generated;
    v.reason   = "search space exhausted under the length cap";
    return v;
  }

  Verdict Solver::is_identity(Word const& w) const {
    p_->alphabet().check(w.letters());
    Verdict out;
    if (w.empty()) {
      out.value = VerdictValue::Trivial;
    } else if (auto ob = obstruction(w)) {
      out = std::move(*ob);
    } else if (auto const rels = relevant(w.size()); rels.empty()) {
      out.value       = VerdictValue::Nontrivial;
      out.obstruction = Obstruction::LengthCutFree;
      out.witness     = w;
    } else {
      auto [reduced, steps] = dehn_reduce(w);
      if (reduced.empty()) {
        out.value       = VerdictValue::Trivial;
        out.certificate = std::move(steps);
      } else {
        std::size_t longest = 0;
        for (std::size_t r : rels) {
          longest = std::max(longest, relators_[r]->flattened().size());
        }
        std::size_t const cap = cfg_.max_intermediate_length.value_or(2 * w.size() + longest);
        out = bfs(reduced, rels, cap);
        if (out.trivial()) {
          steps.insert(steps.end(), out.certificate.begin(), out.certificate.end());
          out.certificate = std::move(steps);
        }
      }
    }
    if (cfg_.oracle_mode) {
      Verdict const o = brute_identity(*p_, rank_, w, cfg_.node_budget);
      if ((o.trivial() && out.nontrivial()) || (o.nontrivial() && out.trivial())) {
        throw Error("solver contradicts the brute-force oracle on "
                    + p_->alphabet().format(w));
      }
    }
    return out;
  }

  bool Solver::verify(Word const& w, Verdict const& v) const {
    auto const& ab = p_->alphabet();
    switch (v.value) {
      case VerdictValue::Trivial:
        return replay(w, v.certificate).empty();
      case VerdictValue::Unknown:
        return true;
      case VerdictValue::Nontrivial:
        break;
    }
    switch (v.obstruction) {
      case Obstruction::Abelian:
        return v.residual && !v.residual->is_zero()
               && *v.residual == lattice_.reduce(abelianize(ab, w));
      case Obstruction::FreeQuotient:
        return all_die_ && !v.witness.empty()
               && v.witness == kill_generators(w, c_generators(ab));
      case Obstruction::LengthCutFree:
        return !v.witness.empty() && v.witness == w && relevant(w.size()).empty();
      default:
        return false;
    }
  }

  Verdict Solver::are_conjugate(Word const& x, Word const& y) const {
    auto const& ab = p_->alphabet();
    ab.check(x.letters());
    ab.check(y.letters());
    Verdict out;
    if (x == y) {
      out.value      = VerdictValue::Trivial;
      out.conjugator = Word{};
      return out;
    }
    std::size_t const radius = cfg_.conjugator_radius_override.value_or(
        conjugator_radius(x.size(), y.size(), cfg_.alpha));

    if (free_up_to(x.size() + y.size() + 2 * radius)) {
      if (auto z = is_conjugate_free(x, y)) {
        out.value      = VerdictValue::Trivial;
        out.conjugator = std::move(z);
      } else {
        out.value       = VerdictValue::Nontrivial;
        out.obstruction = Obstruction::LengthCutFree;
        out.witness     = concat(x, invert(y));
        out.reason      = "cyclic cores differ and no relator is relevant";
      }
      return out;
    }
    auto residual = lattice_.reduce(abelianize(ab, x) - abelianize(ab, y));
    if (!residual.is_zero()) {
      out.value       = VerdictValue::Nontrivial;
      out.obstruction = Obstruction::Abelian;
      out.residual    = std::move(residual);
      return out;
    }
    if (all_die_) {
      auto const kills = c_generators(ab);
      Word const kx    = kill_generators(x, kills);
      Word const ky    = kill_generators(y, kills);
      if (!is_conjugate_free(kx, ky)) {
        out.value       = VerdictValue::Nontrivial;
        out.obstruction = Obstruction::FreeQuotient;
        out.witness     = concat(kx, invert(ky));
        out.reason      = "images without c-letters are not conjugate";
        return out;
      }
    }
    std::size_t const size = ball_size(ab.letter_count(), radius, cfg_.node_budget);
    if (size > cfg_.node_budget) {
      out.explored = 0;
      out.reason   = "conjugator ball of radius " + std::to_string(radius)
                   + " exceeds the node budget";
      return out;
    }
    bool        any_unknown = false;
    std::size_t explored    = 0;
    for (std::size_t len = 0; len <= radius; ++len) {
      ReducedWordEnumerator en(ab, len);
      while (auto z = en.next()) {
        Word const t = concat({invert(*z), x, *z, invert(y)});
        Verdict    v = is_identity(t);
        explored += 1 + v.explored;
        if (v.trivial()) {
          v.conjugator = std::move(*z);
          v.explored   = explored;
          return v;
        }
        any_unknown = any_unknown || v.unknown();
      }
    }
    out.explored = explored;
    if (any_unknown) {
      out.reason = "some conjugator tests were undecided";
    } else {
      out.value  = VerdictValue::Nontrivial;
      out.reason = "every conjugator within radius " + std::to_string(radius)
                 + " refuted";
    }
    return out;
  }

  std::pair<Word, Verdict> Solver::shortest_equal(Word const& w) const {
    auto const& ab = p_->alphabet();
    ab.check(w.letters());
    Verdict out;
    if (free_up_to(2 * w.size())) {
      out.value = VerdictValue::Trivial;
      return {w, out};
    }
    if (ball_size(ab.letter_count(), w.size(), cfg_.node_budget) > cfg_.node_budget) {
      out.reason = "shortlex scan exceeds the node budget";
      return {w, out};
    }
    bool any_unknown = false;
    for (std::size_t len = 0; len <= w.size(); ++len) {
      ReducedWordEnumerator en(ab, len);
      while (auto u = en.next()) {
        if (*u == w) {
          out.value = any_unknown ? VerdictValue::Unknown : VerdictValue::Trivial;
          if (any_unknown) {
            out.reason = "an earlier comparison was undecided";
          }
          return {w, out};
        }
        Verdict v = is_identity(concat(invert(*u), w));
        if (v.trivial()) {
          if (any_unknown) {
            v.value  = VerdictValue::Unknown;
            v.reason = "an earlier comparison was undecided";
          }
          return {*u, v};
        }
        any_unknown = any_unknown || v.unknown();
      }
    }
    return {w, out};  // unreachable: w itself is enumerated
  }

  ////////////////////////////////////////////////////////////////////////
  // Free functions
  ////////////////////////////////////////////////////////////////////////

  Verdict is_identity(GradedPresentation const& p, int rank, Word const& w,
                      SolverConfig const& cfg) {
    return Solver(p, rank, cfg).is_identity(w);
  }

  Verdict are_conjugate(GradedPresentation const& p, int rank, Word const& x,
                        Word const& y, SolverConfig const& cfg) {
    return Solver(p, rank, cfg).are_conjugate(x, y);
  }

  std::pair<Word, Verdict> shortest_equal(GradedPresentation const& p,
                                          int rank, Word const& w,
                                          SolverConfig const& cfg) {
    return Solver(p, rank, cfg).shortest_equal(w);
  }

  Word dehn_reduce(Word const& w, std::vector<Relator const*> const& relators) {
    std::vector<Word> cores;
    for (auto const* r : relators) {
      cores.push_back(cyclic_core(r->flattened()).second);
    }
    if (cores.empty()) {
      return w;
    }
    detail::DehnIndex const index(std::move(cores));
    Word                    cur = w;
    while (auto step = index.find(cur)) {
      Word const& c = index.cores[step->index];
      Word const  r = rotate(step->sign > 0 ? c : invert(c), step->shift);
      auto const  left  = cur.letters().subspan(0, step->position);
      auto const  right = cur.letters().subspan(step->position);
      cur = materialize(left, r.letters(), right, splice(left, r.letters(), right));
    }
    return cur;
  }

}  // namespace gpres
