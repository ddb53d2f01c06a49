#include "gpres/condition_r.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

namespace gpres {

  std::string to_string(Outcome o) {
    switch (o) {
      case Outcome::Pass: return "pass";
      case Outcome::Fail: return "fail";
      case Outcome::Unknown: return "unknown";
    }
    return "?";
  }

  void combine(ConditionResult& a, ConditionResult const& b) {
    auto rank = [](Outcome o) {
      return o == Outcome::Fail ? 2 : o == Outcome::Unknown ? 1 : 0;
    };
    if (rank(b.outcome) > rank(a.outcome)) {
      a = b;
    }
  }

  namespace {
    std::string quote(Alphabet const& ab, Word const& w) {
      return "\"" + ab.format(w) + "\"";
    }

    long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

    // Closed integer interval.
    struct Interval {
      long long lo = 0;
      long long hi = -1;
      bool contains(long long x) const { return lo <= x && x <= hi; }
    };

    // Exponents available for a part of the block A^e.
    Interval part(long long e) { return {std::min(0LL, e), std::max(0LL, e)}; }

    Interval minus(Interval x, Interval y) { return {x.lo - y.hi, x.hi - y.lo}; }

    bool same_sign(long long x, long long y) { return (x > 0) == (y > 0); }

    // Values of m - m' with m a part of e, m' a part of e', where nonzero
    // parts must agree in sign.
    Interval boundary(long long e, long long e_prime) {
      if (same_sign(e, e_prime)) {
        return minus(part(e), part(e_prime));
      }
      Interval const x = part(e);
      Interval const y = part(e_prime);
      return {std::min(x.lo, -y.hi), std::max(x.hi, -y.lo)};
    }

    std::size_t locate(GradedPresentation const& p, Relator const& r) {
      if (r.rank() < 0 || r.rank() > p.built_rank()) {
        throw Error("relator does not belong to the presentation");
      }
      auto const& rels = p.layer(r.rank()).relators;
      for (std::size_t i = 0; i < rels.size(); ++i) {
        if (rels[i] == r) {
          return i;
        }
      }
      throw Error("relator does not belong to the presentation");
    }

    // Pieces and exponents of R^sign in the form prod T_k A^e_k.
    struct Shape {
      std::vector<Word>      pieces;
      std::vector<long long> exps;
    };

    Shape shape(Relator const& r, int sign) {
      Shape s{r.pieces(), r.exponents()};
      if (sign < 0) {
        // (T_1 A^e_1 ... T_h A^e_h)^-1 is a rotation of
        // T_h^-1 A^-e_(h-1) ... T_1^-1 A^-e_h.
        auto const h = s.pieces.size();
        Shape inv;
        for (std::size_t k = 0; k < h; ++k) {
          inv.pieces.push_back(invert(s.pieces[h - 1 - k]));
          inv.exps.push_back(-s.exps[(2 * h - 2 - k) % h]);
        }
        return inv;
      }
      return s;
    }

    // Reduced A^e_(s-1) T_s A^e_s ... T_(s+l) A^e_(s+l).
    Word whole_pieces(Word const& a, Shape const& sh, std::size_t s, std::size_t l) {
      auto const h = sh.pieces.size();
      std::vector<Word> parts{Word::power(a, sh.exps[(s + h - 1) % h])};
      for (std::size_t j = 0; j <= l; ++j) {
        parts.push_back(sh.pieces[(s + j) % h]);
        parts.push_back(Word::power(a, sh.exps[(s + j) % h]));
      }
      std::vector<Letter> raw;
      for (auto const& w : parts) {
        raw.insert(raw.end(), w.begin(), w.end());
      }
      return Word::reduce(raw);
    }

    // Cyclic occurrence positions of `pattern` in the cyclic word `core`.
    std::vector<std::size_t> cyclic_occurrences(Word const& core, Word const& pattern) {
      if (pattern.empty() || pattern.size() > core.size()) {
        return {};
      }
      std::vector<Letter> doubled(core.begin(), core.end());
      doubled.insert(doubled.end(), core.begin(), core.end() - 1);
      auto all = find_all(doubled, pattern.letters());
      std::erase_if(all, [&](std::size_t pos) { return pos >= core.size(); });
      return all;
    }

    Word trim(Word const& w, std::size_t t) {
      return w.size() > 2 * t ? w.subword(t, w.size() - 2 * t) : Word{};
    }

    // Clause 1 in a free group: X is conjugate to a power of a shorter word
    // iff its cyclic core is shorter than i or a proper power.
    bool free_clause1_fails(Word const& x, std::size_t i) {
      auto const core = cyclic_core(x).second;
      return core.size() < i || proper_power_root(core).k > 1;
    }

    class R6Checker {
     public:
      R6Checker(GradedPresentation const& p, int rank, SolverConfig const& cfg)
          : p_(p), solver_(p, rank - 1, cfg) {}

      ConditionResult check(Relator const& r, Relator const& rp) {
        if (!r.is_structured() || !rp.is_structured()) {
          return ConditionResult::unknown("raw relator without piece structure");
        }
        if (r.period() != rp.period() || r.rank() != rp.rank()) {
          return ConditionResult::pass("different periods");
        }
        ConditionResult out = inverse_subword(r);
        for (int sign : {1, -1}) {
          combine(out, pair(r, rp, sign));
          if (out.failed()) {
            break;
          }
        }
        return out;
      }

     private:
      struct Solution {
        long long s;
        bool      certain;
      };
      // P -> solutions (P, S) of T'^-1 A^P T A^-S = 1.
      struct SolSet {
        std::map<long long, std::vector<Solution>> by_p;
        std::string unknown;  // first undecided equality
      };

      std::size_t l_min() const {
        auto const bound = (p_.params().alpha.inverse() - Rational(2)).ceil();
        return static_cast<std::size_t>(std::max<std::int64_t>(0, bound));
      }

      SolSet const& solutions(Word const& a, Word const& t, Word const& tp) {
        auto key = std::make_tuple(a, t, tp);
        auto it  = cache_.find(key);
        if (it != cache_.end()) {
          return it->second;
        }
        SolSet out;
        auto const& ab  = p_.alphabet();
        auto const  k   = static_cast<long long>(
            ceil_div(static_cast<long long>(t.size() + tp.size()),
                     static_cast<long long>(a.size())) + 2);
        auto const base = abelianize(ab, t) - abelianize(ab, tp);
        auto const av   = abelianize(ab, a);
        Word const tpi  = invert(tp);
        for (long long pp = -k; pp <= k; ++pp) {
          for (long long s = -k; s <= k; ++s) {
            if (!solver_.lattice().contains(base + av * (pp - s))) {
              continue;
            }
            Word const w = concat({tpi, Word::power(a, pp), t, Word::power(a, -s)});
            auto const v = solver_.is_identity(w);
            if (v.trivial()) {
              out.by_p[pp].push_back({s, true});
            } else if (v.unknown()) {
              out.by_p[pp].push_back({s, false});
              if (out.unknown.empty()) {
                out.unknown = "is_identity(" + quote(ab, w) + ") unknown: " + v.reason;
              }
            }
          }
        }
        return cache_.emplace(std::move(key), std::move(out)).first->second;
      }

      // No subword V made of l_min + 1 whole pieces occurs in R^-1.
      ConditionResult inverse_subword(Relator const& r) {
        auto const h = r.pieces().size();
        auto const l = l_min();
        if (l + 2 > h) {
          return ConditionResult::pass();
        }
        auto const& ab    = p_.alphabet();
        Word const  inv   = cyclic_core(invert(r.flattened())).second;
        auto const  sh    = shape(r, 1);
        auto const  t     = static_cast<std::size_t>(p_.params().d) * static_cast<std::size_t>(r.rank());
        for (std::size_t s = 0; s < h; ++s) {
          std::vector<Letter> raw;
          for (std::size_t j = 0; j <= l; ++j) {
            auto const& piece = sh.pieces[(s + j) % h];
            raw.insert(raw.end(), piece.begin(), piece.end());
            if (j < l) {
              Word const ap = Word::power(r.period(), sh.exps[(s + j) % h]);
              raw.insert(raw.end(), ap.begin(), ap.end());
            }
          }
          Word const v = Word::reduce(raw);
          if (!cyclic_occurrences(inv, v).empty()) {
            return ConditionResult::fail("subword from piece " + std::to_string(s + 1)
                                         + " occurs in the inverse relator: " + quote(ab, v));
          }
          if (!cyclic_occurrences(inv, trim(v, t)).empty()) {
            return ConditionResult::unknown("trimmed subword from piece " + std::to_string(s + 1)
                                            + " occurs in the inverse relator");
          }
        }
        return ConditionResult::pass();
      }

      ConditionResult pair(Relator const& r, Relator const& rp, int sign) {
        auto const  h  = r.pieces().size();
        auto const  x  = shape(r, 1);
        auto const  y  = shape(rp, sign);
        auto const& a  = r.period();
        bool const  same_relator = sign > 0 && r == rp;
        ConditionResult out;
        unknown_pair_.reset();
        for (std::size_t l = l_min(); l + 1 <= h; ++l) {
          for (std::size_t k = 0; k < h; ++k) {
            for (std::size_t kp = 0; kp < h; ++kp) {
              auto const res = alignment(a, x, y, k, kp, l, same_relator);
              if (res.outcome == Outcome::Pass) {
                continue;
              }
              std::string const where = "V from piece " + std::to_string(k + 1)
                  + ", V' from piece " + std::to_string(kp + 1) + " of R'"
                  + (sign < 0 ? "^-1" : "") + ", l=" + std::to_string(l);
              if (res.outcome == Outcome::Fail) {
                return ConditionResult::fail(where + ": " + res.detail);
              }
              combine(out, ConditionResult::unknown(
                  where + ": " + unknown_pair_.value_or("undecided piece equality")));
            }
          }
        }
        return out;
      }

      // Decides whether some choice of partial end exponents and splits makes
      // every V_j = V'_j hold while V' differs from V.
      ConditionResult alignment(Word const& a, Shape const& x, Shape const& y,
                                std::size_t k, std::size_t kp, std::size_t l,
                                bool same_relator) {
        auto const h  = x.pieces.size();
        auto at       = [h](std::size_t base, std::size_t off) { return (base + off) % h; };
        bool identical = same_relator;
        for (std::size_t j = 0; j < l; ++j) {
          long long const e  = x.exps[at(k, j)];
          long long const ep = y.exps[at(kp, j)];
          if (!same_sign(e, ep)) {
            return ConditionResult::pass();
          }
          identical = identical && e == ep;
        }
        for (std::size_t j = 0; j <= l; ++j) {
          identical = identical && x.pieces[at(k, j)] == y.pieces[at(kp, j)];
        }

        // State: (P_0, S_j) -> every solution used so far was certain.
        std::map<std::pair<long long, long long>, bool> states;
        auto note = [this](SolSet const& set) {
          if (!unknown_pair_ && !set.unknown.empty()) {
            unknown_pair_ = set.unknown;
          }
        };
        auto const& first = solutions(a, x.pieces[k], y.pieces[kp]);
        note(first);
        for (auto const& [pp, sols] : first.by_p) {
          for (auto const& sol : sols) {
            auto& c = states[{pp, sol.s}];
            c       = c || sol.certain;
          }
        }
        for (std::size_t j = 1; j <= l && !states.empty(); ++j) {
          long long const e  = x.exps[at(k, j - 1)];
          long long const ep = y.exps[at(kp, j - 1)];
          Interval const  split = minus(part(ep), part(e));
          auto const& set = solutions(a, x.pieces[at(k, j)], y.pieces[at(kp, j)]);
          auto const& sol = set.by_p;
          note(set);
          std::map<std::pair<long long, long long>, bool> next;
          for (auto const& [key, certain] : states) {
            if (!split.contains(key.second)) {
              continue;
            }
            auto it = sol.find(e - ep + key.second);
            if (it == sol.end()) {
              continue;
            }
            for (auto const& s : it->second) {
              auto& c = next[{key.first, s.s}];
              c       = c || (certain && s.certain);
            }
          }
          states = std::move(next);
        }

        long long const b  = x.exps[at(k, h - 1)];
        long long const bp = y.exps[at(kp, h - 1)];
        long long const f  = x.exps[at(k, l)];
        long long const fp = y.exps[at(kp, l)];
        auto feasible = [&](long long p0, long long sl) {
          if (l + 1 < h) {
            return boundary(b, bp).contains(p0) && boundary(fp, f).contains(sl);
          }
          // V wraps around: m1 and m2 share the block A^b.
          for (long long m1 = part(b).lo; m1 <= part(b).hi; ++m1) {
            long long const m1p = m1 - p0;
            if (!part(bp).contains(m1p) || (m1 != 0 && m1p != 0 && !same_sign(m1, m1p))) {
              continue;
            }
            if (boundary(bp - m1p, b - m1).contains(sl)) {
              return true;
            }
          }
          return false;
        };

        std::optional<std::pair<long long, long long>> doubtful;
        for (auto const& [key, certain] : states) {
          if (!feasible(key.first, key.second)) {
            continue;
          }
          if (identical && key.first == 0 && key.second == 0) {
            continue;
          }
          if (certain) {
            return ConditionResult::fail("pieces equal with end shifts (" + std::to_string(key.first)
                                         + "," + std::to_string(key.second) + ") but V' differs from V");
          }
          doubtful = key;
        }
        if (doubtful) {
          return ConditionResult::unknown("undecided");
        }
        return ConditionResult::pass();
      }

      GradedPresentation const& p_;
      Solver                    solver_;
      std::map<std::tuple<Word, Word, Word>, SolSet> cache_;
      std::optional<std::string> unknown_pair_;
    };
  }  // namespace

  RelatorR1ToR4 check_R1_R2_R3_R4(GradedPresentation const& p,
                                  Relator const& relator,
                                  SolverConfig const& cfg) {
    locate(p, relator);
    RelatorR1ToR4 out;
    if (!relator.is_structured()) {
      auto const u = ConditionResult::unknown("raw relator without piece structure");
      out.r1 = out.r2 = out.r3 = out.r4 = u;
      return out;
    }
    auto const& ab   = p.alphabet();
    auto const& prm  = p.params();
    auto const& exps = relator.exponents();
    int const   rank = relator.rank();

    for (std::size_t k = 0; k < exps.size(); ++k) {
      if (std::llabs(exps[k]) < prm.n) {
        out.r1 = ConditionResult::fail("|n_" + std::to_string(k + 1) + "| = "
                                       + std::to_string(std::llabs(exps[k])) + " < "
                                       + std::to_string(prm.n));
        break;
      }
    }

    // max |n_i| * 2h <= min |n_j| * (2h + 1)
    long long lo = std::llabs(exps.front());
    long long hi = lo;
    for (auto e : exps) {
      lo = std::min(lo, std::llabs(e));
      hi = std::max(hi, std::llabs(e));
    }
    if (lo == 0 || hi * 2 * prm.h > lo * (2 * prm.h + 1)) {
      out.r2 = ConditionResult::fail("ratio " + std::to_string(hi) + "/" + std::to_string(lo)
                                     + " exceeds 1 + 1/(2h)");
    }

    Solver const solver(p, rank - 1, cfg);
    Word const&  a = relator.period();
    Lattice      span = solver.lattice();
    span.add(abelianize(ab, a));
    auto const& pieces = relator.pieces();
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      auto const&       t     = pieces[k];
      std::string const label = "T_" + std::to_string(k + 1) + " = " + quote(ab, t);

      if (t.size() >= static_cast<std::size_t>(prm.d) * static_cast<std::size_t>(rank)) {
        combine(out.r3, ConditionResult::fail(label + " has length " + std::to_string(t.size())
                                              + " >= d*i"));
      } else {
        auto const [u, v] = solver.shortest_equal(t);
        if (u.size() < t.size()) {
          combine(out.r3, ConditionResult::fail(label + " equals shorter " + quote(ab, u)));
        } else if (v.unknown()) {
          combine(out.r3, ConditionResult::unknown(label + ": " + v.reason));
        }
      }

      if (span.contains(abelianize(ab, t))) {
        long long const bound =
            ceil_div(static_cast<long long>(t.size()), static_cast<long long>(a.size())) + 1;
        for (long long e = -bound; e <= bound; ++e) {
          auto const v = solver.is_identity(concat(invert(t), Word::power(a, e)));
          if (v.trivial()) {
            combine(out.r4, ConditionResult::fail(label + " equals A^" + std::to_string(e)));
            break;
          }
          if (v.unknown()) {
            combine(out.r4, ConditionResult::unknown(label + " vs A^" + std::to_string(e)
                                                     + ": " + v.reason));
          }
        }
      }
    }
    return out;
  }

  ConditionResult check_R5(GradedPresentation const& p, Relator const& relator) {
    auto const& ab   = p.alphabet();
    Word const  core = cyclic_core(relator.flattened()).second;
    if (core.empty()) {
      return ConditionResult::fail("relator is trivial in the free group");
    }
    auto const root = proper_power_root(core);
    if (root.k > 1) {
      return ConditionResult::fail("proper power: (" + quote(ab, root.root) + ")^"
                                   + std::to_string(root.k));
    }
    if (!relator.is_structured()) {
      return ConditionResult::pass();
    }
    auto const h     = relator.pieces().size();
    auto const bound = (p.params().alpha.inverse() - Rational(4)).ceil();
    auto const l     = static_cast<std::size_t>(std::max<std::int64_t>(0, bound));
    if (l + 2 > h) {
      return ConditionResult::pass("no qualifying subword");
    }
    // Cancellation at the ends of V stays within one piece length.
    auto const t  = static_cast<std::size_t>(p.params().d) * static_cast<std::size_t>(relator.rank());
    auto const sh = shape(relator, 1);
    ConditionResult out;
    for (std::size_t s = 0; s < h; ++s) {
      Word const v   = whole_pieces(relator.period(), sh, s, l);
      auto const occ = cyclic_occurrences(core, v);
      if (occ.size() >= 2) {
        return ConditionResult::fail("subword from piece " + std::to_string(s + 1)
                                     + " occurs at cyclic positions " + std::to_string(occ[0])
                                     + " and " + std::to_string(occ[1]));
      }
      if (cyclic_occurrences(core, trim(v, t)).size() >= 2) {
        combine(out, ConditionResult::unknown("trimmed subword from piece "
                                              + std::to_string(s + 1) + " recurs"));
      }
    }
    return out;
  }

  ConditionResult check_R6(GradedPresentation const& p, Relator const& r,
                           Relator const& r_prime, SolverConfig const& cfg) {
    if (r.rank() < 1) {
      throw Error("check_R6: relator of rank 0");
    }
    R6Checker checker(p, r.rank(), cfg);
    return checker.check(r, r_prime);
  }

  ConditionResult period_clause1(Solver const& lower, Word const& x, int i) {
    auto const& ab = lower.presentation().alphabet();
    if (x.size() != static_cast<std::size_t>(i)) {
      return ConditionResult::fail("length " + std::to_string(x.size()) + " != rank");
    }
    if (lower.relators().empty()) {
      if (!free_clause1_fails(x, static_cast<std::size_t>(i))) {
        return ConditionResult::pass();
      }
      auto const core = cyclic_core(x).second;
      auto const root = core.empty() ? PowerRoot{} : proper_power_root(core);
      return ConditionResult::fail("conjugate to (" + quote(ab, root.root) + ")^"
                                   + std::to_string(root.k));
    }
    ConditionResult out;
    auto const      v0 = lower.is_identity(x);
    if (v0.trivial()) {
      return ConditionResult::fail("equals 1");
    }
    if (v0.unknown()) {
      combine(out, ConditionResult::unknown("is_identity: " + v0.reason));
    }
    for (std::size_t len = 1; len < static_cast<std::size_t>(i); ++len) {
      long long const kmax = ceil_div(i, static_cast<long long>(len)) + 1;
      ReducedWordEnumerator en(ab, len);
      while (auto u = en.next()) {
        for (long long k = 1; k <= kmax; ++k) {
          auto const v = lower.are_conjugate(x, Word::power(*u, k));
          if (v.trivial()) {
            return ConditionResult::fail("conjugate to (" + quote(ab, *u) + ")^"
                                         + std::to_string(k));
          }
          if (v.unknown()) {
            combine(out, ConditionResult::unknown("are_conjugate with (" + quote(ab, *u)
                                                  + ")^" + std::to_string(k) + ": " + v.reason));
          }
        }
      }
    }
    return out;
  }

  ConditionResult period_clause2(Solver const& lower, Word const& x, Word const& y) {
    auto const&     ab = lower.presentation().alphabet();
    ConditionResult out;
    for (int sign : {1, -1}) {
      auto const v = lower.are_conjugate(x, sign > 0 ? y : invert(y));
      std::string const label = "Y" + std::string(sign > 0 ? "" : "^-1") + " = " + quote(ab, y);
      if (v.trivial()) {
        return ConditionResult::fail("conjugate to " + label + " by "
                                     + quote(ab, v.conjugator.value_or(Word{})));
      }
      if (v.unknown()) {
        combine(out, ConditionResult::unknown(label + ": " + v.reason));
      }
    }
    return out;
  }

  std::vector<PeriodReport> check_periods(GradedPresentation const& p, int i,
                                          SolverConfig const& cfg) {
    if (i < 1 || i > p.built_rank()) {
      throw Error("check_periods: rank out of range");
    }
    auto const&   periods = p.layer(i).periods;
    Solver const  solver(p, i - 1, cfg);
    std::vector<PeriodReport> out;
    for (std::size_t xi = 0; xi < periods.size(); ++xi) {
      PeriodReport rep;
      rep.rank    = i;
      rep.index   = xi;
      rep.word    = periods[xi].word;
      rep.clause1 = period_clause1(solver, rep.word, i);
      for (std::size_t yi = 0; yi < periods.size(); ++yi) {
        if (yi != xi) {
          combine(rep.clause2, period_clause2(solver, rep.word, periods[yi].word));
        }
      }
      out.push_back(std::move(rep));
    }
    return out;
  }

  ConditionReport check_presentation(GradedPresentation const& p,
                                     SolverConfig const& cfg) {
    ConditionReport out;
    auto const& prm = p.params();
    for (int i = 1; i <= p.built_rank(); ++i) {
      auto const& layer = p.layer(i);
      if (!layer.periods.empty()) {
        auto reps = check_periods(p, i, cfg);
        out.periods.insert(out.periods.end(), reps.begin(), reps.end());
      }
      if (layer.relators.empty()) {
        continue;
      }
      R6Checker r6(p, i, cfg);
      std::size_t shortest = 0;
      bool        any_structured = false;
      for (std::size_t j = 0; j < layer.relators.size(); ++j) {
        auto const&   r = layer.relators[j];
        RelatorReport rep;
        rep.rank  = i;
        rep.index = j;
        auto four = check_R1_R2_R3_R4(p, r, cfg);
        rep.r1    = four.r1;
        rep.r2    = four.r2;
        rep.r3    = four.r3;
        rep.r4    = four.r4;
        rep.r5    = check_R5(p, r);
        for (auto const& rp : layer.relators) {
          combine(rep.r6, r6.check(r, rp));
          if (rep.r6.failed()) {
            break;
          }
        }
        if (r.is_structured()) {
          shortest = any_structured ? std::min(shortest, r.flattened().size())
                                    : r.flattened().size();
          any_structured = true;
        }
        out.relators.push_back(std::move(rep));
      }
      if (any_structured && i >= 3) {
        auto const bound = min_relator_length(prm, i);
        std::ostringstream note;
        note << "rank " << i << ": shortest relator " << shortest << ", lower bound h*i*(n-d-2) = "
             << bound << (i == 3 ? "" : " (extrapolated beyond rank 3)");
        out.notes.push_back(note.str());
      }
    }
    return out;
  }

  std::size_t ConditionReport::count(Outcome o) const {
    std::size_t c = 0;
    for (auto const& pr : periods) {
      c += (pr.clause1.outcome == o) + (pr.clause2.outcome == o);
    }
    for (auto const& r : relators) {
      for (auto const* x : {&r.r1, &r.r2, &r.r3, &r.r4, &r.r5, &r.r6}) {
        c += x->outcome == o;
      }
    }
    return c;
  }

  std::string ConditionReport::format(GradedPresentation const& p) const {
    auto show = [](ConditionResult const& r) {
      std::string s = to_string(r.outcome);
      if (r.outcome != Outcome::Pass && !r.detail.empty()) {
        s += "(" + r.detail + ")";
      }
      return s;
    };
    auto const&        prm = p.params();
    std::ostringstream out;
    out << "condition-R report built_rank=" << p.built_rank() << " alpha=" << prm.alpha.str()
        << " h=" << prm.h << " d=" << prm.d << " n=" << prm.n << "\n";
    for (auto const& pr : periods) {
      out << "period rank=" << pr.rank << " index=" << pr.index << " word=\""
          << p.alphabet().format(pr.word) << "\" clause1=" << show(pr.clause1)
          << " clause2=" << show(pr.clause2) << "\n";
    }
    for (auto const& r : relators) {
      out << "relator rank=" << r.rank << " index=" << r.index << " R1=" << show(r.r1)
          << " R2=" << show(r.r2) << " R3=" << show(r.r3) << " R4=" << show(r.r4)
          << " R5=" << show(r.r5) << " R6=" << show(r.r6) << "\n";
    }
    for (auto const& n : notes) {
      out << "note: " << n << "\n";
    }
    out << "summary periods=" << periods.size() << " relators=" << relators.size()
        << " pass=" << count(Outcome::Pass) << " fail=" << count(Outcome::Fail)
        << " unknown=" << count(Outcome::Unknown) << "\n";
    return out.str();
  }

}  // namespace gpres
