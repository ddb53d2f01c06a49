#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "gpres/coset.hpp"
#include "gpres/solver.hpp"

namespace gpres {

  namespace {
    struct Localized {
      std::vector<Gen>      gens;   // alphabet generators that occur in relators
      std::map<Gen, Gen>    local;  // alphabet generator -> local index
      std::vector<Word>     relators;
    };

    Word to_local(Word const& w, std::map<Gen, Gen> const& local) {
      std::vector<Letter> out;
      for (Letter l : w) {
        out.emplace_back(local.at(l.gen()), l.is_inverse());
      }
      return Word::from_reduced(std::move(out));
    }

    Localized localize(std::vector<Relator const*> const& rels) {
      Localized out;
      std::set<Gen> used;
      for (auto const* r : rels) {
        for (Letter l : r->flattened()) {
          used.insert(l.gen());
        }
      }
      out.gens.assign(used.begin(), used.end());
      for (std::size_t i = 0; i < out.gens.size(); ++i) {
        out.local[out.gens[i]] = static_cast<Gen>(i);
      }
      for (auto const* r : rels) {
        out.relators.push_back(to_local(r->flattened(), out.local));
      }
      return out;
    }

    // Normal form of w in Q * F, where Q is given by a coset table on the
    // relator generators and F is free on the remaining ones. Returns true
    // iff w maps to the identity.
    bool trivial_in_free_product(Word const& w, CosetTable const& q,
                                 std::map<Gen, Gen> const& local) {
      struct Syllable {
        bool        in_q;
        Letter      letter;    // free letter
        std::size_t element;   // element of Q, never the identity
      };
      std::vector<Syllable> stack;
      for (Letter l : w) {
        auto it = local.find(l.gen());
        if (it != local.end()) {
          Letter const ll(it->second, l.is_inverse());
          std::size_t  e = 0;
          if (!stack.empty() && stack.back().in_q) {
            e = stack.back().element;
            stack.pop_back();
          }
          e = q.act(e, ll);
          if (e != 0) {
            stack.push_back({true, Letter{}, e});
          }
        } else if (!stack.empty() && !stack.back().in_q
                   && stack.back().letter == l.inverse()) {
          stack.pop_back();
        } else {
          stack.push_back({false, l, 0});
        }
      }
      return stack.empty();
    }

    // Extra relators u^k for every reduced u of length 1 or 2.
    std::vector<Word> power_relators(std::size_t gens, long long k) {
      std::vector<Word> out;
      for (std::size_t len = 1; len <= 2; ++len) {
        ReducedWordEnumerator en(gens, len);
        while (auto u = en.next()) {
          out.push_back(Word::power(*u, k));
        }
      }
      return out;
    }
  }  // namespace

  Verdict brute_identity(GradedPresentation const& p, int rank, Word const& w,
                         std::size_t budget) {
    p.alphabet().check(w.letters());
    if (rank < 0 || rank > p.built_rank()) {
      throw Error("brute_identity: rank exceeds built rank");
    }
    Verdict out;
    if (w.empty()) {
      out.value = VerdictValue::Trivial;
      return out;
    }
    auto const rels = p.relators_up_to(rank);
    if (rels.empty()) {
      out.value       = VerdictValue::Nontrivial;
      out.obstruction = Obstruction::FreeQuotient;
      out.witness     = w;
      return out;
    }

    // Plain breadth-first search over insertions of relator rotations.
    std::vector<Word> cores;
    std::size_t       longest = 0;
    for (auto const* r : rels) {
      cores.push_back(cyclic_core(r->flattened()).second);
      longest = std::max(longest, cores.back().size());
    }
    std::size_t const cap = 2 * w.size() + longest;
    std::map<Word, std::pair<Word, RelatorApplication>> parent;
    std::deque<Word>                                    queue{w};
    parent.emplace(w, std::make_pair(w, RelatorApplication{}));
    bool found = false;
    while (!queue.empty() && !found && parent.size() < budget) {
      Word const cur = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < cores.size() && !found; ++i) {
        for (int sign : {1, -1}) {
          Word const c = sign > 0 ? cores[i] : invert(cores[i]);
          for (std::size_t shift = 0; shift < c.size() && !found; ++shift) {
            Word const rot = rotate(c, shift);
            for (std::size_t pos = 0; pos <= cur.size(); ++pos) {
              Word next = concat({cur.subword(0, pos), rot,
                                  cur.subword(pos, cur.size() - pos)});
              if (next.size() > cap || parent.count(next) != 0) {
                continue;
              }
              parent.emplace(next, std::make_pair(cur, RelatorApplication{i, pos, shift, sign}));
              if (next.empty()) {
                found = true;
                break;
              }
              queue.push_back(std::move(next));
            }
          }
          if (found) {
            break;
          }
        }
      }
    }
    if (found) {
      out.value = VerdictValue::Trivial;
      Word cur;
      while (cur != w) {
        auto const& [prev, step] = parent.at(cur);
        out.certificate.push_back(step);
        cur = prev;
      }
      std::reverse(out.certificate.begin(), out.certificate.end());
      out.explored = parent.size();
      return out;
    }

    // Coset enumeration: the group itself, then finite quotients.
    auto const loc   = localize(rels);
    auto const limit = std::max<std::size_t>(budget, 64);
    if (auto table = enumerate_cosets(loc.gens.size(), loc.relators, limit)) {
      bool const t = trivial_in_free_product(w, *table, loc.local);
      out.value    = t ? VerdictValue::Trivial : VerdictValue::Nontrivial;
      if (!t) {
        out.obstruction    = Obstruction::FiniteQuotient;
        out.quotient_order = table->size();
      }
      out.reason = "coset enumeration of the whole group";
      return out;
    }
    for (long long k = 2; k <= 8; ++k) {
      auto extra = power_relators(loc.gens.size(), k);
      extra.insert(extra.end(), loc.relators.begin(), loc.relators.end());
      auto table = enumerate_cosets(loc.gens.size(), extra, limit);
      if (table && !trivial_in_free_product(w, *table, loc.local)) {
        out.value          = VerdictValue::Nontrivial;
        out.obstruction    = Obstruction::FiniteQuotient;
        out.quotient_order = table->size();
        out.reason         = "nontrivial in a finite quotient";
        return out;
      }
    }
    out.explored = parent.size();
    out.reason   = "budget exhausted";
    return out;
  }

  std::optional<Word> brute_conjugator_free(Alphabet const& alphabet,
                                            Word const& x, Word const& y,
                                            std::size_t radius,
                                            std::size_t gens) {
    alphabet.check(x.letters());
    alphabet.check(y.letters());
    std::size_t const letters = 2 * (gens == 0 ? alphabet.size() : gens);
    std::vector<Letter> z;

    // Depth-first over reduced Z, pruning when Z^-1 x Z is too long to reach y.
    std::optional<Word> found;
    auto dfs = [&](auto&& self, Word const& conj) -> void {
      if (found) {
        return;
      }
      if (conj == y) {
        found = Word::from_reduced(z);
        return;
      }
      std::size_t const remaining = radius - z.size();
      if (remaining == 0 || conj.size() > y.size() + 2 * remaining) {
        return;
      }
      for (std::uint16_t code = 0; code < letters; ++code) {
        Letter const l = Letter::from_code(code);
        if (!z.empty() && z.back() == l.inverse()) {
          continue;
        }
        z.push_back(l);
        Word const lw = Word::letter(l);
        self(self, concat({invert(lw), conj, lw}));
        z.pop_back();
        if (found) {
          return;
        }
      }
    };
    dfs(dfs, x);
    return found;
  }

}  // namespace gpres
