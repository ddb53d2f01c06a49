#pragma once

// Equations w(x) = 1 over a graded presentation: words over the alphabet
// extended by one unknown x, the equations v(x) and w(x) of the
// construction, evaluation and censuses over balls.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gpres/presentation.hpp"
#include "gpres/solver.hpp"

namespace gpres {

  // A freely reduced word in H * <x>. The unknown x is stored as generator
  // index alphabet.size(), just past c_h.
  class Equation {
   public:
    Equation(Alphabet alphabet, Word word);

    Alphabet const& alphabet() const noexcept { return alphabet_; }
    Word const&     word() const noexcept { return word_; }
    Gen             x() const noexcept { return static_cast<Gen>(alphabet_.size()); }

    std::string format() const;

    bool operator==(Equation const&) const = default;

   private:
    Alphabet alphabet_;
    Word     word_;
  };

  Letter x_letter(Alphabet const& alphabet, bool inverse = false);

  // Word syntax plus the tokens `x` and `x'`.
  Equation parse_equation(Alphabet const& alphabet, std::string_view text);
  Equation load_equation(Alphabet const& alphabet, std::string const& path);

  Equation concat(Equation const& e1, Equation const& e2);

  // Replaces x by g and x^-1 by g^-1, then reduces.
  Word substitute(Equation const& eq, Word const& g);
  // Same, with an expression in x as the replacement.
  Equation substitute(Equation const& eq, Equation const& g);

  long long x_exponent_sum(Equation const& eq);

  // prod_j c_j (x^-1 a x b)^((-1)^j n)
  Equation make_v(Params const& params);
  // [c_1 v([a,x]) c_1^-1, v([b,x])] with [p, q] = p^-1 q^-1 p q
  Equation make_w(Params const& params);

  // Trivial: g is a certified solution; Nontrivial: a certified non-solution.
  Verdict eval_at(GradedPresentation const& p, Equation const& eq, Word const& g,
                  SolverConfig const& cfg);

  struct CensusEntry {
    std::string  element;
    VerdictValue verdict     = VerdictValue::Unknown;
    Obstruction  obstruction = Obstruction::None;
    std::string  note;
  };

  // Solutions are the Trivial entries, non-solutions the Nontrivial ones.
  struct CensusReport {
    std::size_t              radius = 0;
    std::vector<CensusEntry> entries;  // enumeration order

    std::size_t              count(VerdictValue v) const;
    std::vector<std::string> elements(VerdictValue v) const;
    std::size_t              solutions() const { return count(VerdictValue::Trivial); }
    std::size_t non_solutions() const { return count(VerdictValue::Nontrivial); }
    std::size_t unknowns() const { return count(VerdictValue::Unknown); }
    std::size_t total() const { return entries.size(); }

    // `<element> verdict=<v> obstruction=<o>` per entry, then a summary line.
    std::string format() const;
  };

  // Classifies every reduced word of length <= radius. With `dedup`, words
  // certified equal to an earlier word are skipped.
  CensusReport census(GradedPresentation const& p, Equation const& eq,
                      std::size_t radius, SolverConfig const& cfg,
                      bool dedup = false);

}  // namespace gpres
