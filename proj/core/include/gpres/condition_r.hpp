#pragma once

// Checker for condition R on a graded presentation: clauses 1 and 2 on the
// periods of each rank and R1..R6 on each relator. Every clause reports
// pass, fail (with a concrete witness) or unknown (with the reason).

#include <cstddef>
#include <string>
#include <vector>

#include "gpres/presentation.hpp"
#include "gpres/solver.hpp"

namespace gpres {

  enum class Outcome { Pass, Fail, Unknown };

  std::string to_string(Outcome o);

  struct ConditionResult {
    Outcome     outcome = Outcome::Pass;
    std::string detail;  // witness for fail, reason for unknown

    static ConditionResult pass(std::string note = {}) {
      return {Outcome::Pass, std::move(note)};
    }
    static ConditionResult fail(std::string witness) {
      return {Outcome::Fail, std::move(witness)};
    }
    static ConditionResult unknown(std::string reason) {
      return {Outcome::Unknown, std::move(reason)};
    }

    bool passed() const noexcept { return outcome == Outcome::Pass; }
    bool failed() const noexcept { return outcome == Outcome::Fail; }
  };

  // Folds b into a: fail beats unknown beats pass; the first witness wins.
  void combine(ConditionResult& a, ConditionResult const& b);

  struct RelatorR1ToR4 {
    ConditionResult r1, r2, r3, r4;
  };

  struct RelatorReport {
    int             rank  = 0;
    std::size_t     index = 0;  // position within its rank
    ConditionResult r1, r2, r3, r4, r5, r6;
  };

  struct PeriodReport {
    int             rank  = 0;
    std::size_t     index = 0;
    Word            word;
    ConditionResult clause1, clause2;
  };

  struct ConditionReport {
    std::vector<PeriodReport>  periods;
    std::vector<RelatorReport> relators;
    std::vector<std::string>   notes;

    std::size_t count(Outcome o) const;
    bool        any_fail() const { return count(Outcome::Fail) != 0; }
    bool        any_unknown() const { return count(Outcome::Unknown) != 0; }

    std::string format(GradedPresentation const& p) const;
  };

  // R1: |n_k| >= n. R2: max|n_i| / min|n_j| <= 1 + 1/(2h). R3: each T_k is
  // shortest in G(i-1) and |T_k| < d i. R4: T_k is not in <A> in G(i-1).
  // Throws when the relator does not belong to `p`.
  RelatorR1ToR4 check_R1_R2_R3_R4(GradedPresentation const& p,
                                  Relator const& relator,
                                  SolverConfig const& cfg);

  // Not a proper power, and every cyclic subword made of whole pieces with
  // at least alpha^-1 - 4 inner pieces extends uniquely.
  ConditionResult check_R5(GradedPresentation const& p, Relator const& relator);

  // Piecewise equal subwords of R and R'^(+-1) over the same period must be
  // literally the same subword of the same relator. Pairs with different
  // periods pass vacuously.
  ConditionResult check_R6(GradedPresentation const& p, Relator const& r,
                           Relator const& r_prime, SolverConfig const& cfg);

  // Clause 1 for a period x of rank i against `lower` = G(i-1): x is not
  // conjugate to a power of a shorter word.
  ConditionResult period_clause1(Solver const& lower, Word const& x, int i);
  // Clause 2 for one other period y: x is not conjugate to y or y^-1.
  ConditionResult period_clause2(Solver const& lower, Word const& x, Word const& y);

  // Clauses 1 and 2 for the periods of rank i.
  std::vector<PeriodReport> check_periods(GradedPresentation const& p, int i,
                                          SolverConfig const& cfg);

  ConditionReport check_presentation(GradedPresentation const& p,
                                     SolverConfig const& cfg);

}  // namespace gpres
