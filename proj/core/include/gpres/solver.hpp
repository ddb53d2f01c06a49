#pragma once

// Bounded word and conjugacy problems in a truncated graded presentation.
//
// Every procedure answers with a three-valued Verdict. Trivial carries a
// list of relator insertions that replays the input to the empty word;
// Nontrivial carries an obstruction whose datum can be re-checked; Unknown
// reports how much search was spent.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gpres/abelian.hpp"
#include "gpres/presentation.hpp"
#include "gpres/rational.hpp"
#include "gpres/words.hpp"

namespace gpres {

  struct SolverConfig {
    Rational                   alpha{3, 10};
    std::size_t                node_budget = 100000;
    std::optional<std::size_t> max_intermediate_length;
    std::optional<std::size_t> conjugator_radius_override;
    // Cross-check every identity verdict against brute_identity and throw
    // on a contradiction.
    bool oracle_mode = false;

    void validate() const;

    // Same config with alpha taken from the presentation.
    static SolverConfig for_presentation(GradedPresentation const& p);
  };

  enum class VerdictValue { Trivial, Nontrivial, Unknown };

  enum class Obstruction { None, Abelian, FreeQuotient, LengthCutFree, FiniteQuotient };

  std::string to_string(VerdictValue v);
  std::string to_string(Obstruction o);

  // Insert rotate(C^sign, shift) at `position` of the current word and
  // reduce, where C is the cyclic core of relator `index`.
  struct RelatorApplication {
    std::size_t index    = 0;
    std::size_t position = 0;
    std::size_t shift    = 0;
    int         sign     = 1;

    bool operator==(RelatorApplication const&) const = default;
  };

  struct Verdict {
    VerdictValue value = VerdictValue::Unknown;

    std::vector<RelatorApplication> certificate;

    Obstruction obstruction = Obstruction::None;
    // Abelian obstruction: residual of abelianize(w) modulo the relator lattice.
    std::optional<AbelianVector> residual;
    // Free-quotient / length-cut obstructions: the surviving nonempty word.
    Word witness;
    // Finite-quotient obstruction: order of the quotient used.
    std::size_t quotient_order = 0;

    // Unknown: states generated before the budget ran out.
    std::size_t explored = 0;
    std::string reason;

    // are_conjugate: Z with Z^-1 x Z = y.
    std::optional<Word> conjugator;

    bool trivial() const noexcept { return value == VerdictValue::Trivial; }
    bool nontrivial() const noexcept { return value == VerdictValue::Nontrivial; }
    bool unknown() const noexcept { return value == VerdictValue::Unknown; }
  };

  // One-line text record: verdict=... obstruction=... [datum=...]
  // [certificate=(i,pos,shift,sign);...] [explored=N] [conjugator="..."].
  std::string format_verdict(Alphabet const& alphabet, Verdict const& v);

  // Relators R with |R| < (1 - alpha)^-1 * word_length, compared exactly.
  std::vector<Relator const*> relevant_relators(GradedPresentation const& p,
                                                std::size_t word_length,
                                                SolverConfig const& cfg);
  bool below_cut(std::size_t relator_length, std::size_t word_length,
                 Rational const& alpha);

  // ceil((1/2 + alpha)(|x| + |y|)), the conjugator search radius.
  std::size_t conjugator_radius(std::size_t x_length, std::size_t y_length,
                                Rational const& alpha);

  namespace detail {
    struct DehnIndex;
  }

  class Solver {
   public:
    Solver(GradedPresentation const& p, int rank, SolverConfig cfg);
    ~Solver();
    Solver(Solver&&) noexcept;
    Solver& operator=(Solver&&) noexcept;

    GradedPresentation const& presentation() const noexcept { return *p_; }
    SolverConfig const&       config() const noexcept { return cfg_; }
    int                       rank() const noexcept { return rank_; }

    std::vector<Relator const*> const& relators() const noexcept {
      return relators_;
    }
    // Cyclic core of relator i, the word certificates rotate.
    Word const& core(std::size_t i) const { return cores_[i]; }
    Lattice const& lattice() const noexcept { return lattice_; }
    // Every relator maps to 1 once c_1..c_h are killed.
    bool relators_die_without_c() const noexcept { return all_die_; }

    // Indices of relators below the cut for words of this length.
    std::vector<std::size_t> relevant(std::size_t word_length) const;
    // No relator is relevant for words up to this length.
    bool free_up_to(std::size_t word_length) const;

    Verdict is_identity(Word const& w) const;
    Verdict are_conjugate(Word const& x, Word const& y) const;
    // (witness, verdict); see shortest_equal below.
    std::pair<Word, Verdict> shortest_equal(Word const& w) const;

    // Greedy Dehn shortening with the replacements it made.
    std::pair<Word, std::vector<RelatorApplication>>
    dehn_reduce(Word const& w) const;

    Word apply(Word const& w, RelatorApplication const& step) const;
    Word replay(Word const& w, std::vector<RelatorApplication> const& cert) const;

    // Re-checks a verdict produced for `w`: Trivial certificates must replay
    // to the empty word and obstruction data must be nonzero and consistent.
    bool verify(Word const& w, Verdict const& v) const;

   private:
    std::optional<Verdict> obstruction(Word const& w) const;
    Verdict bfs(Word const& w, std::vector<std::size_t> const& rels,
                std::size_t max_len) const;
    detail::DehnIndex const& dehn_index() const;

    GradedPresentation const*   p_;
    int                         rank_;
    SolverConfig                cfg_;
    std::vector<Relator const*> relators_;
    std::vector<Word>           cores_;
    Lattice                     lattice_;
    bool                        all_die_ = true;
    std::size_t                 longest_ = 0;
    mutable std::unique_ptr<detail::DehnIndex> dehn_;
  };

  Verdict is_identity(GradedPresentation const& p, int rank, Word const& w,
                      SolverConfig const& cfg);
  Verdict are_conjugate(GradedPresentation const& p, int rank, Word const& x,
                        Word const& y, SolverConfig const& cfg);
  // Scans reduced words in shortlex order up to w and returns the first one
  // certified equal to w. Verdict Trivial means the answer is decided;
  // Unknown means some earlier comparison was undecided or the scan was too
  // large for the budget.
  std::pair<Word, Verdict> shortest_equal(GradedPresentation const& p,
                                          int rank, Word const& w,
                                          SolverConfig const& cfg);
  Word dehn_reduce(Word const& w, std::vector<Relator const*> const& relators);

  // Independent oracle for tests: breadth-first search over relator
  // insertions (no shortcuts) for Trivial, and coset enumeration of the
  // group or of finite quotients of it for Nontrivial.
  Verdict brute_identity(GradedPresentation const& p, int rank, Word const& w,
                         std::size_t budget);

  // Brute-force conjugator search over all Z with |Z| <= radius in the free
  // group on the first `gens` generators (0 means the whole alphabet).
  std::optional<Word> brute_conjugator_free(Alphabet const& alphabet,
                                            Word const& x, Word const& y,
                                            std::size_t radius,
                                            std::size_t gens = 0);

}  // namespace gpres
