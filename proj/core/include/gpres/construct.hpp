#pragma once

// Rank-by-rank generator for the periods X_i and relators
// R_{A,Z} = prod_j T_j A^((-1)^j n), with Z drawn from a finite pool.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gpres/presentation.hpp"
#include "gpres/solver.hpp"

namespace gpres {

  class ZPool {
   public:
    static ZPool ball(std::size_t radius);
    static ZPool explicit_words(std::vector<Word> words);

    bool        is_ball() const noexcept { return ball_; }
    std::size_t radius() const noexcept { return radius_; }
    // Pool members in shortlex order, without duplicates.
    std::vector<Word> words(Alphabet const& alphabet) const;

   private:
    bool              ball_   = true;
    std::size_t       radius_ = 0;
    std::vector<Word> words_;
  };

  struct BuildConfig {
    SolverConfig solver;
    // Candidate periods per rank; when set, ranks missing from the map get
    // no candidates and no exhaustive enumeration takes place.
    std::optional<std::map<int, std::vector<Word>>> targeted;
    int exhaustive_rank_cap = 4;
  };

  // Exclusions, tie-breaks and warnings, one line each.
  struct BuildLog {
    std::vector<std::string> lines;
    void add(std::string line) { lines.push_back(std::move(line)); }
    std::string str() const;
  };

  // Reduced words of length i congruent to ab modulo the commutator subgroup
  // and c_1 c_2 ... c_h, in shortlex order (or the filtered targeted pool).
  std::vector<Word> period_candidates(GradedPresentation const& p, int i,
                                      BuildConfig const& cfg);

  // Greedy shortlex pass keeping candidates that certifiably satisfy
  // clause 1 and are certifiably non-conjugate to every kept period and its
  // inverse. `p` must be built to rank i - 1 at least.
  std::vector<Period> select_periods(GradedPresentation const& p, int i,
                                     std::vector<Word> const& candidates,
                                     BuildConfig const& cfg,
                                     BuildLog* log = nullptr);

  // Minimal words of length < d i equal to Z c_j Z^-1 in G(i-1).
  std::vector<Word> minimal_conjugate_words(GradedPresentation const& p, int i,
                                            int j, Word const& z,
                                            BuildConfig const& cfg,
                                            BuildLog* log = nullptr);

  // prod_j T_j A^((-1)^j n) as a structured relator of rank |A|.
  Relator build_relator(Params const& params, Word const& period,
                        std::vector<Word> const& pieces, Word const& z = {});

  // Appends rank i = built_rank + 1.
  GradedPresentation extend_rank(GradedPresentation const& p, int i,
                                 ZPool const& pool, BuildConfig const& cfg,
                                 BuildLog* log = nullptr);

  GradedPresentation build(Params const& params, int max_rank,
                           ZPool const& pool, BuildConfig const& cfg,
                           BuildLog* log = nullptr);

  // Candidate periods file: `rank <i>` headers followed by one word per
  // line; blank lines and `#` comments are skipped.
  std::map<int, std::vector<Word>> parse_period_pool(Alphabet const& alphabet,
                                                     std::string_view text);
  std::map<int, std::vector<Word>> load_period_pool(Alphabet const& alphabet,
                                                    std::string const& path);

}  // namespace gpres
