#pragma once

// Graded presentations: parameters, periods, relators and the rank filtration
// R_0 <= R_1 <= ... together with the line-oriented text format.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gpres/abelian.hpp"
#include "gpres/rational.hpp"
#include "gpres/words.hpp"

namespace gpres {

  struct Params {
    Rational alpha{3, 10};
    int      h = 4;
    int      d = 8;
    int      n = 256;

    // Throws Error when a hard invariant fails (0 < alpha < 1/2, h even and
    // >= 2, d >= 2, n > d).
    void validate() const;
    // Soft complaints about the ordering 1 << 1/alpha << h << d << n.
    std::vector<std::string> warnings() const;

    bool operator==(Params const&) const = default;
  };

  struct Period {
    Word word;
    int  rank = 0;

    bool operator==(Period const&) const = default;
  };

  // A relator of rank i. Generated relators are structured as
  // T_1 A^e_1 ... T_h A^e_h; hand-injected ones may be raw words.
  class Relator {
   public:
    static Relator structured(Word              period,
                              int               rank,
                              Word              conjugating_base,
                              std::vector<Word> pieces,
                              std::vector<long long> exponents);
    static Relator raw(Word word, int rank);

    bool        is_structured() const noexcept { return structured_; }
    int         rank() const noexcept { return rank_; }
    Word const& period() const noexcept { return period_; }
    Word const& conjugating_base() const noexcept { return z_; }
    std::vector<Word> const&      pieces() const noexcept { return pieces_; }
    std::vector<long long> const& exponents() const noexcept {
      return exponents_;
    }
    // Reduced product of the pieces.
    Word const& flattened() const noexcept { return flattened_; }

    bool operator==(Relator const&) const = default;

   private:
    bool                   structured_ = false;
    int                    rank_       = 0;
    Word                   period_;
    Word                   z_;
    std::vector<Word>      pieces_;
    std::vector<long long> exponents_;
    Word                   flattened_;
  };

  // Reduced T_1 A^e_1 ... T_h A^e_h.
  Word flatten_pieces(Word const&                   period,
                      std::vector<Word> const&      pieces,
                      std::vector<long long> const& exponents);

  struct RankLayer {
    std::vector<Period>  periods;
    std::vector<Relator> relators;

    bool operator==(RankLayer const&) const = default;
  };

  class GradedPresentation {
   public:
    explicit GradedPresentation(Params params);

    Alphabet const& alphabet() const noexcept { return alphabet_; }
    Params const&   params() const noexcept { return params_; }

    // Highest rank present; rank 0 always exists and is empty.
    int built_rank() const noexcept { return static_cast<int>(ranks_.size()) - 1; }

    RankLayer const& layer(int rank) const;
    // Appends rank built_rank() + 1.
    void push_rank(RankLayer layer);

    // R_rank in rank order, then insertion order.
    std::vector<Relator const*> relators_up_to(int rank) const;
    std::size_t                 relator_count(int rank) const;

    // The first `rank` ranks only.
    GradedPresentation truncated(int rank) const;

    bool operator==(GradedPresentation const&) const = default;

   private:
    Alphabet               alphabet_;
    Params                 params_;
    std::vector<RankLayer> ranks_;
  };

  // h * rank * (n - d - 2); a lower bound on the flattened length of any
  // generated relator of that rank. Throws for rank < 3.
  long long min_relator_length(Params const& params, int rank);

  std::string        serialize(GradedPresentation const& p);
  GradedPresentation parse_presentation(std::string_view text);
  GradedPresentation load_presentation(std::string const& path);
  void save_presentation(GradedPresentation const& p, std::string const& path);

}  // namespace gpres
