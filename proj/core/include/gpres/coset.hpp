#pragma once

// Coset enumeration (Hasse-Lemmens-Todd style, with coincidence handling)
// for the trivial subgroup, i.e. the right regular representation of a
// finitely presented group that turns out to be finite.

#include <cstddef>
#include <optional>
#include <vector>

#include "gpres/words.hpp"

namespace gpres {

  class CosetTable {
   public:
    CosetTable(std::size_t gens, std::vector<std::vector<int>> rows)
        : gens_(gens), rows_(std::move(rows)) {}

    std::size_t gens() const noexcept { return gens_; }
    // Group order: cosets of the trivial subgroup.
    std::size_t size() const noexcept { return rows_.size(); }
    // Coset reached from `coset` by the letter; coset 0 is the identity.
    std::size_t act(std::size_t coset, Letter l) const {
      return static_cast<std::size_t>(rows_[coset][l.code()]);
    }
    std::size_t element(Word const& w) const;

   private:
    std::size_t                   gens_;
    std::vector<std::vector<int>> rows_;
  };

  // Words use generator indices 0..gens-1. Returns nullopt when more than
  // `limit` cosets would have to be defined.
  std::optional<CosetTable> enumerate_cosets(std::size_t              gens,
                                             std::vector<Word> const& relators,
                                             std::size_t              limit);

}  // namespace gpres
