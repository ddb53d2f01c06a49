#pragma once

// Abelianization of words and integer lattice membership.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gpres/words.hpp"

namespace gpres {

  // Exponent sums ordered (a, b, c1, ..., ch).
  class AbelianVector {
   public:
    AbelianVector() = default;
    explicit AbelianVector(std::size_t dim) : v_(dim, 0) {}
    AbelianVector(std::initializer_list<std::int64_t> init) : v_(init) {}
    explicit AbelianVector(std::vector<std::int64_t> v) : v_(std::move(v)) {}

    std::size_t size() const noexcept { return v_.size(); }
    std::int64_t operator[](std::size_t i) const { return v_[i]; }
    std::int64_t& operator[](std::size_t i) { return v_[i]; }
    std::vector<std::int64_t> const& values() const noexcept { return v_; }

    bool is_zero() const noexcept;

    AbelianVector& operator+=(AbelianVector const& o);
    AbelianVector& operator-=(AbelianVector const& o);
    AbelianVector  operator+(AbelianVector const& o) const;
    AbelianVector  operator-(AbelianVector const& o) const;
    AbelianVector  operator*(std::int64_t k) const;

    bool operator==(AbelianVector const&) const = default;

    std::string str() const;

   private:
    std::vector<std::int64_t> v_;
  };

  AbelianVector abelianize(Alphabet const& alphabet, Word const& w);
  // Dimension taken from the largest generator present, at least `dim`.
  AbelianVector abelianize(std::size_t dim, Word const& w);

  // Integer span of a finite set of vectors, held in Hermite normal form.
  class Lattice {
   public:
    explicit Lattice(std::size_t dim);
    Lattice(std::size_t dim, std::span<AbelianVector const> gens);

    void add(AbelianVector const& v);

    // Residual of v modulo the lattice; zero iff v lies in the lattice.
    AbelianVector reduce(AbelianVector v) const;
    bool contains(AbelianVector const& v) const { return reduce(v).is_zero(); }

    std::size_t dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return basis_.size(); }
    std::vector<AbelianVector> const& basis() const noexcept { return basis_; }

   private:
    void normalize();

    std::size_t                dim_;
    std::vector<AbelianVector> basis_;  // echelon rows, positive pivots
  };

  // abelianize(x) - abelianize(y) lies in the span of lattice_gens.
  bool abelian_congruent(Alphabet const&                 alphabet,
                         Word const&                     x,
                         Word const&                     y,
                         std::span<AbelianVector const> lattice_gens);

}  // namespace gpres
