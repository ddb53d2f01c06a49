#pragma once

// Finite groups given by multiplication tables, normal forms in free
// products of two of them, and exact solution counts for equations in free
// and direct products.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gpres/equations.hpp"

namespace gpres {

  class FiniteGroup {
   public:
    // Validates: square, entries in range, Latin square, two-sided identity,
    // associativity. Names default to the element indices.
    FiniteGroup(std::vector<std::vector<std::size_t>> table,
                std::vector<std::string>              names = {});

    std::size_t order() const noexcept { return table_.size(); }
    std::size_t identity() const noexcept { return identity_; }
    std::size_t mul(std::size_t x, std::size_t y) const { return table_[x][y]; }
    std::size_t inverse(std::size_t x) const { return inverse_[x]; }
    bool        is_abelian() const noexcept { return abelian_; }

    std::string const& name(std::size_t x) const { return names_[x]; }
    // Index of the element with this name; throws ParseError.
    std::size_t element(std::string_view name) const;

   private:
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::string>              names_;
    std::vector<std::size_t>              inverse_;
    std::size_t                           identity_ = 0;
    bool                                  abelian_  = true;
  };

  // `order N`, optional `names ...`, then N rows of indices; `#` comments.
  FiniteGroup parse_finite_group(std::string_view text);
  FiniteGroup load_finite_group(std::string const& path);

  enum class Factor { A, B };

  struct Syllable {
    Factor      factor;
    std::size_t element;  // never the identity of its factor

    bool operator==(Syllable const&) const = default;
  };

  // Normal form in A * B: alternating factors, no identity syllables.
  struct FreeProductElement {
    std::vector<Syllable> syllables;

    bool operator==(FreeProductElement const&) const = default;
  };

  FreeProductElement free_product_mul(FiniteGroup const& a, FiniteGroup const& b,
                                      FreeProductElement const& x,
                                      FreeProductElement const& y);
  FreeProductElement free_product_inverse(FiniteGroup const& a, FiniteGroup const& b,
                                          FreeProductElement const& x);

  // All normal forms with at most `radius` syllables, by syllable count.
  std::vector<FreeProductElement> normal_forms(FiniteGroup const& a, FiniteGroup const& b,
                                               std::size_t radius);

  std::string format(FiniteGroup const& a, FiniteGroup const& b,
                     FreeProductElement const& x);

  // Solutions of x a = a x in A * B over the ball of normal forms, with
  // a_elem in A \ {1}. Throws when A is not abelian.
  CensusReport theorem1_free_census(FiniteGroup const& a, FiniteGroup const& b,
                                    std::size_t a_elem, std::size_t radius);

  // Equation over a finite group: tokens `x`, `x'`, or element names with an
  // optional trailing `'`.
  struct FiniteEquation {
    struct Token {
      bool        is_x;
      std::size_t element;  // when !is_x
      bool        inverse;
    };
    std::vector<Token> tokens;
  };

  FiniteEquation parse_finite_equation(FiniteGroup const& g, std::string_view text);
  FiniteEquation load_finite_equation(FiniteGroup const& g, std::string const& path);
  long long      x_exponent_sum(FiniteEquation const& eq);

  // Value of the left-hand side at x = h.
  std::size_t evaluate(FiniteGroup const& g, FiniteEquation const& eq, std::size_t h);

  // Equations over H x K with constants in H. The K coordinate of w((h, k))
  // is k^(x exponent sum); when it is trivial the verdict is the H-side one.
  Verdict direct_product_eval(FiniteGroup const& h_group, FiniteEquation const& eq,
                              std::size_t h, FiniteGroup const& k_group, std::size_t k);
  Verdict direct_product_eval(GradedPresentation const& h_group, Equation const& eq,
                              Word const& h, FiniteGroup const& k_group, std::size_t k,
                              SolverConfig const& cfg);

  // Every pair (h, k) of the finite product.
  CensusReport direct_product_census(FiniteGroup const& h_group, FiniteEquation const& eq,
                                     FiniteGroup const& k_group);

}  // namespace gpres
