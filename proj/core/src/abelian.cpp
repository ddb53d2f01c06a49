#include "gpres/abelian.hpp"

#include <algorithm>
#include <numeric>

namespace gpres {

  namespace {
    std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
      std::int64_t r = 0;
      if (__builtin_mul_overflow(x, y, &r)) {
        throw Error("lattice arithmetic overflow");
      }
      return r;
    }

    std::int64_t checked_add(std::int64_t x, std::int64_t y) {
      std::int64_t r = 0;
      if (__builtin_add_overflow(x, y, &r)) {
        throw Error("lattice arithmetic overflow");
      }
      return r;
    }

    // r = x*u + y*v componentwise.
    AbelianVector combine(std::int64_t         x,
                          AbelianVector const& u,
                          std::int64_t         y,
                          AbelianVector const& v) {
      AbelianVector r(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) {
        r[i] = checked_add(checked_mul(x, u[i]), checked_mul(y, v[i]));
      }
      return r;
    }

    std::size_t pivot(AbelianVector const& v) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) {
          return i;
        }
      }
      return v.size();
    }

    // floor(a / b) for b > 0
    std::int64_t floor_div(std::int64_t a, std::int64_t b) {
      std::int64_t q = a / b;
      if ((a % b != 0) && (a < 0)) {
        --q;
      }
      return q;
    }

    struct Bezout {
      std::int64_t g, x, y;
    };

    Bezout ext_gcd(std::int64_t a, std::int64_t b) {
      std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
      while (r != 0) {
        std::int64_t q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
      }
      if (old_r < 0) {
        return {-old_r, -old_s, -old_t};
      }
      return {old_r, old_s, old_t};
    }
  }  // namespace

  bool AbelianVector::is_zero() const noexcept {
    return std::all_of(v_.begin(), v_.end(), [](auto x) { return x == 0; });
  }

  AbelianVector& AbelianVector::operator+=(AbelianVector const& o) {
    if (o.size() != size()) {
      throw Error("abelian vector dimension mismatch");
    }
    for (std::size_t i = 0; i < v_.size(); ++i) {
      v_[i] = checked_add(v_[i], o.v_[i]);
    }
    return *this;
  }

  AbelianVector& AbelianVector::operator-=(AbelianVector const& o) {
    return *this += o * -1;
  }

  AbelianVector AbelianVector::operator+(AbelianVector const& o) const {
    AbelianVector r = *this;
    r += o;
    return r;
  }

  AbelianVector AbelianVector::operator-(AbelianVector const& o) const {
    AbelianVector r = *this;
    r -= o;
    return r;
  }

  AbelianVector AbelianVector::operator*(std::int64_t k) const {
    AbelianVector r = *this;
    for (auto& x : r.v_) {
      x = checked_mul(x, k);
    }
    return r;
  }

  std::string AbelianVector::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (i != 0) {
        s += ',';
      }
      s += std::to_string(v_[i]);
    }
    return s + ")";
  }

  AbelianVector abelianize(std::size_t dim, Word const& w) {
    for (Letter l : w) {
      dim = std::max<std::size_t>(dim, l.gen() + 1U);
    }
    AbelianVector v(dim);
    for (Letter l : w) {
      v[l.gen()] += l.sign();
    }
    return v;
  }

  AbelianVector abelianize(Alphabet const& alphabet, Word const& w) {
    alphabet.check(w.letters());
    return abelianize(alphabet.size(), w);
  }

  ////////////////////////////////////////////////////////////////////////
  // Lattice
  ////////////////////////////////////////////////////////////////////////

  Lattice::Lattice(std::size_t dim) : dim_(dim) {}

  Lattice::Lattice(std::size_t dim, std::span<AbelianVector const> gens)
      : dim_(dim) {
    for (auto const& g : gens) {
      add(g);
    }
  }

  void Lattice::add(AbelianVector const& v0) {
    if (v0.size() != dim_) {
      throw Error("lattice: dimension mismatch");
    }
    AbelianVector v = v0;
    for (std::size_t col = 0; col < dim_; ++col) {
      if (v[col] == 0) {
        continue;
      }
      auto it = std::find_if(basis_.begin(), basis_.end(), [&](auto const& r) {
        return pivot(r) == col;
      });
      if (it == basis_.end()) {
        if (v[col] < 0) {
          v = v * -1;
        }
        basis_.push_back(v);
        normalize();
        return;
      }
      AbelianVector& r  = *it;
      auto const     bz = ext_gcd(r[col], v[col]);
      AbelianVector  nr = combine(bz.x, r, bz.y, v);
      AbelianVector  nv = combine(v[col] / bz.g, r, -(r[col] / bz.g), v);
      r                 = nr;
      v                 = nv;
    }
    normalize();
  }

  void Lattice::normalize() {
    std::sort(basis_.begin(), basis_.end(), [](auto const& x, auto const& y) {
      return pivot(x) < pivot(y);
    });
    // Reduce entries above each pivot into [0, pivot).
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      std::size_t const p = pivot(basis_[i]);
      for (std::size_t k = 0; k < i; ++k) {
        std::int64_t q = floor_div(basis_[k][p], basis_[i][p]);
        if (q != 0) {
          basis_[k] = basis_[k] - basis_[i] * q;
        }
      }
    }
  }

  AbelianVector Lattice::reduce(AbelianVector v) const {
    if (v.size() != dim_) {
      throw Error("lattice: dimension mismatch");
    }
    for (auto const& r : basis_) {
      std::size_t const  p = pivot(r);
      std::int64_t const q = floor_div(v[p], r[p]);
      if (q != 0) {
        v = v - r * q;
      }
    }
    return v;
  }

  bool abelian_congruent(Alphabet const&                 alphabet,
                         Word const&                     x,
                         Word const&                     y,
                         std::span<AbelianVector const> lattice_gens) {
    Lattice l(alphabet.size(), lattice_gens);
    return l.contains(abelianize(alphabet, x) - abelianize(alphabet, y));
  }

}  // namespace gpres
