#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace gpres {

  // Exact rational p/q with q > 0 and gcd(p, q) = 1.
  class Rational {
   public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    // Accepts "p/q" or an integer.
    static Rational parse(std::string_view text);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    std::string str() const;

    bool operator==(Rational const&) const = default;
    std::strong_ordering operator<=>(Rational const& o) const;

    // ceil(this) as an integer
    std::int64_t ceil() const;
    Rational     inverse() const;

   private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
  };

  Rational operator+(Rational const& x, Rational const& y);
  Rational operator-(Rational const& x, Rational const& y);
  Rational operator*(Rational const& x, Rational const& y);

}  // namespace gpres
