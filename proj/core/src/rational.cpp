#include "gpres/rational.hpp"

#include <charconv>
#include <numeric>

#include "gpres/words.hpp"

namespace gpres {

  namespace {
    __extension__ using i128 = __int128;

    std::int64_t parse_int(std::string_view s) {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw ParseError("malformed integer '" + std::string(s) + "'");
      }
      return v;
    }

    std::int64_t narrow(i128 v) {
      if (v > INT64_MAX || v < INT64_MIN) {
        throw Error("rational overflow");
      }
      return static_cast<std::int64_t>(v);
    }
  }  // namespace

  Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
      throw Error("rational with zero denominator");
    }
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    if (g == 0) {
      g = 1;
    }
    num_ = num / g;
    den_ = den / g;
  }

  Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return Rational(parse_int(text));
    }
    return Rational(parse_int(text.substr(0, slash)),
                    parse_int(text.substr(slash + 1)));
  }

  std::string Rational::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  std::strong_ordering Rational::operator<=>(Rational const& o) const {
    i128 l = static_cast<i128>(num_) * o.den_;
    i128 r = static_cast<i128>(o.num_) * den_;
    return l <=> r;
  }

  std::int64_t Rational::ceil() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) {
      ++q;
    }
    return q;
  }

  Rational Rational::inverse() const {
    return Rational(den_, num_);
  }

  Rational operator+(Rational const& x, Rational const& y) {
    return Rational(narrow(static_cast<i128>(x.num()) * y.den()
                           + static_cast<i128>(y.num()) * x.den()),
                    narrow(static_cast<i128>(x.den()) * y.den()));
  }

  Rational operator-(Rational const& x, Rational const& y) {
    return x + Rational(-y.num(), y.den());
  }

  Rational operator*(Rational const& x, Rational const& y) {
    return Rational(narrow(static_cast<i128>(x.num()) * y.num()),
                    narrow(static_cast<i128>(x.den()) * y.den()));
  }

}  // namespace gpres
