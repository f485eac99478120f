#include "rrfair/rational.hpp"

#include <limits>
#include <stdexcept>

namespace rrfair {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("rational term exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

}  // namespace

struct RationalAccess {
  static Rational make(__int128 num, __int128 den) {
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const __int128 g = gcd128(num, den);
    Rational r;
    r.num_ = narrow(g == 0 ? 0 : num / g);
    r.den_ = narrow(g == 0 ? 1 : den / g);
    return r;
  }
};

namespace {

Rational normalized(__int128 num, __int128 den) { return RationalAccess::make(num, den); }

}  // namespace

Rational::Rational(std::int64_t num) : num_(num), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = normalized(num, den);
}

Rational Rational::operator-() const { return normalized(-static_cast<__int128>(num_), den_); }

Rational& Rational::operator+=(const Rational& rhs) {
  *this = normalized(static_cast<__int128>(num_) * rhs.den_ + static_cast<__int128>(rhs.num_) * den_,
                     static_cast<__int128>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  *this = normalized(static_cast<__int128>(num_) * rhs.num_, static_cast<__int128>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw std::domain_error("division by zero");
  *this = normalized(static_cast<__int128>(num_) * rhs.den_, static_cast<__int128>(den_) * rhs.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_decimal(int places) const {
  if (places < 0) throw std::invalid_argument("negative decimal places");
  __int128 scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const bool negative = num_ < 0;
  const __int128 magnitude = negative ? -static_cast<__int128>(num_) : num_;
  // round(|x| * scale) with ties away from zero
  const __int128 scaled = (magnitude * scale * 2 + den_) / (2 * static_cast<__int128>(den_));
  const __int128 whole = scaled / scale;
  __int128 frac = scaled % scale;

  std::string digits;
  for (int i = 0; i < places; ++i) {
    digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(frac % 10)));
    frac /= 10;
  }
  std::string out = (negative && scaled != 0) ? "-" : "";
  out += std::to_string(static_cast<long long>(whole));
  if (places > 0) out += "." + digits;
  return out;
}

Rational abs(const Rational& r) { return r.num() < 0 ? -r : r; }

}  // namespace rrfair
