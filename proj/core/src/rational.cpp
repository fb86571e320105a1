#include "clustmax/rational.hpp"

#include <algorithm>

#include "clustmax/error.hpp"

namespace clustmax {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
  } else {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw DomainError("division by zero");
  BigInt n = num_ * rhs.den_;
  BigInt d = den_ * rhs.num_;
  num_ = std::move(n);
  den_ = std::move(d);
  normalize();
  return *this;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const { return num_.str() + "/" + den_.str(); }

std::string Rational::decimal(int digits) const {
  if (digits < 1) throw DomainError("decimal rendering needs at least one digit");
  if (num_ == 0) return "0";
  const bool negative = num_ < 0;
  const BigInt a = negative ? BigInt(-num_) : num_;

  // Find e with 10^(digits-1) <= a * 10^e / den < 10^digits, then round the
  // integer quotient half to even.
  const BigInt low = boost::multiprecision::pow(BigInt(10), digits - 1);
  const BigInt high = low * 10;
  int e = 0;
  BigInt scaled_num = a;
  BigInt scaled_den = den_;
  while (scaled_num / scaled_den >= high) {
    scaled_den *= 10;
    --e;
  }
  while (scaled_num / scaled_den < low) {
    scaled_num *= 10;
    ++e;
  }
  BigInt q = scaled_num / scaled_den;
  const BigInt r2 = (scaled_num % scaled_den) * 2;
  if (r2 > scaled_den || (r2 == scaled_den && (q & 1) != 0)) ++q;
  if (q == high) {  // rounding carried into a new digit
    q /= 10;
    --e;
  }

  // q has exactly `digits` digits; the value is q * 10^-e.
  std::string s = q.str();
  if (e <= 0) {
    s.append(static_cast<std::size_t>(-e), '0');
  } else if (e >= static_cast<int>(s.size())) {
    s = "0." + std::string(static_cast<std::size_t>(e) - s.size(), '0') + s;
  } else {
    s.insert(s.size() - static_cast<std::size_t>(e), ".");
  }
  return negative ? "-" + s : s;
}

Rational Rational::parse(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text), BigInt(1));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const Error&) {
    throw;
  } catch (const std::runtime_error&) {
    throw ParseError("not a rational: '" + text + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace clustmax
