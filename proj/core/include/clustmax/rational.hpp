#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace clustmax {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction over arbitrary-precision integers. Always reduced, with a
// positive denominator, so equal values have equal representations.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt num, BigInt den);              // throws DomainError if den == 0

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);  // throws DomainError on division by zero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "num/den", denominator always present.
  std::string str() const;

  // Fixed-point rendering with `digits` significant digits, rounded half to
  // even ("0.58333333333333333333" for 7/12 at 20 digits).
  std::string decimal(int digits = 20) const;

  // Parses "num/den" or an integer.
  static Rational parse(const std::string& text);

 private:
  void normalize();

  BigInt num_ = 0;
  BigInt den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace clustmax
