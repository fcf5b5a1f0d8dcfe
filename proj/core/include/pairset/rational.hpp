#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "pairset/checked.hpp"

namespace pairset {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(Int value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(BigInt num, BigInt den);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// Rendered as "p/q", or "p" when q == 1.
  std::string str() const;

  /// Rendered as "p/q (≈ d.dddd)". Display only.
  std::string str_with_decimal(int places = 4) const;

  /// Parses "p/q" or "p". Throws DomainError on malformed input or q == 0.
  static Rational parse(const std::string& text);

  double to_double() const;

private:
  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace pairset
