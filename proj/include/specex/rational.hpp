#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace specex {

/// Arbitrary-precision integer. All exact computations bottom out here.
using BigInt = mpz_class;

/// Exact rational scalar.
///
/// Invariants: always reduced to lowest terms, denominator > 0, zero is 0/1.
/// Every constructor canonicalizes, so the invariants hold on all paths.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(const BigInt& n) : v_(n) {}

  Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Parses "n" or "n/d" (optional leading '-').
  static Rational from_string(std::string_view s);

  const BigInt& numerator() const { return v_.get_num(); }
  const BigInt& denominator() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// The exact integer value; throws unless denominator is 1.
  BigInt to_integer() const {
    if (!is_integer()) throw std::domain_error("Rational: not an integer");
    return v_.get_num();
  }

  std::string to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}

  mpq_class v_;  // kept canonical
};

inline Rational Rational::from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(s)));
    BigInt num(std::string(s.substr(0, slash)));
    BigInt den(std::string(s.substr(slash + 1)));
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: cannot parse '" + std::string(s) +
                                "'");
  }
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace specex
