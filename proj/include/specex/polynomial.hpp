#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "specex/rational.hpp"

namespace specex {

/// Univariate polynomial over Rational, coefficients stored in ascending
/// degree order. The zero polynomial is the empty coefficient sequence;
/// otherwise the leading coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending_coeffs)
      : c_(std::move(ascending_coeffs)) {
    trim();
  }
  Polynomial(std::initializer_list<Rational> ascending_coeffs)
      : c_(ascending_coeffs) {
    trim();
  }

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }
  /// c * x^deg
  static Polynomial monomial(int deg, const Rational& c);

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Coefficient of x^i (zero beyond the degree).
  const Rational& coeff(int i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coefficients() const { return c_; }

  /// True when every coefficient of parity other than `parity` (0 even,
  /// 1 odd) vanishes.
  bool has_parity(int parity) const;

  Rational operator()(const Rational& at) const;  // Horner evaluation

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }

  std::string to_string() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

/// Exact division with remainder: dividend = divisor*quotient + remainder,
/// deg(remainder) < deg(divisor). Throws std::domain_error on a zero divisor.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& dividend,
                                              const Polynomial& divisor);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace specex
