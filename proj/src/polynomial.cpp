#include "specex/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace specex {

namespace {
const Rational kZero;
}

Polynomial Polynomial::monomial(int deg, const Rational& c) {
  if (c.is_zero()) return Polynomial();
  std::vector<Rational> v(deg + 1);
  v[deg] = c;
  return Polynomial(std::move(v));
}

const Rational& Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[i];
}

const Rational& Polynomial::leading() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

bool Polynomial::has_parity(int parity) const {
  for (int i = 0; i < static_cast<int>(c_.size()); ++i) {
    if (i % 2 != parity && !c_[i].is_zero()) return false;
  }
  return true;
}

Rational Polynomial::operator()(const Rational& at) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> v(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
  return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  std::vector<Rational> v(p.c_.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = s * p.c_[i];
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& dividend,
                                              const Polynomial& divisor) {
  if (divisor.is_zero())
    throw std::domain_error("poly_divmod: division by the zero polynomial");
  int dd = divisor.degree();
  std::vector<Rational> rem = dividend.coefficients();
  if (dividend.degree() < dd) return {Polynomial(), dividend};
  std::vector<Rational> quo(dividend.degree() - dd + 1);
  const Rational& lead = divisor.leading();
  for (int i = dividend.degree(); i >= dd; --i) {
    if (rem[i].is_zero()) continue;
    Rational q = rem[i] / lead;
    quo[i - dd] = q;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * divisor.coeff(j);
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    Rational mag = c.sign() < 0 ? -c : c;
    bool unit = (mag == Rational(1));
    if (i == 0 || !unit) os << mag.to_string();
    if (i > 0) {
      if (!unit) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.to_string();
}

}  // namespace specex
