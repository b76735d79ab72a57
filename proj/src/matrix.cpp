#include "specex/matrix.hpp"

#include <stdexcept>

namespace specex {

SquareMatrixZ SquareMatrixZ::identity(int order) {
  SquareMatrixZ m(order);
  for (int i = 0; i < order; ++i) m.at(i, i) = 1;
  return m;
}

BigInt SquareMatrixZ::trace() const {
  BigInt t = 0;
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

bool SquareMatrixZ::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

SquareMatrixZ SquareMatrixZ::operator*(const SquareMatrixZ& o) const {
  if (n_ != o.n_) throw std::invalid_argument("matrix orders differ");
  SquareMatrixZ r(n_);
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      const BigInt& a = at(i, k);
      if (a == 0) continue;
      const BigInt* orow = &o.e_[size_t(k) * n_];
      BigInt* rrow = &r.e_[size_t(i) * n_];
      for (int j = 0; j < n_; ++j) {
        // rrow[j] += a * orow[j], without temporaries
        mpz_addmul(rrow[j].get_mpz_t(), a.get_mpz_t(), orow[j].get_mpz_t());
      }
    }
  }
  return r;
}

SquareMatrixQ SquareMatrixQ::ones(int order) {
  SquareMatrixQ m(order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) m.at(i, j) = Rational(1);
  return m;
}

bool SquareMatrixQ::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

MatrixPowers::MatrixPowers(SquareMatrixZ base) {
  pows_.push_back(SquareMatrixZ::identity(base.order()));
  pows_.push_back(std::move(base));
}

const SquareMatrixZ& MatrixPowers::power(int j) {
  if (j < 0) throw std::invalid_argument("negative matrix power");
  while (static_cast<int>(pows_.size()) <= j)
    pows_.push_back(pows_.back() * pows_[1]);
  return pows_[j];
}

std::vector<BigInt> matrix_power_traces(const SquareMatrixZ& m, int t) {
  if (t < 0) throw std::invalid_argument("matrix_power_traces: t < 0");
  std::vector<BigInt> traces;
  traces.reserve(t + 1);
  traces.push_back(BigInt(m.order()));
  if (t == 0) return traces;
  SquareMatrixZ p = m;
  traces.push_back(p.trace());
  for (int j = 2; j <= t; ++j) {
    p = p * m;
    traces.push_back(p.trace());
  }
  return traces;
}

SquareMatrixQ poly_apply(MatrixPowers& powers, const Polynomial& p) {
  int n = powers.order();
  SquareMatrixQ r(n);
  for (int t = 0; t <= p.degree(); ++t) {
    const Rational& c = p.coeff(t);
    if (c.is_zero()) continue;
    const SquareMatrixZ& pt = powers.power(t);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r.at(i, j) += c * Rational(pt.at(i, j));
  }
  return r;
}

SquareMatrixQ poly_apply(const SquareMatrixZ& m, const Polynomial& p) {
  MatrixPowers powers(m);
  return poly_apply(powers, p);
}

namespace {

// Divide the row by its content and make the first nonzero entry positive.
void normalize_row(std::vector<BigInt>& row) {
  BigInt g = 0;
  int first_nonzero = -1;
  for (size_t i = 0; i < row.size(); ++i) {
    if (row[i] == 0) continue;
    if (first_nonzero < 0) first_nonzero = static_cast<int>(i);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[i].get_mpz_t());
    if (g == 1) break;
  }
  if (first_nonzero < 0) return;
  if (sgn(row[first_nonzero]) < 0) g = -g;
  if (g != 1)
    for (auto& x : row)
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

void FractionFreeEliminator::reduce(std::vector<BigInt>& row) const {
  if (static_cast<int>(row.size()) != width_)
    throw std::invalid_argument("eliminator row width mismatch");
  for (size_t r = 0; r < rows_.size(); ++r) {
    int c = pivot_[r];
    if (row[c] == 0) continue;
    const std::vector<BigInt>& piv = rows_[r];
    BigInt f = row[c];
    const BigInt& pv = piv[c];
    // row := pv*row - f*piv  (annihilates column c, stays integral)
    for (int j = 0; j < width_; ++j) {
      row[j] *= pv;
      mpz_submul(row[j].get_mpz_t(), f.get_mpz_t(), piv[j].get_mpz_t());
    }
  }
  normalize_row(row);
}

void FractionFreeEliminator::insert(std::vector<BigInt> reduced_row) {
  int c = -1;
  for (int j = 0; j < width_; ++j) {
    if (reduced_row[j] != 0) {
      c = j;
      break;
    }
  }
  if (c < 0)
    throw std::invalid_argument("eliminator: cannot insert a zero row");
  pivot_.push_back(c);
  rows_.push_back(std::move(reduced_row));
}

bool FractionFreeEliminator::add_row(std::vector<BigInt> row) {
  reduce(row);
  for (const auto& x : row) {
    if (x != 0) {
      insert(std::move(row));
      return true;
    }
  }
  return false;
}

int fraction_free_rank(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return 0;
  size_t width = rows[0].size();
  FractionFreeEliminator elim(static_cast<int>(width));
  for (const auto& row : rows) {
    if (row.size() != width)
      throw std::invalid_argument("fraction_free_rank: ragged rows");
    // Clear denominators; scaling a row does not change the rank.
    BigInt l = 1;
    for (const auto& x : row)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
    std::vector<BigInt> zrow(width);
    for (size_t j = 0; j < width; ++j)
      zrow[j] = row[j].numerator() * (l / row[j].denominator());
    elim.add_row(std::move(zrow));
  }
  return elim.rank();
}

int fraction_free_rank(const SquareMatrixQ& m) {
  std::vector<std::vector<Rational>> rows(m.order(),
                                          std::vector<Rational>(m.order()));
  for (int i = 0; i < m.order(); ++i)
    for (int j = 0; j < m.order(); ++j) rows[i][j] = m.at(i, j);
  return fraction_free_rank(rows);
}

}  // namespace specex
