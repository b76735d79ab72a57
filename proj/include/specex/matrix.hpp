#pragma once

#include <vector>

#include "specex/polynomial.hpp"
#include "specex/rational.hpp"

namespace specex {

/// Dense square matrix with arbitrary-precision integer entries, row major.
class SquareMatrixZ {
 public:
  explicit SquareMatrixZ(int order) : n_(order), e_(size_t(order) * order) {}

  static SquareMatrixZ identity(int order);

  int order() const { return n_; }
  const BigInt& at(int i, int j) const { return e_[size_t(i) * n_ + j]; }
  BigInt& at(int i, int j) { return e_[size_t(i) * n_ + j]; }

  BigInt trace() const;
  bool is_zero() const;

  SquareMatrixZ operator*(const SquareMatrixZ& o) const;

  friend bool operator==(const SquareMatrixZ& a, const SquareMatrixZ& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

 private:
  int n_;
  std::vector<BigInt> e_;
};

/// Dense square matrix with exact rational entries, row major.
class SquareMatrixQ {
 public:
  explicit SquareMatrixQ(int order) : n_(order), e_(size_t(order) * order) {}

  static SquareMatrixQ ones(int order);

  int order() const { return n_; }
  const Rational& at(int i, int j) const { return e_[size_t(i) * n_ + j]; }
  Rational& at(int i, int j) { return e_[size_t(i) * n_ + j]; }

  bool is_zero() const;

  friend bool operator==(const SquareMatrixQ& a, const SquareMatrixQ& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

 private:
  int n_;
  std::vector<Rational> e_;
};

/// Incrementally computed, memoized powers of a fixed matrix:
/// power(j) = M^j with power(0) = I. Not safe for concurrent use.
class MatrixPowers {
 public:
  explicit MatrixPowers(SquareMatrixZ base);

  const SquareMatrixZ& power(int j);
  int order() const { return pows_[0].order(); }

 private:
  std::vector<SquareMatrixZ> pows_;
};

/// Traces of M^0 .. M^t.
std::vector<BigInt> matrix_power_traces(const SquareMatrixZ& m, int t);

/// p(M), computed exactly.
SquareMatrixQ poly_apply(const SquareMatrixZ& m, const Polynomial& p);
SquareMatrixQ poly_apply(MatrixPowers& powers, const Polynomial& p);

/// Fraction-free (Bareiss-style cross multiplication, content-normalized
/// integer rows) incremental row reduction. Feed rows one by one; a row that
/// reduces to zero is linearly dependent on the rows inserted before it.
class FractionFreeEliminator {
 public:
  explicit FractionFreeEliminator(int width) : width_(width) {}

  /// Reduces `row` in place against the stored pivot rows and normalizes it
  /// (divides by the content, makes the first nonzero entry positive).
  void reduce(std::vector<BigInt>& row) const;

  /// Stores a reduced nonzero row as a new pivot row.
  void insert(std::vector<BigInt> reduced_row);

  /// reduce + insert-if-nonzero; returns false when the row was dependent.
  bool add_row(std::vector<BigInt> row);

  int rank() const { return static_cast<int>(rows_.size()); }
  int width() const { return width_; }

 private:
  int width_;
  std::vector<std::vector<BigInt>> rows_;
  std::vector<int> pivot_;
};

/// Exact rank of a rectangular rational matrix given as rows.
int fraction_free_rank(const std::vector<std::vector<Rational>>& rows);
int fraction_free_rank(const SquareMatrixQ& m);

}  // namespace specex
