#pragma once

#include <optional>
#include <vector>

#include "specex/graph.hpp"
#include "specex/matrix.hpp"
#include "specex/polynomial.hpp"

namespace specex {

/// Everything the spectrum of a connected regular graph determines, computed
/// exactly and without ever representing an individual eigenvalue:
///   - moments m_j = tr A^j for j = 0..2d+1,
///   - the monic minimal polynomial (degree d+1),
///   - pi0 = prod_{i>=1} (k - lambda_i), evaluated as (min_poly/(x-k))(k),
///   - a_tilde = sum of all distinct eigenvalues,
///   - the Hoffman polynomial H with H(A) = J,
///   - the predistance polynomials p_0..p_d and their three-term recurrence
///     coefficients.
struct SpectralData {
  int n = 0;
  int valency = 0;
  int d = 0;                    // number of distinct eigenvalues minus one
  std::vector<BigInt> moments;  // m_0..m_{2d+1}
  Polynomial min_poly;
  Rational pi0;
  Rational a_tilde;
  Polynomial hoffman;
  std::vector<Polynomial> predistance;  // p_0..p_d
  std::vector<Rational> alpha;          // alpha_0..alpha_d
  std::vector<Rational> beta;           // beta_0..beta_{d-1}
  std::vector<Rational> gamma;          // gamma_1..gamma_d

  /// m_j, extending past the stored table with the linear recurrence the
  /// minimal polynomial imposes on the moment sequence.
  BigInt moment(int j) const;

  /// <p,q> = (1/n) tr(p(A)q(A)), evaluated purely from the moments.
  Rational inner_product(const Polynomial& p, const Polynomial& q) const;

  /// p_d(k).
  Rational spectral_excess() const;

  /// Smallest odd j <= 2d+1 with m_j != 0; nullopt when all vanish (the
  /// graph is bipartite and has no odd cycle).
  std::optional<int> spectral_odd_girth() const;

  /// n * m_{2d+1} / (a_tilde * pi0^2); throws std::domain_error when
  /// a_tilde = 0 (the formula needs finite odd-girth >= 2d+1).
  Rational average_excess_by_trace() const;
};

/// Monic polynomial of least degree annihilating m, found as the first linear
/// dependency among vectorized I, m, m^2, ... by exact elimination.
Polynomial minimal_polynomial(const SquareMatrixZ& m);
Polynomial minimal_polynomial(const Graph& g);

/// Number of distinct eigenvalues of a symmetric integer matrix: the rank of
/// the Hankel matrix of its power traces. Independent of minimal_polynomial.
int distinct_eigenvalue_count(const SquareMatrixZ& m);

/// Computes every SpectralData field for a connected regular graph and
/// verifies the internal identities (H(A) = J, the recurrence, orthogonality)
/// exactly; a violation throws std::logic_error. Non-regular or disconnected
/// input throws std::invalid_argument.
SpectralData analyze_spectrum(const Graph& g);

}  // namespace specex
