#include "specex/spectral.hpp"

#include <stdexcept>

namespace specex {

namespace {

Polynomial minimal_polynomial_from_powers(MatrixPowers& powers) {
  int n = powers.order();
  int w = n * n;
  FractionFreeEliminator elim(w + n + 1);
  for (int j = 0; j <= n; ++j) {
    std::vector<BigInt> row(w + n + 1);
    const SquareMatrixZ& pj = powers.power(j);
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) row[size_t(i) * n + l] = pj.at(i, l);
    row[w + j] = 1;
    elim.reduce(row);

    bool dependent = true;
    for (int i = 0; i < w; ++i) {
      if (row[i] != 0) {
        dependent = false;
        break;
      }
    }
    if (dependent) {
      // The tail of the row holds the dependency sum_t row[w+t] M^t = 0.
      Rational lead{row[w + j]};
      std::vector<Rational> coeffs(j + 1);
      for (int t = 0; t <= j; ++t) coeffs[t] = Rational(row[w + t]) / lead;
      return Polynomial(std::move(coeffs));
    }
    elim.insert(std::move(row));
  }
  // Unreachable: degree n always annihilates.
  throw std::logic_error("minimal_polynomial: no dependency up to degree n");
}

Rational inner_product_from_moments(const Polynomial& p, const Polynomial& q,
                                    const std::vector<BigInt>& moments,
                                    int n) {
  Polynomial prod = p * q;
  Rational acc;
  for (int j = 0; j <= prod.degree(); ++j) {
    if (prod.coeff(j).is_zero()) continue;
    acc += prod.coeff(j) * Rational(moments[j]);
  }
  return acc / Rational(n);
}

// Extends a moment table in place up to index j using the recurrence
// sum_i c_i m_{s+i} = 0 imposed by the monic annihilating polynomial.
void extend_moments(std::vector<BigInt>& m, const Polynomial& min_poly,
                    int j) {
  int deg = min_poly.degree();
  while (static_cast<int>(m.size()) <= j) {
    int s = static_cast<int>(m.size()) - deg;
    Rational acc;
    for (int i = 0; i < deg; ++i)
      acc += min_poly.coeff(i) * Rational(m[s + i]);
    m.push_back((-acc).to_integer());
  }
}

}  // namespace

Polynomial minimal_polynomial(const SquareMatrixZ& m) {
  MatrixPowers powers(m);
  return minimal_polynomial_from_powers(powers);
}

Polynomial minimal_polynomial(const Graph& g) {
  return minimal_polynomial(g.adjacency_matrix());
}

int distinct_eigenvalue_count(const SquareMatrixZ& m) {
  int n = m.order();
  std::vector<BigInt> tr = matrix_power_traces(m, 2 * n);
  FractionFreeEliminator elim(n + 1);
  for (int i = 0; i <= n; ++i) {
    std::vector<BigInt> row(n + 1);
    for (int j = 0; j <= n; ++j) row[j] = tr[i + j];
    elim.add_row(std::move(row));
  }
  return elim.rank();
}

BigInt SpectralData::moment(int j) const {
  if (j < static_cast<int>(moments.size())) return moments[j];
  std::vector<BigInt> ext = moments;
  extend_moments(ext, min_poly, j);
  return ext[j];
}

Rational SpectralData::inner_product(const Polynomial& p,
                                     const Polynomial& q) const {
  int need = p.degree() + q.degree();
  if (need < static_cast<int>(moments.size()))
    return inner_product_from_moments(p, q, moments, n);
  std::vector<BigInt> ext = moments;
  extend_moments(ext, min_poly, need);
  return inner_product_from_moments(p, q, ext, n);
}

Rational SpectralData::spectral_excess() const {
  return predistance[d](Rational(valency));
}

std::optional<int> SpectralData::spectral_odd_girth() const {
  for (int j = 1; j <= 2 * d + 1; j += 2)
    if (moments[j] != 0) return j;
  return std::nullopt;
}

Rational SpectralData::average_excess_by_trace() const {
  if (a_tilde.is_zero())
    throw std::domain_error(
        "average_excess_by_trace: sum of distinct eigenvalues is zero "
        "(requires finite odd-girth >= 2d+1)");
  return Rational(n) * Rational(moments[2 * d + 1]) /
         (a_tilde * pi0 * pi0);
}

SpectralData analyze_spectrum(const Graph& g) {
  BasicProfile bp = basic_profile(g);
  if (!bp.connected)
    throw std::invalid_argument("analyze_spectrum: graph must be connected");
  if (!bp.regular)
    throw std::invalid_argument("analyze_spectrum: graph must be regular");

  SpectralData s;
  s.n = g.vertex_count();
  s.valency = *bp.valency;
  Rational k{s.valency};

  MatrixPowers powers(g.adjacency_matrix());
  s.min_poly = minimal_polynomial_from_powers(powers);
  s.d = s.min_poly.degree() - 1;

  // Moments: directly from the powers the elimination already produced,
  // then extended by the minimal-polynomial recurrence.
  for (int j = 0; j <= s.d + 1 && j <= 2 * s.d + 1; ++j)
    s.moments.push_back(powers.power(j).trace());
  extend_moments(s.moments, s.min_poly, 2 * s.d + 1);

  // pi0 and the Hoffman polynomial from q = min_poly / (x - k).
  auto [q, rem] =
      poly_divmod(s.min_poly, Polynomial({-k, Rational(1)}));
  if (!rem.is_zero())
    throw std::logic_error(
        "analyze_spectrum: valency is not a root of the minimal polynomial");
  s.pi0 = q(k);
  if (s.pi0.sign() <= 0)
    throw std::logic_error("analyze_spectrum: pi0 must be positive");
  s.a_tilde = -s.min_poly.coeff(s.d);
  s.hoffman = (Rational(s.n) / s.pi0) * q;

  if (!(poly_apply(powers, s.hoffman) == SquareMatrixQ::ones(s.n)))
    throw std::logic_error("analyze_spectrum: H(A) != J");

  // Predistance polynomials: Gram-Schmidt over the monomial basis, then
  // rescale each monic orthogonal q_i by q_i(k)/<q_i,q_i>.
  std::vector<Polynomial> monic;
  std::vector<Rational> norm;
  for (int j = 0; j <= s.d; ++j) {
    Polynomial qj = Polynomial::monomial(j, Rational(1));
    for (int i = 0; i < j; ++i) {
      Rational coef = s.inner_product(qj, monic[i]) / norm[i];
      qj = qj - coef * monic[i];
    }
    Rational nj = s.inner_product(qj, qj);
    if (nj.is_zero())
      throw std::logic_error(
          "analyze_spectrum: degenerate inner product (moment Gram matrix "
          "is singular)");
    Rational vk = qj(k);
    if (vk.is_zero())
      throw std::logic_error(
          "analyze_spectrum: orthogonal polynomial vanishes at the valency");
    monic.push_back(std::move(qj));
    norm.push_back(std::move(nj));
    s.predistance.push_back((vk / norm[j]) * monic[j]);
  }

  // Three-term recurrence coefficients, with exact reconstruction checks.
  const Polynomial x = Polynomial::x();
  for (int i = 0; i <= s.d; ++i) {
    const Polynomial xpi = x * s.predistance[i];
    s.alpha.push_back(s.inner_product(xpi, s.predistance[i]) /
                      s.predistance[i](k));
    if (i >= 1)
      s.beta.push_back(s.inner_product(xpi, s.predistance[i - 1]) /
                       s.predistance[i - 1](k));
    if (i + 1 <= s.d)
      s.gamma.push_back(s.inner_product(xpi, s.predistance[i + 1]) /
                        s.predistance[i + 1](k));
  }
  for (int i = 0; i <= s.d; ++i) {
    Polynomial rhs = s.alpha[i] * s.predistance[i];
    if (i >= 1) rhs = rhs + s.beta[i - 1] * s.predistance[i - 1];
    if (i + 1 <= s.d) rhs = rhs + s.gamma[i] * s.predistance[i + 1];
    Polynomial residue = x * s.predistance[i] - rhs;
    if (i < s.d) {
      if (!residue.is_zero())
        throw std::logic_error("analyze_spectrum: recurrence fails below d");
    } else if (!poly_divmod(residue, s.min_poly).second.is_zero()) {
      throw std::logic_error(
          "analyze_spectrum: recurrence residue at d is not a multiple of "
          "the minimal polynomial");
    }
  }
  return s;
}

}  // namespace specex
