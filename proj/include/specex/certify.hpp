#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specex/graph.hpp"
#include "specex/spectral.hpp"

namespace specex {

enum class Verdict {
  kGeneralizedOdd,
  kDistanceRegularNotGeneralizedOdd,
  kNotDistanceRegular,
  kPreconditionFailed,
};

std::string to_string(Verdict v);

/// One named identity check with exact witness values rendered as strings.
struct CheckRecord {
  std::string name;
  bool passed = false;
  std::string lhs;
  std::string rhs;
};

/// Outcome of the generalized-odd certification pipeline.
struct CertificationReport {
  int n = 0;
  std::optional<int> valency;
  std::optional<int> d;         // distinct eigenvalues minus one
  std::optional<int> diameter;  // set when connected
  bool odd_girth_known = false;
  std::optional<int> odd_girth;  // nullopt + known = infinite (bipartite)
  std::optional<int> spectral_odd_girth;
  std::vector<CheckRecord> checks;
  Verdict verdict = Verdict::kPreconditionFailed;
  std::optional<IntersectionArray> intersection_array;

  bool check_failed(const std::string& name) const;
};

/// Exact test of "distance-regular iff average excess equals spectral
/// excess" data for one graph: both sides computed independently (BFS layer
/// counts vs. predistance polynomial value). Requires connected + regular.
struct ExcessTheoremResult {
  bool is_distance_regular = false;
  Rational average_excess;
  Rational spectral_excess;
};

ExcessTheoremResult check_spectral_excess_theorem(const Graph& g);
ExcessTheoremResult check_spectral_excess_theorem(const Graph& g,
                                                  const SpectralData& spec);

/// Full certification: connectivity, regularity, eigenvalue count, odd
/// girth, diameter/odd-girth consequences, excess equality, direct
/// intersection-array extraction, and the vanishing of a_1..a_{D-1}.
/// Mathematical failures become verdicts, never exceptions.
CertificationReport certify_generalized_odd(const Graph& g);

/// Average excess two ways: BFS arithmetic mean vs. the closed-walk trace
/// formula n*m_{2d+1}/(a_tilde*pi0^2). Requires connected, regular, finite
/// odd-girth >= 2d+1.
struct AverageExcessIdentity {
  Rational bfs_mean;
  Rational trace_formula;
  bool equal = false;
};

AverageExcessIdentity average_excess_trace_identity(const Graph& g);

/// Entrywise check of (A^d)_uv = pi0/n and (A^{d+1})_uv = a_tilde*pi0/n over
/// every vertex pair at distance d.
struct WalkIdentityResult {
  long pairs_checked = 0;
  bool distance_power_ok = false;
  bool successor_power_ok = false;
};

WalkIdentityResult check_distance_walk_identities(const Graph& g,
                                                  const SpectralData& spec);

/// Monic characteristic polynomial, exactly, via the trace/Newton recurrence
/// (divisions are exact). Asserts divisibility by the minimal polynomial.
Polynomial characteristic_polynomial(const SquareMatrixZ& m);
Polynomial characteristic_polynomial(const Graph& g);

/// Cospectrality (equal characteristic polynomials) plus both certification
/// verdicts. `consistent` is false only if exactly one of two cospectral
/// graphs certifies generalized-odd.
struct CospectralReport {
  bool cospectral = false;
  Verdict verdict1 = Verdict::kPreconditionFailed;
  Verdict verdict2 = Verdict::kPreconditionFailed;
  bool consistent = true;
};

CospectralReport cospectral_check(const Graph& g1, const Graph& g2);

}  // namespace specex
