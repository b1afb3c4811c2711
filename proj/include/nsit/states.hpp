#pragma once

#include "nsit/gellmann.hpp"
#include "nsit/types.hpp"

namespace nsit {

// Hermitian unit-trace matrix.  Positivity is deliberately not an invariant:
// pseudodensity matrices reconstructed after a noninvasive measurement may be
// indefinite, and positivity_check answers the question on demand.
struct DensityMatrix {
  int dim = 0;
  CMatrix matrix;
};

// The N^2-1 generator expectation values <g_n> coordinatizing a state.
struct BlochVector {
  int dim = 0;
  RVector coords;
};

// The N(N^2-1) emergent probabilities p_n(k) = Tr[P_n(k) rho], stored
// tuple-major: component (n, k) sits at values[n * dim + k], with k indexing
// the descending-eigenvalue order fixed by GeneratorBasis.  Each N-tuple sums
// to 1; individual components may be negative for evolved/diagnostic vectors.
struct ProbabilityVector {
  int dim = 0;
  RVector values;

  double operator()(int n, int k) const { return values[n * dim + k]; }
  double& operator()(int n, int k) { return values[n * dim + k]; }
  int tuple_count() const { return dim * dim - 1; }
};

// Validating constructors for data arriving from files or callers.
DensityMatrix make_density(int dim, CMatrix m);
ProbabilityVector make_probability_vector(int dim, RVector values);

// <g_n> = Tr[g_n rho]; imaginary parts (roundoff) are checked against 1e-10.
BlochVector bloch_from_density(const DensityMatrix& rho, const GeneratorBasis& basis);

// rho = (1/N)(I + sum_n <g_n> g_n).
DensityMatrix density_from_bloch(const BlochVector& v, const GeneratorBasis& basis);

// p_n(k) = Tr[P_n(k) rho].
ProbabilityVector probability_vector_from_density(const DensityMatrix& rho,
                                                  const GeneratorBasis& basis);

// <g_n> = sum_k l_n(k) p_n(k); rejects vectors whose tuple sums are off by
// more than 1e-6.
BlochVector expectations_from_probabilities(const ProbabilityVector& p,
                                            const GeneratorBasis& basis);

struct BlochBallCheck {
  double norm_sq = 0;
  bool within_ball = false;  // norm_sq <= N - 1 + 1e-9
};
BlochBallCheck bloch_norm_check(const BlochVector& v);

struct PositivityCheck {
  double min_eigenvalue = 0;
  bool is_quantum = false;  // min eigenvalue >= -1e-9
};
PositivityCheck positivity_check(const DensityMatrix& rho);

struct OverlapCheck {
  double dot = 0;
  bool satisfied = false;  // dot >= -1 - 1e-9, necessary for Tr[rho1 rho2] >= 0
};
OverlapCheck overlap_condition(const BlochVector& v1, const BlochVector& v2);

// Max |sum_k p_n(k) - 1| over tuples.
double max_tuple_sum_error(const ProbabilityVector& p);

}  // namespace nsit
