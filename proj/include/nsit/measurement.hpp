#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nsit/dynamics.hpp"
#include "nsit/states.hpp"

namespace nsit {

// Noninvasive measurement of generator `generator` observing the eigenvalue
// with (descending-order) index `outcome`.  Indices are 0-based:
// generator in [0, N^2-2], outcome in [0, N-1].
struct MeasurementRecord {
  int generator = 0;
  int outcome = 0;
};

// Replaces the measured tuple by the one-hot distribution at the observed
// outcome and leaves every other tuple untouched:
//   p'_m(k') = delta_mn delta_k'k + (1 - delta_mn) p_m(k').
ProbabilityVector collapse(const ProbabilityVector& p, const MeasurementRecord& m);

// rho' = (1/N)(I + sum_m <g_m>' g_m) with <g_m>' = sum_k l_m(k) p_m(k).
// Hermitian and unit trace by construction; positivity is not guaranteed.
DensityMatrix reconstruct_pseudodensity(const ProbabilityVector& p, const GeneratorBasis& basis);

struct WitnessReport {
  double gamma = 0;                          // sum of |negative eigenvalues|
  std::vector<double> negative_eigenvalues;  // entries < -1e-10
  RVector spectrum;                          // all N eigenvalues, descending
};

// Collapses p with m, reconstructs the pseudodensity matrix and sums the
// absolute values of its negative eigenvalues.  gamma == 0 exactly when the
// smallest eigenvalue is >= -1e-10.
WitnessReport witness_gamma(const ProbabilityVector& p, const MeasurementRecord& m,
                            const GeneratorBasis& basis);

struct NegativityHit {
  double time = 0;
  int generator = 0;
  int outcome = 0;
  double value = 0;
};

struct NegativityScan {
  bool violating = false;
  std::optional<NegativityHit> first_negative;
};

// Evolves p_post across the ascending time grid and reports the first
// component dropping below -1e-8.  The crossing time is refined by bisection
// between the last clean grid point and the first violating one until the
// bracket is shorter than 1e-6.
NegativityScan negativity_scan(const ProbabilityVector& p_post, const TransferMatrix& h,
                               std::span<const double> t_grid);

}  // namespace nsit
