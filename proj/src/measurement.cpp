#include "nsit/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nsit {

namespace {

constexpr double kNegativeEigenvalueTol = 1e-10;  // gamma counting
constexpr double kNegativeComponentTol = 1e-8;    // evolved-component scan
constexpr double kBisectionWidth = 1e-6;

int argmin_component(const RVector& values) {
  Eigen::Index idx = 0;
  values.minCoeff(&idx);
  return static_cast<int>(idx);
}

}  // namespace

ProbabilityVector collapse(const ProbabilityVector& p, const MeasurementRecord& m) {
  if (m.generator < 0 || m.generator >= p.tuple_count())
    throw std::out_of_range("collapse: generator index out of range");
  if (m.outcome < 0 || m.outcome >= p.dim)
    throw std::out_of_range("collapse: outcome index out of range");
  ProbabilityVector out = p;
  out.values.segment(static_cast<Eigen::Index>(m.generator) * p.dim, p.dim).setZero();
  out(m.generator, m.outcome) = 1.0;
  return out;
}

DensityMatrix reconstruct_pseudodensity(const ProbabilityVector& p, const GeneratorBasis& basis) {
  return density_from_bloch(expectations_from_probabilities(p, basis), basis);
}

WitnessReport witness_gamma(const ProbabilityVector& p, const MeasurementRecord& m,
                            const GeneratorBasis& basis) {
  const ProbabilityVector post = collapse(p, m);
  const DensityMatrix pseudo = reconstruct_pseudodensity(post, basis);

  Eigen::SelfAdjointEigenSolver<CMatrix> solver(pseudo.matrix, Eigen::EigenvaluesOnly);
  WitnessReport report;
  report.spectrum = solver.eigenvalues().reverse();
  for (int j = 0; j < report.spectrum.size(); ++j) {
    const double e = report.spectrum[j];
    if (e < -kNegativeEigenvalueTol) {
      report.negative_eigenvalues.push_back(e);
      report.gamma += -e;
    }
  }
  return report;
}

NegativityScan negativity_scan(const ProbabilityVector& p_post, const TransferMatrix& h,
                               std::span<const double> t_grid) {
  if (t_grid.empty()) throw std::invalid_argument("negativity_scan: empty time grid");
  if (!std::is_sorted(t_grid.begin(), t_grid.end()))
    throw std::invalid_argument("negativity_scan: time grid must be ascending");

  NegativityScan scan;
  ProbabilityVector current = p_post;
  double t_current = 0;
  double t_clean = 0;  // last time known free of negative components

  for (double t : t_grid) {
    current = evolve_probabilities(current, h, t - t_current);
    t_current = t;
    if (current.values.minCoeff() >= -kNegativeComponentTol) {
      t_clean = t;
      continue;
    }

    // Bisect [t_clean, t] on the most negative component to localize the
    // threshold crossing.
    double lo = t_clean;
    double hi = t;
    ProbabilityVector at_hi = current;
    while (hi - lo > kBisectionWidth) {
      const double mid = 0.5 * (lo + hi);
      const ProbabilityVector at_mid = evolve_probabilities(p_post, h, mid);
      if (at_mid.values.minCoeff() < -kNegativeComponentTol) {
        hi = mid;
        at_hi = at_mid;
      } else {
        lo = mid;
      }
    }
    const int flat = argmin_component(at_hi.values);
    scan.violating = true;
    scan.first_negative =
        NegativityHit{hi, flat / p_post.dim, flat % p_post.dim, at_hi.values[flat]};
    return scan;
  }
  return scan;
}

}  // namespace nsit
