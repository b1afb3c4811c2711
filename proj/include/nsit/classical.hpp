#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace nsit {

// Initial distribution of a classical spin vector.
struct SpinDistribution {
  enum class Kind { UniformSphere, IsotropicGaussian, PointMass };
  Kind kind = Kind::UniformSphere;
  double radius = 1.0;                       // uniform-on-sphere
  double sigma = 1.0;                        // isotropic-gaussian
  Eigen::Vector3d point = {0, 0, 0};         // point-mass

  static SpinDistribution uniform_sphere(double radius = 1.0);
  static SpinDistribution isotropic_gaussian(double sigma);
  static SpinDistribution point_mass(const Eigen::Vector3d& point);
  // Accepts "uniform-sphere", "isotropic-gaussian", "point-mass"; throws on
  // anything else.
  static SpinDistribution from_name(std::string_view name, std::span<const double> params);
};

// Equal-weight Monte Carlo ensemble of classical spins.
struct SpinEnsemble {
  std::vector<Eigen::Vector3d> samples;
  std::uint64_t seed = 0;
};

// Deterministic given (distribution, n, seed); sample i draws from its own
// derived stream, so the result does not depend on batching.
SpinEnsemble sample_ensemble(const SpinDistribution& dist, std::size_t n, std::uint64_t seed);

// Rotates every sample by the exact Rodrigues rotation exp(t [B x]) — the
// same generator that drives the quantum Bloch vector — conserving |S| per
// sample.
SpinEnsemble evolve_ensemble(const SpinEnsemble& ensemble, const Eigen::Vector3d& field,
                             double t);

// Sign of a component with the tie convention eps(0) = +1 (Theta(0) = 1).
inline int spin_sign(double x) { return x >= 0 ? +1 : -1; }

struct ClassicalMarginals {
  std::array<double, 3> p_plus{};    // fraction with eps(S_a) = +1 per axis
  std::array<double, 3> std_error{};

  double plus(int axis) const { return p_plus[axis]; }
  double minus(int axis) const { return 1.0 - p_plus[axis]; }
};
ClassicalMarginals coarse_grain(const SpinEnsemble& ensemble);

struct ConditionedEnsemble {
  SpinEnsemble ensemble;  // survivors with eps(S_axis) = outcome
  double weight = 0;      // survivor fraction
};
// Rejection conditioning; throws when no sample survives.
ConditionedEnsemble conditional_update(const SpinEnsemble& ensemble, int axis, int outcome);

struct ResidualEstimate {
  double residual = 0;
  double std_error = 0;
};

// |E_mixture - E_unmeasured| for an observable O(S) at time t, where the
// mixture conditions on both outcomes of axis `axis` at t = 0 and then
// evolves.  Conditioning partitions the ensemble, so the residual vanishes
// identically up to floating-point summation order.
ResidualEstimate nsit_residual(const SpinEnsemble& ensemble, const Eigen::Vector3d& field,
                               int axis, double t,
                               const std::function<double(const Eigen::Vector3d&)>& observable);

}  // namespace nsit
