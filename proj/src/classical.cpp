#include "nsit/classical.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "nsit/rng.hpp"

namespace nsit {

SpinDistribution SpinDistribution::uniform_sphere(double radius) {
  SpinDistribution d;
  d.kind = Kind::UniformSphere;
  d.radius = radius;
  return d;
}

SpinDistribution SpinDistribution::isotropic_gaussian(double sigma) {
  SpinDistribution d;
  d.kind = Kind::IsotropicGaussian;
  d.sigma = sigma;
  return d;
}

SpinDistribution SpinDistribution::point_mass(const Eigen::Vector3d& point) {
  SpinDistribution d;
  d.kind = Kind::PointMass;
  d.point = point;
  return d;
}

SpinDistribution SpinDistribution::from_name(std::string_view name,
                                             std::span<const double> params) {
  auto param = [&](std::size_t i, double fallback) {
    return i < params.size() ? params[i] : fallback;
  };
  if (name == "uniform-sphere") return uniform_sphere(param(0, 1.0));
  if (name == "isotropic-gaussian") return isotropic_gaussian(param(0, 1.0));
  if (name == "point-mass")
    return point_mass({param(0, 0.0), param(1, 0.0), param(2, 0.0)});
  throw std::invalid_argument("unknown spin distribution: " + std::string(name));
}

SpinEnsemble sample_ensemble(const SpinDistribution& dist, std::size_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_ensemble: need at least one sample");
  SpinEnsemble ensemble;
  ensemble.seed = seed;
  ensemble.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng(derive_seed(seed, 0, i));
    switch (dist.kind) {
      case SpinDistribution::Kind::UniformSphere:
        ensemble.samples[i] = dist.radius * rng.unit_sphere();
        break;
      case SpinDistribution::Kind::IsotropicGaussian:
        ensemble.samples[i] = dist.sigma * Eigen::Vector3d(rng.normal(), rng.normal(), rng.normal());
        break;
      case SpinDistribution::Kind::PointMass:
        ensemble.samples[i] = dist.point;
        break;
    }
  }
  return ensemble;
}

SpinEnsemble evolve_ensemble(const SpinEnsemble& ensemble, const Eigen::Vector3d& field,
                             double t) {
  if (!field.allFinite() || !std::isfinite(t))
    throw std::invalid_argument("evolve_ensemble: non-finite input");

  const double magnitude = field.norm();
  const double angle = magnitude * t;
  if (angle == 0.0) return ensemble;

  // Rodrigues form of exp(t [B x]): rotation by |B| t about the field axis.
  const Eigen::Vector3d axis = field / magnitude;
  Eigen::Matrix3d cross;
  cross <<      0, -axis.z(),  axis.y(),
         axis.z(),         0, -axis.x(),
        -axis.y(),  axis.x(),         0;
  const Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity() + std::sin(angle) * cross +
                                   (1.0 - std::cos(angle)) * (cross * cross);

  SpinEnsemble out;
  out.seed = ensemble.seed;
  out.samples.resize(ensemble.samples.size());
  for (std::size_t i = 0; i < ensemble.samples.size(); ++i)
    out.samples[i] = rotation * ensemble.samples[i];
  return out;
}

ClassicalMarginals coarse_grain(const SpinEnsemble& ensemble) {
  if (ensemble.samples.empty()) throw std::invalid_argument("coarse_grain: empty ensemble");
  const double n = static_cast<double>(ensemble.samples.size());
  ClassicalMarginals marginals;
  for (int a = 0; a < 3; ++a) {
    std::size_t plus = 0;
    for (const auto& s : ensemble.samples)
      if (spin_sign(s[a]) > 0) ++plus;
    const double p = static_cast<double>(plus) / n;
    marginals.p_plus[a] = p;
    marginals.std_error[a] = std::sqrt(p * (1.0 - p) / n);
  }
  return marginals;
}

ConditionedEnsemble conditional_update(const SpinEnsemble& ensemble, int axis, int outcome) {
  if (axis < 0 || axis > 2) throw std::invalid_argument("conditional_update: bad axis");
  if (outcome != +1 && outcome != -1)
    throw std::invalid_argument("conditional_update: outcome must be +1 or -1");
  ConditionedEnsemble out;
  out.ensemble.seed = ensemble.seed;
  for (const auto& s : ensemble.samples)
    if (spin_sign(s[axis]) == outcome) out.ensemble.samples.push_back(s);
  if (out.ensemble.samples.empty())
    throw std::runtime_error("conditional_update: no sample matches the outcome");
  out.weight = static_cast<double>(out.ensemble.samples.size()) /
               static_cast<double>(ensemble.samples.size());
  return out;
}

ResidualEstimate nsit_residual(const SpinEnsemble& ensemble, const Eigen::Vector3d& field,
                               int axis, double t,
                               const std::function<double(const Eigen::Vector3d&)>& observable) {
  if (ensemble.samples.empty()) throw std::invalid_argument("nsit_residual: empty ensemble");
  if (axis < 0 || axis > 2) throw std::invalid_argument("nsit_residual: bad axis");
  const double n = static_cast<double>(ensemble.samples.size());

  auto mean_and_var = [&](const SpinEnsemble& e) {
    double mean = 0;
    for (const auto& s : e.samples) mean += observable(s);
    mean /= static_cast<double>(e.samples.size());
    double var = 0;
    for (const auto& s : e.samples) {
      const double d = observable(s) - mean;
      var += d * d;
    }
    var /= static_cast<double>(e.samples.size());
    return std::pair{mean, var};
  };

  const SpinEnsemble unmeasured = evolve_ensemble(ensemble, field, t);
  const auto [mean_unmeasured, var_unmeasured] = mean_and_var(unmeasured);
  const double se_unmeasured_sq = var_unmeasured / n;

  double mixture = 0;
  double se_mixture_sq = 0;
  for (int outcome : {+1, -1}) {
    SpinEnsemble branch;
    branch.seed = ensemble.seed;
    for (const auto& s : ensemble.samples)
      if (spin_sign(s[axis]) == outcome) branch.samples.push_back(s);
    if (branch.samples.empty()) continue;

    const double weight = static_cast<double>(branch.samples.size()) / n;
    const auto [mean_branch, var_branch] = mean_and_var(evolve_ensemble(branch, field, t));
    mixture += weight * mean_branch;
    se_mixture_sq += weight * weight * var_branch / static_cast<double>(branch.samples.size());
  }

  return {std::abs(mixture - mean_unmeasured), std::sqrt(se_mixture_sq + se_unmeasured_sq)};
}

}  // namespace nsit
