#include "nsit/states.hpp"

#include <cmath>
#include <stdexcept>

namespace nsit {

namespace {

void require_dim_match(int a, int b, const char* where) {
  if (a != b) throw std::invalid_argument(std::string(where) + ": dimension mismatch");
}

}  // namespace

DensityMatrix make_density(int dim, CMatrix m) {
  if (dim < 2 || m.rows() != dim || m.cols() != dim)
    throw std::invalid_argument("make_density: bad shape");
  if (!is_hermitian(m, 1e-10))
    throw std::invalid_argument("make_density: matrix is not Hermitian");
  if (std::abs(m.trace() - Complex(1, 0)) > 1e-10)
    throw std::invalid_argument("make_density: trace is not 1");
  return {dim, std::move(m)};
}

ProbabilityVector make_probability_vector(int dim, RVector values) {
  if (dim < 2 || values.size() != static_cast<Eigen::Index>(dim) * (dim * dim - 1))
    throw std::invalid_argument("make_probability_vector: bad size");
  if (!values.allFinite())
    throw std::invalid_argument("make_probability_vector: non-finite component");
  ProbabilityVector p{dim, std::move(values)};
  if (max_tuple_sum_error(p) > 1e-9)
    throw std::invalid_argument("make_probability_vector: tuple sums are not 1");
  return p;
}

double max_tuple_sum_error(const ProbabilityVector& p) {
  double worst = 0;
  for (int n = 0; n < p.tuple_count(); ++n)
    worst = std::max(worst, std::abs(p.values.segment(n * p.dim, p.dim).sum() - 1.0));
  return worst;
}

BlochVector bloch_from_density(const DensityMatrix& rho, const GeneratorBasis& basis) {
  require_dim_match(rho.dim, basis.dim, "bloch_from_density");
  BlochVector v{rho.dim, RVector::Zero(basis.count())};
  for (int n = 0; n < basis.count(); ++n) {
    const Complex e = trace_product(basis.generators[n].matrix, rho.matrix);
    if (std::abs(e.imag()) > 1e-10)
      throw std::invalid_argument("bloch_from_density: non-real expectation value");
    v.coords[n] = e.real();
  }
  return v;
}

DensityMatrix density_from_bloch(const BlochVector& v, const GeneratorBasis& basis) {
  require_dim_match(v.dim, basis.dim, "density_from_bloch");
  if (!v.coords.allFinite())
    throw std::invalid_argument("density_from_bloch: non-finite coordinate");
  CMatrix m = CMatrix::Identity(v.dim, v.dim);
  for (int n = 0; n < basis.count(); ++n)
    m += v.coords[n] * basis.generators[n].matrix;
  return {v.dim, m / static_cast<double>(v.dim)};
}

ProbabilityVector probability_vector_from_density(const DensityMatrix& rho,
                                                  const GeneratorBasis& basis) {
  require_dim_match(rho.dim, basis.dim, "probability_vector_from_density");
  ProbabilityVector p{rho.dim, RVector::Zero(static_cast<Eigen::Index>(rho.dim) * basis.count())};
  for (int n = 0; n < basis.count(); ++n)
    for (int k = 0; k < rho.dim; ++k)
      p(n, k) = trace_product(basis.generators[n].projectors[k], rho.matrix).real();
  return p;
}

BlochVector expectations_from_probabilities(const ProbabilityVector& p,
                                            const GeneratorBasis& basis) {
  require_dim_match(p.dim, basis.dim, "expectations_from_probabilities");
  if (max_tuple_sum_error(p) > 1e-6)
    throw std::invalid_argument("expectations_from_probabilities: tuple sums inconsistent");
  BlochVector v{p.dim, RVector::Zero(basis.count())};
  for (int n = 0; n < basis.count(); ++n) {
    double acc = 0;
    for (int k = 0; k < p.dim; ++k) acc += basis.generators[n].eigenvalues[k] * p(n, k);
    v.coords[n] = acc;
  }
  return v;
}

BlochBallCheck bloch_norm_check(const BlochVector& v) {
  const double norm_sq = v.coords.squaredNorm();
  return {norm_sq, norm_sq <= v.dim - 1 + 1e-9};
}

PositivityCheck positivity_check(const DensityMatrix& rho) {
  if (!is_hermitian(rho.matrix, 1e-10))
    throw std::invalid_argument("positivity_check: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho.matrix, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  return {min_eig, min_eig >= -1e-9};
}

OverlapCheck overlap_condition(const BlochVector& v1, const BlochVector& v2) {
  require_dim_match(v1.dim, v2.dim, "overlap_condition");
  const double dot = v1.coords.dot(v2.coords);
  return {dot, dot >= -1.0 - 1e-9};
}

}  // namespace nsit
