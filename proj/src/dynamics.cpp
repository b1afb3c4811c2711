#include "nsit/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace nsit {

namespace {

constexpr double kRealnessTol = 1e-10;
constexpr double kTaylorTermTol = 1e-14;
constexpr int kMaxTaylorTerms = 64;

double norm1(const RMatrix& m) { return m.cwiseAbs().colwise().sum().maxCoeff(); }

double real_checked(Complex z, const char* where) {
  if (std::abs(z.imag()) > kRealnessTol)
    throw std::runtime_error(std::string(where) + ": coefficient has a non-real part");
  return z.real();
}

}  // namespace

HamiltonianSpec hamiltonian_from_matrix(CMatrix m) {
  if (m.rows() < 2 || m.rows() != m.cols())
    throw std::invalid_argument("hamiltonian_from_matrix: bad shape");
  if (!is_hermitian(m, 1e-10))
    throw std::invalid_argument("hamiltonian_from_matrix: matrix is not Hermitian");
  const int dim = static_cast<int>(m.rows());
  return {dim, std::move(m), std::nullopt};
}

HamiltonianSpec qubit_field_hamiltonian(double bx, double by, double bz) {
  if (!std::isfinite(bx) || !std::isfinite(by) || !std::isfinite(bz))
    throw std::invalid_argument("qubit_field_hamiltonian: non-finite field");
  CMatrix m(2, 2);
  m << Complex(bz / 2, 0), Complex(bx / 2, -by / 2),
       Complex(bx / 2, by / 2), Complex(-bz / 2, 0);
  return {2, std::move(m), Eigen::Vector3d(bx, by, bz)};
}

RMatrix bloch_generator(const HamiltonianSpec& h, const GeneratorBasis& basis) {
  if (h.dim != basis.dim) throw std::invalid_argument("bloch_generator: dimension mismatch");
  const int size = basis.count();
  const Complex factor = Complex(0, -1) / static_cast<double>(basis.dim);
  RMatrix gen(size, size);
  for (int n = 0; n < size; ++n) {
    const CMatrix comm = basis.generators[n].matrix * h.matrix -
                         h.matrix * basis.generators[n].matrix;
    for (int m = 0; m < size; ++m)
      gen(n, m) = real_checked(factor * trace_product(basis.generators[m].matrix, comm),
                               "bloch_generator");
  }
  return gen;
}

TransferMatrix transfer_matrix(const HamiltonianSpec& h, const GeneratorBasis& basis) {
  if (h.dim != basis.dim) throw std::invalid_argument("transfer_matrix: dimension mismatch");
  const int dim = basis.dim;
  const int tuples = basis.count();
  const Eigen::Index size = static_cast<Eigen::Index>(dim) * tuples;
  const Complex factor = 1.0 / (Complex(0, 1) * static_cast<double>(dim));

  TransferMatrix tm{dim, RMatrix::Zero(size, size)};
  for (int n = 0; n < tuples; ++n) {
    for (int k = 0; k < dim; ++k) {
      const CMatrix& projector = basis.generators[n].projectors[k];
      const CMatrix comm = projector * h.matrix - h.matrix * projector;
      const Eigen::Index row = static_cast<Eigen::Index>(n) * dim + k;
      for (int m = 0; m < tuples; ++m) {
        // K_{nm}(k) = (1/(i N)) Tr[g_m [P_n(k), H]]; the (k, k') entry is
        // K times the eigenvalue l_m(k').
        const double coeff = real_checked(
            factor * trace_product(basis.generators[m].matrix, comm), "transfer_matrix");
        for (int k2 = 0; k2 < dim; ++k2)
          tm.entries(row, static_cast<Eigen::Index>(m) * dim + k2) =
              basis.generators[m].eigenvalues[k2] * coeff;
      }
    }
  }
  return tm;
}

RMatrix expm(const RMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("expm: matrix must be square");
  const Eigen::Index n = a.rows();

  int squarings = 0;
  const double scale = norm1(a);
  if (scale > 1.0) squarings = static_cast<int>(std::ceil(std::log2(scale)));
  const RMatrix b = a * std::ldexp(1.0, -squarings);

  RMatrix result = RMatrix::Identity(n, n);
  RMatrix term = RMatrix::Identity(n, n);
  for (int k = 1; k <= kMaxTaylorTerms; ++k) {
    term = (term * b) / static_cast<double>(k);
    result += term;
    if (norm1(term) < kTaylorTermTol) break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

ProbabilityVector evolve_probabilities(const ProbabilityVector& p0, const TransferMatrix& h,
                                       double t) {
  if (p0.dim != h.dim) throw std::invalid_argument("evolve_probabilities: dimension mismatch");
  if (p0.values.size() != h.entries.rows())
    throw std::invalid_argument("evolve_probabilities: size mismatch");
  if (!std::isfinite(t)) throw std::invalid_argument("evolve_probabilities: non-finite time");
  return {p0.dim, expm(t * h.entries) * p0.values};
}

DensityMatrix evolve_density_oracle(const DensityMatrix& rho0, const HamiltonianSpec& h,
                                    double t) {
  if (rho0.dim != h.dim)
    throw std::invalid_argument("evolve_density_oracle: dimension mismatch");
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h.matrix);
  CVector phases(h.dim);
  for (int j = 0; j < h.dim; ++j)
    phases[j] = std::exp(Complex(0, -solver.eigenvalues()[j] * t));
  const CMatrix u = solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
  return {rho0.dim, u * rho0.matrix * u.adjoint()};
}

BlochVector evolve_bloch(const BlochVector& v0, const RMatrix& generator, double t) {
  if (v0.coords.size() != generator.rows() || generator.rows() != generator.cols())
    throw std::invalid_argument("evolve_bloch: size mismatch");
  if (!std::isfinite(t)) throw std::invalid_argument("evolve_bloch: non-finite time");
  return {v0.dim, expm(t * generator) * v0.coords};
}

}  // namespace nsit
