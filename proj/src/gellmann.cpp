#include "nsit/gellmann.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nsit {

namespace {

CMatrix rank1(const CVector& v) { return v * v.adjoint(); }

CVector basis_vector(int dim, int j) {
  CVector e = CVector::Zero(dim);
  e[j] = 1.0;
  return e;
}

// Appends the spectral data of an off-diagonal generator built on the
// index pair (j, k): eigenvector (e_j + phase e_k)/sqrt(2) for +scale,
// (e_j - phase e_k)/sqrt(2) for -scale, standard basis vectors elsewhere.
Generator offdiagonal_generator(int dim, int j, int k, Complex phase, double scale) {
  Generator g;
  g.matrix = CMatrix::Zero(dim, dim);
  g.matrix(j, k) = scale * std::conj(phase);
  g.matrix(k, j) = scale * phase;

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CVector plus = CVector::Zero(dim);
  plus[j] = inv_sqrt2;
  plus[k] = phase * inv_sqrt2;
  CVector minus = CVector::Zero(dim);
  minus[j] = inv_sqrt2;
  minus[k] = -phase * inv_sqrt2;

  g.eigenvalues = RVector::Zero(dim);
  g.projectors.reserve(dim);
  g.eigenvalues[0] = scale;
  g.projectors.push_back(rank1(plus));
  int slot = 1;
  for (int m = 0; m < dim; ++m) {
    if (m == j || m == k) continue;
    g.eigenvalues[slot] = 0.0;
    g.projectors.push_back(rank1(basis_vector(dim, m)));
    ++slot;
  }
  g.eigenvalues[dim - 1] = -scale;
  g.projectors.push_back(rank1(minus));
  return g;
}

// Diagonal generator with 1-based level l: scale/sqrt(l(l+1)) times
// diag(1, ..., 1, -l, 0, ..., 0) with l leading ones.
Generator diagonal_generator(int dim, int l, double scale) {
  Generator g;
  g.matrix = CMatrix::Zero(dim, dim);
  const double c = scale * std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
  for (int j = 0; j < l; ++j) g.matrix(j, j) = c;
  g.matrix(l, l) = -c * l;

  g.eigenvalues = RVector::Zero(dim);
  g.projectors.reserve(dim);
  int slot = 0;
  for (int j = 0; j < l; ++j) {
    g.eigenvalues[slot++] = c;
    g.projectors.push_back(rank1(basis_vector(dim, j)));
  }
  for (int j = l + 1; j < dim; ++j) {
    g.eigenvalues[slot++] = 0.0;
    g.projectors.push_back(rank1(basis_vector(dim, j)));
  }
  g.eigenvalues[slot] = -c * l;
  g.projectors.push_back(rank1(basis_vector(dim, l)));
  return g;
}

}  // namespace

GeneratorBasis build_basis(int dim) {
  if (dim < 2) throw std::invalid_argument("build_basis: dimension must be >= 2");

  GeneratorBasis basis;
  basis.dim = dim;
  basis.generators.reserve(static_cast<std::size_t>(dim) * dim - 1);
  const double scale = std::sqrt(dim / 2.0);

  for (int j = 0; j < dim; ++j)
    for (int k = j + 1; k < dim; ++k)
      basis.generators.push_back(offdiagonal_generator(dim, j, k, Complex(1, 0), scale));
  for (int j = 0; j < dim; ++j)
    for (int k = j + 1; k < dim; ++k)
      basis.generators.push_back(offdiagonal_generator(dim, j, k, Complex(0, 1), scale));
  for (int l = 1; l < dim; ++l)
    basis.generators.push_back(diagonal_generator(dim, l, scale));

  basis.structure = structure_constants(basis.generators, dim);
  return basis;
}

std::vector<double> structure_constants(const std::vector<Generator>& generators, int dim) {
  const int size = static_cast<int>(generators.size());
  std::vector<double> tensor(static_cast<std::size_t>(size) * size * size, 0.0);
  const Complex inv_in = 1.0 / (Complex(0, 1) * static_cast<double>(dim));
  for (int n = 0; n < size; ++n) {
    for (int m = n + 1; m < size; ++m) {
      const CMatrix comm = generators[n].matrix * generators[m].matrix -
                           generators[m].matrix * generators[n].matrix;
      for (int r = 0; r < size; ++r) {
        const Complex c = inv_in * trace_product(comm, generators[r].matrix);
        if (std::abs(c.imag()) > 1e-10)
          throw std::runtime_error("structure_constants: non-real coefficient");
        tensor[(static_cast<std::size_t>(n) * size + m) * size + r] = c.real();
        tensor[(static_cast<std::size_t>(m) * size + n) * size + r] = -c.real();
      }
    }
  }
  return tensor;
}

std::vector<double> structure_constants(const GeneratorBasis& basis) {
  return structure_constants(basis.generators, basis.dim);
}

double BasisVerification::max_residual() const {
  return std::max({hermiticity, tracelessness, orthonormality, spectral_reconstruction,
                   projector_completeness, projector_orthogonality, closure,
                   structure_antisymmetry});
}

BasisVerification verify_basis(const GeneratorBasis& basis) {
  BasisVerification v;
  const int dim = basis.dim;
  const int size = static_cast<int>(basis.generators.size());
  const CMatrix identity = CMatrix::Identity(dim, dim);

  for (int n = 0; n < size; ++n) {
    const Generator& g = basis.generators[n];
    v.hermiticity = std::max(v.hermiticity, max_abs(CMatrix(g.matrix - g.matrix.adjoint())));
    v.tracelessness = std::max(v.tracelessness, std::abs(g.matrix.trace()));

    CMatrix rebuilt = CMatrix::Zero(dim, dim);
    CMatrix total = CMatrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) {
      rebuilt += g.eigenvalues[k] * g.projectors[k];
      total += g.projectors[k];
      for (int k2 = 0; k2 < dim; ++k2) {
        const CMatrix prod = g.projectors[k] * g.projectors[k2];
        const CMatrix expected = (k == k2) ? g.projectors[k] : CMatrix::Zero(dim, dim);
        v.projector_orthogonality = std::max(v.projector_orthogonality, max_abs(CMatrix(prod - expected)));
      }
    }
    v.spectral_reconstruction = std::max(v.spectral_reconstruction, max_abs(CMatrix(rebuilt - g.matrix)));
    v.projector_completeness = std::max(v.projector_completeness, max_abs(CMatrix(total - identity)));

    for (int m = 0; m < size; ++m) {
      const Complex overlap = trace_product(g.matrix, basis.generators[m].matrix);
      const double expected = (n == m) ? static_cast<double>(dim) : 0.0;
      v.orthonormality = std::max(v.orthonormality, std::abs(overlap - expected));
    }
  }

  // Lie-algebra closure against the stored structure constants.
  for (int n = 0; n < size; ++n) {
    for (int m = n + 1; m < size; ++m) {
      const CMatrix comm = basis.generators[n].matrix * basis.generators[m].matrix -
                           basis.generators[m].matrix * basis.generators[n].matrix;
      CMatrix span = CMatrix::Zero(dim, dim);
      for (int r = 0; r < size; ++r) {
        const double c = basis.structure_constant(n, m, r);
        if (c != 0.0) span += Complex(0, c) * basis.generators[r].matrix;
        v.structure_antisymmetry = std::max(
            v.structure_antisymmetry, std::abs(c + basis.structure_constant(m, n, r)));
      }
      v.closure = std::max(v.closure, max_abs(CMatrix(comm - span)));
    }
  }
  return v;
}

}  // namespace nsit
