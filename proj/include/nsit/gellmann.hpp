#pragma once

#include <vector>

#include "nsit/types.hpp"

namespace nsit {

// One su(N) generator together with its spectral decomposition
//   g = sum_k eigenvalues[k] * projectors[k].
// Eigenvalues are sorted in descending order; projectors are rank-1 and come
// from a fixed analytic eigenbasis (diagonal generators use standard basis
// vectors, off-diagonal generators the two-component +/- superpositions),
// with ties broken by basis-vector index.  The layout is therefore
// reproducible across runs, which downstream transfer-matrix indexing
// relies on.
struct Generator {
  CMatrix matrix;
  RVector eigenvalues;
  std::vector<CMatrix> projectors;
};

// Scaled generalized Gell-Mann basis of su(N): the N^2-1 traceless Hermitian
// matrices in the order (symmetric off-diagonal, antisymmetric off-diagonal,
// diagonal), each multiplied by sqrt(N/2) so that Tr[g_n g_m] = N delta_nm.
struct GeneratorBasis {
  int dim = 0;
  std::vector<Generator> generators;
  // Structure constants c_{nm}^{r} of [g_n, g_m] = i sum_r c_{nm}^{r} g_r,
  // flattened as (n * M + m) * M + r with M = N^2 - 1.
  std::vector<double> structure;

  int count() const { return dim * dim - 1; }
  double structure_constant(int n, int m, int r) const {
    const int size = count();
    return structure[(static_cast<std::size_t>(n) * size + m) * size + r];
  }
};

// Builds the basis for dim >= 2 (throws std::invalid_argument otherwise).
GeneratorBasis build_basis(int dim);

// c_{nm}^{r} = (1/(i N)) Tr[[g_n, g_m] g_r]; the imaginary part of every
// trace is checked against 1e-10.
std::vector<double> structure_constants(const std::vector<Generator>& generators, int dim);
std::vector<double> structure_constants(const GeneratorBasis& basis);

// Max residual per invariant class; never mutates the basis.
struct BasisVerification {
  double hermiticity = 0;              // max ||g - g^dag||_max
  double tracelessness = 0;            // max |Tr g|
  double orthonormality = 0;           // max |Tr[g_n g_m] - N delta_nm|
  double spectral_reconstruction = 0;  // max ||sum_k l(k) P(k) - g||_max
  double projector_completeness = 0;   // max ||sum_k P(k) - I||_max
  double projector_orthogonality = 0;  // max ||P(k) P(k') - delta P(k)||_max
  double closure = 0;                  // max ||[g_n, g_m] - i sum_r c g_r||_max
  double structure_antisymmetry = 0;   // max |c_{nm}^r + c_{mn}^r|

  double max_residual() const;
};

BasisVerification verify_basis(const GeneratorBasis& basis);

}  // namespace nsit
