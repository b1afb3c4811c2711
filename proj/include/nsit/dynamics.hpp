#pragma once

#include <optional>

#include "nsit/gellmann.hpp"
#include "nsit/states.hpp"
#include "nsit/types.hpp"

namespace nsit {

// Time-independent Hamiltonian, entries in units of angular frequency
// (hbar = 1 throughout).  For a qubit built from a field triple B the matrix
// is (1/2)(B_x s_x + B_y s_y + B_z s_z) and `field` records the triple.
struct HamiltonianSpec {
  int dim = 0;
  CMatrix matrix;
  std::optional<Eigen::Vector3d> field;
};

HamiltonianSpec hamiltonian_from_matrix(CMatrix m);
HamiltonianSpec qubit_field_hamiltonian(double bx, double by, double bz);

// Real N(N^2-1)-square generator of probability-vector dynamics,
//   d/dt p_n(k) = sum_{m,k'} entries[(n,k),(m,k')] p_m(k'),
// rows and columns flattened as n * N + k.  Column sums within each N-row
// tuple block vanish, so every tuple sum is a constant of motion.
struct TransferMatrix {
  int dim = 0;
  RMatrix entries;
};

// h_{nm} = -(i/N) Tr[g_m [g_n, H]]; antisymmetric, and satisfies
// [g_n, H] = i sum_m h_{nm} g_m.
RMatrix bloch_generator(const HamiltonianSpec& h, const GeneratorBasis& basis);

// entries[(n,k),(m,k')] = l_m(k') / (i N) * Tr[g_m [P_n(k), H]].
TransferMatrix transfer_matrix(const HamiltonianSpec& h, const GeneratorBasis& basis);

// Dense matrix exponential by scaling and squaring with a truncated Taylor
// series: scale so ||a||_1 / 2^s <= 1, sum terms until the term 1-norm drops
// below 1e-14, square s times.  No diagonalization involved.
RMatrix expm(const RMatrix& a);

// p(t) = expm(t H) p(0).  Tuple sums are preserved to 1e-8; components may
// go negative when p(0) does not come from a positive semidefinite state.
ProbabilityVector evolve_probabilities(const ProbabilityVector& p0, const TransferMatrix& h,
                                       double t);

// Reference evolution rho(t) = exp(-iHt) rho(0) exp(+iHt) via
// eigendecomposition of H; used as the independent oracle for the series
// propagator.
DensityMatrix evolve_density_oracle(const DensityMatrix& rho0, const HamiltonianSpec& h,
                                    double t);

// <g(t)> = expm(t h) <g(0)> for a Bloch-generator matrix h.
BlochVector evolve_bloch(const BlochVector& v0, const RMatrix& generator, double t);

}  // namespace nsit
