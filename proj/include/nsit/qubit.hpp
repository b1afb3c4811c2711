#pragma once

#include <array>

#include "nsit/dynamics.hpp"
#include "nsit/types.hpp"

namespace nsit {

using Bloch3 = Eigen::Vector3d;

// Closed-form witness values for a single qubit with Bloch vector
// (<s_x>, <s_y>, <s_z>):  gamma_a = (sqrt(1 + sum_{b != a} <s_b>^2) - 1) / 2.
// Both outcomes of the same axis give the same value.  Throws when the Bloch
// norm exceeds 1 (not a quantum state).
std::array<double, 3> gamma_closed_form(const Bloch3& bloch);

// Mean-square measurement backreaction
//   Delta = (1/3) sum_a sum_b (Tr[s_b rho_a] - <s_b>)^2
// with rho_a = sum_s P_as rho P_as, evaluated through the projector-averaged
// states.  Equals (2/3) |bloch|^2 and (4/3) sum_a gamma_a (1 + gamma_a).
double delta_measure(const Bloch3& bloch);

// The closed form (2/3) |bloch|^2, kept as a second route for cross-checks.
double delta_closed_form(const Bloch3& bloch);

struct BoundCheck {
  double lhs = 0;          // sum_a gamma_a (1 + gamma_a)
  bool satisfied = false;  // lhs <= 1/2 + 1e-9
};
BoundCheck bound_check(double gamma_x, double gamma_y, double gamma_z);

// The closed 6x6 probability transfer matrix for a qubit in field
// B = (B_x, B_y, B_z), rows/columns ordered (x,+1),(x,-1),(y,+1),...,(z,-1).
// Agrees entrywise with the general transfer_matrix construction at N = 2.
TransferMatrix transfer_matrix_2level(const Bloch3& field);

struct QubitWitnessSet {
  std::array<double, 3> gamma{};
  double delta = 0;
  Bloch3 bloch = Bloch3::Zero();
};
QubitWitnessSet qubit_witness_set(const Bloch3& bloch);

}  // namespace nsit
