#include "nsit/qubit.hpp"

#include <cmath>
#include <stdexcept>

namespace nsit {

namespace {

void require_in_ball(const Bloch3& bloch, const char* where) {
  if (!bloch.allFinite() || bloch.squaredNorm() > 1.0 + 1e-9)
    throw std::invalid_argument(std::string(where) + ": Bloch vector outside the unit ball");
}

CMatrix pauli(int axis) {
  CMatrix m(2, 2);
  switch (axis) {
    case 0: m << 0, 1, 1, 0; break;
    case 1: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

}  // namespace

std::array<double, 3> gamma_closed_form(const Bloch3& bloch) {
  require_in_ball(bloch, "gamma_closed_form");
  std::array<double, 3> gamma{};
  const double total = bloch.squaredNorm();
  for (int a = 0; a < 3; ++a)
    gamma[a] = 0.5 * (std::sqrt(1.0 + total - bloch[a] * bloch[a]) - 1.0);
  return gamma;
}

double delta_measure(const Bloch3& bloch) {
  require_in_ball(bloch, "delta_measure");
  CMatrix rho = 0.5 * CMatrix::Identity(2, 2);
  for (int a = 0; a < 3; ++a) rho += 0.5 * bloch[a] * pauli(a);

  double sum_sq = 0;
  for (int a = 0; a < 3; ++a) {
    // rho_a = P_{a,+} rho P_{a,+} + P_{a,-} rho P_{a,-}
    const CMatrix p_plus = 0.5 * (CMatrix::Identity(2, 2) + pauli(a));
    const CMatrix p_minus = 0.5 * (CMatrix::Identity(2, 2) - pauli(a));
    const CMatrix averaged = p_plus * rho * p_plus + p_minus * rho * p_minus;
    for (int b = 0; b < 3; ++b) {
      const double deviation =
          trace_product(pauli(b), averaged).real() - trace_product(pauli(b), rho).real();
      sum_sq += deviation * deviation;
    }
  }
  return sum_sq / 3.0;
}

double delta_closed_form(const Bloch3& bloch) {
  require_in_ball(bloch, "delta_closed_form");
  return 2.0 / 3.0 * bloch.squaredNorm();
}

BoundCheck bound_check(double gamma_x, double gamma_y, double gamma_z) {
  if (gamma_x < 0 || gamma_y < 0 || gamma_z < 0)
    throw std::invalid_argument("bound_check: gamma values must be nonnegative");
  const double lhs = gamma_x * (1 + gamma_x) + gamma_y * (1 + gamma_y) + gamma_z * (1 + gamma_z);
  return {lhs, lhs <= 0.5 + 1e-9};
}

TransferMatrix transfer_matrix_2level(const Bloch3& field) {
  if (!field.allFinite())
    throw std::invalid_argument("transfer_matrix_2level: non-finite field");
  const double bx = field[0] / 2, by = field[1] / 2, bz = field[2] / 2;
  TransferMatrix tm{2, RMatrix(6, 6)};
  tm.entries <<
      0,   0,   -bz,  bz,   by, -by,
      0,   0,    bz, -bz,  -by,  by,
      bz, -bz,   0,   0,   -bx,  bx,
     -bz,  bz,   0,   0,    bx, -bx,
     -by,  by,   bx, -bx,   0,   0,
      by, -by,  -bx,  bx,   0,   0;
  return tm;
}

QubitWitnessSet qubit_witness_set(const Bloch3& bloch) {
  QubitWitnessSet set;
  set.bloch = bloch;
  set.gamma = gamma_closed_form(bloch);
  set.delta = delta_measure(bloch);
  return set;
}

}  // namespace nsit
