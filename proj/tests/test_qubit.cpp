#include <doctest.h>

#include <cmath>

#include "nsit/measurement.hpp"
#include "nsit/qubit.hpp"
#include "nsit/rng.hpp"

using namespace nsit;

namespace {

Bloch3 random_ball_point(Rng& rng) {
  while (true) {
    const Bloch3 v(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    if (v.squaredNorm() <= 1.0) return v;
  }
}

}  // namespace

TEST_SUITE("qubit") {

TEST_CASE("gamma closed form: origin, |+x>, and the quantum-state guard") {
  const auto at_origin = gamma_closed_form(Bloch3::Zero());
  CHECK(at_origin[0] == 0.0);
  CHECK(at_origin[1] == 0.0);
  CHECK(at_origin[2] == 0.0);

  const auto at_plus_x = gamma_closed_form(Bloch3(1, 0, 0));
  const double g = (std::sqrt(2.0) - 1) / 2;
  CHECK(at_plus_x[0] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(at_plus_x[1] == doctest::Approx(g).epsilon(1e-14));
  CHECK(at_plus_x[2] == doctest::Approx(g).epsilon(1e-14));

  CHECK_THROWS_AS(gamma_closed_form(Bloch3(1, 1, 0.5)), std::invalid_argument);
}

TEST_CASE("gamma closed form agrees with the general-N witness on random states") {
  Rng rng(51);
  const auto basis = build_basis(2);
  for (int trial = 0; trial < 1000; ++trial) {
    const Bloch3 v = random_ball_point(rng);
    RVector coords(3);
    coords << v[0], v[1], v[2];
    const auto p =
        probability_vector_from_density(density_from_bloch({2, coords}, basis), basis);
    const auto gamma = gamma_closed_form(v);
    for (int axis = 0; axis < 3; ++axis) {
      const double general = witness_gamma(p, {axis, 0}, basis).gamma;
      CHECK(gamma[axis] == doctest::Approx(general).epsilon(1e-10));
    }
  }
}

TEST_CASE("delta measure: origin, |+x>, and the two-route identity") {
  CHECK(delta_measure(Bloch3::Zero()) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(delta_measure(Bloch3(1, 0, 0)) == doctest::Approx(2.0 / 3).epsilon(1e-12));

  Rng rng(52);
  for (int trial = 0; trial < 200; ++trial) {
    const Bloch3 v = random_ball_point(rng);
    CHECK(delta_measure(v) == doctest::Approx(delta_closed_form(v)).epsilon(1e-12));
  }
}

TEST_CASE("delta equals (4/3) sum_a gamma_a (1 + gamma_a) on random states") {
  Rng rng(53);
  for (int trial = 0; trial < 500; ++trial) {
    const Bloch3 v = random_ball_point(rng);
    const auto gamma = gamma_closed_form(v);
    double sum = 0;
    for (double g : gamma) sum += g * (1 + g);
    CHECK(std::abs(delta_measure(v) - 4.0 / 3 * sum) < 1e-10);
    // Sum rule: |v|^2 = 2 sum_a gamma_a (1 + gamma_a).
    CHECK(std::abs(v.squaredNorm() - 2.0 * sum) < 1e-10);
  }
}

TEST_CASE("delta is positive exactly when the Bloch vector is nonzero") {
  CHECK(delta_measure(Bloch3::Zero()) == 0.0);
  Rng rng(54);
  for (int trial = 0; trial < 50; ++trial) {
    const Bloch3 v = random_ball_point(rng);
    if (v.norm() < 1e-3) continue;
    CHECK(delta_measure(v) > 0);
    const auto gamma = gamma_closed_form(v);
    CHECK(std::max({gamma[0], gamma[1], gamma[2]}) > 0);
  }
}

TEST_CASE("bound check: zero set, pure-state saturation, strict interior for mixed") {
  const auto at_zero = bound_check(0, 0, 0);
  CHECK(at_zero.lhs == 0.0);
  CHECK(at_zero.satisfied);

  // gamma (1 + gamma) = 1/4 at gamma = (sqrt 2 - 1)/2, so the pure-state set
  // (0, g, g) saturates the 1/2 bound exactly.
  const double g = (std::sqrt(2.0) - 1) / 2;
  const auto saturated = bound_check(0, g, g);
  CHECK(saturated.lhs == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(saturated.satisfied);

  for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const auto gamma = gamma_closed_form(Bloch3(r, 0, 0));
    const auto check = bound_check(gamma[0], gamma[1], gamma[2]);
    CHECK(check.lhs == doctest::Approx(r * r / 2).epsilon(1e-12));
    CHECK(check.lhs < 0.5);
    CHECK(check.satisfied);
  }

  CHECK_THROWS_AS(bound_check(-0.1, 0, 0), std::invalid_argument);
}

TEST_CASE("pure states saturate the bound") {
  Rng rng(55);
  for (int trial = 0; trial < 1000; ++trial) {
    const Bloch3 v = rng.unit_sphere();
    const auto gamma = gamma_closed_form(v);
    const auto check = bound_check(gamma[0], gamma[1], gamma[2]);
    CHECK(std::abs(check.lhs - 0.5) < 1e-9);
  }
}

TEST_CASE("closed 6x6 transfer matrix: pinned entries and zero field") {
  const auto tm = transfer_matrix_2level(Bloch3(0, 0, 1));
  CHECK(tm.entries(0, 2) == -0.5);  // (x,+1) <- (y,+1)
  CHECK(tm.entries(0, 3) == 0.5);   // (x,+1) <- (y,-1)
  CHECK(max_abs(transfer_matrix_2level(Bloch3::Zero()).entries) == 0.0);
}

TEST_CASE("closed 6x6 transfer matrix matches the general construction") {
  Rng rng(56);
  const auto basis = build_basis(2);
  for (int trial = 0; trial < 20; ++trial) {
    const Bloch3 b(rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3));
    const auto closed = transfer_matrix_2level(b);
    const auto general = transfer_matrix(qubit_field_hamiltonian(b[0], b[1], b[2]), basis);
    CHECK(max_abs(RMatrix(closed.entries - general.entries)) < 1e-12);
  }
}

TEST_CASE("witness set bundles the closed forms") {
  const auto set = qubit_witness_set(Bloch3(1, 0, 0));
  CHECK(set.gamma[1] == doctest::Approx((std::sqrt(2.0) - 1) / 2).epsilon(1e-14));
  CHECK(set.delta == doctest::Approx(2.0 / 3).epsilon(1e-12));
}

}  // TEST_SUITE
