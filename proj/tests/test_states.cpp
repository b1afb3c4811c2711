#include <doctest.h>

#include <cmath>

#include "nsit/rng.hpp"
#include "nsit/states.hpp"

using namespace nsit;

namespace {

// Random density matrix A A^dag / Tr[A A^dag]; positive semidefinite.
DensityMatrix random_density(int dim, Rng& rng) {
  CMatrix a(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) a(r, c) = Complex(rng.normal(), rng.normal());
  CMatrix rho = a * a.adjoint();
  rho /= rho.trace();
  return {dim, rho};
}

DensityMatrix random_pure_state(int dim, Rng& rng) {
  CVector ket(dim);
  for (int r = 0; r < dim; ++r) ket[r] = Complex(rng.normal(), rng.normal());
  ket.normalize();
  return {dim, ket * ket.adjoint()};
}

DensityMatrix plus_x_state() {
  CMatrix m(2, 2);
  m << 0.5, 0.5, 0.5, 0.5;
  return {2, m};
}

}  // namespace

TEST_SUITE("states") {

TEST_CASE("maximally mixed state maps to the zero Bloch vector") {
  for (int dim : {2, 3, 5}) {
    const auto basis = build_basis(dim);
    const DensityMatrix rho{dim, CMatrix::Identity(dim, dim) / static_cast<double>(dim)};
    CHECK(bloch_from_density(rho, basis).coords.cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("plus-x qubit state has Bloch vector (1, 0, 0)") {
  const auto basis = build_basis(2);
  const auto v = bloch_from_density(plus_x_state(), basis);
  CHECK(v.coords[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(v.coords[1]) < 1e-14);
  CHECK(std::abs(v.coords[2]) < 1e-14);
}

TEST_CASE("density <-> Bloch round trip is the identity for N = 2..8") {
  Rng rng(11);
  for (int dim = 2; dim <= 8; ++dim) {
    const auto basis = build_basis(dim);
    const auto rho = random_density(dim, rng);
    const auto back = density_from_bloch(bloch_from_density(rho, basis), basis);
    CAPTURE(dim);
    CHECK(max_abs(CMatrix(back.matrix - rho.matrix)) < 1e-10);
  }
}

TEST_CASE("zero Bloch vector reconstructs the maximally mixed state") {
  const auto basis = build_basis(3);
  const auto rho = density_from_bloch({3, RVector::Zero(8)}, basis);
  CHECK(max_abs(CMatrix(rho.matrix - CMatrix::Identity(3, 3) / 3.0)) < 1e-15);
}

TEST_CASE("qubit Bloch vector (0,0,1) reconstructs diag(1,0)") {
  const auto basis = build_basis(2);
  RVector coords(3);
  coords << 0, 0, 1;
  const auto rho = density_from_bloch({2, coords}, basis);
  CMatrix expected(2, 2);
  expected << 1, 0, 0, 0;
  CHECK(max_abs(CMatrix(rho.matrix - expected)) < 1e-15);
}

TEST_CASE("pure-state Bloch vectors reconstruct nonnegative matrices") {
  Rng rng(12);
  const auto basis = build_basis(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto rho = random_pure_state(3, rng);
    const auto rebuilt = density_from_bloch(bloch_from_density(rho, basis), basis);
    CHECK(positivity_check(rebuilt).min_eigenvalue >= -1e-9);
  }
}

TEST_CASE("non-finite Bloch coordinates are rejected") {
  const auto basis = build_basis(2);
  RVector coords(3);
  coords << 0, std::nan(""), 0;
  CHECK_THROWS_AS(density_from_bloch({2, coords}, basis), std::invalid_argument);
}

TEST_CASE("probability vector of the maximally mixed qubit is all one-half") {
  const auto basis = build_basis(2);
  const DensityMatrix rho{2, CMatrix::Identity(2, 2) / 2.0};
  const auto p = probability_vector_from_density(rho, basis);
  REQUIRE(p.values.size() == 6);
  for (int i = 0; i < 6; ++i) CHECK(p.values[i] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("probability vector of |+x> is (1, 0, 1/2, 1/2, 1/2, 1/2)") {
  const auto basis = build_basis(2);
  const auto p = probability_vector_from_density(plus_x_state(), basis);
  const double expected[6] = {1, 0, 0.5, 0.5, 0.5, 0.5};
  for (int i = 0; i < 6; ++i) CHECK(p.values[i] == doctest::Approx(expected[i]).epsilon(1e-13));
}

TEST_CASE("valid states give components in [0,1] with unit tuple sums") {
  Rng rng(13);
  for (int dim : {2, 3, 4, 6, 8}) {
    const auto basis = build_basis(dim);
    for (int trial = 0; trial < 10; ++trial) {
      const auto p = probability_vector_from_density(random_density(dim, rng), basis);
      CHECK(p.values.minCoeff() >= -1e-10);
      CHECK(p.values.maxCoeff() <= 1 + 1e-10);
      CHECK(max_tuple_sum_error(p) < 1e-9);
    }
  }
}

TEST_CASE("expectations from probabilities: uniform qubit vector gives zero") {
  const auto basis = build_basis(2);
  const auto v = expectations_from_probabilities(
      make_probability_vector(2, RVector::Constant(6, 0.5)), basis);
  CHECK(v.coords.cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("expectations from probabilities: one-hot x tuple gives (1,0,0)") {
  const auto basis = build_basis(2);
  RVector values(6);
  values << 1, 0, 0.5, 0.5, 0.5, 0.5;
  const auto v = expectations_from_probabilities(make_probability_vector(2, values), basis);
  CHECK(v.coords[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(v.coords[1]) < 1e-14);
  CHECK(std::abs(v.coords[2]) < 1e-14);
}

TEST_CASE("expectations commute with the projector route on random states") {
  Rng rng(14);
  for (int dim : {2, 3, 5}) {
    const auto basis = build_basis(dim);
    const auto rho = random_density(dim, rng);
    const auto direct = bloch_from_density(rho, basis);
    const auto via_p =
        expectations_from_probabilities(probability_vector_from_density(rho, basis), basis);
    CHECK((direct.coords - via_p.coords).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("malformed tuple sums are rejected") {
  const auto basis = build_basis(2);
  ProbabilityVector p{2, RVector::Constant(6, 0.5)};
  p.values[0] = 0.7;  // x tuple now sums to 1.2
  CHECK_THROWS_AS(expectations_from_probabilities(p, basis), std::invalid_argument);
}

TEST_CASE("bloch_norm_check: saturation and violation") {
  RVector pure(3);
  pure << 1, 0, 0;
  const auto saturated = bloch_norm_check({2, pure});
  CHECK(saturated.norm_sq == doctest::Approx(1.0));
  CHECK(saturated.within_ball);

  RVector outside(3);
  outside << 1, 1, 0.5;
  const auto violated = bloch_norm_check({2, outside});
  CHECK(violated.norm_sq == doctest::Approx(2.25));
  CHECK_FALSE(violated.within_ball);
}

TEST_CASE("pure states satisfy |v|^2 = N - 1") {
  Rng rng(15);
  for (int dim = 2; dim <= 8; ++dim) {
    const auto basis = build_basis(dim);
    const auto v = bloch_from_density(random_pure_state(dim, rng), basis);
    CAPTURE(dim);
    CHECK(v.coords.squaredNorm() == doctest::Approx(dim - 1.0).epsilon(1e-9));
    CHECK(bloch_norm_check(v).within_ball);
  }
}

TEST_CASE("positivity check: mixed, pseudodensity, and convex mixtures") {
  const auto basis = build_basis(2);
  const DensityMatrix mixed{2, CMatrix::Identity(2, 2) / 2.0};
  const auto ok = positivity_check(mixed);
  CHECK(ok.min_eigenvalue == doctest::Approx(0.5));
  CHECK(ok.is_quantum);

  // Bloch vector (1, 1, 0): the post-measurement state of |+x> observed
  // along y; eigenvalues (1 +/- sqrt(2)) / 2.
  RVector coords(3);
  coords << 1, 1, 0;
  const auto pseudo = positivity_check(density_from_bloch({2, coords}, basis));
  CHECK(pseudo.min_eigenvalue == doctest::Approx((1 - std::sqrt(2.0)) / 2).epsilon(1e-12));
  CHECK_FALSE(pseudo.is_quantum);

  Rng rng(16);
  for (int trial = 0; trial < 10; ++trial) {
    const auto rho = random_density(4, rng);
    CHECK(positivity_check(rho).is_quantum);
  }
}

TEST_CASE("overlap condition: antipodal pure states are impossible for N >= 3") {
  Rng rng(17);
  const auto basis = build_basis(3);
  const auto v = bloch_from_density(random_pure_state(3, rng), basis);
  BlochVector antipode{3, -v.coords};
  const auto check = overlap_condition(v, antipode);
  CHECK(check.dot == doctest::Approx(-2.0).epsilon(1e-9));
  CHECK_FALSE(check.satisfied);

  const auto zero = overlap_condition(v, {3, RVector::Zero(8)});
  CHECK(zero.dot == 0.0);
  CHECK(zero.satisfied);
}

TEST_CASE("overlap of valid states matches (N Tr[r1 r2] - 1) and stays >= -1") {
  Rng rng(18);
  for (int dim : {2, 3, 4}) {
    const auto basis = build_basis(dim);
    for (int trial = 0; trial < 10; ++trial) {
      const auto rho1 = random_density(dim, rng);
      const auto rho2 = random_density(dim, rng);
      const auto check = overlap_condition(bloch_from_density(rho1, basis),
                                           bloch_from_density(rho2, basis));
      const double product = trace_product(rho1.matrix, rho2.matrix).real();
      CHECK(check.dot == doctest::Approx(dim * product - 1.0).epsilon(1e-9));
      CHECK(product >= -1e-10);
      CHECK(check.satisfied);
    }
  }
}

TEST_CASE("make_density validates Hermiticity and trace") {
  CMatrix bad(2, 2);
  bad << 1, Complex(0, 1), Complex(0, 1), 0;  // not Hermitian
  CHECK_THROWS_AS(make_density(2, bad), std::invalid_argument);
  CMatrix traceless(2, 2);
  traceless << 1, 0, 0, 1;  // trace 2
  CHECK_THROWS_AS(make_density(2, traceless), std::invalid_argument);
}

}  // TEST_SUITE
