#include <doctest.h>

#include <cmath>

#include "nsit/datagen.hpp"
#include "nsit/measurement.hpp"
#include "nsit/rng.hpp"

using namespace nsit;

TEST_SUITE("datagen") {

TEST_CASE("random frames are orthonormal and seed-deterministic") {
  for (int dim : {2, 6}) {
    const CMatrix frame = random_frame(dim, 123);
    const CMatrix gram = frame.adjoint() * frame;
    CAPTURE(dim);
    CHECK(max_abs(CMatrix(gram - CMatrix::Identity(dim, dim))) < 1e-10);
  }
  const CMatrix a = random_frame(4, 77);
  const CMatrix b = random_frame(4, 77);
  CHECK(max_abs(CMatrix(a - b)) == 0.0);
  CHECK(max_abs(CMatrix(a - random_frame(4, 78))) > 1e-3);
}

TEST_CASE("conforming spectra live on the simplex, violating spectra dip negative") {
  Rng seeds(61);
  GenerationConfig cfg;
  cfg.dim = 4;
  for (int trial = 0; trial < 200; ++trial) {
    const RVector s = conforming_spectrum(4, seeds.next_u64());
    CHECK(s.minCoeff() >= 0.0);
    CHECK(s.sum() == doctest::Approx(1.0).epsilon(1e-12));

    const RVector q = violating_spectrum(cfg, seeds.next_u64());
    CHECK(q.minCoeff() < 0.0);
    CHECK(q.sum() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("conforming examples come from nonnegative matrices with nonnegative vectors") {
  const auto basis = build_basis(3);
  GenerationConfig cfg;
  cfg.dim = 3;
  Rng seeds(62);
  for (int trial = 0; trial < 50; ++trial) {
    const auto example = generate_state(cfg, 0, seeds.next_u64(), basis);
    REQUIRE(example.has_value());
    CHECK(example->label == 0);
    CHECK(example->gamma == 0.0);
    CHECK(example->vector.values.minCoeff() >= 0.0);
    CHECK(max_tuple_sum_error(example->vector) < 1e-9);
    const auto rebuilt = reconstruct_pseudodensity(example->vector, basis);
    CHECK(positivity_check(rebuilt).min_eigenvalue >= -1e-10);
  }
}

TEST_CASE("accepted violating examples carry gamma > 0 and an indefinite matrix") {
  const auto basis = build_basis(3);
  GenerationConfig cfg;
  cfg.dim = 3;
  Rng seeds(63);
  int accepted = 0;
  for (int trial = 0; trial < 200 && accepted < 30; ++trial) {
    const auto example = generate_state(cfg, 1, seeds.next_u64(), basis);
    if (!example) continue;
    ++accepted;
    CHECK(example->gamma > 0.0);
    CHECK(example->vector.values.minCoeff() >= 0.0);
    CHECK(max_tuple_sum_error(example->vector) < 1e-9);
    const auto rebuilt = reconstruct_pseudodensity(example->vector, basis);
    CHECK(positivity_check(rebuilt).min_eigenvalue < -1e-10);
    // gamma records the negative mass of the generating spectrum, which for
    // an orthonormal frame is exactly the negative eigenvalue mass.
    double negative_mass = 0;
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(rebuilt.matrix, Eigen::EigenvaluesOnly);
    for (int j = 0; j < 3; ++j)
      if (solver.eigenvalues()[j] < 0) negative_mass += -solver.eigenvalues()[j];
    CHECK(example->gamma == doctest::Approx(negative_mass).epsilon(1e-8));
  }
  CHECK(accepted == 30);
}

TEST_CASE("a z-aligned frame with spectrum (1.2, -0.2) is filtered out") {
  const auto basis = build_basis(2);
  RVector spectrum(2);
  spectrum << 1.2, -0.2;
  const CMatrix frame = CMatrix::Identity(2, 2);  // p_z(-1) = -0.2 < -1e-12
  CHECK_FALSE(example_from_spectrum_frame(spectrum, frame, basis, 1).has_value());
}

TEST_CASE("datasets are balanced, sound, and deterministically shuffled") {
  GenerationConfig cfg;
  cfg.dim = 2;
  cfg.count_per_class = 300;
  cfg.seed = 2024;
  const auto dataset = generate_dataset(cfg);
  REQUIRE(dataset.examples.size() == 600);

  std::size_t violating = 0;
  const auto basis = build_basis(2);
  for (const auto& example : dataset.examples) {
    violating += example.label;
    CHECK(example.vector.values.minCoeff() >= 0.0);
    CHECK(max_tuple_sum_error(example.vector) < 1e-9);
    if (example.label == 1)
      CHECK(example.gamma > 0.0);
    else
      CHECK(example.gamma == 0.0);
  }
  CHECK(violating == 300);
  CHECK(dataset.conforming.acceptance_rate() > 0.5);
  CHECK(dataset.violating.acceptance_rate() > 0.01);

  const auto replay = generate_dataset(cfg);
  bool identical = replay.examples.size() == dataset.examples.size();
  for (std::size_t i = 0; identical && i < dataset.examples.size(); ++i)
    identical = dataset.examples[i].label == replay.examples[i].label &&
                (dataset.examples[i].vector.values - replay.examples[i].vector.values)
                        .cwiseAbs()
                        .maxCoeff() == 0.0;
  CHECK(identical);
  // The shuffle interleaves: the first dozen rows are not all one class.
  int head_labels = 0;
  for (std::size_t i = 0; i < 12; ++i) head_labels += dataset.examples[i].label;
  CHECK(head_labels > 0);
  CHECK(head_labels < 12);
}

TEST_CASE("class soundness audit on a random subsample") {
  GenerationConfig cfg;
  cfg.dim = 3;
  cfg.count_per_class = 200;
  cfg.seed = 5;
  const auto dataset = generate_dataset(cfg);
  const auto basis = build_basis(3);
  Rng rng(91);
  for (int pick = 0; pick < 40; ++pick) {
    const auto& example = dataset.examples[rng.next_u64() % dataset.examples.size()];
    const auto rebuilt = reconstruct_pseudodensity(example.vector, basis);
    const bool nonneg = positivity_check(rebuilt).min_eigenvalue >= -1e-10;
    CHECK(nonneg == (example.label == 0));
  }
}

TEST_CASE("gamma histogram totals, positivity, and mean") {
  GenerationConfig cfg;
  cfg.dim = 2;
  cfg.count_per_class = 400;
  cfg.seed = 8;
  const auto dataset = generate_dataset(cfg);
  const auto histogram = gamma_histogram(dataset.examples, 20);
  CHECK(histogram.total == 400);
  std::size_t counted = 0;
  for (auto c : histogram.counts) counted += c;
  CHECK(counted == histogram.total);
  CHECK(histogram.mean > 0.0);
  REQUIRE(histogram.edges.size() == 21);
  CHECK(histogram.edges.front() == 0.0);

  std::vector<LabeledExample> conforming_only;
  for (const auto& e : dataset.examples)
    if (e.label == 0) conforming_only.push_back(e);
  CHECK_THROWS_AS(gamma_histogram(conforming_only, 10), std::invalid_argument);
}

TEST_CASE("violating gamma mean grows with dimension (small-scale check)") {
  double previous = 0;
  for (int dim : {2, 4, 6}) {
    GenerationConfig cfg;
    cfg.dim = dim;
    cfg.seed = 13;
    const auto basis = build_basis(dim);
    const auto examples = generate_class(cfg, 1, 3000, basis);
    double mean = 0;
    for (const auto& e : examples) mean += e.gamma;
    mean /= static_cast<double>(examples.size());
    CAPTURE(dim);
    CHECK(mean > previous);
    previous = mean;
  }
}

TEST_CASE("a hopeless violating sampler trips the acceptance-rate guard") {
  // Spectra from [-1e6, 1] put the Bloch radius far outside the cube almost
  // surely, so the nonnegative-component filter rejects ~everything and the
  // 1%-after-1e5-attempts guard fires.
  GenerationConfig cfg;
  cfg.dim = 2;
  cfg.seed = 3;
  cfg.violating_low = -1e6;
  const auto basis = build_basis(2);
  CHECK_THROWS_AS(generate_class(cfg, 1, 2, basis), std::runtime_error);
}

TEST_CASE("bloch point sets split the cube at the unit sphere") {
  const auto sets = sample_bloch_points(100, 99);
  REQUIRE(sets.inside.size() == 100);
  REQUIRE(sets.outside.size() == 100);
  for (const auto& v : sets.inside) CHECK(v.squaredNorm() <= 1.0);
  for (const auto& v : sets.outside) {
    CHECK(v.squaredNorm() > 1.0);
    CHECK(v.cwiseAbs().maxCoeff() <= 1.0);
  }
  const auto replay = sample_bloch_points(100, 99);
  CHECK((replay.inside[0] - sets.inside[0]).norm() == 0.0);
}

}  // TEST_SUITE
