#include "nsit/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nsit/rng.hpp"

namespace nsit {

namespace {

constexpr double kRejectionTol = 1e-12;
constexpr std::size_t kAcceptanceProbeAttempts = 100000;
constexpr double kMinAcceptanceRate = 0.01;

// Seed streams for derive_seed: 0/1 per class, 2 for shuffling.
constexpr std::uint64_t kShuffleStream = 2;

CMatrix gram_schmidt_frame(int dim, Rng& rng) {
  CMatrix frame(dim, dim);
  for (int col = 0; col < dim; ++col) {
    int retries = 0;
    while (true) {
      CVector v(dim);
      for (int row = 0; row < dim; ++row) v[row] = Complex(rng.normal(), rng.normal());
      for (int prev = 0; prev < col; ++prev)
        v -= frame.col(prev).dot(v) * frame.col(prev);
      const double pivot = v.norm();
      if (pivot >= 1e-8) {
        frame.col(col) = v / pivot;
        break;
      }
      if (++retries > 100)
        throw std::runtime_error("random_frame: persistent near-linear dependence");
    }
  }
  return frame;
}

}  // namespace

CMatrix random_frame(int dim, std::uint64_t seed) {
  if (dim < 2) throw std::invalid_argument("random_frame: dimension must be >= 2");
  Rng rng(seed);
  return gram_schmidt_frame(dim, rng);
}

RVector conforming_spectrum(int dim, std::uint64_t seed) {
  Rng rng(seed);
  // Uniform on the simplex: normalized exponential draws.
  RVector spectrum(dim);
  for (int m = 0; m < dim; ++m) spectrum[m] = -std::log(1.0 - rng.uniform());
  return spectrum / spectrum.sum();
}

RVector violating_spectrum(const GenerationConfig& cfg, std::uint64_t seed) {
  if (cfg.violating_low >= cfg.violating_high)
    throw std::invalid_argument("violating_spectrum: empty sampling interval");
  Rng rng(seed);
  RVector spectrum(cfg.dim);
  for (int trial = 0; trial < 100000; ++trial) {
    for (int m = 0; m < cfg.dim; ++m)
      spectrum[m] = rng.uniform(cfg.violating_low, cfg.violating_high);
    spectrum.array() += (1.0 - spectrum.sum()) / cfg.dim;
    if (spectrum.minCoeff() < 0) return spectrum;
  }
  throw std::runtime_error("violating_spectrum: sampler never produced a negative entry");
}

std::optional<LabeledExample> example_from_spectrum_frame(const RVector& spectrum,
                                                          const CMatrix& frame,
                                                          const GeneratorBasis& basis,
                                                          int label) {
  const int dim = basis.dim;
  if (spectrum.size() != dim || frame.rows() != dim || frame.cols() != dim)
    throw std::invalid_argument("example_from_spectrum_frame: shape mismatch");

  CMatrix rho = CMatrix::Zero(dim, dim);
  for (int m = 0; m < dim; ++m)
    rho += spectrum[m] * (frame.col(m) * frame.col(m).adjoint());

  LabeledExample example;
  example.label = label;
  example.vector = probability_vector_from_density({dim, rho}, basis);
  if (example.vector.values.minCoeff() < -kRejectionTol) return std::nullopt;
  example.vector.values = example.vector.values.cwiseMax(0.0);
  for (int m = 0; m < dim; ++m)
    if (spectrum[m] < 0) example.gamma += -spectrum[m];
  return example;
}

std::optional<LabeledExample> generate_state(const GenerationConfig& cfg, int label,
                                             std::uint64_t seed, const GeneratorBasis& basis) {
  if (cfg.dim != basis.dim) throw std::invalid_argument("generate_state: dimension mismatch");
  if (label != 0 && label != 1) throw std::invalid_argument("generate_state: label must be 0 or 1");
  Rng rng(seed);
  const CMatrix frame = gram_schmidt_frame(cfg.dim, rng);
  const RVector spectrum = label == 0 ? conforming_spectrum(cfg.dim, rng.next_u64())
                                      : violating_spectrum(cfg, rng.next_u64());
  auto example = example_from_spectrum_frame(spectrum, frame, basis, label);
  if (example) example->seed = seed;
  return example;
}

std::vector<LabeledExample> generate_class(const GenerationConfig& cfg, int label,
                                           std::size_t count, const GeneratorBasis& basis,
                                           ClassStats* stats) {
  if (count < 1) throw std::invalid_argument("generate_class: count must be >= 1");
  std::vector<LabeledExample> examples;
  examples.reserve(count);
  ClassStats local;
  for (std::size_t index = 0; index < count; ++index) {
    const std::uint64_t index_seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(label), index);
    for (std::uint64_t attempt = 0;; ++attempt) {
      ++local.attempts;
      auto example = generate_state(cfg, label, splitmix64(index_seed + attempt), basis);
      if (example) {
        ++local.accepted;
        examples.push_back(std::move(*example));
        break;
      }
      if (local.attempts >= kAcceptanceProbeAttempts &&
          local.acceptance_rate() < kMinAcceptanceRate)
        throw std::runtime_error("generate_class: acceptance rate below 1%, sampler misconfigured");
    }
  }
  if (stats) *stats = local;
  return examples;
}

Dataset generate_dataset(const GenerationConfig& cfg) {
  if (cfg.count_per_class < 1)
    throw std::invalid_argument("generate_dataset: count_per_class must be >= 1");
  const GeneratorBasis basis = build_basis(cfg.dim);

  Dataset dataset;
  dataset.config = cfg;
  auto conforming = generate_class(cfg, 0, cfg.count_per_class, basis, &dataset.conforming);
  auto violating = generate_class(cfg, 1, cfg.count_per_class, basis, &dataset.violating);

  dataset.examples.reserve(conforming.size() + violating.size());
  std::move(conforming.begin(), conforming.end(), std::back_inserter(dataset.examples));
  std::move(violating.begin(), violating.end(), std::back_inserter(dataset.examples));

  // Fisher-Yates with the master-seed shuffle stream.
  Rng rng(derive_seed(cfg.seed, kShuffleStream, 0));
  for (std::size_t i = dataset.examples.size(); i > 1; --i)
    std::swap(dataset.examples[i - 1], dataset.examples[rng.next_u64() % i]);
  return dataset;
}

GammaHistogram gamma_histogram(std::span<const LabeledExample> examples, int bins) {
  if (bins < 1) throw std::invalid_argument("gamma_histogram: need at least one bin");
  std::vector<double> gammas;
  for (const auto& example : examples)
    if (example.label == 1) gammas.push_back(example.gamma);
  if (gammas.empty())
    throw std::invalid_argument("gamma_histogram: no violating examples");

  GammaHistogram histogram;
  histogram.total = gammas.size();
  histogram.mean = 0;
  double top = 0;
  for (double g : gammas) {
    histogram.mean += g;
    top = std::max(top, g);
  }
  histogram.mean /= static_cast<double>(gammas.size());
  if (top == 0) top = 1.0;

  histogram.edges.resize(bins + 1);
  for (int b = 0; b <= bins; ++b)
    histogram.edges[b] = top * static_cast<double>(b) / bins;
  histogram.counts.assign(bins, 0);
  for (double g : gammas) {
    int b = static_cast<int>(g / top * bins);
    if (b >= bins) b = bins - 1;
    ++histogram.counts[b];
  }
  return histogram;
}

BlochPointSets sample_bloch_points(std::size_t count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sample_bloch_points: count must be >= 1");
  BlochPointSets sets;
  Rng rng(seed);
  while (sets.inside.size() < count || sets.outside.size() < count) {
    const Eigen::Vector3d v(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
    if (v.squaredNorm() <= 1.0) {
      if (sets.inside.size() < count) sets.inside.push_back(v);
    } else if (sets.outside.size() < count) {
      sets.outside.push_back(v);
    }
  }
  return sets;
}

}  // namespace nsit
