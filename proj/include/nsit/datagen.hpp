#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nsit/gellmann.hpp"
#include "nsit/states.hpp"

namespace nsit {

// A probability vector labeled 0 (generating matrix positive semidefinite,
// NSIT-conforming) or 1 (indefinite generating matrix, NSIT-violating).
// gamma is the sum of |negative spectrum entries| of the generating matrix,
// 0 for the conforming class.
struct LabeledExample {
  ProbabilityVector vector;
  int label = 0;
  double gamma = 0;
  std::uint64_t seed = 0;
};

struct GenerationConfig {
  int dim = 2;
  std::size_t count_per_class = 1000;
  std::uint64_t seed = 0;
  // Violating spectra: dim draws uniform on [low, high], shift-normalized to
  // sum 1, resampled until at least one entry is negative.  Conforming
  // spectra are uniform on the probability simplex.
  double violating_low = -0.5;
  double violating_high = 1.0;
};

// dim pseudorandom complex vectors (standard-normal real and imaginary
// parts) orthonormalized by modified Gram-Schmidt; columns of the result.
// A pivot norm below 1e-8 triggers a redraw of that vector (internal error
// after 100 retries).
CMatrix random_frame(int dim, std::uint64_t seed);

// Spectrum samplers used by generate_state; exposed for tests and tools.
RVector conforming_spectrum(int dim, std::uint64_t seed);
RVector violating_spectrum(const GenerationConfig& cfg, std::uint64_t seed);

// Builds sum_m spectrum[m] |f_m><f_m| from an explicit frame, reads off the
// probability vector through the basis projectors, and applies the
// negative-component filter: any p_n(k) < -1e-12 rejects the candidate
// (returns nullopt); surviving roundoff-scale negatives are clamped to 0.
std::optional<LabeledExample> example_from_spectrum_frame(const RVector& spectrum,
                                                          const CMatrix& frame,
                                                          const GeneratorBasis& basis,
                                                          int label);

// One sampling attempt with the class-appropriate spectrum; nullopt when the
// candidate is filtered out.
std::optional<LabeledExample> generate_state(const GenerationConfig& cfg, int label,
                                             std::uint64_t seed, const GeneratorBasis& basis);

struct ClassStats {
  std::size_t accepted = 0;
  std::size_t attempts = 0;
  double acceptance_rate() const {
    return attempts == 0 ? 1.0 : static_cast<double>(accepted) / static_cast<double>(attempts);
  }
};

// count examples of one class; attempt seeds derive from
// (cfg.seed, label, index, attempt) so the result is independent of
// partitioning.  Throws when the acceptance rate is below 1% after 1e5
// attempts.
std::vector<LabeledExample> generate_class(const GenerationConfig& cfg, int label,
                                           std::size_t count, const GeneratorBasis& basis,
                                           ClassStats* stats = nullptr);

struct Dataset {
  std::vector<LabeledExample> examples;
  GenerationConfig config;
  ClassStats conforming;
  ClassStats violating;
};

// Balanced dataset of 2 * count_per_class examples, deterministically
// shuffled by the master seed.
Dataset generate_dataset(const GenerationConfig& cfg);

struct GammaHistogram {
  std::vector<double> edges;        // bins + 1 monotone edges spanning [0, max]
  std::vector<std::size_t> counts;  // one per bin
  double mean = 0;
  std::size_t total = 0;
};

// Histogram of gamma over the violating examples in the input.
GammaHistogram gamma_histogram(std::span<const LabeledExample> examples, int bins);

struct BlochPointSets {
  std::vector<Eigen::Vector3d> inside;   // |v|^2 <= 1
  std::vector<Eigen::Vector3d> outside;  // inside the cube, outside the ball
};

// Rejection-samples the cube [-1,1]^3 until both sets hold `count` points.
BlochPointSets sample_bloch_points(std::size_t count, std::uint64_t seed);

}  // namespace nsit
