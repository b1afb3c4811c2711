#pragma once

#include <cstdint>
#include <span>

#include "nsit/datagen.hpp"
#include "nsit/states.hpp"

namespace nsit {

// The feature map feeding the logistic model: the squared deviation of every
// component from the uniform tuple value 1/N,
//   phi_{n,k} = (p_n(k) - 1/N)^2.
// The conforming and violating ensembles share identical component means (the
// generating distributions are unitarily invariant), so no affine function of
// the raw components separates them; the squared deviations carry the radial
// information that does.  For a qubit, sum phi = |bloch|^2 / 2 makes the ball
// boundary itself the reachable decision surface.
RVector classifier_features(const ProbabilityVector& p);

struct TrainConfig {
  int epochs = 400;
  double learning_rate = 1.0;
  std::uint64_t seed = 0;
  double validation_fraction = 0.2;
};

struct TrainingMetadata {
  int epochs_run = 0;
  double learning_rate_initial = 0;
  double learning_rate_final = 0;
  double final_loss = 0;
  std::uint64_t seed = 0;
  double validation_accuracy = 0;
  std::size_t train_count = 0;
  std::size_t validation_count = 0;
};

// Logistic model on the squared-deviation features: one weight per
// probability-vector component plus a bias.
struct ClassifierModel {
  int dim = 0;
  RVector weights;
  double bias = 0;
  TrainingMetadata metadata;
};

// Full-batch gradient descent from zero weights with step halving whenever a
// step would increase the loss, so the recorded loss is non-increasing.
// Deterministic given (data, config).  Throws on single-class input or mixed
// dimensions.
ClassifierModel train(std::span<const LabeledExample> examples, const TrainConfig& config);

struct Prediction {
  int label = 0;     // 1 iff score >= 1/2
  double score = 0;  // sigmoid of the affine form, in [0, 1]
};
Prediction predict(const ClassifierModel& model, const ProbabilityVector& p);

struct Metrics {
  double accuracy = 0;
  double precision = 0;
  double recall = 0;
  std::size_t true_positive = 0;
  std::size_t false_positive = 0;
  std::size_t true_negative = 0;
  std::size_t false_negative = 0;

  std::size_t total() const {
    return true_positive + false_positive + true_negative + false_negative;
  }
};
Metrics evaluate(const ClassifierModel& model, std::span<const LabeledExample> examples);

}  // namespace nsit
