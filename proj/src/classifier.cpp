#include "nsit/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "nsit/rng.hpp"

namespace nsit {

namespace {

constexpr double kLossSlack = 1e-12;
constexpr double kMinLearningRate = 1e-15;

double sigmoid(double z) {
  return z >= 0 ? 1.0 / (1.0 + std::exp(-z)) : std::exp(z) / (1.0 + std::exp(z));
}

// log(1 + e^z) without overflow.
double softplus(double z) {
  return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

struct Batch {
  std::vector<RVector> features;
  std::vector<int> labels;
  int dim = 0;
};

double batch_loss(const Batch& batch, const RVector& weights, double bias) {
  double loss = 0;
  for (std::size_t i = 0; i < batch.features.size(); ++i) {
    const double z = weights.dot(batch.features[i]) + bias;
    loss += softplus(z) - batch.labels[i] * z;
  }
  return loss / static_cast<double>(batch.features.size());
}

}  // namespace

RVector classifier_features(const ProbabilityVector& p) {
  const double uniform = 1.0 / p.dim;
  return (p.values.array() - uniform).square();
}

ClassifierModel train(std::span<const LabeledExample> examples, const TrainConfig& config) {
  if (examples.empty()) throw std::invalid_argument("train: empty training set");
  if (config.epochs < 1) throw std::invalid_argument("train: epochs must be >= 1");
  if (config.learning_rate <= 0) throw std::invalid_argument("train: learning rate must be > 0");
  if (config.validation_fraction < 0 || config.validation_fraction >= 1)
    throw std::invalid_argument("train: validation fraction must be in [0, 1)");

  const int dim = examples[0].vector.dim;
  std::size_t per_class[2] = {0, 0};
  for (const auto& example : examples) {
    if (example.vector.dim != dim) throw std::invalid_argument("train: mixed dimensions");
    ++per_class[example.label];
  }
  if (per_class[0] < 2 || per_class[1] < 2)
    throw std::invalid_argument("train: need at least two examples per class");

  // Deterministic shuffle, then validation split from the tail.
  std::vector<std::size_t> order(examples.size());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(config.seed);
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[rng.next_u64() % i]);

  const auto validation_count =
      static_cast<std::size_t>(config.validation_fraction * static_cast<double>(examples.size()));
  const std::size_t train_count = examples.size() - validation_count;
  if (train_count < 4) throw std::invalid_argument("train: training split too small");

  Batch batch;
  batch.dim = dim;
  batch.features.reserve(train_count);
  for (std::size_t i = 0; i < train_count; ++i) {
    batch.features.push_back(classifier_features(examples[order[i]].vector));
    batch.labels.push_back(examples[order[i]].label);
  }

  ClassifierModel model;
  model.dim = dim;
  model.weights = RVector::Zero(batch.features[0].size());
  model.bias = 0;
  model.metadata.seed = config.seed;
  model.metadata.learning_rate_initial = config.learning_rate;
  model.metadata.train_count = train_count;
  model.metadata.validation_count = validation_count;

  double rate = config.learning_rate;
  double loss = batch_loss(batch, model.weights, model.bias);
  const double inv_count = 1.0 / static_cast<double>(train_count);

  int epoch = 0;
  for (; epoch < config.epochs; ++epoch) {
    RVector grad_w = RVector::Zero(model.weights.size());
    double grad_b = 0;
    for (std::size_t i = 0; i < batch.features.size(); ++i) {
      const double z = model.weights.dot(batch.features[i]) + model.bias;
      const double delta = sigmoid(z) - batch.labels[i];
      grad_w += delta * batch.features[i];
      grad_b += delta;
    }
    grad_w *= inv_count;
    grad_b *= inv_count;

    // Step halving keeps the recorded loss non-increasing.
    RVector next_w;
    double next_b = 0, next_loss = 0;
    while (true) {
      next_w = model.weights - rate * grad_w;
      next_b = model.bias - rate * grad_b;
      next_loss = batch_loss(batch, next_w, next_b);
      if (next_loss <= loss + kLossSlack) break;
      rate *= 0.5;
      if (rate < kMinLearningRate) break;
    }
    if (rate < kMinLearningRate) break;
    model.weights = std::move(next_w);
    model.bias = next_b;
    loss = next_loss;
  }

  model.metadata.epochs_run = epoch;
  model.metadata.learning_rate_final = rate;
  model.metadata.final_loss = loss;

  if (validation_count > 0) {
    std::size_t correct = 0;
    for (std::size_t i = train_count; i < examples.size(); ++i) {
      const auto& example = examples[order[i]];
      if (predict(model, example.vector).label == example.label) ++correct;
    }
    model.metadata.validation_accuracy =
        static_cast<double>(correct) / static_cast<double>(validation_count);
  }
  return model;
}

Prediction predict(const ClassifierModel& model, const ProbabilityVector& p) {
  if (p.dim != model.dim) throw std::invalid_argument("predict: dimension mismatch");
  if (max_tuple_sum_error(p) > 1e-6)
    throw std::invalid_argument("predict: malformed probability vector");
  const double score = sigmoid(model.weights.dot(classifier_features(p)) + model.bias);
  return {score >= 0.5 ? 1 : 0, score};
}

Metrics evaluate(const ClassifierModel& model, std::span<const LabeledExample> examples) {
  if (examples.empty()) throw std::invalid_argument("evaluate: empty evaluation set");
  Metrics metrics;
  for (const auto& example : examples) {
    const int predicted = predict(model, example.vector).label;
    if (example.label == 1)
      ++(predicted == 1 ? metrics.true_positive : metrics.false_negative);
    else
      ++(predicted == 1 ? metrics.false_positive : metrics.true_negative);
  }
  const auto total = static_cast<double>(metrics.total());
  metrics.accuracy = static_cast<double>(metrics.true_positive + metrics.true_negative) / total;
  const auto predicted_positive = metrics.true_positive + metrics.false_positive;
  const auto actual_positive = metrics.true_positive + metrics.false_negative;
  metrics.precision = predicted_positive == 0
                          ? 0.0
                          : static_cast<double>(metrics.true_positive) / predicted_positive;
  metrics.recall = actual_positive == 0
                       ? 0.0
                       : static_cast<double>(metrics.true_positive) / actual_positive;
  return metrics;
}

}  // namespace nsit
