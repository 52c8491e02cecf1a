#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "stconal/prob.hpp"
#include "stconal/weights.hpp"

namespace stconal {

enum class Activation { kRelu, kTanh };

// Fully connected classifier shape: input dim, hidden sizes..., class count.
struct MlpSpec {
  std::vector<int> layer_sizes;
  Activation activation = Activation::kRelu;

  void validate() const;
  int input_dim() const { return layer_sizes.front(); }
  int num_classes() const { return layer_sizes.back(); }

  // sum over layers of n_in * n_out + n_out
  std::size_t param_count() const;

  bool operator==(const MlpSpec&) const = default;
};

// A labeled set of samples; features are row-major (size() x dim).
struct Batch {
  std::vector<double> features;
  std::vector<int> labels;
  int dim = 0;

  int size() const { return static_cast<int>(labels.size()); }
  std::span<const double> row(int i) const {
    return {features.data() + static_cast<std::size_t>(i) * dim,
            static_cast<std::size_t>(dim)};
  }
  void validate(const MlpSpec& spec) const;
};

// Immutable parameterized classifier. Weights are stored flat in a frozen
// order: for each layer, the (n_out x n_in) weight matrix row-major
// (w[o * n_in + i]), then the n_out biases. Snapshotting, averaging and EMA
// all rely on this fixed coordinate system.
class Model {
 public:
  Model(MlpSpec spec, WeightVector weights);

  const MlpSpec& spec() const noexcept { return spec_; }
  const WeightVector& weights() const noexcept { return weights_; }

 private:
  MlpSpec spec_;
  WeightVector weights_;
};

// Weights drawn from a zero-mean Gaussian with per-layer standard deviation
// sqrt(2 / n_in); biases zero. Deterministic per seed.
Model init_model(const MlpSpec& spec, std::uint64_t seed);

LogitVector forward(const Model& m, std::span<const double> x);

// softmax(forward(m, x))
ProbVector predict_proba(const Model& m, std::span<const double> x);

struct LossGrad {
  double loss = 0.0;
  WeightVector grad;
};

// Mean cross-entropy of the softmax predictions against the labels, with the
// analytic gradient laid out in the same flat order as the model weights.
LossGrad loss_and_grad(const Model& m, const Batch& batch);

// Workhorse overload evaluating only the rows selected by `rows` (all rows
// when empty), without copying features.
LossGrad loss_and_grad(const MlpSpec& spec, const WeightVector& weights,
                       const Batch& batch, std::span<const int> rows);

}  // namespace stconal
