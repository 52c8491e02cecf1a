#include "stconal/mlp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "stconal/error.hpp"
#include "stconal/rng.hpp"

namespace stconal {

void MlpSpec::validate() const {
  if (layer_sizes.size() < 2) {
    throw InvalidInputError("MlpSpec: need at least input and output sizes");
  }
  for (int n : layer_sizes) {
    if (n < 1) {
      throw InvalidInputError("MlpSpec: layer sizes must be positive");
    }
  }
  if (num_classes() < 2) {
    throw InvalidInputError("MlpSpec: need at least two classes");
  }
}

std::size_t MlpSpec::param_count() const {
  std::size_t total = 0;
  for (std::size_t l = 0; l + 1 < layer_sizes.size(); ++l) {
    const auto n_in = static_cast<std::size_t>(layer_sizes[l]);
    const auto n_out = static_cast<std::size_t>(layer_sizes[l + 1]);
    total += n_in * n_out + n_out;
  }
  return total;
}

void Batch::validate(const MlpSpec& spec) const {
  if (dim != spec.input_dim()) {
    throw InvalidInputError("Batch: feature dimension mismatch");
  }
  if (features.size() != static_cast<std::size_t>(size()) * dim) {
    throw InvalidInputError("Batch: features/labels length mismatch");
  }
  for (int y : labels) {
    if (y < 0 || y >= spec.num_classes()) {
      throw InvalidInputError("Batch: label out of range");
    }
  }
}

Model::Model(MlpSpec spec, WeightVector weights)
    : spec_(std::move(spec)), weights_(std::move(weights)) {
  spec_.validate();
  if (weights_.size() != spec_.param_count()) {
    throw InvalidInputError("Model: weight length does not match spec");
  }
}

Model init_model(const MlpSpec& spec, std::uint64_t seed) {
  spec.validate();
  WeightVector w(spec.param_count(), 0.0);
  Rng rng = make_rng(seed);
  std::size_t offset = 0;
  for (std::size_t l = 0; l + 1 < spec.layer_sizes.size(); ++l) {
    const auto n_in = static_cast<std::size_t>(spec.layer_sizes[l]);
    const auto n_out = static_cast<std::size_t>(spec.layer_sizes[l + 1]);
    const double stddev = std::sqrt(2.0 / static_cast<double>(n_in));
    for (std::size_t i = 0; i < n_in * n_out; ++i) {
      w[offset + i] = stddev * normal(rng);
    }
    offset += n_in * n_out + n_out;  // biases stay zero
  }
  return Model(spec, std::move(w));
}

namespace {

inline double activate(double z, Activation act) {
  return act == Activation::kRelu ? (z > 0.0 ? z : 0.0) : std::tanh(z);
}

// Derivative expressed through the stored post-activation value.
inline double activate_grad(double a, Activation act) {
  return act == Activation::kRelu ? (a > 0.0 ? 1.0 : 0.0) : 1.0 - a * a;
}

void forward_layers(const MlpSpec& spec, const WeightVector& w,
                    std::span<const double> x,
                    std::vector<std::vector<double>>& acts) {
  const std::size_t layers = spec.layer_sizes.size() - 1;
  acts.resize(layers + 1);
  acts[0].assign(x.begin(), x.end());
  std::size_t offset = 0;
  for (std::size_t l = 0; l < layers; ++l) {
    const auto n_in = static_cast<std::size_t>(spec.layer_sizes[l]);
    const auto n_out = static_cast<std::size_t>(spec.layer_sizes[l + 1]);
    const double* mat = w.data() + offset;
    const double* bias = mat + n_in * n_out;
    auto& out = acts[l + 1];
    out.assign(n_out, 0.0);
    const auto& in = acts[l];
    for (std::size_t o = 0; o < n_out; ++o) {
      double z = bias[o];
      const double* row = mat + o * n_in;
      for (std::size_t i = 0; i < n_in; ++i) {
        z += row[i] * in[i];
      }
      out[o] = l + 1 < layers ? activate(z, spec.activation) : z;
    }
    offset += n_in * n_out + n_out;
  }
}

}  // namespace

LogitVector forward(const Model& m, std::span<const double> x) {
  if (static_cast<int>(x.size()) != m.spec().input_dim()) {
    throw InvalidInputError("forward: input dimension mismatch");
  }
  std::vector<std::vector<double>> acts;
  forward_layers(m.spec(), m.weights(), x, acts);
  return LogitVector(std::move(acts.back()));
}

ProbVector predict_proba(const Model& m, std::span<const double> x) {
  return softmax(forward(m, x));
}

LossGrad loss_and_grad(const Model& m, const Batch& batch) {
  return loss_and_grad(m.spec(), m.weights(), batch, {});
}

LossGrad loss_and_grad(const MlpSpec& spec, const WeightVector& weights,
                       const Batch& batch, std::span<const int> rows) {
  batch.validate(spec);
  std::vector<int> all;
  if (rows.empty()) {
    all.resize(batch.size());
    std::iota(all.begin(), all.end(), 0);
    rows = all;
  }
  if (rows.empty()) {
    throw InvalidInputError("loss_and_grad: empty batch");
  }

  const std::size_t layers = spec.layer_sizes.size() - 1;
  LossGrad result;
  result.grad.assign(weights.size(), 0.0);

  std::vector<std::vector<double>> acts;
  std::vector<double> delta;
  std::vector<double> delta_prev;

  for (int r : rows) {
    forward_layers(spec, weights, batch.row(r), acts);
    const auto& logits = acts.back();
    const int label = batch.labels[r];

    // log-sum-exp stabilized cross-entropy
    const double zmax = *std::max_element(logits.begin(), logits.end());
    double sum = 0.0;
    for (double z : logits) {
      sum += std::exp(z - zmax);
    }
    result.loss += std::log(sum) + zmax - logits[label];

    // d loss / d logits = softmax(z) - onehot(label)
    delta.resize(logits.size());
    for (std::size_t k = 0; k < logits.size(); ++k) {
      delta[k] = std::exp(logits[k] - zmax) / sum;
    }
    delta[label] -= 1.0;

    // Walk layers backwards; offsets recomputed from the flat layout.
    std::size_t offset_after = weights.size();
    for (std::size_t l = layers; l-- > 0;) {
      const auto n_in = static_cast<std::size_t>(spec.layer_sizes[l]);
      const auto n_out = static_cast<std::size_t>(spec.layer_sizes[l + 1]);
      const std::size_t offset = offset_after - (n_in * n_out + n_out);
      const double* mat = weights.data() + offset;
      double* gmat = result.grad.data() + offset;
      double* gbias = gmat + n_in * n_out;
      const auto& in = acts[l];

      for (std::size_t o = 0; o < n_out; ++o) {
        const double d = delta[o];
        double* grow = gmat + o * n_in;
        for (std::size_t i = 0; i < n_in; ++i) {
          grow[i] += d * in[i];
        }
        gbias[o] += d;
      }
      if (l > 0) {
        delta_prev.assign(n_in, 0.0);
        for (std::size_t o = 0; o < n_out; ++o) {
          const double d = delta[o];
          const double* row = mat + o * n_in;
          for (std::size_t i = 0; i < n_in; ++i) {
            delta_prev[i] += row[i] * d;
          }
        }
        for (std::size_t i = 0; i < n_in; ++i) {
          delta_prev[i] *= activate_grad(in[i], spec.activation);
        }
        delta.swap(delta_prev);
      }
      offset_after = offset;
    }
  }

  const double inv = 1.0 / static_cast<double>(rows.size());
  result.loss *= inv;
  for (double& g : result.grad) {
    g *= inv;
  }
  return result;
}

}  // namespace stconal
