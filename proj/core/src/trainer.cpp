#include "stconal/trainer.hpp"

#include <algorithm>
#include <numeric>

#include "stconal/error.hpp"
#include "stconal/rng.hpp"

namespace stconal {

void TrainConfig::validate() const {
  if (initial_lr < 0.0) {
    throw InvalidInputError("TrainConfig: initial_lr must be nonnegative");
  }
  if (!(lr_decay > 0.0 && lr_decay <= 1.0)) {
    throw InvalidInputError("TrainConfig: lr_decay must lie in (0, 1]");
  }
  if (decay_epoch <= 0 || decay_epoch > epochs) {
    throw InvalidInputError("TrainConfig: decay_epoch must lie in (0, epochs]");
  }
  if (snapshot_interval < 1) {
    throw InvalidInputError("TrainConfig: snapshot_interval must be >= 1");
  }
  if (epochs < decay_epoch + snapshot_interval) {
    throw InvalidInputError(
        "TrainConfig: epochs must allow at least one snapshot");
  }
  if (!(momentum >= 0.0 && momentum < 1.0)) {
    throw InvalidInputError("TrainConfig: momentum must lie in [0, 1)");
  }
  if (weight_decay < 0.0) {
    throw InvalidInputError("TrainConfig: weight_decay must be nonnegative");
  }
  if (batch_size < 1) {
    throw InvalidInputError("TrainConfig: batch_size must be >= 1");
  }
}

double learning_rate(int epoch, const TrainConfig& cfg) {
  return epoch < cfg.decay_epoch ? cfg.initial_lr
                                 : cfg.lr_decay * cfg.initial_lr;
}

std::vector<int> snapshot_epochs(const TrainConfig& cfg) {
  std::vector<int> epochs;
  for (int e = cfg.decay_epoch + cfg.snapshot_interval; e <= cfg.epochs;
       e += cfg.snapshot_interval) {
    epochs.push_back(e);
  }
  return epochs;
}

TrainResult train(const Model& initial, const Batch& labeled,
                  const TrainConfig& cfg) {
  cfg.validate();
  labeled.validate(initial.spec());
  if (labeled.size() == 0) {
    throw InvalidInputError("train: labeled set is empty");
  }

  const MlpSpec& spec = initial.spec();
  WeightVector w = initial.weights();
  WeightVector velocity(w.size(), 0.0);
  WeightVector step(w.size(), 0.0);

  const std::vector<int> capture_at = snapshot_epochs(cfg);
  SnapshotSet snapshots;
  snapshots.students.reserve(capture_at.size());
  std::size_t next_capture = 0;

  std::vector<int> order(labeled.size());
  std::iota(order.begin(), order.end(), 0);

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    const double lr = learning_rate(epoch, cfg);
    Rng rng = make_rng(derive_seed(cfg.seed, streams::kEpochShuffle,
                                   static_cast<std::uint64_t>(epoch)));
    shuffle_in_place(order, rng);

    for (std::size_t start = 0; start < order.size();
         start += cfg.batch_size) {
      const std::size_t count =
          std::min<std::size_t>(cfg.batch_size, order.size() - start);
      const std::span<const int> rows(order.data() + start, count);
      LossGrad lg = loss_and_grad(spec, w, labeled, rows);

      // Nesterov update: v <- mu v + g, w <- w - lr (g + mu v),
      // with g = grad + weight_decay * w.
      for (std::size_t i = 0; i < w.size(); ++i) {
        const double g = lg.grad[i] + cfg.weight_decay * w[i];
        velocity[i] = cfg.momentum * velocity[i] + g;
        step[i] = g + cfg.momentum * velocity[i];
      }
      for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] -= lr * step[i];
      }
    }

    const int completed = epoch + 1;
    if (next_capture < capture_at.size() &&
        completed == capture_at[next_capture]) {
      snapshots.students.push_back(w);
      snapshots.epochs_captured.push_back(completed);
      ++next_capture;
    }
  }

  return TrainResult{Model(spec, std::move(w)), std::move(snapshots)};
}

}  // namespace stconal
