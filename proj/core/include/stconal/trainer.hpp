#pragma once

#include <cstdint>
#include <vector>

#include "stconal/mlp.hpp"
#include "stconal/weights.hpp"

namespace stconal {

// SGD schedule: the learning rate is initial_lr for epochs before
// decay_epoch and initial_lr * lr_decay from decay_epoch on. Snapshots are
// taken at the end of each snapshot_interval-th epoch past decay_epoch, so a
// 200-epoch run with decay_epoch 160 and interval 10 stores the weights
// after epochs 170, 180, 190 and 200.
struct TrainConfig {
  double initial_lr = 0.1;
  double lr_decay = 1.0;     // in (0, 1]
  int decay_epoch = 1;       // 0 < decay_epoch <= epochs
  int snapshot_interval = 1;
  int epochs = 2;            // >= decay_epoch + snapshot_interval
  double momentum = 0.0;
  double weight_decay = 0.0;
  int batch_size = 1;
  std::uint64_t seed = 0;

  void validate() const;
};

// Rate in effect during the 0-based epoch `epoch`.
double learning_rate(int epoch, const TrainConfig& cfg);

// Completed-epoch numbers at which snapshots are stored:
// {decay_epoch + interval, decay_epoch + 2*interval, ..., <= epochs}.
std::vector<int> snapshot_epochs(const TrainConfig& cfg);

// The temporal self-ensemble captured along one training run, in
// chronological order.
struct SnapshotSet {
  std::vector<WeightVector> students;
  std::vector<int> epochs_captured;
};

struct TrainResult {
  Model model;
  SnapshotSet snapshots;
};

// Mini-batch SGD with Nesterov momentum and L2 weight decay. Each epoch
// reshuffles with a generator seeded from (cfg.seed, epoch), so the whole
// run is reproducible. Weight snapshots are copied at the end of each epoch
// listed by snapshot_epochs().
TrainResult train(const Model& initial, const Batch& labeled,
                  const TrainConfig& cfg);

}  // namespace stconal
