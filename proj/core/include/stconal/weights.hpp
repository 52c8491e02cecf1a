#pragma once

#include <vector>

namespace stconal {

// Flattened model parameters; the unit of snapshotting and averaging.
using WeightVector = std::vector<double>;

// Elementwise arithmetic mean. Throws on an empty list or mismatched lengths.
WeightVector weight_average(const std::vector<WeightVector>& weights);

// alpha * prev + (1 - alpha) * latest, elementwise. alpha must lie in [0, 1].
WeightVector ema_update(const WeightVector& prev, const WeightVector& latest,
                        double alpha);

}  // namespace stconal
