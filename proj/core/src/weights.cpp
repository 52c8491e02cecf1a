#include "stconal/weights.hpp"

#include "stconal/error.hpp"

namespace stconal {

WeightVector weight_average(const std::vector<WeightVector>& weights) {
  if (weights.empty()) {
    throw InvalidInputError("weight_average: empty list");
  }
  const std::size_t n = weights.front().size();
  WeightVector mean(n, 0.0);
  for (const auto& w : weights) {
    if (w.size() != n) {
      throw InvalidInputError("weight_average: length mismatch");
    }
    for (std::size_t i = 0; i < n; ++i) {
      mean[i] += w[i];
    }
  }
  const double inv = 1.0 / static_cast<double>(weights.size());
  for (double& v : mean) {
    v *= inv;
  }
  return mean;
}

WeightVector ema_update(const WeightVector& prev, const WeightVector& latest,
                        double alpha) {
  if (prev.size() != latest.size()) {
    throw InvalidInputError("ema_update: length mismatch");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw InvalidInputError("ema_update: alpha must lie in [0, 1]");
  }
  WeightVector out(prev.size());
  for (std::size_t i = 0; i < prev.size(); ++i) {
    out[i] = alpha * prev[i] + (1.0 - alpha) * latest[i];
  }
  return out;
}

}  // namespace stconal
