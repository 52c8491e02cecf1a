#include "stconal/prob.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace stconal {

namespace {

bool all_finite(const std::vector<double>& values) {
  return std::all_of(values.begin(), values.end(),
                     [](double v) { return std::isfinite(v); });
}

}  // namespace

LogitVector::LogitVector(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw InvalidInputError("LogitVector: empty");
  }
  if (!all_finite(values_)) {
    throw InvalidInputError("LogitVector: entries must be finite");
  }
}

ProbVector::ProbVector(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw InvalidInputError("ProbVector: empty");
  }
  double sum = 0.0;
  for (double v : values_) {
    if (!(v >= 0.0)) {  // catches NaN as well
      throw InvalidInputError("ProbVector: entries must be nonnegative");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw InvalidInputError("ProbVector: entries must sum to 1");
  }
}

ProbVector softmax(const LogitVector& logits) {
  if (logits.size() < 2) {
    throw InvalidInputError("softmax: need at least two classes");
  }
  const auto& z = logits.values();
  const double zmax = *std::max_element(z.begin(), z.end());
  std::vector<double> out(z.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < z.size(); ++k) {
    out[k] = std::exp(z[k] - zmax);
    sum += out[k];
  }
  for (double& v : out) {
    v /= sum;
  }
  return ProbVector(std::move(out));
}

double entropy(const ProbVector& p) {
  double h = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] > 0.0) {
      h -= p[k] * std::log(p[k]);
    }
  }
  return h;
}

double kl_divergence(const ProbVector& p, const ProbVector& q) {
  if (p.size() != q.size()) {
    throw InvalidInputError("kl_divergence: dimension mismatch");
  }
  constexpr double kFloor = 1e-12;  // keeps the sum finite at q_k = 0
  double kl = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] > 0.0) {
      kl += p[k] * std::log(p[k] / std::max(q[k], kFloor));
    }
  }
  return kl;
}

ProbVector sharpen(const ProbVector& p, double temperature) {
  if (!(temperature > 0.0)) {
    throw InvalidInputError("sharpen: temperature must be positive");
  }
  if (temperature == 1.0) {
    return p;
  }
  // Work with (ln p_k)/T shifted by its max so p^large cannot underflow to
  // an all-zero vector.
  const double inv_t = 1.0 / temperature;
  std::vector<double> logs(p.size());
  double log_max = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < p.size(); ++k) {
    logs[k] = p[k] > 0.0 ? inv_t * std::log(p[k])
                         : -std::numeric_limits<double>::infinity();
    log_max = std::max(log_max, logs[k]);
  }
  std::vector<double> out(p.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    out[k] = std::isinf(logs[k]) ? 0.0 : std::exp(logs[k] - log_max);
    sum += out[k];
  }
  for (double& v : out) {
    v /= sum;
  }
  return ProbVector(std::move(out));
}

}  // namespace stconal
