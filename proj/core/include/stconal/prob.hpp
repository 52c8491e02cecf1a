#pragma once

#include <cstddef>
#include <vector>

#include "stconal/error.hpp"

namespace stconal {

// Pre-softmax scores. Entries must be finite.
class LogitVector {
 public:
  explicit LogitVector(std::vector<double> values);

  double operator[](std::size_t k) const noexcept { return values_[k]; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  std::vector<double> values_;
};

// A K-class probability distribution: entries nonnegative and summing to one
// within 1e-9.
class ProbVector {
 public:
  explicit ProbVector(std::vector<double> values);

  double operator[](std::size_t k) const noexcept { return values_[k]; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  std::vector<double> values_;
};

// exp(z_k - max z) / sum_j exp(z_j - max z). Invariant to adding a constant
// to every logit; the output sums to one within 1e-12. Requires K >= 2.
ProbVector softmax(const LogitVector& logits);

// -sum_k p_k ln p_k in nats, with 0 ln 0 = 0. Lies in [0, ln K].
double entropy(const ProbVector& p);

// sum_k p_k ln(p_k / q'_k) in nats, where q'_k = max(q_k, 1e-12) so that the
// divergence stays finite at q_k = 0; terms with p_k = 0 contribute zero.
// Throws on dimension mismatch.
double kl_divergence(const ProbVector& p, const ProbVector& q);

// p_k^{1/T} / sum_j p_j^{1/T}, evaluated in log space. T = 1 is the identity;
// T < 1 weakly decreases entropy. Requires T > 0.
ProbVector sharpen(const ProbVector& p, double temperature);

}  // namespace stconal
