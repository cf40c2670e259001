#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "glvo/order.hpp"

namespace glvo {

/// Above this many samples the O(k^2) direct evaluators become slow enough
/// that front ends should warn.
inline constexpr std::size_t kDirectSummationWarnSamples = 20'000;

/// Grünwald–Letnikov weights w[i] = (-1)^i * binom(alpha, i) / h^alpha.
class GlWeights {
 public:
  GlWeights(Order order, double h, std::vector<double> w)
      : order_(order), h_(h), w_(std::move(w)) {}

  [[nodiscard]] Order order() const noexcept { return order_; }
  [[nodiscard]] double step() const noexcept { return h_; }
  [[nodiscard]] std::size_t size() const noexcept { return w_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return w_[i]; }
  [[nodiscard]] std::span<const double> values() const noexcept { return w_; }

 private:
  Order order_;
  double h_;
  std::vector<double> w_;
};

/// First `count` weights via w[0] = h^-alpha, w[i] = w[i-1] * (1 - (alpha + 1) / i).
GlWeights gl_weights(Order order, double h, std::size_t count);

/// Constant-order GL differintegral at every sample:
/// out[i] = sum_{r=0..i} w[r] * f[i - r].
SampledSignal deriv_const(const SampledSignal& f, Order order);

/// Variable order, type 1: every lag uses the order at the current sample i.
SampledSignal deriv_type1(const SampledSignal& f, const OrderSchedule& schedule);

/// Variable order, type 2: lag r uses the order that was in force at the past
/// sample i - r. This is the definition realised by the switching chain.
SampledSignal deriv_type2(const SampledSignal& f, const OrderSchedule& schedule);

/// Variable order, type 3: lag r uses the order at absolute sample r, so the
/// newest samples get the oldest orders.
SampledSignal deriv_type3(const SampledSignal& f, const OrderSchedule& schedule);

}  // namespace glvo
