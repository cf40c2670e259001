#include "glvo/gl_core.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace glvo {

GlWeights gl_weights(Order order, double h, std::size_t count) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw std::invalid_argument("time step h must be positive and finite");
  }
  if (count == 0) {
    throw std::invalid_argument("weight count must be at least 1");
  }
  const double alpha = order.value();
  std::vector<double> w(count);
  w[0] = std::pow(h, -alpha);
  for (std::size_t i = 1; i < count; ++i) {
    w[i] = w[i - 1] * (1.0 - (alpha + 1.0) / static_cast<double>(i));
  }
  return GlWeights(order, h, std::move(w));
}

SampledSignal deriv_const(const SampledSignal& f, Order order) {
  const std::size_t n = f.size();
  const GlWeights w = gl_weights(order, f.step(), n);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t r = 0; r <= i; ++r) {
      acc += w[r] * f[i - r];
    }
    out[i] = acc;
  }
  return SampledSignal(f.step(), std::move(out));
}

namespace {

// Weight tables keyed by order value, one per distinct order in the schedule.
// Memory is (distinct orders) x (sample count).
class WeightCache {
 public:
  WeightCache(double h, std::size_t count) : h_(h), count_(count) {}

  const GlWeights& get(Order order) {
    auto it = cache_.find(order.value());
    if (it == cache_.end()) {
      it = cache_.emplace(order.value(), gl_weights(order, h_, count_)).first;
    }
    return it->second;
  }

 private:
  double h_;
  std::size_t count_;
  std::map<double, GlWeights> cache_;
};

// Shared kernel for the three variable-order definitions. `lag_order(i, r)`
// names the sample whose order supplies the coefficient of lag r at sample i.
template <typename OrderSampleFn>
SampledSignal variable_order_sum(const SampledSignal& f, const OrderSchedule& schedule,
                                 OrderSampleFn order_sample) {
  const std::size_t n = f.size();
  schedule.require_covers(n);
  WeightCache cache(f.step(), n);

  // Resolve each sample's weight table once.
  std::vector<const GlWeights*> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    table[i] = &cache.get(schedule.at(i));
  }

  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t r = 0; r <= i; ++r) {
      acc += (*table[order_sample(i, r)])[r] * f[i - r];
    }
    out[i] = acc;
  }
  return SampledSignal(f.step(), std::move(out));
}

}  // namespace

SampledSignal deriv_type1(const SampledSignal& f, const OrderSchedule& schedule) {
  return variable_order_sum(f, schedule, [](std::size_t i, std::size_t) { return i; });
}

SampledSignal deriv_type2(const SampledSignal& f, const OrderSchedule& schedule) {
  return variable_order_sum(f, schedule, [](std::size_t i, std::size_t r) { return i - r; });
}

SampledSignal deriv_type3(const SampledSignal& f, const OrderSchedule& schedule) {
  return variable_order_sum(f, schedule, [](std::size_t, std::size_t r) { return r; });
}

}  // namespace glvo
