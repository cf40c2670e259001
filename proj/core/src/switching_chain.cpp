#include "glvo/switching_chain.hpp"

#include <stdexcept>
#include <string>

namespace glvo {

double SwitchingPlan::order_at(std::size_t index) const {
  double order = initial_order.value();
  for (const Step& step : steps) {
    if (step.switch_index > index) break;
    order += step.complementary_order.value();
  }
  return order;
}

OrderSchedule SwitchingPlan::to_schedule() const {
  std::vector<OrderSchedule::Segment> segments{{0, initial_order}};
  double order = initial_order.value();
  for (const Step& step : steps) {
    order += step.complementary_order.value();
    segments.push_back({step.switch_index, Order(order)});
  }
  return OrderSchedule(std::move(segments));
}

SwitchingPlan plan_from_schedule(const OrderSchedule& schedule) {
  const auto& segments = schedule.segments();
  SwitchingPlan plan{segments.front().order, {}};
  plan.steps.reserve(segments.size() - 1);
  for (std::size_t s = 1; s < segments.size(); ++s) {
    plan.steps.push_back({segments[s].start_index,
                          Order::complementary(segments[s].order, segments[s - 1].order)});
  }
  return plan;
}

DerivativeBlock::DerivativeBlock(Order order, std::size_t activation_index, double h,
                                 std::size_t horizon)
    : activation_(activation_index),
      weights_(gl_weights(order, h, horizon > activation_index ? horizon - activation_index : 1)) {
  history_.reserve(weights_.size());
}

double DerivativeBlock::push(std::size_t sample_index, double input) {
  if (sample_index < activation_) {
    return input;
  }
  history_.push_back(input);
  const std::size_t m = history_.size() - 1;
  if (m >= weights_.size()) {
    throw std::out_of_range("derivative block pushed past its horizon");
  }
  double acc = 0.0;
  for (std::size_t r = 0; r <= m; ++r) {
    acc += weights_[r] * history_[m - r];
  }
  return acc;
}

SampledSignal run_chain(const SampledSignal& f, const SwitchingPlan& plan) {
  const std::size_t n = f.size();
  const double h = f.step();

  // blocks[0] is the initial block; later entries are pre-connected in front.
  std::vector<DerivativeBlock> blocks;
  blocks.reserve(plan.steps.size() + 1);
  blocks.emplace_back(plan.initial_order, 0, h, n);
  std::size_t previous = 0;
  for (const auto& step : plan.steps) {
    if (step.switch_index >= n) {
      throw std::out_of_range("switch index " + std::to_string(step.switch_index) +
                              " outside signal of " + std::to_string(n) + " samples");
    }
    if (step.switch_index <= previous) {
      throw std::invalid_argument("plan switch indices must be strictly increasing and > 0");
    }
    previous = step.switch_index;
    if (step.complementary_order.value() == 0.0) continue;
    blocks.emplace_back(step.complementary_order, step.switch_index, h, n);
  }

  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = f[i];
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
      x = it->push(i, x);
    }
    out[i] = x;
  }
  return SampledSignal(h, std::move(out));
}

}  // namespace glvo
