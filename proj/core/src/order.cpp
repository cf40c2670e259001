#include "glvo/order.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace glvo {

namespace {

void check_order_value(double value, double bound) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("order must be finite");
  }
  if (std::abs(value) > bound) {
    throw std::invalid_argument("order magnitude " + std::to_string(value) +
                                " exceeds sanity bound " + std::to_string(bound));
  }
}

}  // namespace

Order::Order(double value) : value_(value) { check_order_value(value, kMaxMagnitude); }

Order Order::complementary(Order to, Order from) {
  const double delta = to.value() - from.value();
  check_order_value(delta, 2.0 * kMaxMagnitude);
  return Order(delta, Unchecked{});
}

SampledSignal::SampledSignal(double h, std::vector<double> values)
    : h_(h), values_(std::move(values)) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw std::invalid_argument("time step h must be positive and finite");
  }
  if (values_.empty()) {
    throw std::invalid_argument("signal must hold at least one sample");
  }
}

SampledSignal SampledSignal::unit_step(double h, std::size_t count) {
  return SampledSignal(h, std::vector<double>(count, 1.0));
}

OrderSchedule::OrderSchedule(std::vector<Segment> segments, std::optional<std::size_t> last_index)
    : segments_(std::move(segments)), last_index_(last_index) {
  if (segments_.empty()) {
    throw std::invalid_argument("schedule needs at least one segment");
  }
  if (segments_.front().start_index != 0) {
    throw std::invalid_argument("first schedule segment must start at sample 0");
  }
  for (std::size_t s = 1; s < segments_.size(); ++s) {
    if (segments_[s].start_index <= segments_[s - 1].start_index) {
      throw std::invalid_argument("schedule start indices must be strictly increasing");
    }
  }
  if (last_index_ && *last_index_ < segments_.back().start_index) {
    throw std::invalid_argument("schedule ends before its last segment starts");
  }
}

OrderSchedule OrderSchedule::constant(Order order) { return OrderSchedule({{0, order}}); }

OrderSchedule OrderSchedule::per_sample(std::span<const double> orders) {
  if (orders.empty()) {
    throw std::invalid_argument("per-sample schedule needs at least one order");
  }
  std::vector<Segment> segments;
  segments.reserve(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    segments.push_back({i, Order(orders[i])});
  }
  return OrderSchedule(std::move(segments), orders.size() - 1);
}

std::size_t OrderSchedule::segment_index_at(std::size_t index) const {
  const auto it = std::upper_bound(
      segments_.begin(), segments_.end(), index,
      [](std::size_t i, const Segment& seg) { return i < seg.start_index; });
  return static_cast<std::size_t>(it - segments_.begin()) - 1;
}

Order OrderSchedule::at(std::size_t index) const {
  return segments_[segment_index_at(index)].order;
}

bool OrderSchedule::is_constant() const noexcept {
  return std::all_of(segments_.begin(), segments_.end(),
                     [&](const Segment& s) { return s.order == segments_.front().order; });
}

void OrderSchedule::require_covers(std::size_t sample_count) const {
  if (last_index_ && sample_count > 0 && *last_index_ < sample_count - 1) {
    throw std::invalid_argument("schedule covers " + std::to_string(*last_index_ + 1) +
                                " samples but the signal has " +
                                std::to_string(sample_count));
  }
}

}  // namespace glvo
