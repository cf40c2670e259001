#include "glvo/timed_schedule.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace glvo {

namespace {
constexpr double kGridTolerance = 1e-9;
}

TimedSchedule::TimedSchedule(std::vector<Segment> segments) : segments_(std::move(segments)) {
  if (segments_.empty()) {
    throw std::invalid_argument("schedule needs at least one segment");
  }
  if (segments_.front().start_time != 0.0) {
    throw std::invalid_argument("first schedule segment must start at t = 0");
  }
  for (std::size_t s = 0; s < segments_.size(); ++s) {
    if (!std::isfinite(segments_[s].start_time)) {
      throw std::invalid_argument("schedule start times must be finite");
    }
    if (s > 0 && segments_[s].start_time <= segments_[s - 1].start_time) {
      throw std::invalid_argument("schedule start times must be strictly ascending");
    }
  }
}

Order TimedSchedule::at(double t) const {
  const auto it = std::upper_bound(
      segments_.begin(), segments_.end(), t,
      [](double x, const Segment& seg) { return x < seg.start_time; });
  return it == segments_.begin() ? segments_.front().order : std::prev(it)->order;
}

std::size_t grid_index(double t, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw std::invalid_argument("time step h must be positive and finite");
  }
  const double ratio = t / h;
  const double n = std::round(ratio);
  if (n < 0.0 || std::abs(ratio - n) > kGridTolerance * std::max(1.0, std::abs(ratio))) {
    throw std::invalid_argument("time " + std::to_string(t) + " is not on the grid of step " +
                                std::to_string(h));
  }
  return static_cast<std::size_t>(n);
}

OrderSchedule TimedSchedule::to_samples(double h, std::size_t last_index) const {
  std::vector<OrderSchedule::Segment> out;
  out.reserve(segments_.size());
  for (const Segment& seg : segments_) {
    const std::size_t index = grid_index(seg.start_time, h);
    if (index > last_index) break;
    out.push_back({index, seg.order});
  }
  return OrderSchedule(std::move(out), last_index);
}

}  // namespace glvo
