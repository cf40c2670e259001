#pragma once

#include <cstddef>
#include <vector>

#include "glvo/order.hpp"

namespace glvo {

/// Piecewise-constant order in physical time. Converted to an OrderSchedule
/// once the step h is known; switch times must land on the sample grid.
class TimedSchedule {
 public:
  struct Segment {
    double start_time;
    Order order;

    friend bool operator==(const Segment&, const Segment&) = default;
  };

  explicit TimedSchedule(std::vector<Segment> segments);

  [[nodiscard]] Order at(double t) const;
  [[nodiscard]] const std::vector<Segment>& segments() const noexcept { return segments_; }

  /// Sample-indexed schedule covering samples 0..last_index. Throws
  /// std::invalid_argument when a switch time is not a multiple of h.
  [[nodiscard]] OrderSchedule to_samples(double h, std::size_t last_index) const;

  friend bool operator==(const TimedSchedule&, const TimedSchedule&) = default;

 private:
  std::vector<Segment> segments_;
};

/// Index n with n * h == t up to rounding, or throws if t is off the grid.
std::size_t grid_index(double t, double h);

}  // namespace glvo
