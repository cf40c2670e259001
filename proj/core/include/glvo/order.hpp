#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace glvo {

/// Differintegration order. Negative values integrate, positive values
/// differentiate and zero is the identity operator.
class Order {
 public:
  static constexpr double kMaxMagnitude = 10.0;

  constexpr Order() = default;

  /// Throws std::invalid_argument for non-finite values or |value| > kMaxMagnitude.
  explicit Order(double value);

  /// The increment `to - from` realised by a pre-connected block at a switch.
  /// Its magnitude may reach twice kMaxMagnitude.
  static Order complementary(Order to, Order from);

  [[nodiscard]] constexpr double value() const noexcept { return value_; }

  friend constexpr bool operator==(Order, Order) = default;
  friend constexpr auto operator<=>(Order, Order) = default;

 private:
  struct Unchecked {};
  constexpr Order(double value, Unchecked) : value_(value) {}

  double value_ = 0.0;
};

/// Uniformly sampled real signal; values[i] = f(i * h).
class SampledSignal {
 public:
  SampledSignal(double h, std::vector<double> values);

  /// Unit step sampled at t = 0, h, ..., (count - 1) * h.
  static SampledSignal unit_step(double h, std::size_t count);

  [[nodiscard]] double step() const noexcept { return h_; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
  [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }
  [[nodiscard]] double time(std::size_t i) const noexcept {
    return static_cast<double>(i) * h_;
  }

 private:
  double h_;
  std::vector<double> values_;
};

/// Piecewise-constant order on the sample grid.
class OrderSchedule {
 public:
  struct Segment {
    std::size_t start_index;
    Order order;

    friend bool operator==(const Segment&, const Segment&) = default;
  };

  /// `last_index`, when given, is the last sample index the schedule covers.
  explicit OrderSchedule(std::vector<Segment> segments,
                         std::optional<std::size_t> last_index = std::nullopt);

  static OrderSchedule constant(Order order);

  /// One segment per sample: orders[i] applies at sample i.
  static OrderSchedule per_sample(std::span<const double> orders);

  [[nodiscard]] Order at(std::size_t index) const;
  [[nodiscard]] std::size_t segment_index_at(std::size_t index) const;
  [[nodiscard]] const std::vector<Segment>& segments() const noexcept { return segments_; }
  [[nodiscard]] std::optional<std::size_t> last_index() const noexcept { return last_index_; }
  [[nodiscard]] bool is_constant() const noexcept;

  /// Throws std::invalid_argument if the schedule ends before `sample_count` samples.
  void require_covers(std::size_t sample_count) const;

  friend bool operator==(const OrderSchedule&, const OrderSchedule&) = default;

 private:
  std::vector<Segment> segments_;
  std::optional<std::size_t> last_index_;
};

}  // namespace glvo
