#pragma once

#include <cstddef>
#include <vector>

#include "glvo/gl_core.hpp"
#include "glvo/order.hpp"

namespace glvo {

/// Complementary-order decomposition of a schedule: the initial block plus one
/// pre-connected block per switch, each of order alpha_j - alpha_{j-1}.
struct SwitchingPlan {
  struct Step {
    std::size_t switch_index;
    Order complementary_order;

    friend bool operator==(const Step&, const Step&) = default;
  };

  Order initial_order;
  std::vector<Step> steps;

  /// initial_order plus every complementary order with switch_index <= index.
  [[nodiscard]] double order_at(std::size_t index) const;

  /// Rebuilds the sample-indexed schedule by accumulating complementary orders.
  [[nodiscard]] OrderSchedule to_schedule() const;
};

SwitchingPlan plan_from_schedule(const OrderSchedule& schedule);

/// One derivative block of the chain. Before its activation sample the block
/// is a wire; from then on it keeps its own input history and emits the GL
/// sum started at the activation sample.
class DerivativeBlock {
 public:
  DerivativeBlock(Order order, std::size_t activation_index, double h, std::size_t horizon);

  double push(std::size_t sample_index, double input);

  [[nodiscard]] std::size_t activation_index() const noexcept { return activation_; }

 private:
  std::size_t activation_;
  GlWeights weights_;
  std::vector<double> history_;
};

/// Sample-sequential simulation of the multiple-switching block chain. Each
/// sample enters the newest block first and leaves through the initial block.
/// Blocks with zero complementary order are omitted.
SampledSignal run_chain(const SampledSignal& f, const SwitchingPlan& plan);

}  // namespace glvo
