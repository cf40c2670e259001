#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "glvo/order.hpp"

namespace glvo {

/// Largest k (matrix dimension k + 1) the dense engines accept by default.
/// Beyond it only the streaming evaluators in gl_core apply.
inline constexpr std::size_t kDefaultDenseCap = 5000;

enum class MatrixProvenance { kConstantOrder, kSwitchingBlock, kProduct, kVariableOrder };

/// Dense lower-triangular operator acting on (f(0), f(h), ..., f(kh)).
///
/// Diagonal entries equal h^-alpha of the order owning that column, so they
/// are 1 only when h = 1.
class GlMatrix {
 public:
  GlMatrix(std::size_t dim, double h, MatrixProvenance provenance);

  static GlMatrix identity(std::size_t dim, double h);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] double step() const noexcept { return h_; }
  [[nodiscard]] MatrixProvenance provenance() const noexcept { return provenance_; }

  [[nodiscard]] double operator()(std::size_t i, std::size_t j) const {
    return data_[i * dim_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }

  [[nodiscard]] std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * dim_, dim_};
  }

  [[nodiscard]] bool is_lower_triangular() const;

 private:
  std::size_t dim_;
  double h_;
  MatrixProvenance provenance_;
  std::vector<double> data_;
};

/// W(bar_order, k, T): identity on the samples before the switch, a
/// constant-order block of the complementary order from the switch on.
///
/// T counts samples from 1, as in the printed switching example: the block
/// first acts on sample T (index T - 1). T = 1 gives the full W(bar_order, k)
/// and T = k + 1 a block that only touches the last sample.
class SwitchingBlockMatrix {
 public:
  SwitchingBlockMatrix(GlMatrix matrix, Order bar_order, std::size_t switch_index);

  [[nodiscard]] const GlMatrix& matrix() const noexcept { return matrix_; }
  [[nodiscard]] Order bar_order() const noexcept { return bar_order_; }
  [[nodiscard]] std::size_t switch_index() const noexcept { return switch_index_; }
  /// 0-based index of the first sample seen by the complementary block.
  [[nodiscard]] std::size_t block_start() const noexcept { return switch_index_ - 1; }

  operator const GlMatrix&() const noexcept { return matrix_; }  // NOLINT

 private:
  GlMatrix matrix_;
  Order bar_order_;
  std::size_t switch_index_;
};

/// (k+1)x(k+1) lower-triangular Toeplitz matrix of GL weights.
/// Throws std::length_error when k exceeds `cap`.
GlMatrix build_W(Order order, std::size_t k, double h, std::size_t cap = kDefaultDenseCap);

SwitchingBlockMatrix build_switch_W(Order bar_order, std::size_t k, std::size_t switch_index,
                                    double h, std::size_t cap = kDefaultDenseCap);

SampledSignal apply(const GlMatrix& m, const SampledSignal& f);

/// Exact dense product with a fixed summation order.
GlMatrix matmul(const GlMatrix& a, const GlMatrix& b);

/// Closed-form type-2 matrix: column j holds w_{alpha(j), i - j}.
GlMatrix variable_order_matrix(const OrderSchedule& schedule, std::size_t k, double h,
                               std::size_t cap = kDefaultDenseCap);

/// Left-to-right product W(a_0, k) W(a_1, k, 2) ... W(a_k, k, k + 1) of the
/// per-sample switching matrices, where a_j = alpha(j) - alpha(j - 1) is
/// switched in at sample index j.
/// Factors with a_j = 0 are exact identities and are skipped.
GlMatrix switching_product(const OrderSchedule& schedule, std::size_t k, double h,
                           std::size_t cap = kDefaultDenseCap);

/// Cross-check of the switching product, closed-form matrix, direct type-2
/// sum and the block chain on one probe signal.
struct EquivalenceReport {
  std::size_t dim = 0;
  std::size_t factors = 0;           // non-identity switching factors multiplied
  double max_matrix_discrepancy = 0;  // |product - closed form|, elementwise
  double max_product_output = 0;      // |product * f - type2(f)|
  double max_closed_output = 0;       // |closed form * f - type2(f)|
  double max_chain_output = 0;        // |chain(f) - type2(f)|

  [[nodiscard]] double max_output_discrepancy() const noexcept;
  [[nodiscard]] double worst() const noexcept;
};

EquivalenceReport theorem1_check(const OrderSchedule& schedule, std::size_t k, double h,
                                 std::size_t cap = kDefaultDenseCap);
EquivalenceReport theorem1_check(const OrderSchedule& schedule, const SampledSignal& probe,
                                 std::size_t cap = kDefaultDenseCap);

/// Default probe used by theorem1_check: a non-constant, non-monotone signal.
SampledSignal probe_signal(std::size_t count, double h);

/// One row per line, entries separated by a single space, 17 significant digits.
void dump_matrix(std::ostream& os, const GlMatrix& m);

}  // namespace glvo
