#include "glvo/matrix_scheme.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

#include "glvo/gl_core.hpp"
#include "glvo/switching_chain.hpp"

namespace glvo {

namespace {

void check_dense_size(std::size_t k, std::size_t cap) {
  if (k > cap) {
    throw std::length_error("k = " + std::to_string(k) + " exceeds dense matrix cap " +
                            std::to_string(cap) + "; use the streaming engine");
  }
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

}  // namespace

GlMatrix::GlMatrix(std::size_t dim, double h, MatrixProvenance provenance)
    : dim_(dim), h_(h), provenance_(provenance), data_(dim * dim, 0.0) {
  if (dim == 0) {
    throw std::invalid_argument("matrix dimension must be at least 1");
  }
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw std::invalid_argument("time step h must be positive and finite");
  }
}

GlMatrix GlMatrix::identity(std::size_t dim, double h) {
  GlMatrix m(dim, h, MatrixProvenance::kConstantOrder);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

bool GlMatrix::is_lower_triangular() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if ((*this)(i, j) != 0.0) return false;
    }
  }
  return true;
}

SwitchingBlockMatrix::SwitchingBlockMatrix(GlMatrix matrix, Order bar_order,
                                           std::size_t switch_index)
    : matrix_(std::move(matrix)), bar_order_(bar_order), switch_index_(switch_index) {
  const std::size_t dim = matrix_.dim();
  if (switch_index_ == 0 || switch_index_ > dim) {
    throw std::out_of_range("switch index outside 1.." + std::to_string(dim));
  }
  // Identity rows before the block, nothing coupling the two blocks, and a
  // Toeplitz lower-right block of the complementary order.
  const std::size_t start = block_start();
  const GlWeights w = gl_weights(bar_order_, matrix_.step(), dim - start);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      double expected = 0.0;
      if (i < start || j < start) {
        expected = (i == j) ? 1.0 : 0.0;
      } else if (j <= i) {
        expected = w[i - j];
      }
      if (matrix_(i, j) != expected) {
        throw std::logic_error("switching block matrix violates its block structure at (" +
                               std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }
}

GlMatrix build_W(Order order, std::size_t k, double h, std::size_t cap) {
  check_dense_size(k, cap);
  const std::size_t dim = k + 1;
  const GlWeights w = gl_weights(order, h, dim);
  GlMatrix m(dim, h, MatrixProvenance::kConstantOrder);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      m(i, j) = w[i - j];
    }
  }
  return m;
}

SwitchingBlockMatrix build_switch_W(Order bar_order, std::size_t k, std::size_t switch_index,
                                    double h, std::size_t cap) {
  check_dense_size(k, cap);
  if (switch_index == 0 || switch_index > k + 1) {
    throw std::out_of_range("switch index " + std::to_string(switch_index) +
                            " outside 1.." + std::to_string(k + 1));
  }
  const std::size_t dim = k + 1;
  const std::size_t start = switch_index - 1;
  const GlWeights w = gl_weights(bar_order, h, dim - start);
  GlMatrix m(dim, h, MatrixProvenance::kSwitchingBlock);
  for (std::size_t i = 0; i < start; ++i) m(i, i) = 1.0;
  for (std::size_t i = start; i < dim; ++i) {
    for (std::size_t j = start; j <= i; ++j) {
      m(i, j) = w[i - j];
    }
  }
  return SwitchingBlockMatrix(std::move(m), bar_order, switch_index);
}

SampledSignal apply(const GlMatrix& m, const SampledSignal& f) {
  if (m.dim() != f.size()) {
    throw std::invalid_argument("matrix dimension " + std::to_string(m.dim()) +
                                " does not match signal length " + std::to_string(f.size()));
  }
  if (m.step() != f.step()) {
    throw std::invalid_argument("matrix and signal use different time steps");
  }
  std::vector<double> out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j <= i; ++j) {
      acc += m(i, j) * f[j];
    }
    out[i] = acc;
  }
  return SampledSignal(f.step(), std::move(out));
}

GlMatrix matmul(const GlMatrix& a, const GlMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("matrix dimensions differ");
  }
  if (a.step() != b.step()) {
    throw std::invalid_argument("matrices use different time steps");
  }
  const std::size_t dim = a.dim();
  const bool lower = a.is_lower_triangular() && b.is_lower_triangular();
  GlMatrix c(dim, a.step(), MatrixProvenance::kProduct);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const std::size_t lo = lower ? j : 0;
      const std::size_t hi = lower ? i + 1 : dim;
      if (lo >= hi) continue;
      double acc = 0.0;
      for (std::size_t l = lo; l < hi; ++l) {
        acc += a(i, l) * b(l, j);
      }
      c(i, j) = acc;
    }
  }
  return c;
}

GlMatrix variable_order_matrix(const OrderSchedule& schedule, std::size_t k, double h,
                               std::size_t cap) {
  check_dense_size(k, cap);
  const std::size_t dim = k + 1;
  schedule.require_covers(dim);
  std::map<double, GlWeights> cache;
  GlMatrix m(dim, h, MatrixProvenance::kVariableOrder);
  for (std::size_t j = 0; j < dim; ++j) {
    const Order order = schedule.at(j);
    auto it = cache.find(order.value());
    if (it == cache.end()) {
      it = cache.emplace(order.value(), gl_weights(order, h, dim)).first;
    }
    for (std::size_t i = j; i < dim; ++i) {
      m(i, j) = it->second[i - j];
    }
  }
  return m;
}

GlMatrix switching_product(const OrderSchedule& schedule, std::size_t k, double h,
                           std::size_t cap) {
  check_dense_size(k, cap);
  schedule.require_covers(k + 1);
  GlMatrix product = build_W(schedule.at(0), k, h, cap);
  for (std::size_t j = 1; j <= k; ++j) {
    const Order bar = Order::complementary(schedule.at(j), schedule.at(j - 1));
    if (bar.value() == 0.0) continue;
    product = matmul(product, build_switch_W(bar, k, j + 1, h, cap));
  }
  return product;
}

double EquivalenceReport::max_output_discrepancy() const noexcept {
  return std::max({max_product_output, max_closed_output, max_chain_output});
}

double EquivalenceReport::worst() const noexcept {
  return std::max(max_matrix_discrepancy, max_output_discrepancy());
}

SampledSignal probe_signal(std::size_t count, double h) {
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double x = static_cast<double>(i);
    v[i] = 1.0 + 0.5 * std::sin(0.7 * x) + 0.01 * x;
  }
  return SampledSignal(h, std::move(v));
}

EquivalenceReport theorem1_check(const OrderSchedule& schedule, std::size_t k, double h,
                                 std::size_t cap) {
  return theorem1_check(schedule, probe_signal(k + 1, h), cap);
}

EquivalenceReport theorem1_check(const OrderSchedule& schedule, const SampledSignal& probe,
                                 std::size_t cap) {
  const std::size_t k = probe.size() - 1;
  const double h = probe.step();

  EquivalenceReport report;
  report.dim = k + 1;
  for (std::size_t j = 1; j <= k; ++j) {
    if (schedule.at(j) != schedule.at(j - 1)) ++report.factors;
  }

  const GlMatrix product = switching_product(schedule, k, h, cap);
  const GlMatrix closed = variable_order_matrix(schedule, k, h, cap);
  for (std::size_t i = 0; i <= k; ++i) {
    report.max_matrix_discrepancy =
        std::max(report.max_matrix_discrepancy, max_abs_diff(product.row(i), closed.row(i)));
  }

  const SampledSignal direct = deriv_type2(probe, schedule);
  report.max_product_output = max_abs_diff(apply(product, probe).values(), direct.values());
  report.max_closed_output = max_abs_diff(apply(closed, probe).values(), direct.values());
  SwitchingPlan plan = plan_from_schedule(schedule);
  std::erase_if(plan.steps, [k](const SwitchingPlan::Step& s) { return s.switch_index > k; });
  report.max_chain_output = max_abs_diff(run_chain(probe, plan).values(), direct.values());
  return report;
}

void dump_matrix(std::ostream& os, const GlMatrix& m) {
  const auto flags = os.flags();
  const auto precision = os.precision();
  os << std::defaultfloat << std::setprecision(17);
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
    os << '\n';
  }
  os.flags(flags);
  os.precision(precision);
}

}  // namespace glvo
