#include "glvo/analytic_oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace glvo {

namespace {

constexpr double kHorizon = 4.0;

void require_integrating(const TimedSchedule& schedule) {
  for (const auto& seg : schedule.segments()) {
    if (!(seg.order.value() < 0.0)) {
      throw std::invalid_argument("oracle needs strictly negative orders, got " +
                                  std::to_string(seg.order.value()));
    }
  }
}

double adaptive_simpson(const std::function<double(double)>& g, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = g(lm);
  const double frm = g(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(g, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(g, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& g, double a, double b, double tol) {
  if (a == b) return 0.0;
  const double fa = g(a);
  const double fb = g(b);
  const double fm = g(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(g, a, b, fa, fm, fb, whole, tol, 50);
}

void check_quadrature_args(const TimedSchedule& schedule, double t, double tol) {
  require_integrating(schedule);
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw std::out_of_range("quadrature time must be finite and non-negative");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("quadrature tolerance must be positive");
  }
}

}  // namespace

double OracleSolution::evaluate(double t) const {
  // Grid times i * h may overshoot the horizon by a rounding error.
  const double slack = 1e-12 * std::max(1.0, std::isfinite(t_max_) ? t_max_ : 0.0);
  if (!(t >= 0.0) || t > t_max_ + slack) {
    throw std::out_of_range("oracle evaluated at t = " + std::to_string(t) + " outside [0, " +
                            std::to_string(t_max_) + "]");
  }
  return fn_(std::min(t, t_max_));
}

TimedSchedule ex1_schedule() {
  return TimedSchedule({{0.0, Order(-1)}, {1.0, Order(-2)}, {2.0, Order(-3)}, {3.0, Order(-1)}});
}

TimedSchedule ex2_schedule() {
  return TimedSchedule(
      {{0.0, Order(-0.4)}, {1.0, Order(-1.8)}, {2.0, Order(-0.5)}, {3.0, Order(-2.5)}});
}

OracleSolution oracle_const_step(Order order) {
  TimedSchedule schedule({{0.0, order}});
  require_integrating(schedule);
  const double p = -order.value();
  const double scale = 1.0 / std::tgamma(1.0 + p);
  return OracleSolution(std::move(schedule), std::numeric_limits<double>::infinity(),
                        [p, scale](double t) { return scale * std::pow(t, p); });
}

OracleSolution oracle_ex1() {
  return OracleSolution(ex1_schedule(), kHorizon, [](double t) {
    if (t < 1.0) return t;
    if (t < 2.0) return 0.5 * t * t - t + 1.5;
    if (t < 3.0) return t * t * t / 6.0 - t * t + 3.0 * t - 11.0 / 6.0;
    return 0.5 * t * t - 0.5 * t - 1.0 / 3.0;
  });
}

OracleSolution oracle_ex2(CoefficientMode mode) {
  struct Coefficients {
    double c04, c18, c05, c25;
  };
  const Coefficients c = mode == CoefficientMode::kPaper
                             ? Coefficients{1.127, 0.597, 1.128, 0.3}
                             : Coefficients{1.0 / std::tgamma(1.4), 1.0 / std::tgamma(2.8),
                                            1.0 / std::tgamma(1.5), 1.0 / std::tgamma(3.5)};
  return OracleSolution(ex2_schedule(), kHorizon, [c](double t) {
    const double first = t < 1.0 ? c.c04 * std::pow(t, 0.4)
                                 : c.c04 * (std::pow(t, 0.4) - std::pow(t - 1.0, 0.4));
    if (t < 1.0) return first;
    if (t < 2.0) return c.c18 * std::pow(t - 1.0, 1.8) + first;
    const double second = c.c18 * (std::pow(t - 1.0, 1.8) - std::pow(t - 2.0, 1.8));
    if (t < 3.0) return c.c05 * std::sqrt(t - 2.0) + second + first;
    return c.c25 * std::pow(t - 3.0, 2.5) + second +
           c.c05 * (std::sqrt(t - 2.0) - std::sqrt(t - 3.0)) + first;
  });
}

double oracle_quadrature(const TimedSchedule& schedule, double t, double tol) {
  check_quadrature_args(schedule, t, tol);
  const auto& segs = schedule.segments();
  double total = 0.0;
  for (std::size_t s = 0; s < segs.size() && segs[s].start_time < t; ++s) {
    const double a = segs[s].start_time;
    const double b = s + 1 < segs.size() ? std::min(segs[s + 1].start_time, t) : t;
    const double p = -segs[s].order.value();
    total += (std::pow(t - a, p) - std::pow(t - b, p)) / std::tgamma(p + 1.0);
  }
  return total;
}

double oracle_quadrature(const TimedSchedule& schedule, double t, double tol,
                         const std::function<double(double)>& input) {
  check_quadrature_args(schedule, t, tol);
  const auto& segs = schedule.segments();
  double total = 0.0;
  for (std::size_t s = 0; s < segs.size() && segs[s].start_time < t; ++s) {
    const double a = segs[s].start_time;
    const double b = s + 1 < segs.size() ? std::min(segs[s + 1].start_time, t) : t;
    const double p = -segs[s].order.value();
    const double s_lo = std::pow(t - b, p) / p;
    const double s_hi = std::pow(t - a, p) / p;
    const auto g = [&](double sv) { return input(t - std::pow(p * sv, 1.0 / p)); };
    total += integrate(g, s_lo, s_hi, tol) / std::tgamma(p);
  }
  return total;
}

}  // namespace glvo
