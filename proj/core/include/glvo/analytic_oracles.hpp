#pragma once

#include <functional>
#include <limits>

#include "glvo/order.hpp"
#include "glvo/timed_schedule.hpp"

namespace glvo {

/// Closed-form variable-order integrals of the unit step, used as ground truth.
class OracleSolution {
 public:
  OracleSolution(TimedSchedule schedule, double t_max, std::function<double(double)> fn)
      : schedule_(std::move(schedule)), t_max_(t_max), fn_(std::move(fn)) {}

  /// Throws std::out_of_range for t outside [0, t_max].
  [[nodiscard]] double evaluate(double t) const;
  [[nodiscard]] double operator()(double t) const { return evaluate(t); }

  [[nodiscard]] const TimedSchedule& schedule() const noexcept { return schedule_; }
  [[nodiscard]] double t_max() const noexcept { return t_max_; }

 private:
  TimedSchedule schedule_;
  double t_max_;
  std::function<double(double)> fn_;
};

/// kExact derives every coefficient from the gamma function; kPaper uses the
/// published 3-4 digit constants (1.127, 0.597, 1.128, 0.3).
enum class CoefficientMode { kExact, kPaper };

/// t^{-alpha} / Gamma(1 - alpha); requires alpha < 0.
OracleSolution oracle_const_step(Order order);

/// Integer order sequence {-1, -2, -3, -1} switched every second on [0, 4].
OracleSolution oracle_ex1();

/// Fractional order sequence {-0.4, -1.8, -0.5, -2.5} switched every second on [0, 4].
OracleSolution oracle_ex2(CoefficientMode mode = CoefficientMode::kExact);

TimedSchedule ex1_schedule();
TimedSchedule ex2_schedule();

/// Type-2 integral of the unit step at time t:
///   sum over segments of the integral of (t - tau)^{|alpha_j| - 1} / Gamma(|alpha_j|).
/// Each segment is a pure power and is integrated in closed form; `tol` must be positive.
double oracle_quadrature(const TimedSchedule& schedule, double t, double tol);

/// Same integral for a general input f(tau). Each segment is mapped to
/// s = (t - tau)^p / p, which removes the endpoint singularity, and then
/// integrated by adaptive Simpson to tolerance `tol`.
double oracle_quadrature(const TimedSchedule& schedule, double t, double tol,
                         const std::function<double(double)>& input);

}  // namespace glvo
