// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "glvo/analytic_oracles.hpp"
#include "glvo/gl_core.hpp"
#include "glvo/matrix_scheme.hpp"
#include "glvo/report.hpp"
#include "glvo/switching_chain.hpp"
#include "support/example1.hpp"
#include "support/oracles.hpp"

namespace {

using namespace glvo;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double max_diff(std::span<const double> a, std::span<const double> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

bool equals(const GlMatrix& m, const testing::Matrix6& expected) {
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      if (m(i, j) != expected[i][j]) return false;
    }
  }
  return true;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void golden_matrices(Outcome& o) {
  const auto start = Clock::now();
  const GlMatrix w = build_W(Order(-1), 5, 1.0);
  const SwitchingBlockMatrix s = build_switch_W(Order(-1), 5, 4, 1.0);
  const GlMatrix p = matmul(w, s);
  const double elapsed = seconds_since(start);
  o.detail << "runtime=" << elapsed * 1e3 << "ms";
  o.require(equals(w, testing::kExample1W), "W(-1,5)");
  o.require(equals(s, testing::kExample1Switch), "W(-1,5,4)");
  o.require(equals(p, testing::kExample1Product), "product");
  o.require(elapsed < 1e-3, "runtime < 1 ms");
}

void theorem1(Outcome& o) {
  const auto start = Clock::now();
  double worst = 0.0;
  const OrderSchedule ex({{0, Order(-1)}, {3, Order(-2)}}, 5);
  worst = std::max(worst, theorem1_check(ex, 5, 1.0).worst());

  std::mt19937_64 rng(20241);
  std::uniform_int_distribution<std::size_t> size(1, 50);
  std::uniform_real_distribution<double> step(0.01, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = size(rng);
    const OrderSchedule s = testing::random_schedule(rng, k, 8, -2.5, 0.5);
    const double h = step(rng);
    const SampledSignal probe(h, testing::random_signal(rng, k + 1));
    worst = std::max(worst, theorem1_check(s, probe).worst());
  }
  const double elapsed = seconds_since(start);
  o.detail << "max_discrepancy=" << worst << " runtime=" << elapsed << "s";
  o.require(worst <= 1e-9, "agreement within 1e-9");
  o.require(elapsed < 10.0, "runtime < 10 s");
}

double ex1_error(double h) {
  const std::size_t n = static_cast<std::size_t>(std::llround(4.0 / h)) + 1;
  const SampledSignal f = SampledSignal::unit_step(h, n);
  const OrderSchedule s = ex1_schedule().to_samples(h, n - 1);
  return compare(deriv_type2(f, s), oracle_ex1()).max_abs_error;
}

void integer_sequence(Outcome& o) {
  const auto start = Clock::now();
  const double hs[] = {0.05, 0.01, 0.005};
  double errors[3];
  for (int i = 0; i < 3; ++i) errors[i] = ex1_error(hs[i]);
  const double elapsed = seconds_since(start);
  o.detail << "max_error(h=0.05,0.01,0.005)=" << errors[0] << "," << errors[1] << ","
           << errors[2] << " runtime=" << elapsed << "s";
  o.require(errors[1] < errors[0] && errors[2] < errors[1], "monotone decrease");
  o.require(errors[2] < 0.05, "error at h=0.005 < 0.05");
  o.require(elapsed < 30.0, "runtime < 30 s");
}

void fractional_sequence(Outcome& o) {
  const double h = 0.005;
  const std::size_t n = 801;
  const SampledSignal f = SampledSignal::unit_step(h, n);
  const OrderSchedule s = ex2_schedule().to_samples(h, n - 1);
  const double err = compare(deriv_type2(f, s), oracle_ex2(CoefficientMode::kExact)).max_abs_error;

  const OracleSolution paper = oracle_ex2(CoefficientMode::kPaper);
  double jump = 0.0;
  for (double t : {1.0, 2.0, 3.0}) {
    jump = std::max(jump, std::abs(paper(std::nextafter(t, 0.0)) - paper(t)));
  }
  o.detail << "max_error(exact,h=0.005)=" << err << " paper_branch_jump=" << jump;
  o.require(err < 0.05, "error < 0.05");
  o.require(jump <= 5e-3, "paper-mode continuity within 5e-3");
}

void constant_collapse(Outcome& o) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> order(-3.0, 3.0);
  const double h = 0.1;
  const std::size_t k = 200;
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const Order a(order(rng));
    const SampledSignal f(h, testing::random_signal(rng, k + 1));
    const OrderSchedule s = OrderSchedule::constant(a);
    const SampledSignal ref = deriv_const(f, a);
    worst = std::max(worst, max_diff(deriv_type1(f, s).values(), ref.values()));
    worst = std::max(worst, max_diff(deriv_type2(f, s).values(), ref.values()));
    worst = std::max(worst, max_diff(deriv_type3(f, s).values(), ref.values()));
    worst = std::max(worst,
                     max_diff(apply(variable_order_matrix(s, k, h), f).values(), ref.values()));
  }
  const SampledSignal step = SampledSignal::unit_step(0.005, 401);
  const double ramp = deriv_const(step, Order(-1))[400];
  const double parabola = deriv_const(step, Order(-2))[400];
  o.detail << "max_engine_discrepancy=" << worst << " I1(2)=" << ramp << " I2(2)=" << parabola;
  o.require(worst <= 1e-11, "engines within 1e-11");
  o.require(std::abs(ramp - 2.0) <= 0.02, "alpha=-1 gives t");
  o.require(std::abs(parabola - 2.0) <= 0.02, "alpha=-2 gives t^2/2");
}

void semigroup(Outcome& o) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> order(-2.0, 2.0);
  std::uniform_real_distribution<double> step(0.05, 1.0);
  const std::size_t k = 100;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Order a(order(rng));
    const Order b(order(rng));
    const double h = step(rng);
    const GlMatrix lhs = matmul(build_W(a, k, h), build_W(b, k, h));
    const GlMatrix rhs = build_W(Order(a.value() + b.value()), k, h);
    for (std::size_t i = 0; i <= k; ++i) worst = std::max(worst, max_diff(lhs.row(i), rhs.row(i)));
  }
  o.detail << "max_discrepancy=" << worst;
  o.require(worst <= 1e-10, "W(a)W(b) = W(a+b) within 1e-10");
}

void definition_divergence(Outcome& o) {
  const double h = 0.01;
  const std::size_t n = 201;
  const SampledSignal f = SampledSignal::unit_step(h, n);
  const OrderSchedule s({{0, Order(-1)}, {100, Order(-2)}}, n - 1);
  const double curve = deriv_const(f, Order(-2))[200];
  const double t1 = deriv_type1(f, s)[200];
  const double t2 = deriv_type2(f, s)[200];
  const double t3 = deriv_type3(f, s)[200];
  o.detail << "const(-2)=" << curve << " type1=" << t1 << " type2=" << t2 << " type3=" << t3;
  o.require(std::abs(t1 - curve) <= 0.05, "type1 follows the constant curve");
  o.require(std::abs(t2 - curve) > 0.1, "type2 departs from the curve");
  o.require(std::abs(t3 - curve) > 0.1, "type3 departs from the curve");
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"golden switching matrices", golden_matrices},
      {"switching product equivalence", theorem1},
      {"integer order sequence convergence", integer_sequence},
      {"fractional order sequence accuracy", fractional_sequence},
      {"constant order collapse", constant_collapse},
      {"semigroup property", semigroup},
      {"definition divergence", definition_divergence},
  };
  int failures = 0;
  int number = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      check(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    if (!o.pass) ++failures;
    std::printf("criterion %d %s: %s %s\n", ++number, name, o.pass ? "PASS" : "FAIL",
                o.detail.str().c_str());
  }
  std::printf("%d of %d criteria passed\n", number - failures, number);
  return failures == 0 ? 0 : 1;
}
