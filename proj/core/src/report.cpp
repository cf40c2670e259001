#include "glvo/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

namespace glvo {

namespace {

class PrecisionGuard {
 public:
  explicit PrecisionGuard(std::ostream& os) : os_(os), flags_(os.flags()), precision_(os.precision()) {
    os_ << std::defaultfloat << std::setprecision(17);
  }
  ~PrecisionGuard() {
    os_.flags(flags_);
    os_.precision(precision_);
  }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  std::ostream& os_;
  std::ios_base::fmtflags flags_;
  std::streamsize precision_;
};

}  // namespace

ComparisonReport compare(const SampledSignal& numeric, const OracleSolution& oracle) {
  ComparisonReport report;
  report.rows.reserve(numeric.size());
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < numeric.size(); ++i) {
    const double t = numeric.time(i);
    const double reference = oracle.evaluate(t);
    const double error = numeric[i] - reference;
    report.rows.push_back({t, numeric[i], reference, error});
    report.max_abs_error = std::max(report.max_abs_error, std::abs(error));
    sum_sq += error * error;
  }
  report.rms_error = std::sqrt(sum_sq / static_cast<double>(numeric.size()));
  report.final_error = report.rows.back().error;
  return report;
}

void write_csv(std::ostream& os, const ComparisonReport& report) {
  PrecisionGuard guard(os);
  os << "t,numeric,reference,error\n";
  for (const auto& row : report.rows) {
    os << row.t << ',' << row.numeric << ',' << row.reference << ',' << row.error << '\n';
  }
}

void write_csv(std::ostream& os, const SampledSignal& signal) {
  PrecisionGuard guard(os);
  os << "t,value\n";
  for (std::size_t i = 0; i < signal.size(); ++i) {
    os << signal.time(i) << ',' << signal[i] << '\n';
  }
}

}  // namespace glvo
