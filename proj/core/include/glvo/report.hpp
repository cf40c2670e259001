#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "glvo/analytic_oracles.hpp"
#include "glvo/order.hpp"

namespace glvo {

/// Per-sample numeric vs. reference values with error statistics.
struct ComparisonReport {
  struct Row {
    double t;
    double numeric;
    double reference;
    double error;  // numeric - reference
  };

  std::vector<Row> rows;
  double max_abs_error = 0.0;
  double rms_error = 0.0;
  double final_error = 0.0;
};

ComparisonReport compare(const SampledSignal& numeric, const OracleSolution& oracle);

/// CSV with header "t,numeric,reference,error" and 17 significant digits.
void write_csv(std::ostream& os, const ComparisonReport& report);

/// CSV with header "t,value".
void write_csv(std::ostream& os, const SampledSignal& signal);

}  // namespace glvo
