#include "glvo/cli/run.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "glvo/analytic_oracles.hpp"
#include "glvo/gl_core.hpp"
#include "glvo/matrix_scheme.hpp"
#include "glvo/report.hpp"
#include "glvo/switching_chain.hpp"

namespace glvo::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view field, std::size_t entry) {
  field = trim(field);
  double value = 0.0;
  const auto* begin = field.data();
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (field.empty() || ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("schedule entry " + std::to_string(entry) +
                                ": malformed number '" + std::string(field) + "'");
  }
  return value;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SampledSignal load_signal(const std::string& spec, double h, std::size_t count) {
  if (spec == "step") return SampledSignal::unit_step(h, count);
  constexpr std::string_view kFilePrefix = "file:";
  if (!spec.starts_with(kFilePrefix)) {
    throw std::invalid_argument("unknown signal '" + spec + "' (expected step or file:<path>)");
  }
  const std::string text = read_file(spec.substr(kFilePrefix.size()));
  std::vector<double> values;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::string_view view = line;
    view = trim(view.substr(0, view.find('#')));
    if (view.empty() || view == "t,value") continue;
    const auto comma = view.rfind(',');
    const std::string_view field = comma == std::string_view::npos ? view : view.substr(comma + 1);
    values.push_back(parse_number(field, values.size() + 1));
  }
  if (values.size() != count) {
    throw std::invalid_argument("signal has " + std::to_string(values.size()) +
                                " samples but the schedule/horizon needs " +
                                std::to_string(count));
  }
  return SampledSignal(h, std::move(values));
}

double require(const std::optional<double>& v, const char* flag) {
  if (!v) throw std::invalid_argument(std::string("missing required option ") + flag);
  return *v;
}

std::size_t sample_count(double horizon, double h) {
  if (horizon < 0.0) throw std::invalid_argument("horizon must be non-negative");
  return grid_index(horizon, h) + 1;
}

CoefficientMode parse_coeffs(const std::string& name) {
  if (name == "exact") return CoefficientMode::kExact;
  if (name == "paper") return CoefficientMode::kPaper;
  throw std::invalid_argument("unknown coefficient mode '" + name + "' (exact or paper)");
}

// Writes to --out when given, otherwise to the caller's stream.
class CsvSink {
 public:
  CsvSink(const std::optional<std::string>& path, std::ostream& fallback) : stream_(&fallback) {
    if (path) {
      file_.open(*path);
      if (!file_) throw std::invalid_argument("cannot write '" + *path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

SampledSignal evaluate(Engine engine, const SampledSignal& f, const OrderSchedule& schedule,
                       std::ostream& err, GlMatrix* matrix_out = nullptr) {
  const std::size_t n = f.size();
  if (engine == Engine::kMatrix) {
    GlMatrix m = variable_order_matrix(schedule, n - 1, f.step());
    SampledSignal result = apply(m, f);
    if (matrix_out) *matrix_out = std::move(m);
    return result;
  }
  if (n - 1 > kMaxDirectSamples) {
    throw std::invalid_argument("k = " + std::to_string(n - 1) + " exceeds engine cap " +
                                std::to_string(kMaxDirectSamples));
  }
  if (n > kDirectSummationWarnSamples) {
    err << "warning: " << n << " samples; direct summation is O(k^2)\n";
  }
  switch (engine) {
    case Engine::kDirect1: return deriv_type1(f, schedule);
    case Engine::kDirect2: return deriv_type2(f, schedule);
    case Engine::kDirect3: return deriv_type3(f, schedule);
    case Engine::kChain: return run_chain(f, plan_from_schedule(schedule));
    case Engine::kMatrix: break;
  }
  throw std::logic_error("unhandled engine");
}

struct OracleRun {
  OracleSolution oracle;
  TimedSchedule schedule;
};

OracleRun resolve_oracle(const RunConfig& config) {
  if (!config.oracle) throw std::invalid_argument("missing required option --oracle");
  const std::string& name = *config.oracle;
  std::optional<TimedSchedule> given;
  if (config.schedule) given = resolve_schedule(*config.schedule);

  if (name == "ex1" || name == "ex2") {
    OracleSolution oracle = name == "ex1" ? oracle_ex1() : oracle_ex2(parse_coeffs(config.coeffs));
    if (given && *given != oracle.schedule()) {
      throw std::invalid_argument("--schedule does not match the " + name + " oracle's schedule");
    }
    TimedSchedule schedule = oracle.schedule();
    return {std::move(oracle), std::move(schedule)};
  }
  if (name == "const") {
    if (!given) throw std::invalid_argument("oracle const needs a constant --schedule");
    if (given->segments().size() != 1) {
      throw std::invalid_argument("oracle const needs a single-segment schedule");
    }
    return {oracle_const_step(given->segments().front().order), *given};
  }
  throw std::invalid_argument("unknown oracle '" + name + "' (ex1, ex2 or const)");
}

ComparisonReport compare_run(const RunConfig& config, const OracleRun& run, double h,
                             std::ostream& err) {
  if (config.signal != "step") {
    throw std::invalid_argument("oracles are defined for the unit step signal only");
  }
  const double horizon = config.horizon.value_or(std::isfinite(run.oracle.t_max())
                                                     ? run.oracle.t_max()
                                                     : require(config.horizon, "--horizon"));
  const std::size_t n = sample_count(horizon, h);
  const SampledSignal f = SampledSignal::unit_step(h, n);
  const OrderSchedule schedule = run.schedule.to_samples(h, n - 1);
  return compare(evaluate(config.engine, f, schedule, err), run.oracle);
}

void print_summary(std::ostream& os, const ComparisonReport& report) {
  os << std::setprecision(17) << "max_abs_error=" << report.max_abs_error
     << " rms_error=" << report.rms_error << " final_error=" << report.final_error << '\n';
}

int run_weights(const RunConfig& config, std::ostream& out) {
  const double h = require(config.h, "--h");
  Order order;
  if (config.order) {
    order = Order(*config.order);
  } else if (config.schedule) {
    order = resolve_schedule(*config.schedule).segments().front().order;
  } else {
    throw std::invalid_argument("weights needs --order or --schedule");
  }
  std::size_t count = 0;
  if (config.count) {
    count = *config.count;
  } else {
    count = sample_count(require(config.horizon, "--horizon or --count"), h);
  }
  const GlWeights w = gl_weights(order, h, count);
  CsvSink sink(config.out, out);
  auto& os = sink.get();
  os << std::setprecision(17) << "i,weight\n";
  for (std::size_t i = 0; i < w.size(); ++i) os << i << ',' << w[i] << '\n';
  return kOk;
}

int run_derive(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const double h = require(config.h, "--h");
  const std::size_t n = sample_count(require(config.horizon, "--horizon"), h);
  if (!config.schedule) throw std::invalid_argument("missing required option --schedule");
  const OrderSchedule schedule = resolve_schedule(*config.schedule).to_samples(h, n - 1);
  const SampledSignal f = load_signal(config.signal, h, n);

  if (config.dump_matrix && config.engine != Engine::kMatrix) {
    throw std::invalid_argument("--dump-matrix requires --engine matrix");
  }
  GlMatrix matrix = GlMatrix::identity(1, h);
  const SampledSignal result = evaluate(config.engine, f, schedule, err, &matrix);
  if (config.dump_matrix) {
    dump_matrix(out, matrix);
    if (!config.out) return kOk;
  }
  CsvSink sink(config.out, out);
  write_csv(sink.get(), result);
  return kOk;
}

int run_compare(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const OracleRun oracle = resolve_oracle(config);
  const ComparisonReport report = compare_run(config, oracle, require(config.h, "--h"), err);
  CsvSink sink(config.out, out);
  write_csv(sink.get(), report);
  print_summary(err, report);
  return kOk;
}

int run_check(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const double h = require(config.h, "--h");
  const std::size_t n = sample_count(require(config.horizon, "--horizon"), h);
  if (!config.schedule) throw std::invalid_argument("missing required option --schedule");
  const OrderSchedule schedule = resolve_schedule(*config.schedule).to_samples(h, n - 1);
  const SampledSignal probe =
      config.signal == "probe" ? probe_signal(n, h) : load_signal(config.signal, h, n);
  const EquivalenceReport report = theorem1_check(schedule, probe);

  out << std::setprecision(17) << "samples=" << report.dim << '\n'
      << "switching_factors=" << report.factors << '\n'
      << "matrix_product_vs_closed_form=" << report.max_matrix_discrepancy << '\n'
      << "product_output_vs_type2=" << report.max_product_output << '\n'
      << "closed_form_output_vs_type2=" << report.max_closed_output << '\n'
      << "chain_output_vs_type2=" << report.max_chain_output << '\n'
      << "tolerance=" << config.tol << '\n';
  if (report.worst() > config.tol) {
    out << "status=FAIL\n";
    err << "engines disagree beyond tolerance\n";
    return kToleranceBreach;
  }
  out << "status=OK\n";
  return kOk;
}

int run_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.hs.empty()) throw std::invalid_argument("sweep needs --hs");
  const OracleRun oracle = resolve_oracle(config);

  // Warnings from worker threads are buffered and replayed in order.
  std::vector<std::ostringstream> logs(config.hs.size());
  std::vector<std::future<ComparisonReport>> jobs;
  jobs.reserve(config.hs.size());
  for (std::size_t i = 0; i < config.hs.size(); ++i) {
    jobs.push_back(std::async(std::launch::async, [&, i] {
      return compare_run(config, oracle, config.hs[i], logs[i]);
    }));
  }
  std::vector<ComparisonReport> reports;
  for (auto& job : jobs) reports.push_back(job.get());

  CsvSink sink(config.out, out);
  auto& os = sink.get();
  os << std::setprecision(17) << "h,t,numeric,reference,error\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    for (const auto& row : reports[i].rows) {
      os << config.hs[i] << ',' << row.t << ',' << row.numeric << ',' << row.reference << ','
         << row.error << '\n';
    }
  }
  for (std::size_t i = 0; i < reports.size(); ++i) {
    err << logs[i].str() << std::setprecision(17) << "h=" << config.hs[i] << ' ';
    print_summary(err, reports[i]);
  }
  return kOk;
}

}  // namespace

TimedSchedule parse_schedule(std::string_view text) {
  std::vector<TimedSchedule::Segment> segments;
  std::size_t entry = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto next = text.find_first_of(";\n", pos);
    std::string_view item =
        text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    pos = next == std::string_view::npos ? text.size() + 1 : next + 1;

    item = trim(item.substr(0, item.find('#')));
    if (item.empty()) continue;
    ++entry;
    const auto comma = item.find(',');
    if (comma == std::string_view::npos || item.find(',', comma + 1) != std::string_view::npos) {
      throw std::invalid_argument("schedule entry " + std::to_string(entry) +
                                  ": expected 't_start,alpha', got '" + std::string(item) + "'");
    }
    const double t = parse_number(item.substr(0, comma), entry);
    const double alpha = parse_number(item.substr(comma + 1), entry);
    if (segments.empty() && t != 0.0) {
      throw std::invalid_argument("schedule must start at t = 0");
    }
    if (!segments.empty() && t <= segments.back().start_time) {
      throw std::invalid_argument("schedule entry " + std::to_string(entry) +
                                  ": start times must be strictly ascending");
    }
    segments.push_back({t, Order(alpha)});
  }
  if (segments.empty()) throw std::invalid_argument("schedule is empty");
  return TimedSchedule(std::move(segments));
}

TimedSchedule resolve_schedule(std::string_view arg) {
  if (arg == "ex1") return ex1_schedule();
  if (arg == "ex2") return ex2_schedule();
  if (arg == "a3") return TimedSchedule({{0.0, Order(-1)}, {1.0, Order(-2)}});
  if (arg.starts_with('@')) return parse_schedule(read_file(std::string(arg.substr(1))));
  return parse_schedule(arg);
}

Engine parse_engine(std::string_view name) {
  if (name == "direct1") return Engine::kDirect1;
  if (name == "direct2") return Engine::kDirect2;
  if (name == "direct3") return Engine::kDirect3;
  if (name == "matrix") return Engine::kMatrix;
  if (name == "chain") return Engine::kChain;
  throw std::invalid_argument("unknown engine '" + std::string(name) + "'");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::kWeights: return run_weights(config, out);
      case Command::kDerive: return run_derive(config, out, err);
      case Command::kCompare: return run_compare(config, out, err);
      case Command::kCheck: return run_check(config, out, err);
      case Command::kSweep: return run_sweep(config, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }
  return kValidationError;
}

}  // namespace glvo::cli
