#include "glvo/cli/run.hpp"

#include "glvo/analytic_oracles.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "support/example1.hpp"

namespace glvo::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const RunConfig& config) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(config, out, err);
  return {code, out.str(), err.str()};
}

double summary_value(const std::string& text, const std::string& key) {
  const auto at = text.rfind(key + "=");
  if (at == std::string::npos) throw std::runtime_error("missing " + key);
  return std::stod(text.substr(at + key.size() + 1));
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("glvo_cli_test_" + name);
}

TEST(ParseSchedule, InlineEntries) {
  const TimedSchedule s = parse_schedule("0,-1; 1,-2; 2,-3; 3,-1");
  ASSERT_EQ(s.segments().size(), 4u);
  EXPECT_DOUBLE_EQ(s.segments()[2].start_time, 2.0);
  EXPECT_EQ(s.segments()[3].order, Order(-1));
}

TEST(ParseSchedule, NewlinesAndComments) {
  const TimedSchedule s = parse_schedule("# fractional\n0,-0.4\n\n1,-1.8  # second\n2,-0.5\n");
  ASSERT_EQ(s.segments().size(), 3u);
  EXPECT_EQ(s.segments()[1].order, Order(-1.8));
}

TEST(ParseSchedule, SingleEntry) {
  const TimedSchedule s = parse_schedule("0,-2");
  ASSERT_EQ(s.segments().size(), 1u);
  EXPECT_EQ(s.segments()[0].order, Order(-2));
}

TEST(ParseSchedule, Errors) {
  EXPECT_THROW(parse_schedule("0,-1;2,-2;1,-3"), std::invalid_argument);
  EXPECT_THROW(parse_schedule("0,-1;1,-2;1,-3"), std::invalid_argument);
  EXPECT_THROW(parse_schedule("0.5,-1"), std::invalid_argument);
  EXPECT_THROW(parse_schedule("0,abc"), std::invalid_argument);
  EXPECT_THROW(parse_schedule("0;-1"), std::invalid_argument);
  EXPECT_THROW(parse_schedule("0,-1,2"), std::invalid_argument);
  EXPECT_THROW(parse_schedule(""), std::invalid_argument);
  EXPECT_THROW(parse_schedule("0,-12"), std::invalid_argument);
}

TEST(ResolveSchedule, NamedAndFile) {
  EXPECT_EQ(resolve_schedule("ex1"), ex1_schedule());
  EXPECT_EQ(resolve_schedule("ex2"), ex2_schedule());
  const auto path = temp_path("schedule.txt");
  {
    std::ofstream f(path);
    f << "0,-1\n3,-2\n";
  }
  EXPECT_EQ(resolve_schedule("@" + path.string()), parse_schedule("0,-1;3,-2"));
  std::filesystem::remove(path);
  EXPECT_THROW(resolve_schedule("@/nonexistent/glvo/schedule"), std::invalid_argument);
}

TEST(ParseEngine, Names) {
  EXPECT_EQ(parse_engine("direct2"), Engine::kDirect2);
  EXPECT_EQ(parse_engine("matrix"), Engine::kMatrix);
  EXPECT_EQ(parse_engine("chain"), Engine::kChain);
  EXPECT_THROW(parse_engine("fast"), std::invalid_argument);
}

TEST(RunWeights, PrintsRecurrence) {
  RunConfig c;
  c.command = Command::kWeights;
  c.order = -1;
  c.h = 1;
  c.count = 3;
  const Result r = invoke(c);
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "i,weight\n0,1\n1,1\n2,1\n");
}

TEST(RunDerive, StepIntegral) {
  RunConfig c;
  c.command = Command::kDerive;
  c.schedule = "0,-1";
  c.h = 0.5;
  c.horizon = 1.5;
  const Result r = invoke(c);
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "t,value\n0,0.5\n0.5,1\n1,1.5\n1.5,2\n");
}

TEST(RunDerive, DumpMatrixReproducesSwitchingExample) {
  RunConfig c;
  c.command = Command::kDerive;
  c.engine = Engine::kMatrix;
  c.schedule = "0,-1;3,-2";
  c.h = 1;
  c.horizon = 5;
  c.dump_matrix = true;
  const Result r = invoke(c);
  ASSERT_EQ(r.code, kOk) << r.err;
  std::istringstream in(r.out);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      double v = 0;
      ASSERT_TRUE(in >> v);
      EXPECT_EQ(v, glvo::testing::kExample1Product[i][j]) << i << "," << j;
    }
  }
}

TEST(RunDerive, DumpMatrixNeedsMatrixEngine) {
  RunConfig c;
  c.command = Command::kDerive;
  c.schedule = "0,-1";
  c.h = 1;
  c.horizon = 3;
  c.dump_matrix = true;
  EXPECT_EQ(invoke(c).code, kValidationError);
}

TEST(RunDerive, ValidationErrors) {
  RunConfig c;
  c.command = Command::kDerive;
  c.schedule = "0,-1;0.25,-2";
  c.h = 0.1;
  c.horizon = 1;
  Result r = invoke(c);
  EXPECT_EQ(r.code, kValidationError);
  EXPECT_NE(r.err.find("grid"), std::string::npos);

  c.schedule = "0,-1";
  c.h = -0.1;
  EXPECT_EQ(invoke(c).code, kValidationError);

  c.h = 0.1;
  c.horizon.reset();
  EXPECT_EQ(invoke(c).code, kValidationError);
}

TEST(RunDerive, EnginesAgree) {
  RunConfig c;
  c.command = Command::kDerive;
  c.schedule = "ex2";
  c.h = 0.05;
  c.horizon = 4;
  c.engine = Engine::kDirect2;
  const std::string direct = invoke(c).out;
  for (Engine e : {Engine::kMatrix, Engine::kChain}) {
    c.engine = e;
    const std::string other = invoke(c).out;
    std::istringstream a(direct);
    std::istringstream b(other);
    std::string la;
    std::string lb;
    std::getline(a, la);
    std::getline(b, lb);
    while (std::getline(a, la)) {
      ASSERT_TRUE(std::getline(b, lb));
      const double va = std::stod(la.substr(la.find(',') + 1));
      const double vb = std::stod(lb.substr(lb.find(',') + 1));
      EXPECT_NEAR(va, vb, 1e-10);
    }
  }
}

TEST(RunCompare, ConvergesWithStep) {
  RunConfig c;
  c.command = Command::kCompare;
  c.oracle = "ex1";
  c.h = 0.01;
  const Result coarse = invoke(c);
  c.h = 0.005;
  const Result fine = invoke(c);
  ASSERT_EQ(coarse.code, kOk) << coarse.err;
  ASSERT_EQ(fine.code, kOk) << fine.err;
  EXPECT_LT(summary_value(fine.err, "max_abs_error"), summary_value(coarse.err, "max_abs_error"));
  EXPECT_EQ(coarse.out.substr(0, coarse.out.find('\n')), "t,numeric,reference,error");
}

TEST(RunCompare, CsvIsByteDeterministic) {
  RunConfig c;
  c.command = Command::kCompare;
  c.oracle = "ex2";
  c.h = 0.02;
  const auto path = temp_path("compare.csv");
  c.out = path.string();
  ASSERT_EQ(invoke(c).code, kOk);
  std::stringstream first;
  first << std::ifstream(path).rdbuf();
  ASSERT_EQ(invoke(c).code, kOk);
  std::stringstream second;
  second << std::ifstream(path).rdbuf();
  std::filesystem::remove(path);
  EXPECT_FALSE(first.str().empty());
  EXPECT_EQ(first.str(), second.str());
}

TEST(RunCompare, RejectsMismatchedSchedule) {
  RunConfig c;
  c.command = Command::kCompare;
  c.oracle = "ex1";
  c.schedule = "0,-1";
  c.h = 0.01;
  EXPECT_EQ(invoke(c).code, kValidationError);
  c.oracle = "nope";
  c.schedule.reset();
  EXPECT_EQ(invoke(c).code, kValidationError);
}

TEST(RunCheck, PassesAndBreaches) {
  RunConfig c;
  c.command = Command::kCheck;
  c.schedule = "ex1";
  c.h = 0.1;
  c.horizon = 4;
  Result r = invoke(c);
  EXPECT_EQ(r.code, kOk) << r.out;
  EXPECT_NE(r.out.find("status=OK"), std::string::npos);

  c.tol = -1.0;
  r = invoke(c);
  EXPECT_EQ(r.code, kToleranceBreach);
  EXPECT_NE(r.out.find("status=FAIL"), std::string::npos);
}

TEST(RunSweep, OneBlockPerStep) {
  RunConfig c;
  c.command = Command::kSweep;
  c.oracle = "ex1";
  c.hs = {0.1, 0.05};
  const Result r = invoke(c);
  ASSERT_EQ(r.code, kOk) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "h,t,numeric,reference,error");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 41u + 81u);
  EXPECT_NE(r.err.find("h=0.05"), std::string::npos);
}

}  // namespace
}  // namespace glvo::cli
