#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "app.hpp"
#include "config.hpp"
#include "report_io.hpp"

using namespace padic;
using namespace padic::cli;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string config(const std::string& name) { return std::string(PADIC_CONFIG_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const json& j) {
  const auto path = std::filesystem::temp_directory_path() / ("padic_cli_test_" + name + ".json");
  std::ofstream(path) << j.dump();
  return path.string();
}

json base_config() {
  return json::parse(R"({
    "prime": 2,
    "distribution": {"variant": "pi-alpha-log", "alpha": {"re": 2, "im": 0}, "m": 0,
                     "character": {"kind": "trivial"}},
    "test_function": {"kind": "delta", "k": 0},
    "t_grid": {"M_min": -1, "M_max": 6, "units_per_sphere": 3}
  })");
}

void expect_config_error(const json& j, const std::string& path) {
  try {
    parse_config(j);
    ADD_FAILURE() << "accepted: " << j.dump();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.path(), path) << e.what();
  }
}

}  // namespace

TEST(ParseComplex, Forms) {
  EXPECT_EQ(parse_complex("2"), std::complex<double>(2, 0));
  EXPECT_EQ(parse_complex("-0.7+0.3i"), std::complex<double>(-0.7, 0.3));
  EXPECT_EQ(parse_complex("1.3-1.1i"), std::complex<double>(1.3, -1.1));
  EXPECT_EQ(parse_complex("0.5i"), std::complex<double>(0, 0.5));
  EXPECT_EQ(parse_complex("1-i"), std::complex<double>(1, -1));
  EXPECT_EQ(parse_complex("1e-3+2e1i"), std::complex<double>(1e-3, 20));
  EXPECT_THROW(parse_complex("abc"), std::invalid_argument);
  EXPECT_THROW(parse_complex("1+2"), std::invalid_argument);
  EXPECT_THROW(parse_complex(""), std::invalid_argument);
}

TEST(Config, ParsesExample) {
  const RunConfig c = parse_config(base_config());
  EXPECT_EQ(c.prime.value(), 2);
  ASSERT_TRUE(c.distribution.has_value());
  EXPECT_EQ(c.distribution->alpha(), std::complex<double>(2, 0));
  ASSERT_TRUE(c.test_function.has_value());
  EXPECT_EQ(c.t_grid.M_max, 6);
  EXPECT_EQ(c.output.format, "csv");
}

TEST(Config, TopLevelFallbacks) {
  json j = base_config();
  j["distribution"] = {{"variant", "pi-alpha-log"}};
  j["alpha"] = "-0.7+0.3i";
  j["m"] = 2;
  j["character"] = "trivial";
  const RunConfig c = parse_config(j);
  EXPECT_EQ(c.distribution->m(), 2);
  EXPECT_EQ(c.distribution->alpha(), std::complex<double>(-0.7, 0.3));
}

TEST(Config, FieldPathErrors) {
  json j = base_config();
  j.erase("prime");
  expect_config_error(j, "prime");

  j = base_config();
  j["prime"] = 4;
  expect_config_error(j, "prime");

  j = base_config();
  j["distribution"]["alpha"] = "zz";
  expect_config_error(j, "distribution.alpha");

  j = base_config();
  j["distribution"]["alpha"] = {{"re", "x"}};
  expect_config_error(j, "distribution.alpha.re");

  j = base_config();
  j["distribution"]["variant"] = "bessel";
  expect_config_error(j, "distribution.variant");

  j = base_config();
  j["distribution"]["alpha"] = 0;
  expect_config_error(j, "distribution");

  j = base_config();
  j["test_function"] = {{"kind", "table"}, {"N", 1}, {"l", 0}, {"values", {{1, 0}}}};
  expect_config_error(j, "test_function.values");

  j = base_config();
  j["test_function"] = {{"kind", "table"}, {"N", 0}, {"l", 1}, {"values", json::array()}};
  expect_config_error(j, "test_function.l");

  j = base_config();
  j["t_grid"]["M_max"] = -5;
  expect_config_error(j, "t_grid.M_max");

  j = base_config();
  j["distribution"]["character"] = {{"kind", "table"}, {"modulus_exponent", 1}, {"values", {{"1", "0"}, {"2", "1/3"}}}};
  j["prime"] = 3;
  expect_config_error(j, "distribution.character");

  j = base_config();
  j["output"] = {{"format", "xml"}};
  expect_config_error(j, "output.format");
}

TEST(Cli, GammaExample) {
  const auto r = run_cli({"gamma", "--p", "2", "--alpha", "2", "--order", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("-1.33333333333333", 0), 0u) << r.out;
}

TEST(Cli, BernoulliExample) {
  const auto r = run_cli({"bernoulli", "--upto", "6"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::vector<std::string> got;
  std::string name, q, dec;
  while (in >> name >> q >> dec) got.push_back(q);
  EXPECT_EQ(got, (std::vector<std::string>{"1", "-1/2", "1/6", "0", "-1/30", "0", "1/42"}));
}

TEST(Cli, ChiPrintsExactAngle) {
  const auto r = run_cli({"chi", "--p", "3", "--x", "7/9"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("angle 7/9"), std::string::npos);
}

TEST(Cli, VerifyTheoremTwoOneAConfig) {
  const auto r = run_cli({"verify", "--theorem", "auto", "--config", config("th2_1a_p2_alpha2.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line[0], '#');
  std::getline(in, line);
  EXPECT_EQ(line, "M,t_unit,J_re,J_im,rhs_re,rhs_im,abs_err,stabilized,s_pred_exponent,s_emp_exponent");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    ASSERT_GE(cells.size(), 9u);
    if (std::stol(cells[0]) >= 1) {
      EXPECT_EQ(cells[7], "1") << line;
    }
    if (std::stol(cells[0]) == 1) EXPECT_NEAR(std::stod(cells[2]), -1.0 / 3.0, 1e-12);
  }
  EXPECT_EQ(rows, 9 * 3);
}

TEST(Cli, AllSampleConfigsVerify) {
  for (const char* name : {"th2_1a_p2_alpha2.json", "th2_1b_p3_complex.json", "th2_2_plog_p2.json",
                           "th3_quadratic_p3.json", "th3_table_mod9.json"}) {
    const auto r = run_cli({"verify", "--config", config(name)});
    EXPECT_EQ(r.code, 0) << name << "\n" << r.err;
  }
  EXPECT_EQ(run_cli({"erdelyi", "--config", config("erdelyi_quadratic_p5.json")}).code, 0);
}

TEST(Cli, TheoremMismatchIsValidationError) {
  const auto r = run_cli({"verify", "--theorem", "3", "--config", config("th2_1a_p2_alpha2.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("--theorem"), std::string::npos);
  EXPECT_EQ(run_cli({"verify", "--theorem", "2-1", "--config", config("th2_1a_p2_alpha2.json")}).code, 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
  EXPECT_EQ(run_cli({"gamma", "--p", "4", "--alpha", "1"}).code, 1);
  EXPECT_EQ(run_cli({"gamma", "--p", "3", "--alpha", "0"}).code, 3);
  EXPECT_EQ(run_cli({"verify", "--config", "/nonexistent.json"}).code, 1);
  EXPECT_EQ(run_cli({"--help"}).code, 0);

  // a tolerance no floating computation can meet makes asserted rows fail
  json j = base_config();
  j["tolerance"] = 1e-300;
  j["distribution"]["alpha"] = "-0.7+0.3i";
  j["distribution"]["m"] = 2;
  j["test_function"] = {{"kind", "random"}, {"N", 1}, {"l", -1}, {"seed", 3}};
  const auto r = run_cli({"verify", "--config", write_temp("strict", j)});
  EXPECT_EQ(r.code, 2) << r.err;
  EXPECT_NE(r.err.find("p=2"), std::string::npos);

  j = base_config();
  j["distribution"]["alpha"] = "-0.5";
  EXPECT_EQ(run_cli({"erdelyi", "--config", write_temp("badalpha", j)}).code, 1);
}

TEST(Cli, ErrorsCarryParameters) {
  json j = base_config();
  j["distribution"]["alpha"] = "bad";
  const auto r = run_cli({"verify", "--config", write_temp("params", j)});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("distribution.alpha"), std::string::npos);
}

TEST(Cli, DeterministicCsv) {
  const std::vector<std::string> args = {"verify", "--config", config("th2_1b_p3_complex.json")};
  const auto a = run_cli(args), b = run_cli(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  setenv("PADIC_THREADS", "1", 1);
  const auto c = run_cli(args);
  unsetenv("PADIC_THREADS");
  EXPECT_EQ(a.out, c.out);
}

TEST(Cli, JsonReportRoundTrip) {
  const auto r = run_cli({"verify", "--format", "json", "--config", config("th3_quadratic_p3.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  const StabilizationReport rep = report_from_json(j);
  EXPECT_EQ(to_json(rep), j);

  // and against the library object directly
  const RunConfig cfg = load_config(config("th3_quadratic_p3.json"));
  VerifyOptions opt;
  opt.tolerance = cfg.tolerance;
  const StabilizationReport direct = verify_stabilization(*cfg.distribution, *cfg.test_function, cfg.t_grid.M_min,
                                                          cfg.t_grid.M_max, cfg.t_grid.units_per_sphere, opt);
  EXPECT_EQ(report_from_json(to_json(direct)), direct);
  EXPECT_EQ(rep, direct);
}

TEST(Cli, OutPathWritesFile) {
  const auto path = (std::filesystem::temp_directory_path() / "padic_cli_out.csv").string();
  std::filesystem::remove(path);
  const auto r = run_cli({"verify", "--config", config("th2_2_plog_p2.json"), "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  EXPECT_NE(first.find("P(log^2|x|/|x|)"), std::string::npos);
}

TEST(Cli, SingularWithOracle) {
  const auto r = run_cli({"singular", "--config", config("th2_1a_p2_alpha2.json"), "--t", "1/2", "--oracle"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("J -0.3333333333333333", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("oracle -0.333333333333333"), std::string::npos);
  EXPECT_EQ(run_cli({"singular", "--config", config("th2_1a_p2_alpha2.json"), "--t", "1/3"}).code, 1);
}

TEST(Cli, FourierAndEvalDist) {
  const auto f = run_cli({"fourier", "--config", config("th3_table_mod9.json")});
  ASSERT_EQ(f.code, 0) << f.err;
  EXPECT_NE(f.out.find("index,re,im"), std::string::npos);
  const auto e = run_cli({"eval-dist", "--config", config("th2_1a_p2_alpha2.json")});
  ASSERT_EQ(e.code, 0);
  EXPECT_NEAR(std::stod(e.out), 0.5 / (1 - 0.25), 1e-15);
}

TEST(Cli, ExecutableExitCode) {
  const std::string exe = PADIC_CLI_EXE;
  EXPECT_EQ(std::system((exe + " bernoulli --upto 2 > /dev/null").c_str()), 0);
  const int st = std::system((exe + " gamma --p 3 --alpha 0 > /dev/null 2>&1").c_str());
  EXPECT_EQ(WEXITSTATUS(st), 3);
}
