#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "civspec/cli/commands.hpp"
#include "civspec/cli/csv.hpp"
#include "civspec/cli/scenario.hpp"
#include "civspec/cli/verify.hpp"
#include "civspec/error.hpp"

using namespace civspec;
using namespace civspec::cli;

namespace {

const std::string kScenarios = CIVSPEC_SCENARIO_DIR;

const std::string kBase =
    "learning.family = rational\n"
    "learning.param = 1\n"
    "q = 0.5, 0.375, 0.125\n"
    "u = 0.3, 0.35, 0.35\n"
    "p = 0.5\n"
    "V = 1\n"
    "gov.eta = 0.5\n"
    "gov.c0 = 0.125\n"
    "gov.tau = 0.3\n"
    "gov.lambda0 = 1\n";

ErrorCode parse_error(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Domain;
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_tool(std::vector<std::string> args) {
  args.insert(args.begin(), "civspec");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> read_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    std::vector<std::string> row;
    std::stringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) row.push_back(f);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("scenario parsing") {
  const auto sc = parse_scenario(kBase + "theta_fraction = 0.5\n# comment\n\n", "t");
  CHECK(sc.econ.K() == 3);
  CHECK(sc.econ.theta == Catch::Approx(0.5 / 68.0).epsilon(1e-6));
  CHECK(sc.oracle.design.weight_resolution == sc.oracle.design.resolution);
  CHECK(sc.warnings.empty());

  CHECK(parse_error(kBase) == ErrorCode::Config);
  CHECK(parse_error(kBase + "theta = 0.001\ntheta_fraction = 0.5\n") == ErrorCode::Config);
  CHECK(parse_error(kBase + "theta = 0.001\nbogus = 1\n") == ErrorCode::Config);
  CHECK(parse_error(kBase + "theta = 0.001\np = 2\n") == ErrorCode::Config);
  CHECK(parse_error(kBase + "theta = abc\n") == ErrorCode::Config);
  CHECK(parse_error(kBase + "theta = 0.001\nK = 4\n") == ErrorCode::Config);
  CHECK(parse_error(kBase + "theta = 0.001\nsweep.b.max = 1\n") == ErrorCode::Config);
  CHECK(parse_error(kBase + "theta = 0.001\ngov.lambda0 = 0.5\n") == ErrorCode::Config);

  std::string off = kBase + "theta = 0.001\n";
  off.replace(off.find("u = 0.3"), 7, "u = 0.6");
  const auto renorm = parse_scenario(off);
  CHECK(renorm.warnings.size() == 1);
  CHECK(renorm.econ.civ.u[0] == Catch::Approx(0.6 / 1.3));
}

TEST_CASE("csv formatting") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(-2.5e-10) == "-2.5e-10");
  CHECK(format_sci(1234.5, 3) == "1.234e+03");
  std::ostringstream os;
  CsvWriter w(os);
  w.row({"a", "b,c", "say \"hi\""});
  CHECK(os.str() == "a,\"b,c\",\"say \"\"hi\"\"\"\n");
}

TEST_CASE("exit codes") {
  CHECK(run_tool({"solve", "--config", kScenarios + "/default.cfg"}).code == kOk);
  const auto hyp = run_tool({"solve", "--config", kScenarios + "/theta_above_cutoff.cfg"});
  CHECK(hyp.code == kHypothesis);
  CHECK(hyp.err.find("theta") != std::string::npos);
  CHECK(run_tool({"solve", "--config", kScenarios + "/missing.cfg"}).code == kConfigError);
  CHECK(run_tool({"sweep", "--axis", "gamma", "--config", kScenarios + "/default.cfg"}).code ==
        kConfigError);
  CHECK(run_tool({"frobnicate"}).code == kConfigError);
}

TEST_CASE("solve writes one csv row") {
  const auto r = run_tool({"solve", "--config", kScenarios + "/default.cfg"});
  const auto text = r.out.substr(r.out.find("scenario,"));
  const auto rows = read_csv(text);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == solve_columns());
  CHECK(rows[1][0] == "default");
}

TEST_CASE("theta sweep is monotone") {
  const auto r = run_tool({"sweep", "--axis", "theta", "--config", kScenarios + "/default.cfg"});
  REQUIRE(r.code == kOk);
  const auto rows = read_csv(r.out);
  REQUIRE(rows.size() == 51);
  CHECK(rows[0] == theta_columns());
  for (std::size_t i = 2; i < rows.size(); ++i) {
    CHECK(std::stod(rows[i][2]) > std::stod(rows[i - 1][2]));
    CHECK(std::stod(rows[i][3]) < std::stod(rows[i - 1][3]));
    CHECK(std::stod(rows[i][4]) > std::stod(rows[i - 1][4]));
  }
}

TEST_CASE("broadening sweep raises B_soc near zero") {
  const auto r = run_tool({"sweep", "--axis", "b", "--config", kScenarios + "/broadening_gain.cfg"});
  REQUIRE(r.code == kOk);
  const auto rows = read_csv(r.out);
  REQUIRE(rows.size() == 11);
  CHECK(rows[0] == broadening_columns());
  CHECK(std::stod(rows[2][6]) > std::stod(rows[1][6]));
}

TEST_CASE("alpha sweep with uniform q is flat") {
  const auto r = run_tool({"sweep", "--axis", "alpha", "--config", kScenarios + "/uniform_q.cfg"});
  REQUIRE(r.code == kOk);
  const auto rows = read_csv(r.out);
  REQUIRE(rows.size() == 12);
  for (std::size_t i = 2; i < rows.size(); ++i) {
    CHECK(rows[i][2] == rows[1][2]);
    CHECK(rows[i][3] == rows[1][3]);
  }
}

TEST_CASE("verify on the default scenario") {
  const auto sc = load_scenario(kScenarios + "/default.cfg");
  const auto report = run_verify(sc, VerifyOptions{7, false});
  CHECK(report.all_passed());
  CHECK(report.render() == run_verify(sc, VerifyOptions{7, false}).render());
  CHECK(report.render().find("seed: 7") != std::string::npos);

  const auto strict = run_verify(sc, VerifyOptions{7, true});
  CHECK(strict.strict);
  CHECK(strict.all_passed());
}

TEST_CASE("verify gates checks whose hypothesis fails") {
  const auto sc = parse_scenario(
      kBase.substr(0, kBase.find("u = ")) + "u = 0.05, 0.05, 0.9\n" +
      kBase.substr(kBase.find("p = ")) + "theta_fraction = 0.5\noracle.resolution = 4\n");
  const auto report = run_verify(sc, VerifyOptions{});
  bool found = false;
  for (const auto& c : report.checks) {
    if (c.anchor == "integrator-civic-advantage") {
      found = true;
      CHECK(c.status == CheckStatus::Skipped);
      CHECK(c.detail.rfind("hypothesis not met, skipped", 0) == 0);
    }
  }
  CHECK(found);
}

TEST_CASE("verify writes the report to --out") {
  const auto path = std::filesystem::temp_directory_path() / "civspec_verify_test.txt";
  const auto r = run_tool({"verify", "--config", kScenarios + "/competitive.cfg", "--seed", "3", "--out",
                      path.string()});
  CHECK(r.code == kOk);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().find("PASS  no-deviation-grid") != std::string::npos);
  std::filesystem::remove(path);
}
