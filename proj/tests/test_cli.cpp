#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "h22/cli/commands.hpp"
#include "h22/cli/config.hpp"
#include "h22/cli/csv.hpp"
#include "h22/errors.hpp"

using namespace h22;
using namespace h22::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("h22_test_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string error_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

RunConfig small_scan(const fs::path& out) {
  RunConfig cfg;
  cfg.out = out;
  cfg.w_grid = {0.5, 1.0, 2.0};
  return cfg;
}

}  // namespace

TEST_CASE("config parsing") {
  const auto cfg = parse_config(
      "# comment\n"
      "seed = 42\n"
      "suites = onepoint, slepian\n"
      "w_grid = 0.5,1,2   # trailing comment\n"
      "\n"
      "edges = 1-d\n"
      "mcmc.steps = 5000\n"
      "mcmc.burn_in = 500\n"
      "quad.nodes = 80\n"
      "expect_violations = true\n",
      "/base");
  CHECK(cfg.seed == 42);
  REQUIRE(cfg.suites);
  CHECK(*cfg.suites == std::vector<std::string>{"onepoint", "slepian"});
  CHECK(cfg.w_grid == std::vector<double>{0.5, 1.0, 2.0});
  CHECK(cfg.edges == std::vector<std::string>{"1-d"});
  CHECK(cfg.chain.steps == 5000);
  CHECK(cfg.quad.nodes == 80);
  CHECK(cfg.expect_violations);
  CHECK(parse_config("graph = g.txt\n", "/base").graph == fs::path("/base/g.txt"));
  CHECK(parse_config("out = /abs\n", "/base").out == fs::path("/abs"));

  const auto empty = parse_config("");
  CHECK_FALSE(empty.suites);
  CHECK(empty.seed == RunConfig{}.seed);
  const auto none = parse_config("suites =\n");
  REQUIRE(none.suites);
  CHECK(none.suites->empty());
}

TEST_CASE("config diagnostics name the line and key") {
  CHECK(error_of("seed = 1\nbogus = 2\n") == "config line 2: unknown key 'bogus'");
  CHECK(error_of("seed = 1\nseed = 2\n") == "config line 2: duplicate key 'seed'");
  CHECK(error_of("\n\nseed = -4\n") == "config line 3: key 'seed': expected unsigned integer");
  CHECK(error_of("w_grid = 1, x\n") == "config line 1: key 'w_grid': expected number list");
  CHECK(error_of("tamper_sign = maybe\n") == "config line 1: key 'tamper_sign': expected true or false");
  CHECK(error_of("just words\n") == "config line 1: expected 'key = value'");
  CHECK(error_of("uniform_w = inf\n").find("finite") != std::string::npos);

  RunConfig cfg;
  cfg.backend = "gpu";
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg = RunConfig{};
  cfg.w_grid = {1.0, -1.0};
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg = RunConfig{};
  cfg.chain.burn_in = cfg.chain.steps;
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/h22.cfg"), FileError);
}

TEST_CASE("canonical config text and digest") {
  RunConfig a, b;
  CHECK(canonical_text(a) == canonical_text(b));
  b.out = "elsewhere";
  b.threads = 3;
  CHECK(config_digest(a) == config_digest(b));
  b.seed = 7;
  CHECK(config_digest(a) != config_digest(b));
  CHECK(config_digest(a).size() == 16);
  CHECK(canonical_text(a).find("w_grid = 0.5,0.75,1,1.5,2,3\n") != std::string::npos);
}

TEST_CASE("csv round trip") {
  CsvTable t;
  t.header = {"a", "b"};
  t.add({"plain", "with,comma"});
  t.add({"quote\"d", ""});
  const auto text = t.to_string();
  CHECK(text == "a,b\nplain,\"with,comma\"\n\"quote\"\"d\",\n");
  const auto back = parse_csv(text);
  CHECK(back.header == t.header);
  CHECK(back.rows == t.rows);
  CHECK_THROWS_AS(t.add({"short"}), PreconditionError);
  CHECK_THROWS_AS(parse_csv("a,b\n1\n"), FileError);
  CHECK(parse_csv("").header.empty());
  CHECK(csv_number(1.0 / 3.0) == "0.33333333333333331");
}

TEST_CASE("susy-check") {
  const auto out = scratch("susy");
  RunConfig cfg;
  cfg.out = out;
  cfg.suites = std::vector<std::string>{"onepoint"};
  std::ostringstream log;
  CHECK(cmd_susy_check(cfg, log) == Exit::ok);
  const auto j = nlohmann::json::parse(slurp(out / "susy_check.json"));
  CHECK(j["pass"] == true);
  CHECK(j["summary"].size() == 1);
  CHECK(j["summary"][0]["suite"] == "onepoint");
  CHECK(j["config-digest"] == config_digest(cfg));
  const auto first = slurp(out / "susy_check.json");
  CHECK(cmd_susy_check(cfg, log) == Exit::ok);
  CHECK(slurp(out / "susy_check.json") == first);

  cfg.suites = std::vector<std::string>{"fermionic_gaussian"};
  cfg.tamper_sign = true;
  std::ostringstream bad;
  CHECK(cmd_susy_check(cfg, bad) == Exit::check_failed);
  CHECK(bad.str().find("FAIL fermionic_gaussian") != std::string::npos);
  CHECK(bad.str().find("failed: det(Sigma)") != std::string::npos);

  cfg.suites = std::vector<std::string>{};
  cfg.tamper_sign = false;
  CHECK(cmd_susy_check(cfg, log) == Exit::ok);
  CHECK(nlohmann::json::parse(slurp(out / "susy_check.json"))["checks"].empty());

  cfg.suites = std::vector<std::string>{"nope"};
  CHECK_THROWS_AS(cmd_susy_check(cfg, log), ConfigError);
}

TEST_CASE("mono-scan") {
  const auto out = scratch("mono");
  std::ostringstream log;

  SUBCASE("N = 1 default bank passes and the CSV is deterministic") {
    auto cfg = small_scan(out);
    CHECK(cmd_mono_scan(cfg, log) == Exit::ok);
    const auto table = read_csv(out / "mono_scan.csv");
    CHECK(table.header.front() == "config_digest");
    CHECK(table.rows.size() == 1 * 8 * 3);
    for (const auto& r : table.rows) {
      CHECK(r[0] == config_digest(cfg));
      CHECK(r.back() == "true");
    }
    const auto first = slurp(out / "mono_scan.csv");
    CHECK(cmd_mono_scan(cfg, log) == Exit::ok);
    CHECK(slurp(out / "mono_scan.csv") == first);

    // export-plotdata: K and dK/dW rows, K non-increasing per curve.
    CHECK(cmd_export_plotdata(cfg, log) == Exit::ok);
    const auto plot = read_csv(out / "plotdata.csv");
    CHECK(plot.rows.size() == 2 * table.rows.size());
    for (std::size_t i = 1; i < plot.rows.size(); ++i) {
      const auto& a = plot.rows[i - 1];
      const auto& b = plot.rows[i];
      if (a[4] == "K" && b[4] == "K" && a[2] == b[2] && a[3] == b[3])
        CHECK(std::stod(b[6]) <= std::stod(a[6]) + 1e-9);
    }
  }

  SUBCASE("N = 2 bulk edge") {
    auto cfg = small_scan(out);
    cfg.uniform_n = 2;
    cfg.edges = {"1-2"};
    CHECK(cmd_mono_scan(cfg, log) == Exit::ok);
    CHECK(read_csv(out / "mono_scan.csv").rows.size() == 8 * 3);
  }

  SUBCASE("non-convex demo is flagged") {
    auto cfg = small_scan(out);
    cfg.probe = "nonconvex-demo";
    CHECK(cmd_mono_scan(cfg, log) == Exit::check_failed);
    for (const auto& r : read_csv(out / "mono_scan.csv").rows) CHECK(r.back() == "false");
    cfg.expect_violations = true;
    CHECK(cmd_mono_scan(cfg, log) == Exit::ok);
    cfg.probe = "square";
    CHECK(cmd_mono_scan(cfg, log) == Exit::check_failed);
  }

  SUBCASE("backend size limits are checked before any work") {
    auto cfg = small_scan(out / "big");
    cfg.uniform_n = 4;
    CHECK_THROWS_AS(cmd_mono_scan(cfg, log), SizeError);
    CHECK_FALSE(fs::exists(out / "big" / "mono_scan.csv"));
    cfg.backend = "mcmc";
    cfg.uniform_n = 7;
    CHECK_THROWS_AS(cmd_mono_scan(cfg, log), SizeError);
  }

  SUBCASE("MCMC backend") {
    auto cfg = small_scan(out);
    cfg.backend = "mcmc";
    cfg.uniform_n = 2;
    cfg.w_grid = {1.0};
    cfg.edges = {"1-d"};
    cfg.chain.steps = 40000;
    cfg.chain.burn_in = 4000;
    CHECK(cmd_mono_scan(cfg, log) == Exit::ok);
    const auto table = read_csv(out / "mono_scan.csv");
    CHECK(table.rows.size() == 8);
    for (const auto& r : table.rows) {
      CHECK(r[10] == "mcmc-score");
      CHECK(std::stod(r[9]) > 0.0);
    }
  }

  SUBCASE("graph file and unknown edge") {
    std::ofstream(out / "g.txt") << "n 2\nw 1 2 0.5\nw 1 d 1\nw 2 d 2\n";
    auto cfg = small_scan(out);
    cfg.graph = out / "g.txt";
    cfg.edges = {"2-d"};
    CHECK(cmd_mono_scan(cfg, log) == Exit::ok);
    CHECK(read_csv(out / "mono_scan.csv").rows.front()[1] == "g");
    cfg.edges = {"3-d"};
    CHECK_THROWS_AS(cmd_mono_scan(cfg, log), ConfigError);
  }
}

TEST_CASE("export-plotdata inputs") {
  const auto out = scratch("plot");
  RunConfig cfg;
  cfg.out = out;
  std::ostringstream log;
  CHECK_THROWS_AS(cmd_export_plotdata(cfg, log), FileError);
  std::ofstream(out / "mono_scan.csv") << "";
  CHECK(cmd_export_plotdata(cfg, log) == Exit::ok);
  CHECK(slurp(out / "plotdata.csv") == "config_digest,graph,edge,probe,quantity,W,estimate,stderr\n");
  std::ofstream(out / "other.csv") << "x,y\n1,2\n";
  cfg.input = out / "other.csv";
  CHECK_THROWS_AS(cmd_export_plotdata(cfg, log), FileError);
}

TEST_CASE("partition-reroot-reduce") {
  const auto out = scratch("prr");
  RunConfig cfg;
  cfg.out = out;
  cfg.suites = std::vector<std::string>{"rerooting", "schur"};
  std::ostringstream log;
  CHECK(cmd_partition_reroot_reduce(cfg, log) == Exit::ok);
  const auto table = read_csv(out / "residuals.csv");
  CHECK(table.rows.size() == 4 + 18);
  CHECK(fs::exists(out / "partition_reroot_reduce.json"));
}
