// End-to-end tests of the thetamon command-line tool: exit codes, CSV
// determinism, config precedence, and the error paths.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out_file;
  std::string stderr_text;
};

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("thetamon_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

// Runs the CLI with the given arguments; CSV goes to --out unless the caller
// already passed one.
RunResult run_cli(const std::string& args, const std::string& tag) {
  const fs::path out = scratch_dir() / (tag + ".csv");
  const fs::path err = scratch_dir() / (tag + ".err");
  std::string cmd = std::string(THETAMON_CLI_PATH) + " " + args;
  if (args.find("--out") == std::string::npos)
    cmd += " --out " + out.string();
  cmd += " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  std::ostringstream o, e;
  o << std::ifstream(out).rdbuf();
  e << std::ifstream(err).rdbuf();
  r.out_file = o.str();
  r.stderr_text = e.str();
  return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& line : split(text, '\n'))
    if (!line.empty()) rows.push_back(split(line, ','));
  return rows;
}

}  // namespace

TEST_CASE("eval: single-point grid row carries theta1(1) = gamma") {
  const auto r = run_cli("eval --grid-min 1 --grid-max 1 --points 1 --alpha 1",
                         "eval_single");
  REQUIRE(r.exit_code == 0);
  const auto rows = parse_csv(r.out_file);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0][2] == "theta[alpha=1]");
  CHECK(std::stod(rows[1][2]) == doctest::Approx(0.57721566490153287)
                                     .epsilon(1e-12));
}

TEST_CASE("eval: invalid grid minimum exits 2 and names the field") {
  const auto r = run_cli("eval --grid-min=-1", "eval_bad_min");
  CHECK(r.exit_code == 2);
  CHECK(r.stderr_text.find("grid.min") != std::string::npos);
}

TEST_CASE("eval: theta1 column decreases down a wide log grid") {
  const auto r = run_cli(
      "eval --grid-min 1e-6 --grid-max 1e6 --points 13 --log --alpha 1",
      "eval_monotone");
  REQUIRE(r.exit_code == 0);
  const auto rows = parse_csv(r.out_file);
  REQUIRE(rows.size() == 14);
  double prev = 2.0;
  for (size_t i = 1; i < rows.size(); ++i) {
    const double v = std::stod(rows[i][2]);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("identities: defaults pass with small residuals") {
  const auto r = run_cli("identities", "identities_default");
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.out_file);
  REQUIRE(rows.size() > 1);
  double max_resid = 0.0;
  bool saw_log_ratio = false;
  for (size_t i = 1; i < rows.size(); ++i) {
    max_resid = std::max(max_resid, std::stod(rows[i][4]));
    if (rows[i][0] == "log_ratio(1;e)") {
      saw_log_ratio = true;
      CHECK(std::fabs(std::stod(rows[i][2]) - 1.0) <= 1e-9);
    }
  }
  CHECK(max_resid <= 1e-8);
  CHECK(saw_log_ratio);
}

TEST_CASE("identities: an unachievable tolerance exits 1") {
  const auto r = run_cli("identities --tol 1e-16", "identities_strict");
  CHECK(r.exit_code == 1);
}

TEST_CASE("identities: exhausted quadrature budget exits 3 naming the kernel") {
  const auto r = run_cli(
      "identities --quad-abs-tol 1e-15 --quad-rel-tol 1e-15 "
      "--quad-max-subdivisions 0",
      "identities_nonconv");
  CHECK(r.exit_code == 3);
  CHECK(r.stderr_text.find("kernel") != std::string::npos);
  CHECK(r.stderr_text.find("x = ") != std::string::npos);
}

TEST_CASE("certify: verdicts match the alpha <= 1 rule") {
  const auto r = run_cli("certify --alpha=-1,0,1", "certify_cm");
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.out_file);
  for (size_t i = 1; i < rows.size(); ++i)
    CHECK(rows[i][6] == "CONSISTENT_CM");

  const auto v = run_cli("certify --alpha=1.5", "certify_violation");
  CHECK(v.exit_code == 0);  // violation expected for alpha > 1, and found
  const auto vrows = parse_csv(v.out_file);
  REQUIRE(vrows.size() > 1);
  for (size_t i = 1; i < vrows.size(); ++i) CHECK(vrows[i][6] == "VIOLATION");
}

TEST_CASE("certify: fixed config produces byte-identical CSV across runs") {
  const auto a = run_cli("certify --alpha=-1,0.5,1,1.5,2 --points 40",
                         "certify_det_a");
  const auto b = run_cli("certify --alpha=-1,0.5,1,1.5,2 --points 40",
                         "certify_det_b");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(a.out_file == b.out_file);
  CHECK(!a.out_file.empty());
}

TEST_CASE("certify: a grid that misses the violation exits 1") {
  // theta_1.01 only starts increasing past x ~ (2-a)/(6(a-1)) ~ 16.5, so a
  // sweep confined to [0.2, 2] sees no witness and the verdict contradicts
  // the alpha <= 1 rule.
  const auto r = run_cli(
      "certify --alpha=1.01 --grid-min 0.2 --grid-max 2 --points 10",
      "certify_missed");
  CHECK(r.exit_code == 1);
  CHECK(r.stderr_text.find("MISMATCH") != std::string::npos);
}

TEST_CASE("certify: empty alpha list is rejected as a config error") {
  const auto r = run_cli("certify --alpha=nonsense", "certify_bad_alpha");
  CHECK(r.exit_code == 2);
}

TEST_CASE("bounds: full catalog passes") {
  const auto r = run_cli("bounds", "bounds_default");
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.out_file);
  REQUIRE(rows.size() == 14);  // header + 13 entries
  for (size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i][6] == "1");
    CHECK(std::stod(rows[i][4]) > 0.0);
  }
}

TEST_CASE("limits: all boundary checks pass") {
  const auto r = run_cli("limits", "limits_default");
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.out_file);
  REQUIRE(rows.size() == 10);  // header + 9 checks
  for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][4] == "1");
}

TEST_CASE("config file values apply, flags override them") {
  const fs::path cfg = scratch_dir() / "precedence.ini";
  {
    std::ofstream f(cfg);
    f << "grid-min=2\ngrid-max=8\npoints=5\nalpha=0.5\n";
  }
  // File alone: five rows from 2 to 8.
  const auto file_only =
      run_cli("eval --config " + cfg.string(), "precedence_file");
  REQUIRE(file_only.exit_code == 0);
  auto rows = parse_csv(file_only.out_file);
  CHECK(rows.size() == 6);
  CHECK(rows[0][2] == "theta[alpha=0.5]");
  CHECK(std::stod(rows[1][0]) == doctest::Approx(2.0));

  // Flag overrides the file's point count; the file's grid still applies.
  const auto flag_wins = run_cli(
      "eval --config " + cfg.string() + " --points 2", "precedence_flag");
  REQUIRE(flag_wins.exit_code == 0);
  rows = parse_csv(flag_wins.out_file);
  CHECK(rows.size() == 3);
  CHECK(std::stod(rows[2][0]) == doctest::Approx(8.0));
}

TEST_CASE("unknown flags are config errors (exit 2)") {
  const auto r = run_cli("eval --no-such-flag", "unknown_flag");
  CHECK(r.exit_code == 2);
}
