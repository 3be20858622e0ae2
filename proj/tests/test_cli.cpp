// Smoke tests of the installed command line surface: exit codes, file
// outputs, and config diagnostics, driven through the real binary.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

#ifndef CONEBVP_CLI_PATH
#define CONEBVP_CLI_PATH "conebvp"
#endif

struct RunResult {
  int exit_code;
};

RunResult run_cli(const std::string& args, const fs::path& dir) {
  std::string cmd = std::string(CONEBVP_CLI_PATH) + " " + args + " > " +
                    (dir / "stdout.txt").string() + " 2> " +
                    (dir / "stderr.txt").string();
  int rc = std::system(cmd.c_str());
  return {WEXITSTATUS(rc)};
}

fs::path fresh_dir(const std::string& tag) {
  fs::path dir = fs::temp_directory_path() / ("conebvp-cli-" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("corpus listing") {
  fs::path dir = fresh_dir("corpus");
  CHECK(run_cli("corpus", dir).exit_code == 0);
  std::ifstream in(dir / "stdout.txt");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(text.find("F1-thm5.7") != std::string::npos);
  CHECK(text.find("fourth-thm6") != std::string::npos);
}

TEST_CASE("check on a passing corpus entry exits 0") {
  fs::path dir = fresh_dir("check-pass");
  auto res = run_cli("check --corpus F1-thm5.7 --out " + dir.string(), dir);
  CHECK(res.exit_code == 0);
  CHECK(fs::exists(dir / "F1-thm5.7-report.json"));
}

TEST_CASE("perturbed threshold flips the named check and exits 1") {
  fs::path dir = fresh_dir("check-fail");
  // fourth-thm6 with p raised into violation of (b)
  std::ofstream cfg(dir / "bad.json");
  cfg << R"({
    "problem": {"n": 4, "k": 2},
    "nonlinearity": {"branches": [
      {"u_max": "1/2", "expr": "(2+3*t)*u^2"},
      {"u_max": "14", "expr": "(u-1/2)*u^4 + (2+3*t)*u^2"},
      {"expr": "518616 + (2+3*t)*196"}
    ]},
    "thresholds": {"p": "3", "q": "56/9", "r": 1444},
    "theorem": "thm6"
  })";
  cfg.close();
  auto res = run_cli("check --config " + (dir / "bad.json").string() +
                         " --out " + dir.string(),
                     dir);
  CHECK(res.exit_code == 1);
  std::ifstream in(dir / "bad-report.json");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(text.find("Thm6.b") != std::string::npos);
}

TEST_CASE("malformed config exits 3 and names the field") {
  fs::path dir = fresh_dir("check-malformed");
  std::ofstream cfg(dir / "broken.json");
  cfg << R"({"problem": {"n": 2, "k": 1},
             "nonlinearity": {"branches": [{"expr": "u *"}]}})";
  cfg.close();
  auto res = run_cli("check --config " + (dir / "broken.json").string(), dir);
  CHECK(res.exit_code == 3);
  std::ifstream err(dir / "stderr.txt");
  std::string text((std::istreambuf_iterator<char>(err)),
                   std::istreambuf_iterator<char>());
  CHECK(text.find("nonlinearity") != std::string::npos);
}

TEST_CASE("unknown corpus entry exits 3") {
  fs::path dir = fresh_dir("corpus-unknown");
  CHECK(run_cli("check --corpus nope", dir).exit_code == 3);
}

TEST_CASE("envelope table has grid^2 rows") {
  fs::path dir = fresh_dir("envelope");
  auto res = run_cli(
      "envelope --corpus F1-thm5.3 --grid 101 --out " + dir.string(), dir);
  CHECK(res.exit_code == 0);
  std::ifstream in(dir / "F1-thm5.3-envelope.csv");
  REQUIRE(in.good());
  std::string line;
  size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 101 * 101 + 1);
}

TEST_CASE("solve on the zero nonlinearity exits 2 with a failed certificate") {
  fs::path dir = fresh_dir("solve-zero");
  std::ofstream cfg(dir / "zero.json");
  cfg << R"({
    "problem": {"n": 2, "k": 1, "B": "0"},
    "nonlinearity": {"branches": [{"expr": "0*u"}]},
    "thresholds": {"p": "1", "q": "2", "r": 9},
    "theorem": "thm5",
    "solver": {"N": 64, "seeds": 6}
  })";
  cfg.close();
  auto res = run_cli("solve --config " + (dir / "zero.json").string() +
                         " --out " + dir.string(),
                     dir);
  CHECK(res.exit_code == 2);
  std::ifstream in(dir / "zero-report.json");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(text.find("\"pass\": false") != std::string::npos);
}

}  // TEST_SUITE
