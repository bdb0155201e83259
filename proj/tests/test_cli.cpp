#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "congruence/data.hpp"
#include "test_helpers.hpp"

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int exit_code;
  std::string stdout_text;
};

CliRun run_cli(const fs::path& dir, const std::string& args) {
  const fs::path out = dir / "stdout.txt";
  const std::string cmd =
      std::string(CLI_BINARY_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WEXITSTATUS(raw), ss.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("cgd_cli_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("dist subcommand") {
  TempDir tmp;
  const auto a = tmp.path / "a.csv";
  const auto b = tmp.path / "b.csv";
  cgd::save_series(cgd::testing::make_series({{0, 0}, {1, 0}}), a.string(),
                   cgd::Format::CsvSingle);
  cgd::save_series(cgd::testing::make_series({{0, 0}, {2, 0}}), b.string(),
                   cgd::Format::CsvSingle);

  SUBCASE("single measure prints 9-digit value") {
    const CliRun r = run_cli(tmp.path,
                             "dist " + a.string() + " " + b.string() + " --measure delta");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == "1.000000000\n");
  }
  SUBCASE("measure=all on identical series prints five zeros") {
    const CliRun r = run_cli(tmp.path,
                             "dist " + a.string() + " " + a.string() + " --measure all");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text ==
          "dtw 0.000000000\ndelta 0.000000000\nfast-delta 0.000000000\n"
          "greedy 0.000000000\nfast-greedy 0.000000000\n");
  }
  SUBCASE("length mismatch exits 2") {
    const auto c = tmp.path / "c.csv";
    cgd::save_series(cgd::testing::make_series({{0, 0}, {1, 0}, {2, 0}}), c.string(),
                     cgd::Format::CsvSingle);
    const CliRun r = run_cli(tmp.path,
                             "dist " + a.string() + " " + c.string() + " --measure delta");
    CHECK(r.exit_code == 2);
  }
  SUBCASE("missing file exits 2") {
    const CliRun r = run_cli(tmp.path, "dist nope.csv also-nope.csv");
    CHECK(r.exit_code == 2);
  }
}

TEST_CASE("gen and dewarp subcommands") {
  TempDir tmp;
  const auto ds = tmp.path / "walks.jsonl";
  const CliRun gen = run_cli(tmp.path, "gen --k 2 --n 20 --count 3 --seed 5 --output " +
                                           ds.string() + " --format jsonl-collection");
  CHECK(gen.exit_code == 0);
  const cgd::Dataset loaded = cgd::load_dataset(ds.string(), cgd::Format::JsonlCollection);
  REQUIRE(loaded.size() == 3);
  CHECK(loaded[0].series.length() == 20);
  CHECK(loaded[0].series.dim() == 2);

  const auto walk_csv = tmp.path / "walk.csv";
  const CliRun gen1 = run_cli(tmp.path, "gen --k 2 --n 16 --seed 5 --output " +
                                            walk_csv.string());
  CHECK(gen1.exit_code == 0);

  const auto dewarped = tmp.path / "dewarped.csv";
  const CliRun dw = run_cli(tmp.path, "dewarp " + walk_csv.string() + " --m 24 --output " +
                                          dewarped.string());
  CHECK(dw.exit_code == 0);
  const cgd::TimeSeries out = cgd::load_series(dewarped.string(), cgd::Format::CsvSingle);
  REQUIRE(out.length() == 24);
  double total = 0.0;
  for (int i = 1; i < out.length(); ++i) total += (out[i] - out[i - 1]).norm();
  for (int i = 0; i + 2 < out.length(); ++i) {
    const double d1 = (out[i + 1] - out[i]).norm();
    const double d2 = (out[i + 2] - out[i + 1]).norm();
    CHECK(std::abs(d1 - d2) <= 1e-9 * total);
  }
}

TEST_CASE("sanity subcommand emits the expected report shape") {
  TempDir tmp;
  const auto report = tmp.path / "sanity.csv";
  const CliRun r = run_cli(tmp.path,
                           "sanity --k 1 --k 2 --n 8 --trials 3 --multistart 6 "
                           "--seed 3 --output " +
                               report.string());
  CHECK(r.exit_code == 0);

  std::ifstream in(report);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "# schema=1");
  REQUIRE(std::getline(in, line));
  CHECK(line == "pair_id,k,n,value,seconds,converged,filtered");
  int rows = 0;
  while (std::getline(in, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 6);  // trials x |k range|
}

TEST_CASE("bench subcommands produce schema-versioned CSV") {
  TempDir tmp;
  const auto report = tmp.path / "tight.csv";
  const CliRun r = run_cli(tmp.path,
                           "bench-tightness --k 2 --n 8 --trials 2 --multistart 4 "
                           "--max-iter 120 --seed 11 --output " +
                               report.string());
  CHECK(r.exit_code == 0);

  std::ifstream in(report);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "# schema=1");
  REQUIRE(std::getline(in, line));
  CHECK(line.rfind("pair_id,k,n,d_opt,", 0) == 0);
  int rows = 0;
  while (std::getline(in, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 2);
}
