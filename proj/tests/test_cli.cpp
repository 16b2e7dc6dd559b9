#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(CYCLEMIX_BIN) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buffer{};
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("char-ratio text output") {
  const RunResult r = run("char-ratio --n 5 --lambda 4,1 --k 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1/2\n");
  CHECK(run("char-ratio --n 3 --lambda 2,1 --k 3").output == "-1/2\n");
  CHECK(run("char-ratio --n 5 --lambda 4,1 --k 2 --method mn").output == "1/2\n");
  CHECK(run("char-ratio --n 5 --lambda 4,1 --k 2 --method general").output == "1/2\n");
}

TEST_CASE("golden json and csv schemas") {
  CHECK(run("char-ratio --n 5 --lambda 4,1 --k 2 --format json").output ==
        golden("char_ratio.json"));
  CHECK(run("char-table --n 3").output == golden("char_table.csv"));
  CHECK(run("char-table --n 3 --format json").output == golden("char_table.json"));
  CHECK(run("tv --n 4 --k 2 --t 2 --mode exact --format json").output == golden("tv.json"));
  CHECK(run("cutoff --n 6 --k 2 --t-max 3").output == golden("cutoff.csv"));
  CHECK(run("cutoff --n 6 --k 2 --t-max 2 --format json").output == golden("cutoff.json"));
  CHECK(run("lower-bound --n 8 --k 2 --j 1 --t 2 --format json").output ==
        golden("lower_bound.json"));
  CHECK(run("asym --n 64 --k 3 --lambda 60,4 --format json").output == golden("asym.json"));
  CHECK(run("asym --n 12 --k 2 --all --format json").output == golden("asym_all.json"));
  CHECK(run("simulate --n 5 --k 2 --t 3 --samples 1000 --seed 42 --workers 2 --format json")
            .output == golden("simulate.json"));
}

TEST_CASE("tv text output carries both forms") {
  const RunResult r = run("tv --n 4 --k 2 --t 2 --mode exact");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "upper 0.235702\nexact 1/12 (0.0833333)\n");
}

TEST_CASE("verify subcommand exit codes") {
  CHECK(run("verify --suite partitions --n-max 6").exit_code == 0);
  CHECK(run("verify --suite no-such-suite").exit_code == 2);
}

TEST_CASE("flag errors exit 2") {
  CHECK(run("char-ratio --n 5 --lambda 4,1").exit_code == 2);   // missing --k
  CHECK(run("char-ratio --n 5 --lambda 4,2 --k 2").exit_code == 2);  // not a partition of 5
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("tv --n 4 --k 2 --t 2 --mode wrong").exit_code == 2);
}

TEST_CASE("caps are enforced and liftable") {
  CHECK(run("char-table --n 15").exit_code == 1);
  CHECK(run("--unsafe-caps char-table --n 15").exit_code == 0);
  CHECK(run("tv --n 15 --k 2 --t 3 --mode exact").exit_code == 1);
}

TEST_CASE("walk config file") {
  const std::string path = "/tmp/cyclemix_walk_cfg.ini";
  {
    std::ofstream cfg(path);
    cfg << "[simulate]\nn=5\nk=2\nt=3\nsamples=1000\nseed=42\nworkers=2\nformat=json\n";
  }
  const RunResult from_file = run("--config " + path + " simulate");
  const RunResult from_flags =
      run("simulate --n 5 --k 2 --t 3 --samples 1000 --seed 42 --workers 2 --format json");
  CHECK(from_file.exit_code == 0);
  CHECK(from_file.output == from_flags.output);
  std::remove(path.c_str());
}

TEST_CASE("output redirect via --out") {
  const std::string path = "/tmp/cyclemix_test_out.csv";
  std::remove(path.c_str());
  const RunResult r = run("char-table --n 3 --out " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.empty());
  std::ifstream in(path);
  std::ostringstream content;
  content << in.rdbuf();
  CHECK(content.str() == golden("char_table.csv"));
  std::remove(path.c_str());
}
