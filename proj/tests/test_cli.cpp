#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

const char* cli_path() { return std::getenv("STUBBORN_BIN"); }

RunResult run_cli(const std::string& args, const fs::path& capture) {
  const std::string command =
      std::string(cli_path()) + " " + args + " > " + capture.string() + " 2>&1";
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(capture);
  std::stringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  return result;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("stubborn-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  static int counter() {
    static int n = 0;
    return n++;
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("cli: verify command") {
  REQUIRE(cli_path() != nullptr);
  TempDir dir;
  const auto cap = dir.path / "out.txt";

  SUBCASE("positive verdict exits 0") {
    const auto r = run_cli("verify 84 --base 2", cap);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"verdict\":true") != std::string::npos);
  }
  SUBCASE("negative verdict exits 1 with a counterexample") {
    const auto r = run_cli("verify 85 --base 2", cap);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("\"verdict\":false") != std::string::npos);
    CHECK(r.output.find("\"counterexample\":{") != std::string::npos);
  }
  SUBCASE("bad base exits 2") {
    CHECK(run_cli("verify 84 --base 1", cap).exit_code == 2);
    CHECK(run_cli("verify 84 --base 11", cap).exit_code == 2);
  }
  SUBCASE("missing arguments exit 2") {
    CHECK(run_cli("verify", cap).exit_code == 2);
    CHECK(run_cli("frobnicate", cap).exit_code == 2);
  }
  SUBCASE("exactly-two variant") {
    CHECK(run_cli("verify 9 --base 2 --changes exactly2 --policy no-msd-zero", cap)
              .exit_code == 0);
  }
}

TEST_CASE("cli: search command") {
  REQUIRE(cli_path() != nullptr);
  TempDir dir;
  const auto cap = dir.path / "out.txt";

  SUBCASE("finds the base-2 solution in unit 0") {
    const auto r = run_cli("search --base 2 --exp 6 --units 0..0", cap);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"n\":84") != std::string::npos);
    CHECK(r.output.find("\"digits\":\"1010100\"") != std::string::npos);
  }
  SUBCASE("no survivors below 100") {
    const auto r = run_cli("search --base 10 --exp 1 --units 0..0", cap);
    CHECK(r.exit_code == 0);
    CHECK(r.output.empty());
  }
  SUBCASE("out-of-range configuration exits 2") {
    CHECK(run_cli("search --base 10 --exp 25 --units 0..0", cap).exit_code == 2);
  }
  SUBCASE("p-desc order and workers produce the same records") {
    const auto natural =
        run_cli("search --base 3 --exp 4 --units 0..5 --workers 1", cap);
    const auto pdesc = run_cli(
        "search --base 3 --exp 4 --units 0..5 --order p-desc --workers 4", cap);
    CHECK(natural.exit_code == 0);
    CHECK(pdesc.exit_code == 0);
    // same record set, possibly different order: compare sorted lines
    auto sorted_lines = [](const std::string& text) {
      std::vector<std::string> lines;
      std::stringstream stream(text);
      std::string line;
      while (std::getline(stream, line))
        if (!line.empty()) lines.push_back(line);
      std::sort(lines.begin(), lines.end());
      return lines;
    };
    CHECK(sorted_lines(natural.output) == sorted_lines(pdesc.output));
  }
}

TEST_CASE("cli: checkpoint resume reproduces the uninterrupted output") {
  REQUIRE(cli_path() != nullptr);
  TempDir dir;
  const auto cap = dir.path / "log.txt";
  const auto full_out = dir.path / "full.jsonl";
  const auto part_out = dir.path / "part.jsonl";
  const auto ckpt = dir.path / "ckpt.txt";

  const std::string base_args = "search --base 2 --exp 5 --workers 2";
  // uninterrupted run over six units
  CHECK(run_cli(base_args + " --units 0..5 --out " + full_out.string(), cap)
            .exit_code == 0);
  // interrupted run: first two units, then resume over the full range
  CHECK(run_cli(base_args + " --units 0..1 --out " + part_out.string() +
                    " --checkpoint " + ckpt.string(),
                cap)
            .exit_code == 0);
  CHECK(run_cli(base_args + " --units 0..5 --out " + part_out.string() +
                    " --checkpoint " + ckpt.string(),
                cap)
            .exit_code == 0);

  CHECK(slurp(full_out) == slurp(part_out));

  // checkpoint holds one line per completed unit
  const auto ckpt_text = slurp(ckpt);
  for (int u = 0; u <= 5; ++u)
    CHECK(ckpt_text.find(std::to_string(u) + " ok ") != std::string::npos);

  // reusing the checkpoint under a different configuration is refused
  CHECK(run_cli("search --base 3 --exp 5 --units 0..1 --checkpoint " + ckpt.string(),
                cap)
            .exit_code == 2);
}

TEST_CASE("cli: tables command") {
  REQUIRE(cli_path() != nullptr);
  TempDir dir;
  const auto cap = dir.path / "out.txt";
  for (const char* which : {"1", "2", "3"}) {
    const auto r = run_cli(std::string("tables --which ") + which, cap);
    CAPTURE(which);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("FAIL") == std::string::npos);
    CHECK(r.output.find(", 0 failures") != std::string::npos);
  }
}

TEST_CASE("cli: sievebench command") {
  REQUIRE(cli_path() != nullptr);
  TempDir dir;
  const auto cap = dir.path / "out.txt";

  const auto r = run_cli("sievebench --lo 0 --hi 100000", cap);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("kind,lo,hi,seconds,primes") != std::string::npos);
  CHECK(r.output.find("eratosthenes,0,100000,") != std::string::npos);
  CHECK(r.output.find("atkin420,0,100000,") != std::string::npos);
  // pi(1e5) appears for every kind
  std::size_t count = 0, at = 0;
  while ((at = r.output.find(",9592", at)) != std::string::npos) {
    ++count;
    at += 1;
  }
  CHECK(count == 4);

  const auto empty = run_cli("sievebench --lo 5 --hi 5", cap);
  CHECK(empty.exit_code == 0);
}

TEST_CASE("cli: schedule command") {
  REQUIRE(cli_path() != nullptr);
  TempDir dir;
  const auto cap = dir.path / "out.txt";

  const auto r = run_cli("schedule --base 10 --exp 9 --units 0..9", cap);
  CHECK(r.exit_code == 0);
  std::stringstream stream(r.output);
  std::string line;
  std::getline(stream, line);
  CHECK(line == "u,q,p");
  std::vector<std::string> rows;
  while (std::getline(stream, line))
    if (!line.empty()) rows.push_back(line);
  REQUIRE(rows.size() == 10);
  // descending unit order on this range
  for (int i = 0; i < 10; ++i)
    CHECK(rows[static_cast<std::size_t>(i)].rfind(std::to_string(9 - i) + ",", 0) == 0);

  CHECK(run_cli("schedule --base 10 --exp 9 --units 5..4", cap).exit_code == 2);
}
