#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "polyomino/cli.hpp"
#include "polyomino/count_table.hpp"

using namespace polyomino;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name, const std::string& contents) {
  auto dir = std::filesystem::temp_directory_path() / "polyomino_cli_tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path, std::ios::trunc) << contents;
  return path;
}

const std::string kCounts = POLYOMINO_TEST_DATA;

}  // namespace

TEST_CASE("verify reproduces the published output") {
  const Result r = run({"verify", "--counts", kCounts});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out ==
        "n_0 = 56\n"
        "P[n]/P[n-1] is increasing: True\n"
        "Q[n]/P[n] is decreasing: True\n"
        "g(0.24307) <= 2 - 2*sqrt(R): True\n"
        "g(0.24308) <= 2 - 2*sqrt(R): False\n");
  CHECK(r.err.find("at n = 2") != std::string::npos);
}

TEST_CASE("verify exits 1 when a check goes the other way") {
  // P ratio 3 then 16/6: not increasing.
  const auto path = scratch("toy.tsv", "1 1\n2 2\n3 6\n4 16\n");
  const Result r = run({"verify", "--counts", path.string(), "--n0", "4"});
  CHECK(r.code == cli::kExitCheckFailed);
  CHECK(r.out.find("P[n]/P[n-1] is increasing: False\n") != std::string::npos);
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"no-such-command"}).code == cli::kExitUsage);
  CHECK(run({"verify", "--counts", "/no/such/file"}).code == cli::kExitUsage);
  CHECK(run({"verify", "--n0", "notanumber"}).code == cli::kExitUsage);
  const auto bad = scratch("bad.tsv", "1 1\n3 6\n");
  const Result r = run({"derive-q", "--counts", bad.string()});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("non-contiguous") != std::string::npos);
  CHECK(run({"enumerate", "--max", "40"}).code == cli::kExitUsage);
  CHECK(run({"compositions", "0,0"}).code == cli::kExitUsage);
  CHECK(run({"decompose", "0,0 3,3"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("enumerate as tsv") {
  const Result r = run({"enumerate", "--max", "4", "--format", "tsv"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "1\t1\n2\t2\n3\t6\n4\t19\n");
  CHECK(run({"enumerate", "--max", "9", "--workers", "1"}).out ==
        run({"enumerate", "--max", "9", "--workers", "4"}).out);
}

TEST_CASE("enumerate inconstructible counts") {
  const Result r = run({"enumerate", "--max", "5", "--inconstructible", "--format", "tsv"});
  CHECK(r.out == "1\t1\n2\t1\n3\t3\n4\t8\n5\t24\n");
}

TEST_CASE("JSON output parses back into a table") {
  const Result p = run({"enumerate", "--max", "8", "--format", "json"});
  REQUIRE(p.code == cli::kExitOk);
  const CountTable enumerated = table_from_json(p.out);
  CHECK(enumerated.origin() == Origin::enumerated);
  CHECK(enumerated[8] == 2725);

  const Result q = run({"derive-q", "--counts", kCounts, "--format", "json"});
  REQUIRE(q.code == cli::kExitOk);
  const CountTable derived = table_from_json(q.out);
  CHECK(derived.origin() == Origin::derived);
  CHECK(derived.max_n() == 56);
  CHECK(derived[4] == 8);
}

TEST_CASE("enumerate cache is written and reused") {
  const auto dir = std::filesystem::temp_directory_path() / "polyomino_cli_tests";
  std::filesystem::create_directories(dir);
  const auto cache = dir / "enum_cache.tsv";
  std::filesystem::remove(cache);
  const Result first = run({"enumerate", "--max", "7", "--cache", cache.string()});
  CHECK(std::filesystem::exists(cache));
  const Result second = run({"enumerate", "--max", "6", "--cache", cache.string()});
  CHECK(second.code == cli::kExitOk);
  CHECK(second.out == run({"enumerate", "--max", "6"}).out);
  CHECK(first.out.find("P(7) = 760") != std::string::npos);
}

TEST_CASE("bound commands") {
  const Result upper = run({"bound-upper", "--counts", kCounts, "--format", "json"});
  CHECK(upper.code == cli::kExitOk);
  CHECK(upper.out.find(R"("theta":"0.24307")") != std::string::npos);
  CHECK(upper.out.find(R"("lambda_upper":"4.1141")") != std::string::npos);
  CHECK(upper.out.find(R"("lambda_lower":"3.9909")") != std::string::npos);

  const Result text = run({"bound-upper", "--counts", kCounts});
  CHECK(text.out.find("lambda < 4.1141") != std::string::npos);

  const Result lower = run({"bound-lower", "--counts", kCounts});
  CHECK(lower.out.find("69150714562532896936574425480218/17326987021737904384935434351490") !=
        std::string::npos);
  CHECK(lower.out.find("lambda >= 3.9909") != std::string::npos);
}

TEST_CASE("u-seq") {
  const Result r = run({"u-seq", "--counts", kCounts, "--max", "58", "--format", "tsv"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.rfind("1\t1\t1.00000\n", 0) == 0);
  CHECK(r.out.find("\n56\t69150714562532896936574425480218\t") != std::string::npos);
}

TEST_CASE("geometry commands") {
  CHECK(run({"compositions", "0,0", "0,0"}).out == "0,0 0,1\n0,0 1,0\n");
  const Result json = run({"compositions", "0,0 0,1", "0,0", "--format", "json"});
  CHECK(json.out.find(R"("bound":8)") != std::string::npos);
  CHECK(run({"decompose", "0,0 0,1"}).out == "part_a: 0,1\npart_b: 0,0\nsize_a: 1\n");
}

TEST_CASE("environment variables fill in flags, the command line wins") {
  const auto toy = scratch("env.tsv", "1 1\n2 2\n3 6\n4 19\n");
  ::setenv("POLYOMINO_COUNTS", toy.c_str(), 1);
  ::setenv("POLYOMINO_FORMAT", "tsv", 1);
  const Result from_env = run({"derive-q"});
  CHECK(from_env.out == "1\t1\n2\t1\n3\t3\n4\t8\n");
  const Result overridden = run({"derive-q", "--counts", kCounts});
  CHECK(overridden.out.rfind("1\t1\n2\t1\n3\t3\n4\t8\n5\t24\n", 0) == 0);
  ::setenv("POLYOMINO_MAX", "3", 1);
  CHECK(run({"enumerate"}).out == "1\t1\n2\t2\n3\t6\n");
  ::unsetenv("POLYOMINO_COUNTS");
  ::unsetenv("POLYOMINO_FORMAT");
  ::unsetenv("POLYOMINO_MAX");
}
