#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = lg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("lgpoly_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("eval prints the compact text") {
  const Run r = run({"eval", "1 1 1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("LG = 1 + 2 q^{2}, - q^{1} - q^{3}, q^{2}\n") != std::string::npos);
  CHECK(r.out.find("writhe:      3") != std::string::npos);
  CHECK(r.out.find("components:  1") != std::string::npos);
  CHECK(r.out.find("palindromic: no") != std::string::npos);
}

TEST_CASE("eval accepts a word split across arguments") {
  const Run joined = run({"eval", "1 -2 1 -2", "--format", "compact-machine"});
  const Run split = run({"eval", "1", "-2", "1", "-2", "--format", "compact-machine"});
  CHECK(joined.code == 0);
  CHECK(joined.out == split.out);
  CHECK(joined.out == "# strings=3 letters=4 writhe=0 components=1 palindromic=yes\n"
                      "0: [-2:2, 0:7, 2:2] 1: [-1:-3, 1:-3] 2: [0:1]\n");
}

TEST_CASE("eval of the unknot and a split link") {
  CHECK(run({"eval", "", "--strings", "1"}).out.find("LG = 1\n") != std::string::npos);
  const Run split = run({"eval", "", "--strings", "2"});
  CHECK(split.code == 0);
  CHECK(split.out.find("LG = 0\n") != std::string::npos);
  CHECK(split.out.find("trace(C+) = 0") != std::string::npos);
}

TEST_CASE("eval refuses six strings by default") {
  const Run r = run({"eval", "1 1 1 1 1 1", "--strings", "6"});
  CHECK(r.code == 3);
  CHECK(r.err.find("M^(2n) = 4^12 = 16777216") != std::string::npos);
}

TEST_CASE("eval errors") {
  CHECK(run({"eval", "1 0"}).code == 2);
  CHECK(run({"eval", "3", "--strings", "2"}).code == 2);
  CHECK(run({"eval", "1", "--format", "yaml"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"eval", "1 2", "--max-size", "10"}).code == 3);
}

TEST_CASE("json output") {
  const Run r = run({"eval", "1^3", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["machine"] == "0: [0:1, 2:2] 1: [1:-1, 3:-1] 2: [2:1]");
  CHECK(j["palindromic"] == false);
  CHECK(j["strings"] == 2);
  CHECK(j["compact"][1][0][0] == 1);
  CHECK(j["compact"][1][0][1] == -1);
  CHECK(run({"eval", "1^3", "--format", "json"}).out == r.out);
}

TEST_CASE("laurent output") {
  const Run r = run({"eval", "1 1", "--format", "laurent"});
  CHECK(r.out.find("LG = 1*q^1*P^-1 - 1 - 1*q^2 + 1*q^1*P^1\n") != std::string::npos);
}

TEST_CASE("batch") {
  const std::string two = temp_file("two", "# knots\n3_1 1 1 1\n4_1 1 -2 1 -2\n");
  const Run r = run({"batch", two});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "3_1 0: [0:1, 2:2] 1: [1:-1, 3:-1] 2: [2:1]\n"
        "4_1 0: [-2:2, 0:7, 2:2] 1: [-1:-3, 1:-3] 2: [0:1]\n");

  const Run empty = run({"batch", temp_file("empty", "")});
  CHECK(empty.code == 0);
  CHECK(empty.out.empty());

  const Run bad = run({"batch", temp_file("bad", "a 1 1 1\nb 1 x\nc 1 1\n")});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("a 0:") != std::string::npos);
  CHECK(bad.out.find("c 0:") != std::string::npos);
  CHECK(bad.err.find("line 2 (b)") != std::string::npos);

  CHECK(run({"batch", "/nonexistent/file"}).code == 2);
}

TEST_CASE("batch output order is independent of jobs") {
  std::string content;
  for (int i = 1; i <= 9; ++i) content += "k" + std::to_string(i) + " 1^" + std::to_string(i) + " 2 -1\n";
  const std::string path = temp_file("many", content);
  const Run serial = run({"batch", path});
  const Run parallel = run({"batch", path, "--jobs", "4"});
  CHECK(serial.code == 0);
  CHECK(serial.out == parallel.out);
  CHECK(run({"batch", path, "--format", "json"}).out.find("\"name\":\"k1\"") != std::string::npos);
}

TEST_CASE("selftest") {
  const Run quick = run({"selftest", "--quick"});
  CHECK(quick.code == 0);
  CHECK(quick.out.find("6^3_2") != std::string::npos);
  CHECK(quick.out.find("0 failed") != std::string::npos);
  const Run other_seed = run({"selftest", "--seed", "42", "--braids", "20"});
  CHECK(other_seed.code == 0);
  CHECK(other_seed.out.find("Markov moves (seed 42, 20 braids)") != std::string::npos);
}

TEST_CASE("dump-rmatrix") {
  const Run r = run({"dump-rmatrix"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("1*q*p^-2", 0) == 0);
  CHECK(run({"dump-rmatrix", "--inverse"}).out.rfind("1*q^-1*p^2", 0) == 0);
}
