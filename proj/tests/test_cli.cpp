#include "doctest.h"

#include "cli.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "octodp");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = octodp::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::filesystem::path temp_path(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("build") {
  const auto r = call({"build", "-d", "0,1,2,3,4,5"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["coefficients"]["e"] == "864");
  CHECK(j["coefficient_sum"] == "0");
  CHECK(j["parametrization_holds"] == true);
  CHECK(j["discriminant"]["smooth"] == true);
}

TEST_CASE("classify and catalog names") {
  const auto r = call({"classify", "-d", "aab", "-p", "5"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["type"] == "(aab)");
  CHECK(j["statistic"] == "{[2210]^1, [2220]^4, [2221]^8, [4201]^12, [4210]^2}");
  CHECK(j["split_strings"].size() == 27);

  const auto s = call({"classify", "-d", "aaaa-1"});
  REQUIRE(s.code == 0);
  const auto k = nlohmann::json::parse(s.out);
  CHECK(k["smoothness"]["tropically_smooth"] == true);
  CHECK(k["type"] == "(aaaa)");
}

TEST_CASE("precondition failures exit 1") {
  auto r = call({"classify", "-d", "1,1,2,3,4,5"});
  CHECK(r.code == 1);
  CHECK(r.err.find("d1-d2") != std::string::npos);
  r = call({"classify", "-d", "0,1,2,3,4,5", "-p", "9"});
  CHECK(r.code == 1);
  CHECK(r.err.find("not prime") != std::string::npos);
  CHECK(call({"classify", "-d", "0,1,2,3,4,5", "-p", "3"}).code == 1);
  CHECK(call({"build", "-d", "1,2,3"}).code == 1);
  CHECK(call({"build", "-d", "0,1,2,3,4,5", "--format", "newick"}).code == 1);
  CHECK(call({"build", "-d", "0,1,2,3,4,5", "--delta-file", "/nonexistent/delta.txt"}).code == 1);
}

TEST_CASE("usage errors exit 1") {
  CHECK(call({}).code == 1);
  CHECK(call({"frobnicate"}).code == 1);
  CHECK(call({"classify"}).code == 1);
  CHECK(call({"lines", "-d", "0,1,2,3,4,5", "--format", "svg"}).code == 1);
  const auto help = call({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("classify") != std::string::npos);
}

TEST_CASE("lines in both formats") {
  const auto j = call({"lines", "-d", "0,1,2,3,4,5"});
  REQUIRE(j.code == 0);
  CHECK(nlohmann::json::accept(j.out));
  const auto dot = call({"lines", "-d", "0,1,2,3,4,5", "--format", "dot"});
  REQUIRE(dot.code == 0);
  CHECK(dot.out.starts_with("graph"));
  CHECK(count(dot.out, " -- ") == 135);
}

TEST_CASE("trees in Newick") {
  const auto r = call({"trees", "-d", "aaaa-1", "--format", "newick"});
  REQUIRE(r.code == 0);
  CHECK(count(r.out, "\n") == 27);
  CHECK(r.out.starts_with("E1 ("));
  CHECK(count(r.out, ";") == 27);
}

TEST_CASE("triangulations") {
  const auto r = call({"triangulations"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["regular_triangulations"] == 70);
  CHECK(j["orbits"] == 14);
  CHECK(j["unimodular_triangulations"] == 53);
  CHECK(j["unimodular_orbits"] == 10);
}

TEST_CASE("sample is deterministic across thread counts") {
  const auto a = call({"sample", "--target", "any", "--budget", "12", "--seed", "5", "--threads", "1"});
  const auto b = call({"sample", "--target", "any", "--budget", "12", "--seed", "5", "--threads", "3"});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
  std::istringstream lines(a.out);
  std::string line;
  while (std::getline(lines, line)) CHECK(nlohmann::json::accept(line));
  const auto none = call({"sample", "--budget", "0"});
  CHECK(none.code == 0);
  CHECK(none.out.empty());
}

TEST_CASE("blowdown") {
  const auto r = call({"blowdown", "-d", "0,1,2,3,4,5"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["recovered_points"].size() == 6);
}

TEST_CASE("output file") {
  const auto path = temp_path("octodp_cli_test_build.json");
  std::filesystem::remove(path);
  const auto r = call({"build", "-d", "0,1,2,3,4,5", "-o", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  CHECK(nlohmann::json::parse(in)["coefficients"]["e"] == "864");
  std::filesystem::remove(path);
}

TEST_CASE("run with a config") {
  octodp::cli::RunConfig config;
  config.command = octodp::cli::Command::Classify;
  config.moduli = "2,-3,5,7,-11,13";
  std::ostringstream out, err;
  CHECK(octodp::cli::run(config, out, err) == 0);
  // three lines through one point on F16: the tree there is undefined
  config.moduli = "0,1,2,3,4,5";
  CHECK(octodp::cli::run(config, out, err) == 1);
  CHECK(err.str().find("coincident points") != std::string::npos);
  config.moduli.reset();
  CHECK(octodp::cli::run(config, out, err) == 1);
}

TEST_CASE("verify subsets") {
  auto r = call({"verify", "--only", "1", "--only", "12"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["passed"] == 2);
  CHECK(j["total"] == 2);
  CHECK(count(r.err, "PASS") == 2);

  // the discriminant oracle with the shipped data finds a constant ratio
  r = call({"verify", "--only", "2"});
  j = nlohmann::json::parse(r.out);
  const std::string detail = j["criteria"][0]["detail"];
  CHECK(detail.find("-1/65536") != std::string::npos);
  CHECK(detail.find("not constant") == std::string::npos);
}

TEST_CASE("a corrupted A-discriminant file is detected") {
  const auto path = temp_path("octodp_cli_test_delta.txt");
  {
    std::ifstream in(std::string(OCTODP_SOURCE_DIR) + "/data/delta_a.txt");
    std::ofstream out(path);
    std::string line;
    bool flipped = false;
    while (std::getline(in, line)) {
      if (!flipped && !line.empty() && line[0] != '#') {
        line = line[0] == '-' ? line.substr(1) : "-" + line;
        flipped = true;
      }
      out << line << "\n";
    }
  }
  const auto good = call({"build", "-d", "0,1,2,3,4,5"});
  const auto bad = call({"build", "-d", "0,1,2,3,4,5", "--delta-file", path.string()});
  REQUIRE(bad.code == 0);
  CHECK(nlohmann::json::parse(good.out)["discriminant"]["value"] !=
        nlohmann::json::parse(bad.out)["discriminant"]["value"]);

  const auto r = call({"verify", "--only", "2", "--delta-file", path.string()});
  CHECK(r.code == 1);
  const std::string detail = nlohmann::json::parse(r.out)["criteria"][0]["detail"];
  CHECK(detail.find("not constant") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("golden reports") {
  // regenerate with OCTODP_UPDATE_GOLDEN=1 after an intended change
  const std::string dir = std::string(OCTODP_SOURCE_DIR) + "/tests/golden/";
  const bool update = std::getenv("OCTODP_UPDATE_GOLDEN") != nullptr;
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
      {"triangulations.json", {"triangulations"}},
      {"classify_aab.json", {"classify", "-d", "aab"}},
      {"trees_aaaa-1.nwk", {"trees", "-d", "aaaa-1", "--format", "newick"}},
      {"lines_small.dot", {"lines", "-d", "2,-3,5,7,-11,13", "--format", "dot"}},
      {"build_012345.json", {"build", "-d", "0,1,2,3,4,5"}},
      {"blowdown_012345.json", {"blowdown", "-d", "0,1,2,3,4,5"}},
  };
  for (const auto& [file, args] : cases) {
    CAPTURE(file);
    const auto r = call(args);
    REQUIRE(r.code == 0);
    // identical config, identical bytes
    CHECK(call(args).out == r.out);
    if (update) {
      std::ofstream(dir + file, std::ios::binary) << r.out;
      continue;
    }
    std::ifstream in(dir + file, std::ios::binary);
    REQUIRE(in);
    std::stringstream golden;
    golden << in.rdbuf();
    CHECK(r.out == golden.str());
  }
}
