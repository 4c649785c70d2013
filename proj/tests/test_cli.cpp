#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "slid/cli.hpp"
#include "slid/serialize.hpp"

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result slid_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = slid::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("slid_cli_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST_CASE("gen writes b-files") {
  const auto r = slid_run({"gen", "--S", "3", "--n", "20", "--format", "bfile"});
  CHECK(r.code == 0);
  const auto terms = slid::parse_bfile(r.out);
  REQUIRE(terms.size() == 20);
  CHECK(terms[19] == 2163);
  CHECK(r.out.find(" \n") == std::string::npos);
  CHECK(r.out.rfind("1 1\n2 2\n3 4\n4 8\n", 0) == 0);
}

TEST_CASE("gen with the empty rule gives powers of two") {
  const auto r = slid_run({"gen", "--S", "", "--n", "5", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "n,a_n\n1,1\n2,2\n3,4\n4,8\n5,16\n");
}

TEST_CASE("global flags work before the subcommand too") {
  const auto a = slid_run({"--format", "json", "gen", "--S", "1", "--n", "8"});
  const auto b = slid_run({"gen", "--S", "1", "--n", "8", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("engine both agrees and output is deterministic") {
  const std::vector<std::string> args{"--engine", "both", "quilt", "tri", "--n", "20",
                                      "--format", "json"};
  const auto a = slid_run(args);
  const auto b = slid_run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(nlohmann::json::parse(a.out)["terms"][19] == "1164");
}

TEST_CASE("quilt recurrence scan") {
  const auto r = slid_run({"quilt", "tri", "--scan-k", "5", "--scan-from", "6", "--scan-to", "50",
                           "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["indices"] == nlohmann::json::array({6, 8, 10, 12, 14, 16, 18, 20, 22, 24, 26, 31, 33,
                                               35, 37, 39, 41, 43, 46, 48}));
  const auto fib = slid_run({"quilt", "fib", "--n", "10", "--format", "csv"});
  CHECK(fib.out.find("10,21\n") != std::string::npos);
}

TEST_CASE("gen JSON round-trips through verify") {
  const auto gen = slid_run({"gen", "--S", "3", "--n", "41", "--format", "json"});
  const auto path = temp_file("s3.json", gen.out);
  const auto r = slid_run({"verify", path, "--from", "4", "--to", "40", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["matches_regeneration"] == true);
  CHECK(j["recurrence_indices"] == nlohmann::json::array({4, 5, 6, 7, 8, 10, 12, 15}));

  const auto bpath = temp_file("s3.b", slid_run({"gen", "--S", "3", "--n", "41", "--format", "bfile"}).out);
  const auto rb = slid_run({"verify", bpath, "--S", "3", "--from", "4", "--to", "40", "--format", "json"});
  CHECK(nlohmann::json::parse(rb.out)["recurrence_indices"] == j["recurrence_indices"]);
}

TEST_CASE("verify reports tampered terms") {
  const auto path = temp_file("bad.b", "1 1\n2 2\n3 4\n4 9\n");
  const auto r = slid_run({"verify", path, "--S", "3"});
  CHECK(r.code == slid::cli::kMismatch);
  CHECK(r.err.find("a_4") != std::string::npos);
}

TEST_CASE("check proves [11]\\{10} with d=2") {
  const auto r = slid_run({"check", "--k", "11", "--fringe", "1", "--d", "2", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["conclusion"] == "proven");
  CHECK(j["base_cases"]["C"].size() == 12);
  CHECK(j["base_cases"]["B"].size() == 15);

  const auto table = slid_run({"check", "--S", "full(k=11)\\{10}", "--auto-d", "--verify-to", "100"});
  CHECK(table.code == 0);
  CHECK(table.out.find("conclusion: proven") != std::string::npos);
  CHECK(table.out.find("<= 100: holds") != std::string::npos);
}

TEST_CASE("check exit status with --expect proven") {
  // {3}-LID breaks a_{n+1} = a_n + a_{n-3} infinitely often, so no check can prove it.
  const auto r = slid_run({"check", "--S", "3", "--expect", "proven"});
  CHECK(r.code == slid::cli::kNotProven);
  const auto plain = slid_run({"check", "--S", "3"});
  CHECK(plain.code == 0);
  CHECK(plain.out.find("not_proven") != std::string::npos);
}

TEST_CASE("fringe-profile") {
  const auto r = slid_run({"fringe-profile", "--T", "1", "--i-range=-2..4", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "i,f\n-2,-2\n-1,-1\n0,0\n1,2\n2,3\n3,5\n4,8\n");
  const auto j = nlohmann::json::parse(
      slid_run({"fringe-profile", "--T", "1,2", "--i-range", "-2..8", "--format", "json"}).out);
  CHECK(j["c"] == 2);
  CHECK(j["f_table"].size() == 11);
  CHECK(slid_run({"fringe-profile", "--T", "1", "--i-range", "5..2"}).code == slid::cli::kUsageError);
}

TEST_CASE("count CSV columns") {
  const auto r = slid_run({"count", "--S", "full(k=5)\\{3}", "--n", "25", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,a_n,d_n,c_n,ratio\n", 0) == 0);
  std::istringstream lines(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 26);
  const auto table = slid_run({"count", "--S", "full(k=5)\\{3}", "--n", "25"});
  CHECK(table.out.find("holds on 19 indices") != std::string::npos);
}

TEST_CASE("greedy and growth") {
  const auto g = slid_run({"greedy", "--S", "1", "--m", "2022"});
  CHECK(g.code == 0);
  CHECK(g.out == "2022 = a_16 + a_13 + a_8 + a_6 + a_1\nlegal: yes\n");
  const auto scan = slid_run({"greedy", "--quilt", "fib", "--scan-to", "20", "--format", "csv"});
  CHECK(scan.code == 0);
  CHECK(scan.out.rfind("n,a_n,scanned,legal,proportion\n", 0) == 0);

  const auto j = nlohmann::json::parse(slid_run({"growth", "--k", "5", "--c", "2", "--format", "json"}).out);
  CHECK(j["r_at_least_lambda"] == true);
  CHECK(j["average"]["predicted_ratio"].get<double>() == doctest::Approx(1.0573).epsilon(1e-3));
  const auto golden = nlohmann::json::parse(slid_run({"growth", "--k", "1", "--format", "json"}).out);
  CHECK(golden["lambda"].get<double>() == doctest::Approx(1.618033988749895));
}

TEST_CASE("argument errors exit 2") {
  CHECK(slid_run({}).code == slid::cli::kUsageError);
  CHECK(slid_run({"gen", "--n", "5"}).code == slid::cli::kUsageError);
  CHECK(slid_run({"gen", "--S", "1", "--n", "5", "--format", "xml"}).code == slid::cli::kUsageError);
  CHECK(slid_run({"check", "--k", "11", "--fringe", "1", "--format", "bfile"}).code ==
        slid::cli::kUsageError);
  const auto bad = slid_run({"gen", "--S", "S=1,q", "--n", "5"});
  CHECK(bad.code == slid::cli::kUsageError);
  CHECK(bad.err.find("'S=1,q'") != std::string::npos);
  CHECK(slid_run({"check", "--k", "3", "--fringe", "1", "--d", "1", "--S", "1"}).code ==
        slid::cli::kUsageError);
  CHECK(slid_run({"--help"}).code == 0);
}

TEST_CASE("seed terms continue a stored prefix") {
  const auto seed = temp_file("seed.b", slid_run({"gen", "--S", "2", "--n", "10", "--format", "bfile"}).out);
  const auto a = slid_run({"--seed-terms", seed, "gen", "--S", "2", "--n", "30", "--format", "bfile"});
  const auto b = slid_run({"gen", "--S", "2", "--n", "30", "--format", "bfile"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
