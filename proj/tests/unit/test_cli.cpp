#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ultralat/cli.hpp"

using namespace ultralat;

namespace {

struct Run {
  int code = -1;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("field info") {
    const auto r = run({"field-info", "9"});
    REQUIRE(r.code == kExitOk);
    const auto j = parse(r);
    CHECK(j["schema"] == 1);
    CHECK(j["q"] == 9);
    CHECK(j["modulus"] == nlohmann::json::array({1, 0, 1}));
    CHECK(run({"field-info", "12"}).code == kExitInvalid);
  }

  TEST_CASE("group summary") {
    const auto r = run({"group", "SL(2,5)"});
    REQUIRE(r.code == kExitOk);
    const auto j = parse(r);
    CHECK(j["order"] == 120);
    CHECK(j["class_count"] == 9);
    CHECK(run({"group", "O+(6,2)", "--level", "full"}).code == kExitOk);
    CHECK(run({"group", "O+(6,2)", "--level", "bogus"}).code == kExitUsage);
  }

  TEST_CASE("covering csv") {
    const auto r = run({"covering", "SL(2,5)", "--format", "csv"});
    REQUIRE(r.code == kExitOk);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line.find("group") == 0);
    std::size_t rows = 0;
    while (std::getline(in, line))
      if (!line.empty()) ++rows;
    CHECK(rows == 7);  // 9 classes minus the two central ones
    CHECK(run({"covering", "SL(2,5)", "--max-k", "1"}).code == kExitCheckFailed);
  }

  TEST_CASE("relative and alt-relative") {
    const auto r = run({"alt-relative", "A(5)", "(1 2)(3 4)", "(1 2 3)"});
    REQUIRE(r.code == kExitOk);
    CHECK(parse(r)["k"] == 2);
    CHECK(run({"alt-relative", "A(5)", "(1 2)", "(1 2 3)"}).code == kExitInvalid);
    CHECK(run({"relative", "A(5)", "--class1", "1"}).code == kExitUsage);
    CHECK(run({"relative", "SL(2,5)", "--format", "csv"}).code == kExitOk);
  }

  TEST_CASE("obstruction") {
    const std::vector<std::string> args{"obstruction", "--q", "7", "--a", "2", "--b", "3", "--kmax", "5",
                                        "--samples", "50", "--seed", "1"};
    const auto r = run(args);
    REQUIRE(r.code == kExitOk);
    const auto j = parse(r);
    CHECK(j["pass"] == true);
    CHECK(j["forward"]["other_certificate"] == 6);
    CHECK(run(args).out == r.out);
    CHECK(run({"obstruction", "--q", "7", "--a", "2", "--b", "3", "--kmax", "5"}).code == kExitUsage);
    CHECK(run({"obstruction", "--q", "7", "--a", "2", "--b", "3", "--kmax", "6", "--seed", "1"}).code ==
          kExitInvalid);
  }

  TEST_CASE("witnesses") {
    const auto r = run({"witness", "swap", "Sp(6,3)", "--dim", "2", "--seed", "1"});
    REQUIRE(r.code == kExitOk);
    const auto j = parse(r);
    CHECK(j["pass"] == true);
    CHECK(j["lemma"] == "swap");
    CHECK(run({"witness", "swap", "Sp(6,3)", "--dim", "2", "--seed", "1"}).out == r.out);
    CHECK(run({"witness", "swap", "Sp(6,3)", "--dim", "2"}).code == kExitUsage);
    CHECK(run({"witness", "swap", "Sp(6,3)", "--dim", "3", "--seed", "1"}).code == kExitInvalid);
    CHECK(run({"witness", "quasiscalar", "SU(4,3)"}).code == kExitOk);
    CHECK(run({"witness", "nonsingular", "O(5,3)", "--dim", "3", "--seed", "4"}).code == kExitOk);
  }

  TEST_CASE("convergence types") {
    const auto r = run({"ctype", "cmp", "1*n^-1/2", "3*n^-1*log^1"});
    REQUIRE(r.code == kExitOk);
    CHECK(parse(r)["verdict"] == "greater");
    CHECK(parse(run({"ctype", "ideal", "I1", "5*n^-1"}))["member"] == true);
    CHECK(parse(run({"ctype", "ideal", "I0", "5*n^-1"}))["member"] == false);
    CHECK(run({"ctype", "ideal", "I2", "5*n^-1"}).code == kExitUsage);
    CHECK(run({"ctype", "cmp", "1*n^-2", "0"}).code == kExitInvalid);
  }

  TEST_CASE("error paths") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"group", "SL(9,9)"}).code == kExitCapExceeded);
    CHECK(run({"group", "SL(3,3)", "--cap", "100"}).code == kExitCapExceeded);
    CHECK(run({"group", "XY(3,3)"}).code == kExitInvalid);
    CHECK(run({"group", "Sp(4,2)"}).code == kExitInvalid);
    CHECK(run({"field-info", "9", "--format", "xml"}).code == kExitUsage);
    CHECK(run({"field-info", "9", "--format", "csv"}).code == kExitUsage);
  }

  TEST_CASE("output file") {
    const std::string path = "ultralat_cli_test_out.json";
    const auto r = run({"field-info", "7", "--out", path});
    REQUIRE(r.code == kExitOk);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(nlohmann::json::parse(ss.str())["primitive"] == "3");
    std::remove(path.c_str());
  }
}
