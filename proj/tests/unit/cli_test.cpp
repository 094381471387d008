#include <doctest.h>

#include <cstdio>
#include <sstream>

#include "ribbon/cli.hpp"
#include "ribbon/gem_map.hpp"
#include "ribbon/ribbon_graph.hpp"

using namespace ribbon;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(RIBBON_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("pdg on a family") {
  const Result r = run({"pdg", "--family", "cycle", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "2 + 30*z\n");
  CHECK(run({"pdg", "--family", "cycle", "--n", "5", "--method", "closed"}).out == "2 + 30*z\n");
  CHECK(run({"pdg", "--family", "dipole", "--n", "4", "--method", "recurrence"}).out == "2 + 14*z\n");
}

TEST_CASE("output formats") {
  CHECK(run({"pdg", "--family", "cycle", "--n", "2", "--format", "csv"}).out == "i,count\n0,2\n1,2\n");
  CHECK(run({"pdg", "--family", "cycle", "--n", "2", "--format", "json"}).out ==
        "[\n {\"i\": 0, \"count\": 2},\n {\"i\": 1, \"count\": 2}\n]\n");
  CHECK(run({"maxgenus", "--family", "cycle", "--n", "3", "--format", "json"}).out == "[\n {\"max_genus\": 1}\n]\n");
  CHECK(run({"pdg", "--family", "cycle", "--n", "2", "--format", "xml"}).code == cli::usage_error);
}

TEST_CASE("euler and spectrum on the join counterexample") {
  CHECK(run({"euler", "--file", data("c2_join_b1.rg")}).out == "4*z + 4*z^3\n");
  CHECK(run({"spectrum", "--file", data("c2_join_b1.rg"), "--euler"}).out == "{1,3} NOT interpolating\n");
  CHECK(run({"euler", "--family", "bouquet_twisted", "--n", "4", "--method", "closed"}).out == "16*z^4\n");
  CHECK(run({"spectrum", "--file", data("c2.rg"), "--format", "csv"}).out ==
        "exponents,interpolating\n\"0,1\",true\n");
}

TEST_CASE("dual round trip keeps the polynomial") {
  const std::string once = "cli_test_dual_once.rg";
  const std::string twice = "cli_test_dual_twice.rg";
  REQUIRE(run({"dual", "--file", data("c2.rg"), "--subset", "0", "--out", once}).code == 0);
  const Result p = run({"pdg", "--file", once});
  CHECK(p.code == 0);
  CHECK(p.out == "2 + 2*z\n");
  REQUIRE(run({"dual", "--file", once, "--subset", "0", "--out", twice}).code == 0);
  const RibbonGraph g = read_ribbon_file(data("c2.rg"));
  CHECK(surface_stats(read_ribbon_file(twice)) == surface_stats(g));
  CHECK(equivalent_embedding(read_ribbon_file(twice), g));
  std::remove(once.c_str());
  std::remove(twice.c_str());

  CHECK(run({"dual", "--file", data("c2.rg"), "--subset", "0,1"}).out.rfind("ribbongraph 1\n", 0) == 0);
  CHECK(run({"dual", "--file", data("c2.rg"), "--subset", "7"}).code == cli::precondition_error);
  CHECK(run({"dual", "--file", data("c2.rg"), "--subset", "x"}).code == cli::usage_error);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::usage_error);
  CHECK(run({"frobnicate"}).code == cli::usage_error);
  CHECK(run({"pdg"}).code == cli::usage_error);
  CHECK(run({"pdg", "--file", data("c2.rg"), "--family", "cycle", "--n", "2"}).code == cli::usage_error);
  CHECK(run({"pdg", "--family", "cycle"}).code == cli::usage_error);
  CHECK(run({"pdg", "--family", "cycle", "--n", "2", "--method", "guess"}).code == cli::usage_error);

  const Result parse = run({"pdg", "--file", data("bad_duplicate_end.rg")});
  CHECK(parse.code == cli::parse_error);
  CHECK(parse.err.find("line 4") != std::string::npos);

  const Result pre = run({"pdg", "--family", "bouquet_twisted", "--n", "2"});
  CHECK(pre.code == cli::precondition_error);
  CHECK(pre.err.find("orientable") != std::string::npos);
  CHECK(run({"pdg", "--family", "cycle", "--n", "0"}).code == cli::precondition_error);
  CHECK(run({"pdg", "--family", "cycle", "--n", "31"}).code == cli::precondition_error);

  CHECK(run({"--help"}).code == cli::ok);
}

TEST_CASE("family emits the generator output") {
  const Result r = run({"family", "--family", "cycle", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(decode(r.out) == read_ribbon_file(data("c2.rg")));
}

TEST_CASE("stats output") {
  const Result csv = run({"stats", "--family", "necklace", "--n-max", "2"});
  CHECK(csv.out.rfind("n,mean_num,mean_den,var_num,var_den,ks\n1,3,4,3,16,", 0) == 0);
  const Result json = run({"stats", "--family", "fan", "--n-max", "1", "--out", "json"});
  CHECK(json.out ==
        "[\n {\"n\": 1, \"mean_num\": 0, \"mean_den\": 1, \"var_num\": 0, \"var_den\": 1, \"ks\": null}\n]\n");
  CHECK(run({"stats", "--family", "wheel", "--n-max", "3"}).code == cli::usage_error);
}

TEST_CASE("verify suites") {
  const Result ok = run({"verify", "--suite", "props", "--trials", "5", "--max-edges", "6"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("PASS prop12: 5/5 agree\n") != std::string::npos);
  CHECK(run({"verify", "--suite", "theorems", "--trials", "5", "--max-edges", "6"}).code == 0);
  CHECK(run({"verify", "--suite", "everything"}).code == cli::usage_error);
}

TEST_CASE("output does not depend on the thread count") {
  const std::vector<std::string> base = {"pdg", "--family", "necklace", "--n", "4", "--format", "csv"};
  auto with = [&](const char* t) {
    auto a = base;
    a.push_back("--threads");
    a.push_back(t);
    return run(a).out;
  };
  CHECK(with("1") == with("8"));
}
