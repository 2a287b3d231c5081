#include <doctest.h>

#include <fstream>
#include <sstream>

#include "etaforge/cli.hpp"
#include "etaforge/eta_engine.hpp"
#include "etaforge/json_io.hpp"

using namespace etaforge;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eta subcommand prints the worked example") {
  auto r = run({"eta", "--lambda", "3,1:k=1:type=1", "--m", "2", "--ky", "1"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "eta[3,1:k=1:type=1] = x1^3*x2 + x1^3*y1 + 2*x1^2*x2^2 + 3*x1^2*x2*y1 + "
        "x1^2*y1^2 + x1*x2^3 + 3*x1*x2^2*y1 + 2*x1*x2*y1^2 + x2^3*y1 + x2^2*y1^2\n");
}

TEST_CASE("identical invocations give identical bytes") {
  std::vector<std::string> args{"pieri", "--lambda", "3,2,2:k=2", "--p", "2"};
  auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("json output round trips") {
  auto r = run({"eta", "--lambda", "3,1:k=1:type=2", "--m", "2", "--ky", "1",
                "--format", "json"});
  CHECK(r.code == 0);
  SparsePoly p = poly_from_json(nlohmann::json::parse(r.out));
  Workspace ws(2, 1);
  CHECK(p == eta_poly(validate_typed({3, 1}, 1, 2), ws));
}

TEST_CASE("words subcommand counts the golden example") {
  auto r = run({"words", "--w", "3,-4,-2,1"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 16) == "9 reduced words\n");
}

TEST_CASE("exit codes") {
  CHECK(run({"eta"}).code == 2);                                   // missing --lambda
  CHECK(run({"nonsense"}).code == 2);                              // unknown subcommand
  CHECK(run({"eta", "--lambda", "2,2:k=1:type=0"}).code == 1);     // not 1-strict
  CHECK(run({"verify", "giambelli"}).code == 0);
  CHECK(run({"iota", "--word", "02120"}).out == "1 2 0 2 1\n");
}

TEST_CASE("out file receives json") {
  std::string path = "/tmp/etaforge_cli_test.json";
  auto r = run({"schurq", "--lambda", "3,1", "--m", "2", "--p", "--out", path});
  CHECK(r.code == 0);
  std::ifstream f(path);
  REQUIRE(f.good());
  nlohmann::json j;
  f >> j;
  Workspace ws(2, 0);
  CHECK(poly_from_json(j) == ws.schur_p(Partition({3, 1})));
}

TEST_CASE("grassmannian and bijection subcommands") {
  auto g = run({"grassmannian", "--lambda", "8,4,3,2:k=3:type=1", "--n", "7"});
  CHECK(g.out == "3,5,7,-6,-2,1,4,8\n");
  auto b = run({"bijection", "--word", "1320321", "--lambda", "4,2,1:k=1:type=1",
                "--mu", "():k=1"});
  CHECK(b.code == 0);
  CHECK(b.out == "1 4 5 6\n2 7\n3\n");
  auto s = run({"strip", "--lambda", "3,1:k=1:type=1", "--mu", "2,1:k=1:type=1"});
  CHECK(s.code == 0);
  CHECK(s.out.find("m=1") != std::string::npos);
}
