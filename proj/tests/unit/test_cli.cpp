#include <sstream>

#include "curvehom/cli.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace curvehom;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("hh csv for the nodal cubic") {
    const Result r = run({"hh", "--kind", "nodal", "--genus", "1", "--nodes", "1", "--range", "-2..4", "--format", "csv"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "degree,dim\n-2,0\n-1,1\n0,2\n1,1\n2,1\n3,1\n4,1\n");
  }

  TEST_CASE("hn json for the cusp") {
    const Result r = run({"hn", "--kind", "cuspidal-cubic", "--range", "0..2", "--format", "json"});
    REQUIRE(r.code == kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["entries"][0]["dim"] == 3);
    CHECK(j["entries"][1]["dim"] == 0);
    CHECK(j["entries"][2]["dim"] == 2);
  }

  TEST_CASE("hdr and hc pages") {
    const Result a = run({"hdr", "--genus", "1", "--nodes", "1", "--page", "2"});
    CHECK(a.code == kExitOk);
    CHECK(a.out.find("degeneration page: 2") != std::string::npos);
    const Result b = run({"hdr", "--page", "1", "--show-provenance", "--format", "json"});
    REQUIRE(b.code == kExitOk);
    CHECK(nlohmann::json::parse(b.out)["degeneration_page"] == 2);
    const Result c = run({"hc", "--page", "inf"});
    CHECK(c.code == kExitOk);
  }

  TEST_CASE("chart and local") {
    CHECK(run({"chart", "--genus", "2", "--nodes", "1", "--format", "csv"}).code == kExitOk);
    const Result l = run({"local", "--model", "nodal-cubic-chart", "--wedge", "2", "--show-generators"});
    CHECK(l.code == kExitOk);
    CHECK(l.out.find("dx*dy") != std::string::npos);
  }

  TEST_CASE("verify") {
    const Result ok = run({"verify", "local"});
    CHECK(ok.code == kExitOk);
    const Result bad = run({"verify", "nodal-cubic", "--inject-rank", "1,0,0"});
    CHECK(bad.code == kExitVerifyFailed);
    CHECK(bad.out.find("FAIL") != std::string::npos);
    CHECK(bad.out.find("(1,0)") != std::string::npos);
  }

  TEST_CASE("invalid input exits with 2") {
    CHECK(run({}).code == kExitInvalidInput);
    CHECK(run({"hh", "--genus", "1", "--nodes", "2"}).code == kExitInvalidInput);
    CHECK(run({"hh", "--range", "3..1"}).code == kExitInvalidInput);
    CHECK(run({"hh", "--range", "abc"}).code == kExitInvalidInput);
    CHECK(run({"hh", "--page", "2"}).code == kExitInvalidInput);
    CHECK(run({"hdr", "--format", "csv"}).code == kExitInvalidInput);
    CHECK(run({"hdr", "--page", "0"}).code == kExitInvalidInput);
    CHECK(run({"local", "--model", "tacnode"}).code == kExitInvalidInput);
    CHECK(run({"local", "--wedge", "13"}).code == kExitInvalidInput);
    CHECK(run({"hn", "--kind", "cusp", "--genus", "2"}).code == kExitInvalidInput);
    CHECK(run({"verify", "everything"}).code == kExitInvalidInput);
    CHECK(run({"verify", "--inject-rank", "1,0"}).code == kExitInvalidInput);
    CHECK(run({"frobnicate"}).code == kExitInvalidInput);
  }

  TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"hdr", "--genus", "3", "--nodes", "2", "--format", "json", "--show-provenance"};
    CHECK(run(args).out == run(args).out);
  }

  TEST_CASE("help exits cleanly") { CHECK(run({"--help"}).code == kExitOk); }
}
