#include <doctest.h>

#include <sstream>

#include "sodforge/cli.hpp"

namespace {

struct Run {
  int rc;
  std::string out, err;
};

Run cli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "sodforge");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int rc = sodforge::run_cli(args, in, out, err);
  return {rc, out.str(), err.str()};
}

const std::string kFixture = std::string(SODFORGE_DATA_DIR) + "/quaternion-4.design";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("verify the quaternion fixture") {
  const auto r = cli({"verify", kFixture});
  CHECK(r.rc == 0);
  CHECK(r.out.find("ok exact") != std::string::npos);
  CHECK(cli({"verify", kFixture, "--both-sides"}).rc == 0);
  CHECK(cli({"verify", kFixture, "--randomized"}).rc == 2);
  const auto h = cli({"construct", "hadamard", "--t", "5"});
  CHECK(cli({"verify", "-", "--randomized", "--trials", "2"}, h.out).rc == 0);
}

TEST_CASE("construct then verify through stdin") {
  for (const std::vector<std::string>& c : std::vector<std::vector<std::string>>{
           {"construct", "sod2n", "--n", "3"}, {"construct", "order32"}, {"construct", "order32", "--equate"},
           {"construct", "hr-family", "--t", "4"}, {"construct", "hadamard", "--t", "3"}}) {
    const auto made = cli(c);
    REQUIRE(made.rc == 0);
    const auto v = cli({"verify", "-"}, made.out);
    CHECK(v.rc == 0);
    const auto e = cli({"verify", "-", "--exact"}, made.out);
    CHECK(e.rc == 0);
  }
}

TEST_CASE("expand and equate") {
  const auto d = cli({"construct", "sod2n", "--n", "3"});
  const auto od = cli({"expand", "--design", "-"}, d.out);
  REQUIRE(od.rc == 0);
  CHECK(od.out.find("order 64") != std::string::npos);
  CHECK(cli({"verify", "-"}, od.out).rc == 0);
  const auto o32 = cli({"construct", "order32"});
  const auto eq = cli({"equate", "-", "--blocks", "6;7;8;1,9;2,10;3,4,5,11"}, o32.out);
  REQUIRE(eq.rc == 0);
  CHECK(eq.out == cli({"construct", "order32", "--equate"}).out);
}

TEST_CASE("verification failure exits with 1 and a certificate") {
  const auto r = cli({"verify", "-"}, "order 2; vars 1; group SR; type 2\n+x1,+x1\n+x1,+x1\n");
  CHECK(r.rc == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(cli({}).rc == 2);
  CHECK(cli({"construct", "nonsense"}).rc == 2);
  CHECK(cli({"verify", "/nonexistent/file.design"}).rc == 2);
  CHECK(cli({"verify", "-"}, "order 2; garbage").rc == 2);
  CHECK(cli({"cod-family", "--n", "2"}).rc == 2);
}

TEST_CASE("nonexistence reports") {
  const auto r = cli({"nonexist", "sw", "--n", "6", "--w", "3", "--group", "SC", "--no-timing"});
  CHECK(r.rc == 0);
  CHECK(r.out.find("\"result\":\"none\"") != std::string::npos);
  CHECK(r.out == cli({"nonexist", "sw", "--n", "6", "--w", "3", "--group", "SC", "--no-timing"}).out);
  CHECK(cli({"nonexist", "sw", "--n", "6", "--w", "3", "--group", "SQ"}).rc == 3);
  CHECK(cli({"nonexist", "sw", "--n", "6", "--w", "3", "--budget", "2"}).rc == 3);
  const auto found = cli({"nonexist", "sod", "--n", "4", "--type", "1,1,2", "--group", "SQ", "--allow-large-groups"});
  CHECK(found.rc == 0);
  CHECK(found.out.find("\"result\":\"found\"") != std::string::npos);
}

TEST_CASE("golay subcommands") {
  CHECK(cli({"golay", "verify", "--a", "1,1", "--b", "1,-1"}).rc == 0);
  CHECK(cli({"golay", "verify", "--a", "1,1", "--b", "1,1"}).rc == 1);
  const auto d = cli({"golay", "double", "--a", "1,1", "--b", "1,-1"});
  CHECK(d.rc == 0);
  CHECK(d.out == "1,1,1,-1 ; 1,1,-1,1\n");
  const auto s = cli({"golay", "search", "--length", "4", "--alphabet", "real"});
  CHECK(s.rc == 0);
  CHECK(s.out.find("pairs ") != std::string::npos);
}

TEST_CASE("cod-family output is deterministic and verifies") {
  const auto a = cli({"cod-family", "--n", "3", "--emit", "full"});
  REQUIRE(a.rc == 0);
  CHECK(a.out == cli({"cod-family", "--n", "3", "--emit", "full"}).out);
  CHECK(cli({"verify", "-", "--exact"}, a.out).rc == 0);
  const auto c = cli({"cod-family", "--n", "3"});
  CHECK(c.rc == 0);
  CHECK(c.out.find("COD(192;") != std::string::npos);
  CHECK(cli({"cod-family", "--n", "4", "--golay-length", "8", "--complex-lengths", "11", "--emit", "full"}).rc == 3);
  CHECK(cli({"--format", "json", "catalog"}).rc == 0);
}

}
