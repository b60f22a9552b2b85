#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <poikm/cli.hpp>

namespace {
struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = poikm::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}
}  // namespace

TEST_CASE("size command", "[cli]") {
  auto r = run_cli({"size", "2", "2"});
  REQUIRE(r.status == 0);
  REQUIRE(r.out == "13\n");
  REQUIRE(run_cli({"size", "3", "2"}).out == "63\n");
  REQUIRE(run_cli({"size", "2", "3"}).out == "61\n");

  SECTION("missing argument is a usage error") {
    auto bad = run_cli({"size", "2"});
    REQUIRE(bad.status == 2);
  }
  SECTION("zero parameter is a parameter error") {
    auto bad = run_cli({"size", "0", "2"});
    REQUIRE(bad.status == 2);
  }
}

TEST_CASE("enumerate command", "[cli]") {
  auto r = run_cli({"enumerate", "2x2", "--gens", "dx"});
  REQUIRE(r.status == 0);
  REQUIRE(r.out.rfind("degree=4 size=13 gens=4", 0) == 0);

  SECTION("identical invocations are byte-identical") {
    auto again = run_cli({"enumerate", "2x2", "--gens", "dx"});
    REQUIRE(again.out == r.out);
  }
  SECTION("all three generating choices agree on the size") {
    for (auto const* choice : {"abx", "bcx"}) {
      auto other = run_cli({"enumerate", "2x2", "--gens", choice});
      REQUIRE(other.out.find("size=13") != std::string::npos);
    }
  }
  SECTION("bad spec text") {
    REQUIRE(run_cli({"enumerate", "2y2"}).status == 2);
  }
}

TEST_CASE("gens command", "[cli]") {
  auto r = run_cli({"gens", "2x2"});
  REQUIRE(r.status == 0);
  REQUIRE(r.out.find("x0 4;3>1,4>2\n") != std::string::npos);
  REQUIRE(r.out.find("x1 4;1>3,2>4\n") != std::string::npos);
  REQUIRE(r.out.find("a1 4;1>2,2>1,3>3,4>4\n") != std::string::npos);
  REQUIRE(r.out.find("d2 ") != std::string::npos);
}

TEST_CASE("green command", "[cli]") {
  auto r = run_cli({"green", "2x2"});
  REQUIRE(r.status == 0);
  REQUIRE(r.out.find("J t=0 size=1") != std::string::npos);
  REQUIRE(r.out.find("J t=1 size=8") != std::string::npos);
  REQUIRE(r.out.find("J t=2 size=4") != std::string::npos);
  REQUIRE(r.out.find("PASS green spec=2x2") != std::string::npos);
}

TEST_CASE("rank command", "[cli]") {
  auto r = run_cli({"rank", "2x2", "--exhaustive"});
  REQUIRE(r.status == 0);
  REQUIRE(r.out.find("condition_i=pass") != std::string::npos);
  REQUIRE(r.out.find("condition_ii=pass") != std::string::npos);
  REQUIRE(r.out.find("exhaustive_minimum=4") != std::string::npos);
  REQUIRE(r.out.find("PASS rank=4 spec=2x2") != std::string::npos);

  auto quick = run_cli({"rank", "3x2"});
  REQUIRE(quick.status == 0);
  REQUIRE(quick.out.find("PASS rank=6 spec=3x2") != std::string::npos);
}

TEST_CASE("check-relations command", "[cli]") {
  auto r = run_cli({"check-relations", "2x2", "--preset", "abx"});
  REQUIRE(r.status == 0);
  REQUIRE(r.out.find("PASS preset=abx relations=29 failures=0")
          != std::string::npos);
  REQUIRE(run_cli({"check-relations", "2x2", "--preset", "nope"}).status
          == 2);
}

TEST_CASE("verify-presentation command", "[cli]") {
  auto r = run_cli(
      {"verify-presentation", "2x2", "--preset", "dx", "--bound", "10000"});
  REQUIRE(r.status == 0);
  REQUIRE(r.out
          == "PASS preset=dx k=2 m=2 relations=27 quotient=13 target=13\n");

  SECTION("default bound comes from the order") {
    auto d = run_cli({"verify-presentation", "2x2", "--preset", "abx"});
    REQUIRE(d.status == 0);
  }
  SECTION("a too-small bound is an overflow, exit 3") {
    auto small = run_cli(
        {"verify-presentation", "2x3", "--preset", "dx", "--bound", "20"});
    REQUIRE(small.status == 3);
  }
}

TEST_CASE("decompose command", "[cli]") {
  auto r = run_cli({"decompose", "2x2", "--map", "4;1>4,2>3"});
  REQUIRE(r.status == 0);
  REQUIRE(r.out == "theta=2;1>2\ngamma=4;1>1,2>2,3>4,4>3\n");

  SECTION("non-member is a parameter error") {
    REQUIRE(run_cli({"decompose", "2x2", "--map", "4;1>1"}).status == 2);
  }
}

TEST_CASE("unknown subcommand", "[cli]") {
  REQUIRE(run_cli({"frobnicate"}).status == 2);
  REQUIRE(run_cli({}).status == 2);
}
