#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "fanowalls/cli.hpp"
#include "fanowalls/io.hpp"
#include "support.hpp"

using namespace fanowalls;
using testing_support::q;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "fanowalls");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("json round trips") {
  const FanoContext x14 = FanoContext::of_genus(8);
  for (int i = 0; i < 100; ++i) {
    const ChernCharacter ch = testing_support::rand_class(i % 2 ? x14 : FanoContext::index_two(3));
    CHECK(chern_from_json(Json::parse(chern_json(ch).dump())) == ch);
  }
  CHECK(chern_json(ChernCharacter(FanoContext::index_two(3), 2, 0, -2, 0)).dump() ==
        R"({"ctx":{"index":2,"degree":3},"ch":["2","0","-2","0"]})");
  CHECK(ku_class_json(FanoContext::index_two(5), {2, 0}).dump() ==
        R"({"lattice":{"index":2,"degree":5},"class":[2,0]})");
  const auto [ctx, u] = ku_class_from_json(Json::parse(R"({"lattice":{"index":2,"degree":5},"class":[2,-7]})"));
  CHECK(ctx == FanoContext::index_two(5));
  CHECK(u == KuClass{2, -7});
  for (const WallLocus& l : {WallLocus(EmptyLocus{}), WallLocus(Everywhere{}),
                             WallLocus(VerticalLine{q(-1, 3)}),
                             WallLocus(Semicircle{q(-5, 6), q(1, 36)})}) {
    CHECK(locus_from_json(Json::parse(locus_json(l).dump())) == l);
  }
  for (const auto& c : walls_on_line(ChernCharacter(FanoContext::index_two(5), 2, 0, -2, 0), q(-1, 2))) {
    const WallCandidate back = candidate_from_json(Json::parse(candidate_json(c).dump()));
    CHECK(back.sub == c.sub);
    CHECK(back.quot == c.quot);
    CHECK(back.params == c.params);
    CHECK(back.beta == c.beta);
    CHECK(back.t == c.t);
    CHECK(back.locus == c.locus);
  }
  CHECK_THROWS_AS(chern_from_json(Json::parse(R"({"ctx":{"index":2},"ch":[]})")), ParseError);
  CHECK_THROWS_AS(chern_from_json(Json::parse(R"({"ctx":{"index":2,"degree":3},"ch":["1/0","0","0","0"]})")),
                  ParseError);
  CHECK(parse_class(x14, "1,0,-2") == ChernCharacter(x14, 1, 0, -2, 0));
  CHECK_THROWS_AS(parse_class(x14, "1,2,3,4,5"), ParseError);
  CHECK_THROWS_AS(parse_ku_class("1/2,0"), ParseError);
}

TEST_CASE("cli examples") {
  auto r = run({"euler", "--index", "2", "--degree", "3", "--a", "1,0,-1,0", "--b", "0,1,-3/2,-1/2"});
  CHECK(r.code == 0);
  CHECK(r.out == "-1\n");
  r = run({"classes", "--index", "2", "--degree", "3", "--r", "1", "--bound", "10", "--up-to-sign"});
  CHECK(r.code == 0);
  CHECK(r.out == "1,-1\n1,0\n2,-1\n");
  r = run({"walls", "--index", "2", "--degree", "5", "--class", "2,0,-2,0", "--beta", "-1/2", "--json"});
  CHECK(r.code == 0);
  const Json walls = Json::parse(r.out);
  REQUIRE(walls.size() == 3);
  CHECK(walls[0]["t"] == "1/20");
  CHECK(walls[1]["t"] == "ray");
  CHECK(walls[2]["t"] == "1/20");
  r = run({"chern", "--index", "1", "--degree", "14", "--rank", "2", "--c1", "1", "--c2", "6", "--json"});
  CHECK(chern_from_json(Json::parse(r.out)) ==
        ChernCharacter(FanoContext::of_genus(8), 2, 1, 1, q(-2, 3)));
  r = run({"slope", "--degree", "5", "--class", "2,0,-2,0", "--t", "1/20", "--beta", "-1/2"});
  CHECK(r.out == "-1/5\n");
  r = run({"serre", "--degree", "3"});
  CHECK(r.out.rfind("2 3\n-1 -1\n", 0) == 0);
  r = run({"largest-wall", "--degree", "5", "--class", "2,0,-2,0", "--json"});
  CHECK(Json::parse(r.out)["locus"]["radius_sq"] == "9/100");
  r = run({"largest-wall", "--degree", "2", "--class", "2,0,-2,0"});
  CHECK(r.out == "none\n");
  r = run({"pell", "--dp", "5", "--n", "2", "--bound", "200"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  r = run({"pairing", "--degree", "5", "--total", "2,0", "--target", "-1,-1"});
  CHECK(r.out == "sub 1,0 quot 1,0 target 0\n");
  r = run({"wall-between", "--degree", "3", "--a", "1,-1,3/2,-1/2", "--b", "2,0,-2,0"});
  CHECK(r.out == "semicircle center=-5/6 radius^2=1/36\n");
  r = run({"delta", "--degree", "4", "--class", "2,0,-2"});
  CHECK(r.out == "32\n");
  r = run({"bms", "--degree", "1", "--class", "1,0,-1,1", "--t", "0", "--beta", "-1/2"});
  CHECK(parse_rational(r.out.substr(0, r.out.size() - 1)) >= 0);
  r = run({"destab", "--degree", "1", "--bound", "4", "--survivors"});
  CHECK(r.out == "(0,-2,2) case 3: survives\npartition ok\n");
  r = run({"rotate", "--degree", "5", "--class", "1,0", "--steps", "2"});
  CHECK(r.out == "1,0\n-4,1\n11,-3\n");
  r = run({"hilbert", "--degree", "3", "--class", "0,0,0,1"});
  CHECK(r.out == "1 + (0)k + (0)k^2 + (0)k^3\n");
  r = run({"charge", "--degree", "3", "--class", "2,0,-2,0", "--t", "1", "--beta", "0", "--json"});
  CHECK(r.out == "{\"re\":\"5\",\"im\":\"0\"}\n");
}

TEST_CASE("cli exit codes") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"bogus"}).code == cli::kExitUsage);
  CHECK(run({"euler", "--degree", "3", "--a", "1"}).code == cli::kExitUsage);
  CHECK(run({"euler", "--degree", "3", "--a", "1", "--b", "1", "--frob"}).code == cli::kExitUsage);
  const auto bad = run({"euler", "--degree", "3", "--a", "1/0", "--b", "1"});
  CHECK(bad.code == cli::kExitUsage);
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());
  CHECK(run({"euler", "--degree", "7", "--a", "1", "--b", "1"}).code == cli::kExitDomain);
  const auto nonlattice = run({"walls", "--degree", "3", "--class", "1,0,0,1/3"});
  CHECK(nonlattice.code == cli::kExitDomain);
  CHECK(nonlattice.out.empty());
  CHECK(run({"rotate", "--degree", "3", "--class", "1,0"}).code == cli::kExitDomain);
  CHECK(run({"serre", "--index", "1", "--degree", "16"}).code == cli::kExitDomain);
  CHECK(run({"plot-walls", "--degree", "3", "--class", "2,0,-2,0", "--beta-lo", "0", "--beta-hi", "0"})
            .code == cli::kExitDomain);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("bound scale environment variable") {
  ::setenv("FANOWALLS_BOUND_SCALE", "2", 1);
  auto r = run({"walls", "--degree", "5", "--class", "2,0,-2,0"});
  CHECK(r.code == 0);
  ::setenv("FANOWALLS_BOUND_SCALE", "0", 1);
  r = run({"walls", "--degree", "5", "--class", "2,0,-2,0"});
  CHECK(r.code == cli::kExitUsage);
  ::setenv("FANOWALLS_BOUND_SCALE", "x", 1);
  CHECK(run({"walls", "--degree", "5", "--class", "2,0,-2,0"}).code == cli::kExitUsage);
  ::unsetenv("FANOWALLS_BOUND_SCALE");
}

TEST_CASE("plot output") {
  const auto y3 = run({"plot-walls", "--degree", "3", "--class", "2,0,-2,0", "--beta-lo", "-2",
                       "--beta-hi", "0"});
  CHECK(y3.code == 0);
  std::size_t arcs = 0;
  for (std::size_t pos = 0; (pos = y3.out.find("<path id=\"wall-", pos)) != std::string::npos; ++pos) {
    ++arcs;
  }
  CHECK(arcs == 1);
  CHECK(y3.out.find("semicircle center=-5/6 radius^2=1/36") != std::string::npos);

  const auto y5 = run({"plot-walls", "--degree", "5", "--class", "2,0,-2,0", "--line", "-1/2"});
  CHECK(y5.out.find("radius^2=9/100") != std::string::npos);
  CHECK(y5.out.find("t=1/20") != std::string::npos);
  CHECK(y5.out.find("<circle") != std::string::npos);

  const auto empty = run({"plot-walls", "--degree", "2", "--class", "2,0,-2,0"});
  CHECK(empty.code == 0);
  CHECK(empty.out.find("<path") == std::string::npos);
  CHECK(empty.out.find("id=\"axes\"") != std::string::npos);
}

TEST_CASE("outputs are byte-identical across runs and worker counts") {
  const std::vector<std::vector<std::string>> commands = {
      {"plot-walls", "--degree", "5", "--class", "2,0,-2,0", "--line", "-1/2"},
      {"walls", "--degree", "5", "--class", "2,0,-2,0", "--json"},
      {"largest-wall", "--degree", "4", "--class", "2,0,-2,0", "--json"},
  };
  for (auto cmd : commands) {
    const auto first = run(cmd);
    const auto second = run(cmd);
    cmd.push_back("--workers");
    cmd.push_back("3");
    const auto threaded = run(cmd);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out == threaded.out);
  }
}
