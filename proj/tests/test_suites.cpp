#include <catch2/catch_amalgamated.hpp>

#include "minorkit/apex.hpp"
#include "minorkit/suites.hpp"

using namespace minorkit;

namespace {

SuiteParams params(std::map<std::string, std::int64_t> v, std::uint64_t seed = 3) {
  SuiteParams p;
  p.values = std::move(v);
  p.seed = seed;
  return p;
}

void require_pass(const SuiteReport& r) {
  for (const auto& line : r.log) UNSCOPED_INFO(line);
  CHECK(r.passed);
}

}  // namespace

TEST_CASE("suite table", "[suites]") {
  CHECK(suite_table().size() == 12);
  CHECK_THROWS_AS(run_suite("bogus"), InputError);
}

TEST_CASE("small suite runs", "[suites]") {
  require_pass(run_suite("main-theorem", params({{"trials", 10}})));
  require_pass(run_suite("mader-density", params({{"n", 9}, {"trials", 10}})));
  require_pass(run_suite("small-minor", params({{"trials", 20}})));
  require_pass(run_suite("complete-bipartite", params({{"n", 9}})));
  require_pass(run_suite("oracle-equivalence", params({{"trials", 60}})));
  require_pass(run_suite("six-cluster", params({{"trials", 10}})));
  require_pass(run_suite("k474-feasibility", params({})));
  require_pass(run_suite("fig1", params({{"k", 2}})));
  require_pass(run_suite("fig1-apex", params({{"k", 2}, {"trials", 20}})));
}

TEST_CASE("suite reports", "[suites]") {
  const auto r = run_suite("fig1", params({{"k", 3}}));
  CHECK(r.passed);
  CHECK(r.name == "fig1");
  CHECK_FALSE(r.summary.empty());
  SuiteReport manual{"x"};
  manual.fail("boom");
  CHECK_FALSE(manual.passed);
  CHECK(manual.log.front() == "FAIL boom");
}

TEST_CASE("apex helpers", "[apex]") {
  const Graph g = Graph::on_range(3, {{0, 1}});
  const auto [gv, apex] = add_universal_vertex(g);
  CHECK(apex == 3);
  CHECK(gv.degree(3) == 3);
  CHECK(gv.size() == 4);
  const Cluster c{{{0}, {1}, {3}}};
  REQUIRE(validate_cluster(gv, c, 3));
  const Cluster d = drop_apex(c, 3);
  CHECK(d.size() == 2);
  CHECK(validate_cluster(g, d, 2));
  // Apex unused: the last set goes.
  CHECK(drop_apex(Cluster{{{0}, {1}}}, 3).size() == 1);
}

TEST_CASE("planted six-cluster instances meet the precondition", "[suites][six]") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto inst = planted_six_cluster_instance(s);
    REQUIRE(inst.bipartition.valid_for(inst.graph));
    CHECK(inst.graph.degree(0) == 6);
    for (Vertex h : inst.bipartition.side_a)
      if (h != 0) CHECK((inst.graph.neighbors(h) & inst.graph.neighbors(0)).size() <= 3);
  }
}
