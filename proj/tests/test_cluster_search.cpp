#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "minorkit/brute_force.hpp"
#include "minorkit/constructions.hpp"
#include "minorkit/reduce.hpp"
#include "minorkit/search.hpp"

using namespace minorkit;

namespace {

Graph complete(Vertex n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::on_range(n, e);
}

Graph path(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::on_range(n, e);
}

Graph cycle(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph::on_range(n, e);
}

Cluster singletons(Vertex n) {
  Cluster c;
  for (Vertex v = 0; v < n; ++v) c.branch_sets.push_back(VertexSet{v});
  return c;
}

}  // namespace

TEST_CASE("validate_cluster", "[cluster]") {
  CHECK(validate_cluster(complete(6), singletons(6), 6).accepted());

  // K_{3,3}: x = 0..2, y = 3..5.
  const auto k33 = gen_complete_bipartite(3, 3).graph;
  CHECK(validate_cluster(k33, Cluster{{{0, 3}, {1, 4}, {2}, {5}}}, 4).accepted());

  const auto v = validate_cluster(path(6), singletons(6), 6);
  CHECK(v.defect == ClusterDefect::missing_edge);
  CHECK(v.first == 0);
  CHECK(v.second == 2);

  CHECK(validate_cluster(complete(4), singletons(4), 5).defect == ClusterDefect::wrong_count);
  CHECK(validate_cluster(complete(4), Cluster{{{0}, {}}}, 2).defect == ClusterDefect::empty_set);
  CHECK(validate_cluster(complete(4), Cluster{{{0, 1}, {1}}}, 2).defect == ClusterDefect::overlap);
  CHECK(validate_cluster(path(4), Cluster{{{0, 2}, {1}}}, 2).defect == ClusterDefect::disconnected);
  CHECK_THROWS_AS(validate_cluster(path(4), Cluster{{{0}, {9}}}, 2), InputError);
}

TEST_CASE("brute_force_t_cluster", "[oracle]") {
  const auto k5 = brute_force_t_cluster(complete(5), 5);
  REQUIRE(k5);
  CHECK(validate_cluster(complete(5), *k5, 5));
  CHECK_FALSE(brute_force_t_cluster(gen_complete_bipartite(3, 3).graph, 5));
  CHECK_FALSE(brute_force_t_cluster(gen_geodesic(1), 5));
  CHECK(brute_force_t_cluster(gen_geodesic(1), 4));
  CHECK_THROWS_AS(brute_force_t_cluster(path(13), 3), RefusedError);
}

TEST_CASE("find_t_cluster examples", "[search]") {
  SECTION("K6 minus an edge has no K6") {
    Graph g = delete_vertices(complete(6), {});
    auto e = g.edges();
    e.erase(e.begin());
    CHECK(find_t_cluster(Graph::on_range(6, e), 6).status == SearchStatus::absent);
  }
  SECTION("K6 gives six singletons") {
    const auto r = find_t_cluster(complete(6), 6);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(*r.cluster == singletons(6));
  }
  SECTION("K_{3,5} has no K5") {
    CHECK(find_t_cluster(gen_complete_bipartite(3, 5).graph, 5).status == SearchStatus::absent);
  }
  SECTION("fig1(3) has no K5") {
    CHECK(find_t_cluster(gen_fig1(3).graph, 5).status == SearchStatus::absent);
  }
  SECTION("K_{6,6} has K6") {
    const auto g = gen_complete_bipartite(6, 6).graph;
    const auto r = find_t_cluster(g, 6);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(validate_cluster(g, *r.cluster, 6));
  }
  SECTION("icosahedron: K4 yes, K5 no") {
    CHECK(find_t_cluster(gen_geodesic(1), 4).status == SearchStatus::found);
    CHECK(find_t_cluster(gen_geodesic(1), 5).status == SearchStatus::absent);
  }
  SECTION("small t") {
    CHECK(find_t_cluster(Graph::on_range(1, {}), 1).status == SearchStatus::found);
    CHECK(find_t_cluster(Graph::on_range(2, {}), 2).status == SearchStatus::absent);
    CHECK(find_t_cluster(path(5), 3).status == SearchStatus::absent);
    CHECK(find_t_cluster(cycle(5), 3).status == SearchStatus::found);
  }
  SECTION("guards") {
    CHECK_THROWS_AS(find_t_cluster(path(3), 0), InputError);
    CHECK_THROWS_AS(find_t_cluster(path(3), 17), RefusedError);
    CHECK_THROWS_AS(find_t_cluster(path(3), 3, SearchBudget{0, 1.0}), InputError);
  }
  SECTION("node limit gives timeout") {
    const auto r = find_t_cluster(gen_fig1(3).graph, 5, SearchBudget{1, 1e9});
    CHECK(r.status == SearchStatus::timeout);
  }
  SECTION("parallel workers agree") {
    CHECK(find_t_cluster(gen_fig1(3).graph, 5, {}, 3).status == SearchStatus::absent);
    const auto g = gen_complete_bipartite(5, 7).graph;
    const auto r = find_t_cluster(g, 6, {}, 3);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(validate_cluster(g, *r.cluster, 6));
  }
}

TEST_CASE("reduce_for_minor", "[reduce]") {
  SECTION("K6 with a pendant path") {
    Graph k6 = complete(6);
    auto e = k6.edges();
    e.insert(e.end(), {{5, 6}, {6, 7}, {7, 8}});
    const Graph g = Graph::on_range(9, e);
    const Graph h = reduce_for_minor(g, 6);
    CHECK(h.order() == 6);
    CHECK(h.size() == 15);
  }
  SECTION("10-cycle collapses") {
    const Graph h = reduce_for_minor(cycle(10), 4);
    CHECK(h.order() <= 1);
    CHECK(find_t_cluster(cycle(10), 4).status == SearchStatus::absent);
  }
  SECTION("fig1(3) is unchanged") {
    const Graph g = gen_fig1(3).graph;
    CHECK(reduce_for_minor(g, 5) == g);
  }
  SECTION("t below 4 is rejected") { CHECK_THROWS_AS(reduce_for_minor(path(4), 3), PreconditionError); }
}

TEST_CASE("search agrees with the brute-force oracle", "[search][property]") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng() % 9;
    const std::size_t m = rng() % (n * (n - 1) / 2 + 1);
    const std::size_t t = 2 + rng() % 5;
    const Graph g = gen_random_graph(n, m, rng());
    const bool oracle = brute_force_t_cluster(g, t).has_value();
    const auto r = find_t_cluster(g, t);
    INFO("n=" << n << " m=" << m << " t=" << t);
    REQUIRE(r.status != SearchStatus::timeout);
    CHECK((r.status == SearchStatus::found) == oracle);
    if (r.cluster) CHECK(validate_cluster(g, *r.cluster, t));
  }
}

TEST_CASE("monotonicity in t", "[search][property]") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 4 + rng() % 9;
    const Graph g = gen_random_gnp(n, 0.3 + 0.5 * (rng() % 100) / 100.0, rng());
    for (std::size_t t = 6; t >= 2; --t) {
      const auto r = find_t_cluster(g, t);
      if (r.status == SearchStatus::found) {
        CHECK(find_t_cluster(g, t - 1).status == SearchStatus::found);
        break;
      }
    }
  }
}

TEST_CASE("reduction preserves the verdict", "[reduce][property]") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 2 + rng() % 9;
    const std::size_t m = rng() % (n * (n - 1) / 2 + 1);
    const std::size_t t = 4 + rng() % 2;
    const Graph g = gen_random_graph(n, m, rng());
    const Reduction red = reduce_for_minor_tracked(g, t);
    INFO("n=" << n << " m=" << m << " t=" << t);
    CHECK(brute_force_t_cluster(g, t).has_value() == brute_force_t_cluster(red.graph, t).has_value());
    if (auto c = brute_force_t_cluster(red.graph, t)) {
      Cluster lifted;
      for (const auto& b : c->branch_sets) lifted.branch_sets.push_back(red.lift(b));
      CHECK(validate_cluster(g, lifted, t));
    }
  }
}

TEST_CASE("minimize_cluster keeps validity", "[cluster]") {
  const Graph g = complete(5);
  const Cluster big{{{0, 1}, {2}, {3, 4}}};
  const Cluster small = minimize_cluster(g, big);
  CHECK(validate_cluster(g, small, 3));
  CHECK(small.support().size() == 3);
}
