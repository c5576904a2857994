#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "minorkit/constructions.hpp"
#include "minorkit/io.hpp"
#include "minorkit/search.hpp"

using namespace minorkit;

TEST_CASE("graph JSON layout", "[io]") {
  const auto k = gen_complete_bipartite(1, 2);
  const json j = graph_to_json(k.graph, k.bipartition);
  CHECK(j["n"] == 3);
  CHECK(j["vertices"] == json({0, 1, 2}));
  CHECK(j["edges"] == json::parse("[[0,1],[0,2]]"));
  CHECK(j["bipartition"]["A"] == json({0}));
  CHECK(j["bipartition"]["B"] == json({1, 2}));
  CHECK_FALSE(graph_to_json(k.graph).contains("bipartition"));
}

TEST_CASE("graph JSON round trip", "[io][property]") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 200; ++i) {
    const auto bg = gen_random_bipartite_mindegA(1 + rng() % 10, 1 + rng() % 10, 0, rng());
    const auto back = graph_from_string(graph_to_json(bg.graph, bg.bipartition).dump());
    CHECK(back.graph == bg.graph);
    REQUIRE(back.bipartition);
    CHECK(*back.bipartition == bg.bipartition);
  }
  // Sparse ids survive.
  const Graph g(VertexSet{3, 17, 200}, {{3, 200}});
  CHECK(graph_from_string(graph_to_json(g).dump()).graph == g);
}

TEST_CASE("graph JSON rejects bad input", "[io]") {
  CHECK_THROWS_AS(graph_from_string("{\"vertices\":[0,1],\"edges\":[[1,1]]}"), InputError);
  CHECK_THROWS_AS(graph_from_string("{\"vertices\":[0,1],\"edges\":[[0,1],[1,0]]}"), InputError);
  CHECK_THROWS_AS(graph_from_string("{\"vertices\":[0,1],\"edges\":[[0,2]]}"), InputError);
  CHECK_THROWS_AS(graph_from_string("{\"vertices\":[0,0],\"edges\":[]}"), InputError);
  CHECK_THROWS_AS(graph_from_string("{\"n\":3,\"vertices\":[0,1],\"edges\":[]}"), InputError);
  CHECK_THROWS_AS(graph_from_string("{\"vertices\":[0,1],\"edges\":[[0]]}"), InputError);
  CHECK_THROWS_AS(graph_from_string("{\"vertices\":[-1],\"edges\":[]}"), InputError);
  CHECK_THROWS_AS(graph_from_string("{\"vertices\":[0,1]"), InputError);
  CHECK_THROWS_AS(graph_from_string("[1,2]"), InputError);
  // Bipartition with an edge inside a side.
  CHECK_THROWS_AS(
      graph_from_string("{\"vertices\":[0,1],\"edges\":[[0,1]],\"bipartition\":{\"A\":[0,1],\"B\":[]}}"),
      InputError);
  // Bipartition missing a vertex.
  CHECK_THROWS_AS(
      graph_from_string("{\"vertices\":[0,1,2],\"edges\":[[0,1]],\"bipartition\":{\"A\":[0],\"B\":[1]}}"),
      InputError);
  CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.json"), InputError);
}

TEST_CASE("certificate JSON", "[io]") {
  const auto g = gen_complete_bipartite(6, 6).graph;
  const auto r = find_t_cluster(g, 6);
  REQUIRE(r.cluster);
  const json j = cluster_to_json(*r.cluster);
  CHECK(j["t"] == 6);
  CHECK(cluster_from_json(json::parse(j.dump())) == *r.cluster);
  CHECK_THROWS_AS(cluster_from_json(json::parse("{\"t\":3,\"branch_sets\":[[0]]}")), InputError);
  CHECK_THROWS_AS(cluster_from_json(json::parse("{\"t\":1}")), InputError);
}

TEST_CASE("other JSON and DOT outputs", "[io]") {
  const auto s = solve_game({Triangle(0, 1, 2)});
  const json gj = game_solution_to_json(s);
  CHECK(gj["middles"].size() == 1);
  CHECK(gj["embedding"].size() == 6);

  const auto k = gen_complete_bipartite(3, 5);
  const auto e = find_kpqr(k.graph, k.bipartition, 3, 5, 0);
  REQUIRE(e);
  CHECK(kpqr_to_json(*e)["b_vertices"] == json({3, 4, 5, 6, 7}));

  const auto k33 = gen_complete_bipartite(3, 3);
  const auto h = build_cover_graph(k33.graph, k33.bipartition, {0, 1}, {3, 4, 5});
  const json cj = cover_graph_to_json(h);
  CHECK(cj["witness"].size() == 3);
  CHECK(cj["graph"]["edges"].size() == 3);

  const std::string dot = to_dot(k33.graph, k33.bipartition);
  CHECK(dot.find("0 [shape=box]") != std::string::npos);
  CHECK(dot.find("3 [shape=circle]") != std::string::npos);
  CHECK(dot.find("0 -- 3;") != std::string::npos);
}
