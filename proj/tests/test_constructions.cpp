#include <catch2/catch_amalgamated.hpp>

#include "minorkit/constructions.hpp"
#include "minorkit/search.hpp"

using namespace minorkit;

namespace {

std::map<std::size_t, std::size_t> a_degrees(const BipartiteGraph& g) {
  std::map<std::size_t, std::size_t> h;
  for (Vertex a : g.bipartition.side_a) ++h[g.graph.degree(a)];
  return h;
}

}  // namespace

TEST_CASE("gen_complete_bipartite", "[gen]") {
  const auto k35 = gen_complete_bipartite(3, 5);
  CHECK(k35.graph.order() == 8);
  CHECK(k35.graph.size() == 15);
  CHECK(gen_complete_bipartite(4, 8).graph.size() == 4 * 12 - 16);
  const auto k11 = gen_complete_bipartite(1, 1);
  CHECK(k11.graph.edges() == std::vector<Edge>{{0, 1}});
  CHECK_THROWS_AS(gen_complete_bipartite(0, 3), InputError);
}

TEST_CASE("gen_fig1", "[gen]") {
  const auto g3 = gen_fig1(3);
  CHECK(g3.bipartition.side_a.size() == 9);
  CHECK(g3.bipartition.side_b.size() == 9);
  CHECK(a_degrees(g3) == std::map<std::size_t, std::size_t>{{4, 9}});
  CHECK(g3.bipartition.valid_for(g3.graph));

  const auto g1 = gen_fig1(1);
  CHECK(g1.graph.order() == 8);
  CHECK(g1.graph.size() == 12);
  // H is K_{3,5} minus a matching: three B-vertices of degree two.
  std::size_t deg2 = 0;
  for (Vertex b : g1.bipartition.side_b) deg2 += g1.graph.degree(b) == 2;
  CHECK(deg2 == 3);

  const auto g4 = gen_fig1(4);
  CHECK(g4.bipartition.side_a.size() == 12);
  CHECK(g4.bipartition.side_b.size() == 11);
  CHECK_THROWS_AS(gen_fig1(0), InputError);
}

TEST_CASE("gen_fig1_apex", "[gen]") {
  const auto g4 = gen_fig1_apex(4);
  CHECK(g4.bipartition.side_a.size() == 12);
  CHECK(g4.bipartition.side_b.size() == 12);
  CHECK(a_degrees(g4) == std::map<std::size_t, std::size_t>{{5, 12}});
  const auto g1 = gen_fig1_apex(1);
  CHECK(g1.graph.order() == 9);
  CHECK(a_degrees(g1) == std::map<std::size_t, std::size_t>{{5, 3}});
  const auto g2 = gen_fig1_apex(2);
  CHECK(g2.bipartition.side_a.size() == 6);
  CHECK(g2.bipartition.side_b.size() == 8);
}

TEST_CASE("gen_amplifier", "[gen]") {
  SECTION("k=1 without apex relabels") {
    const auto f = gen_fig1(1);
    const Vertex b = f.bipartition.side_b.front();
    const auto g = gen_amplifier(f.graph, f.bipartition, b, 1, false);
    CHECK(g.graph.order() == f.graph.order());
    CHECK(g.graph.size() == f.graph.size());
    CHECK(g.graph.degree_histogram() == f.graph.degree_histogram());
    CHECK(g.bipartition.side_a.size() == f.bipartition.side_a.size());
  }
  SECTION("k=2 on K_{1,1}") {
    const auto k = gen_complete_bipartite(1, 1);
    const auto g = gen_amplifier(k.graph, k.bipartition, 1, 2, false);
    CHECK(g.graph.order() == 3);
    CHECK(g.graph.edges() == std::vector<Edge>{{0, 1}, {0, 2}});
    CHECK(g.bipartition.side_b == VertexSet{0});
    CHECK(g.bipartition.side_a == VertexSet{1, 2});
  }
  SECTION("apex raises every A-degree by one") {
    const auto f = gen_fig1(2);
    const Vertex b = f.bipartition.side_b.back();
    const auto plain = gen_amplifier(f.graph, f.bipartition, b, 2, false);
    const auto apex = gen_amplifier(f.graph, f.bipartition, b, 2, true);
    CHECK(apex.bipartition.side_a == plain.bipartition.side_a);
    for (Vertex a : plain.bipartition.side_a) CHECK(apex.graph.degree(a) == plain.graph.degree(a) + 1);
    CHECK(plain.bipartition.side_a.size() == 2 * f.bipartition.side_a.size());
    CHECK(plain.bipartition.side_b.size() == 2 * (f.bipartition.side_b.size() - 1) + 1);
    CHECK(apex.bipartition.side_b.size() == plain.bipartition.side_b.size() + 1);
  }
  SECTION("gluing vertex on side A") {
    const auto k = gen_complete_bipartite(1, 1);
    CHECK_THROWS_AS(gen_amplifier(k.graph, k.bipartition, 0, 2, false), InputError);
  }
}

TEST_CASE("gen_geodesic and gen_apex_planar", "[gen]") {
  const Graph ico = gen_geodesic(1);
  CHECK(ico.order() == 12);
  CHECK(ico.size() == 30);
  CHECK(ico.degree_histogram() == std::map<std::size_t, std::size_t>{{5, 12}});

  const Graph g2 = gen_geodesic(2);
  CHECK(g2.order() == 42);
  CHECK(g2.size() == 120);
  CHECK(g2.degree_histogram() == std::map<std::size_t, std::size_t>{{5, 12}, {6, 30}});

  for (std::size_t m = 1; m <= 5; ++m) {
    const Graph g = gen_geodesic(m);
    CHECK(g.size() == 3 * g.order() - 6);
    std::map<std::size_t, std::size_t> expected{{5, 12}};
    if (m > 1) expected[6] = 10 * m * m - 10;
    CHECK(g.degree_histogram() == expected);
  }
  CHECK(gen_geodesic(1).degree_histogram().size() == 1);
  CHECK_THROWS_AS(gen_geodesic(6), InputError);

  const Graph a1 = gen_apex_planar(1);
  CHECK(a1.order() == 13);
  CHECK(a1.size() == 42);
  CHECK(a1.min_degree() == 6);
  const Graph a2 = gen_apex_planar(2);
  CHECK(a2.order() == 43);
  CHECK(a2.size() == 162);
  CHECK(a2.min_degree() == 6);
}

TEST_CASE("gen_five_k35", "[gen]") {
  const Graph g = gen_five_k35();
  CHECK(g.order() == 42);
  CHECK(two_coloring(g).has_value());
  CHECK(g.max_degree() == 5);
  CHECK(2 * g.size() >= 4 * g.order());
  for (Vertex c = 0; c < 5; ++c) CHECK(g.degree(8 * c + 3) == 5);
  // No K5 minor: tested, with a generous budget.
  CHECK(find_t_cluster(g, 5, SearchBudget::seconds(120)).status == SearchStatus::absent);
}

TEST_CASE("gen_random_bipartite_mindegA", "[gen]") {
  const auto k66 = gen_random_bipartite_mindegA(6, 6, 6, 99);
  CHECK(k66.graph == gen_complete_bipartite(6, 6).graph);
  const auto g = gen_random_bipartite_mindegA(8, 6, 6, 5);
  CHECK(a_degrees(g) == std::map<std::size_t, std::size_t>{{6, 8}});
  const auto x = gen_random_bipartite_mindegA(10, 9, 6, 1234);
  const auto y = gen_random_bipartite_mindegA(10, 9, 6, 1234);
  CHECK(x.graph == y.graph);
  for (Vertex a : x.bipartition.side_a) CHECK(x.graph.degree(a) >= 6);
  CHECK_THROWS_AS(gen_random_bipartite_mindegA(3, 2, 3, 1), InputError);
}

TEST_CASE("generate by name", "[gen]") {
  CHECK(generate({parse_family("fig1"), {{"k", 3}}}).graph.order() == 18);
  CHECK(generate({parse_family("complete_bipartite"), {{"m", 4}, {"n", 8}}}).graph.size() == 32);
  CHECK(generate({parse_family("geodesic"), {{"m", 2}}}).graph.order() == 42);
  CHECK(generate({parse_family("kpqr"), {{"p", 4}, {"q", 7}, {"r", 4}}}).graph.size() == 24);
  CHECK_THROWS_AS(parse_family("nosuch"), InputError);
  CHECK_THROWS_AS(generate({Family::fig1, {}}), InputError);
  CHECK_THROWS_AS(generate({Family::fig1, {{"k", 3}, {"zz", 1}}}), InputError);
  CHECK_THROWS_AS(generate({Family::geodesic, {{"m", 0}}}), InputError);
  CHECK_THROWS_AS(generate({Family::amplifier, {{"k", 2}, {"b", 0}}}), InputError);
  const auto base = gen_complete_bipartite(1, 1);
  CHECK(generate({Family::amplifier, {{"k", 2}, {"b", 1}}}, base).graph.order() == 3);
  for (auto [fam, name] : family_names) CHECK(parse_family(name) == fam);
}
