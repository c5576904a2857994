#ifndef MINORKIT_CONSTRUCTIONS_HPP
#define MINORKIT_CONSTRUCTIONS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "minorkit/graph.hpp"

namespace minorkit {

struct BipartiteGraph {
  Graph graph;
  Bipartition bipartition;
};

namespace detail {
inline void require_ids(std::size_t n) {
  if (n > VertexSet::capacity)
    throw InputError("construction needs " + std::to_string(n) + " vertices, more than " +
                     std::to_string(VertexSet::capacity));
}
}  // namespace detail

/// K_{m,n}: side A = {0..m-1}, side B = {m..m+n-1}.
inline BipartiteGraph gen_complete_bipartite(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw InputError("complete_bipartite needs m, n >= 1");
  detail::require_ids(m + n);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < m; ++a)
    for (Vertex b = 0; b < n; ++b) edges.emplace_back(a, static_cast<Vertex>(m + b));
  const auto all = static_cast<Vertex>(m + n);
  return {Graph::on_range(all, edges),
          {VertexSet::range(static_cast<Vertex>(m)), VertexSet::range(all) - VertexSet::range(static_cast<Vertex>(m))}};
}

/// k copies of K_{3,5} minus the matching x_i y_i (i = 1..3), glued along the
/// three degree-two vertices y_1, y_2, y_3.
///
/// Layout: copy c has A-vertices 3c, 3c+1, 3c+2 (each of degree four); the
/// shared B-vertices are 3k, 3k+1, 3k+2; copy c's private B-vertices are
/// 3k+3+2c and 3k+4+2c.
inline BipartiteGraph gen_fig1(std::size_t k) {
  if (k < 1) throw InputError("fig1 needs k >= 1");
  const std::size_t n = 5 * k + 3;
  detail::require_ids(n);
  std::vector<Edge> edges;
  const auto shared = static_cast<Vertex>(3 * k);
  for (std::size_t c = 0; c < k; ++c) {
    std::array<Vertex, 5> y{shared, shared + 1, shared + 2, static_cast<Vertex>(3 * k + 3 + 2 * c),
                            static_cast<Vertex>(3 * k + 4 + 2 * c)};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 5; ++j)
        if (i != j) edges.emplace_back(static_cast<Vertex>(3 * c + i), y[j]);
  }
  std::sort(edges.begin(), edges.end());
  const auto a_end = static_cast<Vertex>(3 * k);
  return {Graph::on_range(static_cast<Vertex>(n), edges),
          {VertexSet::range(a_end), VertexSet::range(static_cast<Vertex>(n)) - VertexSet::range(a_end)}};
}

/// gen_fig1(k) plus a B-side vertex (id 5k+3) adjacent to every A-vertex.
inline BipartiteGraph gen_fig1_apex(std::size_t k) {
  auto base = gen_fig1(k);
  const auto apex = static_cast<Vertex>(5 * k + 3);
  detail::require_ids(apex + 1);
  auto edges = base.graph.edges();
  for (Vertex a : base.bipartition.side_a) edges.emplace_back(a, apex);
  VertexSet vs = base.graph.vertices();
  vs.insert(apex);
  base.bipartition.side_b.insert(apex);
  return {Graph(vs, edges), base.bipartition};
}

/// k disjoint copies of g glued at the B-vertex b, optionally with one more
/// B-vertex adjacent to every A-vertex.
///
/// b becomes vertex 0; copy c maps the i-th other vertex of g (by id) to
/// 1 + c(|V|-1) + i; the apex, if any, is 1 + k(|V|-1).
inline BipartiteGraph gen_amplifier(const Graph& g, const Bipartition& bip, Vertex b, std::size_t k, bool add_apex) {
  bip.check(g);
  if (!bip.side_b.contains(b)) throw InputError("amplifier gluing vertex must lie on side B");
  if (k < 1) throw InputError("amplifier needs k >= 1");
  const auto others = (g.vertices() - VertexSet{b}).to_vector();
  const std::size_t per = others.size();
  const std::size_t n = 1 + k * per + (add_apex ? 1 : 0);
  detail::require_ids(n);
  std::map<Vertex, std::size_t> pos;
  for (std::size_t i = 0; i < per; ++i) pos[others[i]] = i;
  auto image = [&](std::size_t c, Vertex v) -> Vertex {
    return v == b ? 0 : static_cast<Vertex>(1 + c * per + pos.at(v));
  };
  std::vector<Edge> edges;
  Bipartition out;
  out.side_b.insert(0);
  for (std::size_t c = 0; c < k; ++c) {
    for (auto [u, v] : g.edges()) {
      const Vertex x = image(c, u), y = image(c, v);
      edges.emplace_back(std::min(x, y), std::max(x, y));
    }
    for (Vertex v : others) (bip.side_a.contains(v) ? out.side_a : out.side_b).insert(image(c, v));
  }
  if (add_apex) {
    const auto apex = static_cast<Vertex>(1 + k * per);
    for (Vertex a : out.side_a) edges.emplace_back(a, apex);
    out.side_b.insert(apex);
  }
  return {Graph::on_range(static_cast<Vertex>(n), edges), out};
}

/// (m,0) geodesic subdivision of the icosahedron: every face is cut into m^2
/// triangles. 10m^2+2 vertices, twelve of degree five and the rest of
/// degree six. The twelve original corners keep ids 0..11.
inline Graph gen_geodesic(std::size_t m) {
  if (m < 1) throw InputError("geodesic needs m >= 1");
  detail::require_ids(10 * m * m + 2);
  // Corners: 0 = north pole, 1..5 upper ring, 6..10 lower ring, 11 = south
  // pole. Lower vertex 6+i sits between upper vertices 1+i and 1+(i+1)%5.
  std::vector<std::array<Vertex, 3>> faces;
  for (Vertex i = 0; i < 5; ++i) {
    const Vertex u0 = 1 + i, u1 = 1 + (i + 1) % 5, l0 = 6 + i, l1 = 6 + (i + 1) % 5;
    faces.push_back({0, u0, u1});
    faces.push_back({u0, u1, l0});
    faces.push_back({u1, l1, l0});
    faces.push_back({11, l0, l1});
  }

  // A lattice point is keyed by where it lives: a corner, an edge position
  // measured from the edge's lower corner, or a face interior.
  using Key = std::tuple<int, Vertex, Vertex, std::size_t, std::size_t>;
  std::map<Key, Vertex> ids;
  for (Vertex c = 0; c < 12; ++c) ids[{0, c, 0, 0, 0}] = c;

  auto key_of = [&](std::size_t f, std::size_t i, std::size_t j) -> Key {
    // Barycentric weights (i, j, m-i-j) on face corners (p, q, r).
    const auto& [p, q, r] = faces[f];
    const std::size_t l = m - i - j;
    const std::array<std::pair<Vertex, std::size_t>, 3> w{{{p, i}, {q, j}, {r, l}}};
    std::vector<std::pair<Vertex, std::size_t>> nz;
    for (auto x : w)
      if (x.second) nz.push_back(x);
    if (nz.size() == 1) return {0, nz[0].first, 0, 0, 0};
    if (nz.size() == 2) {
      auto lo = std::min(nz[0], nz[1]);
      auto hi = std::max(nz[0], nz[1]);
      return {1, lo.first, hi.first, hi.second, 0};  // steps away from lo
    }
    return {2, static_cast<Vertex>(f), 0, i, j};
  };

  std::set<Key> edge_keys, face_keys;
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (std::size_t i = 0; i <= m; ++i)
      for (std::size_t j = 0; i + j <= m; ++j) {
        Key k = key_of(f, i, j);
        if (std::get<0>(k) == 1) edge_keys.insert(k);
        if (std::get<0>(k) == 2) face_keys.insert(k);
      }
  Vertex next = 12;
  for (const auto& k : edge_keys) ids[k] = next++;
  for (const auto& k : face_keys) ids[k] = next++;

  std::set<Edge> edges;
  auto link = [&](const Key& a, const Key& b) {
    Vertex x = ids.at(a), y = ids.at(b);
    edges.insert({std::min(x, y), std::max(x, y)});
  };
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (std::size_t i = 0; i <= m; ++i)
      for (std::size_t j = 0; i + j <= m; ++j) {
        const Key here = key_of(f, i, j);
        if (i + j < m) {
          link(here, key_of(f, i + 1, j));
          link(here, key_of(f, i, j + 1));
        }
        if (i > 0) link(here, key_of(f, i - 1, j + 1));
      }
  return Graph::on_range(next, {edges.begin(), edges.end()});
}

/// gen_geodesic(m) plus a vertex adjacent to everything: 4|V|-10 edges and
/// no K_6 minor.
inline Graph gen_apex_planar(std::size_t m) {
  const Graph base = gen_geodesic(m);
  const Vertex apex = base.fresh_id();
  detail::require_ids(apex + 1);
  auto edges = base.edges();
  for (Vertex v : base.vertices()) edges.emplace_back(v, apex);
  return Graph::on_range(apex + 1, edges);
}

/// Five disjoint K_{3,5}; in copy i a degree-three vertex v_i; two extra
/// vertices (40, 41) each adjacent to v_1..v_5. Copy i uses ids 8i..8i+2 for
/// its degree-five side and 8i+3..8i+7 for its degree-three side, with
/// v_i = 8i+3.
inline Graph gen_five_k35() {
  std::vector<Edge> edges;
  for (Vertex c = 0; c < 5; ++c)
    for (Vertex x = 0; x < 3; ++x)
      for (Vertex y = 3; y < 8; ++y) edges.emplace_back(8 * c + x, 8 * c + y);
  for (Vertex c = 0; c < 5; ++c) {
    edges.emplace_back(8 * c + 3, 40);
    edges.emplace_back(8 * c + 3, 41);
  }
  return Graph::on_range(42, edges);
}

/// The standalone K(p,q,r) pattern: a_i = i-1, b_j = p+j-1, every a_i b_j an
/// edge except a_i b_i for i <= r.
inline BipartiteGraph gen_kpqr_pattern(std::size_t p, std::size_t q, std::size_t r) {
  if (p < 1 || q < 1) throw InputError("kpqr pattern needs p, q >= 1");
  if (r > std::min(p, q)) throw InputError("r must not exceed min(p, q)");
  detail::require_ids(p + q);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j)
      if (i != j || i >= r) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(p + j));
  const auto n = static_cast<Vertex>(p + q);
  const auto a_end = static_cast<Vertex>(p);
  return {Graph::on_range(n, edges), {VertexSet::range(a_end), VertexSet::range(n) - VertexSet::range(a_end)}};
}

/// Each A-vertex gets a uniform random d-subset of B, then every remaining
/// A-B pair is added with probability 0.1. A = {0..nA-1}, B = {nA..nA+nB-1}.
inline BipartiteGraph gen_random_bipartite_mindegA(std::size_t n_a, std::size_t n_b, std::size_t d,
                                                   std::uint64_t seed) {
  if (d > n_b) throw InputError("min degree exceeds the size of side B");
  if (n_a + n_b == 0) throw InputError("empty graph requested");
  detail::require_ids(n_a + n_b);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Vertex> bs;
  for (std::size_t i = 0; i < n_b; ++i) bs.push_back(static_cast<Vertex>(n_a + i));
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n_a; ++a) {
    std::vector<Vertex> pick;
    std::sample(bs.begin(), bs.end(), std::back_inserter(pick), d, rng);
    std::set<Vertex> chosen(pick.begin(), pick.end());
    for (Vertex b : bs)
      if (chosen.count(b) || coin(rng) < 0.1) edges.emplace_back(a, b);
  }
  const auto n = static_cast<Vertex>(n_a + n_b);
  const auto a_end = static_cast<Vertex>(n_a);
  return {Graph::on_range(n, edges), {VertexSet::range(a_end), VertexSet::range(n) - VertexSet::range(a_end)}};
}

/// Uniform random graph on n vertices with exactly m edges.
inline Graph gen_random_graph(std::size_t n, std::size_t m, std::uint64_t seed) {
  detail::require_ids(n);
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  if (m > pairs.size()) throw InputError("too many edges requested");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  std::sample(pairs.begin(), pairs.end(), std::back_inserter(edges), m, rng);
  return Graph::on_range(static_cast<Vertex>(n), edges);
}

/// Random graph where each pair is an edge with probability p.
inline Graph gen_random_gnp(std::size_t n, double p, std::uint64_t seed) {
  detail::require_ids(n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng) < p) edges.emplace_back(u, v);
  return Graph::on_range(static_cast<Vertex>(n), edges);
}

// ---------------------------------------------------------------------------
// Named families, as used by the command line.

enum class Family {
  complete_bipartite,
  fig1,
  fig1_apex,
  amplifier,
  apex_planar,
  geodesic,
  five_k35,
  random_bipartite_mindegA,
  kpqr
};

inline constexpr std::array<std::pair<Family, const char*>, 9> family_names{{
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::fig1, "fig1"},
    {Family::fig1_apex, "fig1_apex"},
    {Family::amplifier, "amplifier"},
    {Family::apex_planar, "apex_planar"},
    {Family::geodesic, "geodesic"},
    {Family::five_k35, "five_k35"},
    {Family::random_bipartite_mindegA, "random_bipartite_mindegA"},
    {Family::kpqr, "kpqr"},
}};

inline std::string to_string(Family f) {
  for (auto [fam, name] : family_names)
    if (fam == f) return name;
  return "?";
}

inline Family parse_family(const std::string& name) {
  for (auto [fam, name_] : family_names)
    if (name == name_) return fam;
  throw InputError("unknown family '" + name + "'");
}

struct FamilySpec {
  Family family;
  std::map<std::string, std::int64_t> params;

  std::int64_t get(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw InputError(to_string(family) + " requires parameter " + key);
    return it->second;
  }
  std::int64_t get(const std::string& key, std::int64_t fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  }
};

struct Generated {
  Graph graph;
  std::optional<Bipartition> bipartition;
};

/// Runs the generator named by `spec`. Parameter names per family:
///   complete_bipartite m n | fig1 k | fig1_apex k | geodesic m |
///   apex_planar m | five_k35 (none) | random_bipartite_mindegA m n min_deg seed |
///   amplifier k b apex(0/1), glued copies of `base` | kpqr p q r.
inline Generated generate(const FamilySpec& spec, const std::optional<BipartiteGraph>& base = std::nullopt) {
  auto count = [&](const std::string& key, std::int64_t lo, std::int64_t hi) -> std::size_t {
    const auto v = spec.get(key);
    if (v < lo || v > hi)
      throw InputError("parameter " + key + "=" + std::to_string(v) + " out of range [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
    return static_cast<std::size_t>(v);
  };
  for (const auto& [key, value] : spec.params) {
    static const std::set<std::string> known{"m", "n", "k", "seed", "min_deg", "b", "apex", "p", "q", "r"};
    if (!known.count(key)) throw InputError("unknown parameter " + key);
  }
  switch (spec.family) {
    case Family::complete_bipartite: {
      auto g = gen_complete_bipartite(count("m", 1, 255), count("n", 1, 255));
      return {g.graph, g.bipartition};
    }
    case Family::fig1: {
      auto g = gen_fig1(count("k", 1, 50));
      return {g.graph, g.bipartition};
    }
    case Family::fig1_apex: {
      auto g = gen_fig1_apex(count("k", 1, 50));
      return {g.graph, g.bipartition};
    }
    case Family::amplifier: {
      if (!base) throw InputError("amplifier needs a base bipartite graph");
      auto g = gen_amplifier(base->graph, base->bipartition, static_cast<Vertex>(count("b", 0, max_vertex_id)),
                             count("k", 1, 255), spec.get("apex", 0) != 0);
      return {g.graph, g.bipartition};
    }
    case Family::apex_planar:
      return {gen_apex_planar(count("m", 1, 4)), std::nullopt};
    case Family::geodesic: {
      Graph g = gen_geodesic(count("m", 1, 5));
      return {g, std::nullopt};
    }
    case Family::five_k35: {
      Graph g = gen_five_k35();
      return {g, two_coloring(g)};
    }
    case Family::random_bipartite_mindegA: {
      auto g = gen_random_bipartite_mindegA(count("m", 1, 128), count("n", 1, 128), count("min_deg", 0, 128),
                                            static_cast<std::uint64_t>(spec.get("seed")));
      return {g.graph, g.bipartition};
    }
    case Family::kpqr: {
      auto g = gen_kpqr_pattern(count("p", 1, 128), count("q", 1, 128), count("r", 0, 128));
      return {g.graph, g.bipartition};
    }
  }
  throw InputError("unhandled family");
}

}  // namespace minorkit

#endif  // MINORKIT_CONSTRUCTIONS_HPP
