#ifndef MINORKIT_GRAPH_HPP
#define MINORKIT_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minorkit/errors.hpp"
#include "minorkit/vertex_set.hpp"

namespace minorkit {

/// Undirected edge, always stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph over small integer vertex ids.
///
/// Ids need not be contiguous. Adjacency is kept as one VertexSet per id so
/// neighbourhood unions and intersections are word operations.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on `vertices` with the given edges. Throws InputError on
  /// loops, repeated edges, or endpoints outside `vertices`.
  Graph(const VertexSet& vertices, const std::vector<Edge>& edges) : vertices_(vertices) {
    adj_.resize(vertices.empty() ? 0 : vertices.back() + 1);
    for (auto [u, v] : edges) {
      if (u == v) throw InputError("loop at vertex " + std::to_string(u));
      if (!vertices_.contains(u) || !vertices_.contains(v))
        throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                         " has an endpoint outside the vertex set");
      if (adj_[u].contains(v))
        throw InputError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
      adj_[u].insert(v);
      adj_[v].insert(u);
      ++edge_count_;
    }
  }

  /// Graph on vertices 0..n-1.
  static Graph on_range(Vertex n, const std::vector<Edge>& edges) {
    if (n > VertexSet::capacity) throw InputError("too many vertices");
    return Graph(VertexSet::range(n), edges);
  }

  const VertexSet& vertices() const { return vertices_; }
  std::size_t order() const { return vertices_.size(); }
  std::size_t size() const { return edge_count_; }

  bool has_vertex(Vertex v) const { return vertices_.contains(v); }
  bool adjacent(Vertex u, Vertex v) const { return u < adj_.size() && adj_[u].contains(v); }

  const VertexSet& neighbors(Vertex v) const {
    static const VertexSet none;
    return v < adj_.size() ? adj_[v] : none;
  }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  /// Union of neighbourhoods of `x`, minus `x` itself.
  VertexSet neighbors_of_set(const VertexSet& x) const {
    VertexSet out;
    for (Vertex v : x) out |= neighbors(v);
    return out - x;
  }

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u : vertices_)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// Smallest id not used by this graph.
  Vertex fresh_id() const {
    for (Vertex v = 0; v <= max_vertex_id; ++v)
      if (!vertices_.contains(v)) return v;
    throw InputError("vertex id space exhausted");
  }

  /// Whether g[x] is connected. The empty set counts as disconnected.
  bool is_connected_set(const VertexSet& x) const {
    if (x.empty()) return false;
    VertexSet seen{x.front()};
    VertexSet frontier = seen;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= neighbors(v);
      next &= x;
      next -= seen;
      seen |= next;
      frontier = next;
    }
    return seen == x;
  }

  bool is_connected() const { return vertices_.empty() || is_connected_set(vertices_); }

  /// Degree value -> number of vertices with that degree.
  std::map<std::size_t, std::size_t> degree_histogram() const {
    std::map<std::size_t, std::size_t> h;
    for (Vertex v : vertices_) ++h[degree(v)];
    return h;
  }

  std::size_t min_degree() const {
    std::size_t d = vertices_.empty() ? 0 : SIZE_MAX;
    for (Vertex v : vertices_) d = std::min(d, degree(v));
    return d;
  }
  std::size_t max_degree() const {
    std::size_t d = 0;
    for (Vertex v : vertices_) d = std::max(d, degree(v));
    return d;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges() == b.edges();
  }

 private:
  VertexSet vertices_;
  std::vector<VertexSet> adj_;
  std::size_t edge_count_ = 0;
};

enum class Side { A, B };

/// Two-sided labelling of a graph's vertices with every edge crossing sides.
struct Bipartition {
  VertexSet side_a;
  VertexSet side_b;

  const VertexSet& side(Side s) const { return s == Side::A ? side_a : side_b; }

  /// Empty string when valid for `g`, otherwise a description of the violation.
  std::string violation(const Graph& g) const {
    if (side_a.intersects(side_b)) return "sides overlap";
    if ((side_a | side_b) != g.vertices()) return "sides do not cover the vertex set";
    for (auto [u, v] : g.edges())
      if (side_a.contains(u) == side_a.contains(v))
        return "edge " + std::to_string(u) + "-" + std::to_string(v) + " lies inside one side";
    return {};
  }
  bool valid_for(const Graph& g) const { return violation(g).empty(); }

  void check(const Graph& g) const {
    if (auto why = violation(g); !why.empty()) throw InputError("invalid bipartition: " + why);
  }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

namespace detail {
inline void require_subset(const Graph& g, const VertexSet& x) {
  if (!x.is_subset_of(g.vertices()))
    throw InputError("vertex set " + (x - g.vertices()).to_string() + " not in graph");
}
}  // namespace detail

/// G \ X. Vertex ids of survivors are preserved.
inline Graph delete_vertices(const Graph& g, const VertexSet& x) {
  detail::require_subset(g, x);
  std::vector<Edge> kept;
  for (auto e : g.edges())
    if (!x.contains(e.first) && !x.contains(e.second)) kept.push_back(e);
  return Graph(g.vertices() - x, kept);
}

/// G[X] = G \ (V(G) \ X).
inline Graph induced_subgraph(const Graph& g, const VertexSet& x) {
  detail::require_subset(g, x);
  return delete_vertices(g, g.vertices() - x);
}

/// Contracts the connected set `x` to a single fresh vertex (the smallest id
/// not present in g). Returns the new graph and that id.
inline std::pair<Graph, Vertex> contract_set(const Graph& g, const VertexSet& x) {
  detail::require_subset(g, x);
  if (x.empty()) throw PreconditionError("cannot contract an empty set");
  if (!g.is_connected_set(x))
    throw PreconditionError("contracted set " + x.to_string() + " is not connected");
  const Vertex fresh = g.fresh_id();
  std::vector<Edge> edges;
  for (auto e : g.edges())
    if (!x.contains(e.first) && !x.contains(e.second)) edges.push_back(e);
  for (Vertex u : g.neighbors_of_set(x))
    edges.emplace_back(std::min(u, fresh), std::max(u, fresh));
  VertexSet vs = g.vertices() - x;
  vs.insert(fresh);
  return {Graph(vs, edges), fresh};
}

struct SideContraction {
  Graph graph;
  Bipartition bipartition;
  Vertex vertex;
};

/// Contracts `x` into the given side: contract to one vertex, then drop its
/// edges to that side so the result keeps a bipartition.
inline SideContraction contract_into_side(const Graph& g, const Bipartition& bip, const VertexSet& x,
                                          Side side) {
  bip.check(g);
  auto [h, fresh] = contract_set(g, x);
  const VertexSet& same = bip.side(side);
  std::vector<Edge> edges;
  for (auto [u, v] : h.edges()) {
    const Vertex other = u == fresh ? v : u;
    if ((u == fresh || v == fresh) && same.contains(other)) continue;
    edges.emplace_back(u, v);
  }
  Bipartition out{bip.side_a - x, bip.side_b - x};
  (side == Side::A ? out.side_a : out.side_b).insert(fresh);
  return {Graph(h.vertices(), edges), out, fresh};
}

/// Proper two-colouring with each component's smallest vertex on side A, or
/// nullopt when g has an odd cycle.
inline std::optional<Bipartition> two_coloring(const Graph& g) {
  Bipartition bip;
  VertexSet rest = g.vertices();
  while (!rest.empty()) {
    VertexSet layer{rest.front()};
    bool on_a = true;
    while (!layer.empty()) {
      (on_a ? bip.side_a : bip.side_b) |= layer;
      rest -= layer;
      VertexSet next = g.neighbors_of_set(layer) & rest;
      layer = next;
      on_a = !on_a;
    }
  }
  if (!bip.valid_for(g)) return std::nullopt;
  return bip;
}

/// Maximal connected vertex sets, ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet rest = g.vertices();
  while (!rest.empty()) {
    VertexSet comp{rest.front()};
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      next -= comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

}  // namespace minorkit

#endif  // MINORKIT_GRAPH_HPP
