#ifndef MINORKIT_REDUCE_HPP
#define MINORKIT_REDUCE_HPP

#include <cstddef>
#include <vector>

#include "minorkit/graph.hpp"

namespace minorkit {

/// Result of degree-based preprocessing. `origin[v]` is the set of input
/// vertices merged into surviving vertex v; it is connected in the input
/// graph, so certificates lift by replacing each vertex with its origin.
struct Reduction {
  Graph graph;
  std::vector<VertexSet> origin;

  VertexSet lift(const VertexSet& x) const {
    VertexSet out;
    for (Vertex v : x) out |= origin[v];
    return out;
  }
};

/// Removes isolated vertices and contracts an edge at every vertex of degree
/// one or two, until none remain. A degree-two vertex merges into its
/// lower-id neighbour. Valid for t >= 4: a singleton branch set of a K_t
/// minor needs degree at least three, so the verdict is unchanged.
inline Reduction reduce_for_minor_tracked(const Graph& g, std::size_t t) {
  if (t < 4) throw PreconditionError("degree reduction requires t >= 4");
  const std::size_t slots = g.vertices().empty() ? 0 : g.vertices().back() + 1;
  std::vector<VertexSet> adj(slots);
  std::vector<VertexSet> origin(slots);
  VertexSet alive = g.vertices();
  for (Vertex v : alive) {
    adj[v] = g.neighbors(v);
    origin[v] = VertexSet{v};
  }

  for (;;) {
    Vertex low = VertexSet::capacity;
    for (Vertex v : alive)
      if (adj[v].size() <= 2) {
        low = v;
        break;
      }
    if (low == VertexSet::capacity) break;
    const Vertex v = low;
    alive.erase(v);
    const VertexSet nb = adj[v];
    for (Vertex u : nb) adj[u].erase(v);
    if (!nb.empty()) {
      // Merge v into its lowest-id neighbour; the other neighbour (if any)
      // becomes adjacent to it.
      const Vertex keep = nb.front();
      origin[keep] |= origin[v];
      for (Vertex u : nb)
        if (u != keep) {
          adj[u].insert(keep);
          adj[keep].insert(u);
        }
    }
    adj[v] = {};
  }

  std::vector<Edge> edges;
  for (Vertex u : alive)
    for (Vertex v : adj[u])
      if (u < v) edges.emplace_back(u, v);
  for (Vertex v = 0; v < slots; ++v)
    if (!alive.contains(v)) origin[v] = {};
  return {Graph(alive, edges), std::move(origin)};
}

inline Graph reduce_for_minor(const Graph& g, std::size_t t) { return reduce_for_minor_tracked(g, t).graph; }

}  // namespace minorkit

#endif  // MINORKIT_REDUCE_HPP
