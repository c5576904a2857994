#ifndef MINORKIT_SMALL_MINOR_HPP
#define MINORKIT_SMALL_MINOR_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "minorkit/cluster.hpp"
#include "minorkit/graph.hpp"
#include "minorkit/search.hpp"

namespace minorkit {

namespace detail {

/// A bipartite minor of the input together with, for every current vertex,
/// the connected set of input vertices it stands for.
struct TrackedMinor {
  Graph graph;
  Bipartition bip;
  std::map<Vertex, VertexSet> origin;

  Cluster lift(const Cluster& c) const {
    Cluster out;
    for (const auto& b : c.branch_sets) {
      VertexSet s;
      for (Vertex v : b) s |= origin.at(v);
      out.branch_sets.push_back(s);
    }
    return out;
  }

  void remove(const VertexSet& x) {
    graph = delete_vertices(graph, x);
    bip.side_a -= x;
    bip.side_b -= x;
    for (Vertex v : x) origin.erase(v);
  }

  void contract(const VertexSet& x, Side side) {
    VertexSet merged;
    for (Vertex v : x) {
      merged |= origin.at(v);
      origin.erase(v);
    }
    auto r = contract_into_side(graph, bip, x, side);
    graph = std::move(r.graph);
    bip = r.bipartition;
    origin[r.vertex] = merged;
  }

  /// Keeps only the `deg` lowest-id edges at each A-vertex and deletes the
  /// highest-id A-vertices until |A| = |B|. The result is a subgraph, so its
  /// clusters are clusters of the input.
  void normalise(std::size_t deg) {
    while (bip.side_a.size() > bip.side_b.size()) remove(VertexSet{bip.side_a.back()});
    std::vector<Edge> edges;
    for (Vertex a : bip.side_a) {
      std::size_t kept = 0;
      for (Vertex b : graph.neighbors(a)) {
        if (kept == deg) break;
        edges.emplace_back(std::min(a, b), std::max(a, b));
        ++kept;
      }
    }
    graph = Graph(graph.vertices(), edges);
  }
};

/// Any cycle, as a vertex sequence, or empty if g is a forest.
inline std::vector<Vertex> find_cycle(const Graph& g) {
  std::map<Vertex, Vertex> parent;
  std::map<Vertex, int> depth;
  for (Vertex root : g.vertices()) {
    if (depth.count(root)) continue;
    std::vector<Vertex> stack{root};
    depth[root] = 0;
    parent[root] = root;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v)) {
        if (u == parent[v]) continue;
        if (depth.count(u)) {
          // Non-tree edge: walk both ends up to their common ancestor.
          std::vector<Vertex> left{v}, right{u};
          Vertex x = v, y = u;
          while (x != y) {
            if (depth[x] >= depth[y]) {
              x = parent[x];
              left.push_back(x);
            } else {
              y = parent[y];
              right.push_back(y);
            }
          }
          right.pop_back();
          left.insert(left.end(), right.rbegin(), right.rend());
          return left;
        }
        depth[u] = depth[v] + 1;
        parent[u] = v;
        stack.push_back(u);
      }
    }
  }
  return {};
}

inline Cluster k4_by_induction(TrackedMinor m) {
  for (;;) {
    m.normalise(3);
    if (m.bip.side_b.empty()) throw std::logic_error("internal error: K4 induction emptied side B");

    Vertex low = VertexSet::capacity;
    for (Vertex v : m.graph.vertices())
      if (m.graph.degree(v) <= 2) {
        low = v;
        break;
      }
    if (low == VertexSet::capacity) {
      // Minimum degree three forces a K4 minor.
      auto r = find_t_cluster(m.graph, 4);
      if (r.status != SearchStatus::found) throw std::logic_error("internal error: min-degree-3 graph without K4");
      return m.lift(*r.cluster);
    }

    const Vertex b = low;
    if (!m.bip.side_b.contains(b)) throw std::logic_error("internal error: A-vertex lost degree in K4 induction");
    const VertexSet nb = m.graph.neighbors(b);
    if (nb.size() == 0) {
      m.remove(VertexSet{b});
      continue;
    }
    if (nb.size() == 1) {
      m.remove(VertexSet{b, nb.front()});
      continue;
    }
    const Vertex a1 = nb.front(), a2 = nb.back();
    VertexSet others = (m.graph.neighbors(a1) | m.graph.neighbors(a2));
    others.erase(b);
    if (others.size() >= 3) {
      // Merged vertex keeps degree >= 3 on side A.
      m.contract(VertexSet{a1, b, a2}, Side::A);
      continue;
    }
    // a1 and a2 both see exactly b, b1, b2.
    const Vertex b1 = others.front(), b2 = others.back();
    VertexSet both = m.graph.neighbors(b1) & m.graph.neighbors(b2);
    both.erase(a1);
    both.erase(a2);
    if (!both.empty()) {
      const Vertex a3 = both.front();
      Cluster c{{VertexSet{a1}, VertexSet{a2, b}, VertexSet{b1, a3}, VertexSet{b2}}};
      return m.lift(c);
    }
    m.contract(VertexSet{b1, b2, a1, a2, b}, Side::B);
  }
}

}  // namespace detail

/// Constructive K_t minor (t <= 4) for a bipartite graph with |A| >= |B| > 0
/// and every A-vertex of degree at least t-1, following the inductive
/// argument: normalise to |A| = |B| with A-degrees exactly t-1, then
///   t <= 2: a vertex or an edge;
///   t = 3:  |E| = |V| forces a cycle;
///   t = 4:  peel a B-vertex of degree <= 2 by deletion or by contracting
///           {a1,b,a2} into A or {b1,b2,a1,a2,b} into B, lifting back.
inline Cluster find_small_minor_bipartite(const Graph& g, const Bipartition& bip, std::size_t t) {
  bip.check(g);
  if (t < 1 || t > 4) throw InputError("t must be between 1 and 4");
  if (bip.side_b.empty() || bip.side_a.size() < bip.side_b.size())
    throw InputError("requires |A| >= |B| > 0");
  for (Vertex a : bip.side_a)
    if (g.degree(a) + 1 < t)
      throw InputError("A-vertex " + std::to_string(a) + " has degree below " + std::to_string(t - 1));

  detail::TrackedMinor m{g, bip, {}};
  for (Vertex v : g.vertices()) m.origin[v] = VertexSet{v};

  Cluster result;
  if (t == 1) {
    result.branch_sets = {VertexSet{bip.side_a.front()}};
  } else if (t == 2) {
    const Vertex a = bip.side_a.front();
    result.branch_sets = {VertexSet{a}, VertexSet{g.neighbors(a).front()}};
  } else if (t == 3) {
    m.normalise(2);
    auto cycle = detail::find_cycle(m.graph);
    if (cycle.size() < 3) throw std::logic_error("internal error: no cycle despite |E| = |V|");
    VertexSet tail;
    for (std::size_t i = 2; i < cycle.size(); ++i) tail.insert(cycle[i]);
    result = m.lift(Cluster{{VertexSet{cycle[0]}, VertexSet{cycle[1]}, tail}});
  } else {
    result = detail::k4_by_induction(std::move(m));
  }
  if (auto v = validate_cluster(g, result, t); !v)
    throw std::logic_error("internal error: constructed cluster rejected: " + v.message);
  return result;
}

}  // namespace minorkit

#endif  // MINORKIT_SMALL_MINOR_HPP
