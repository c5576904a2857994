#ifndef MINORKIT_APEX_HPP
#define MINORKIT_APEX_HPP

#include <algorithm>
#include <utility>

#include "minorkit/cluster.hpp"
#include "minorkit/graph.hpp"

namespace minorkit {

/// g plus a fresh vertex adjacent to every vertex of g.
inline std::pair<Graph, Vertex> add_universal_vertex(const Graph& g) {
  const Vertex apex = g.fresh_id();
  auto edges = g.edges();
  for (Vertex v : g.vertices()) edges.emplace_back(std::min(v, apex), std::max(v, apex));
  VertexSet vs = g.vertices();
  vs.insert(apex);
  return {Graph(vs, edges), apex};
}

/// Given a (t+1)-cluster of g + apex, drops the branch set holding the apex
/// (or the last one, if the apex is unused). The remaining t sets avoid the
/// apex, so they form a t-cluster of g.
inline Cluster drop_apex(const Cluster& c, Vertex apex) {
  Cluster out;
  auto holder = std::find_if(c.branch_sets.begin(), c.branch_sets.end(),
                             [&](const VertexSet& b) { return b.contains(apex); });
  if (holder == c.branch_sets.end() && !c.branch_sets.empty()) holder = c.branch_sets.end() - 1;
  for (auto it = c.branch_sets.begin(); it != c.branch_sets.end(); ++it)
    if (it != holder) out.branch_sets.push_back(*it);
  return out;
}

}  // namespace minorkit

#endif  // MINORKIT_APEX_HPP
