#ifndef MINORKIT_CLUSTER_HPP
#define MINORKIT_CLUSTER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "minorkit/graph.hpp"

namespace minorkit {

/// Minor certificate: disjoint connected branch sets, pairwise joined by an edge.
struct Cluster {
  std::vector<VertexSet> branch_sets;

  std::size_t size() const { return branch_sets.size(); }
  VertexSet support() const {
    VertexSet s;
    for (const auto& b : branch_sets) s |= b;
    return s;
  }
  friend bool operator==(const Cluster&, const Cluster&) = default;
};

enum class ClusterDefect { none, wrong_count, empty_set, overlap, disconnected, missing_edge };

struct ClusterVerdict {
  ClusterDefect defect = ClusterDefect::none;
  // Offending branch set indices (second is only meaningful for pair defects).
  std::size_t first = 0;
  std::size_t second = 0;
  std::string message;

  bool accepted() const { return defect == ClusterDefect::none; }
  explicit operator bool() const { return accepted(); }
};

/// Checks that `c` is a t-cluster of `g`. Reports the first violated
/// condition in order: count, non-emptiness, disjointness, connectivity,
/// pairwise adjacency. Throws InputError if a branch set names a vertex that
/// is not in `g`.
inline ClusterVerdict validate_cluster(const Graph& g, const Cluster& c, std::size_t t) {
  for (const auto& b : c.branch_sets)
    if (!b.is_subset_of(g.vertices()))
      throw InputError("branch set " + b.to_string() + " references vertices absent from the graph");
  auto fail = [](ClusterDefect d, std::size_t i, std::size_t j, std::string msg) {
    return ClusterVerdict{d, i, j, std::move(msg)};
  };
  if (c.size() != t)
    return fail(ClusterDefect::wrong_count, 0, 0,
                "expected " + std::to_string(t) + " branch sets, got " + std::to_string(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c.branch_sets[i].empty()) return fail(ClusterDefect::empty_set, i, i, "branch set " + std::to_string(i) + " is empty");
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (c.branch_sets[i].intersects(c.branch_sets[j]))
        return fail(ClusterDefect::overlap, i, j,
                    "branch sets " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!g.is_connected_set(c.branch_sets[i]))
      return fail(ClusterDefect::disconnected, i, i,
                  "branch set " + std::to_string(i) + " " + c.branch_sets[i].to_string() + " is not connected");
  for (std::size_t i = 0; i < c.size(); ++i) {
    const VertexSet reach = g.neighbors_of_set(c.branch_sets[i]);
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!reach.intersects(c.branch_sets[j]))
        return fail(ClusterDefect::missing_edge, i, j,
                    "no edge between branch sets " + std::to_string(i) + " and " + std::to_string(j));
  }
  return {};
}

/// Greedily drops vertices from branch sets while the cluster stays valid.
/// Vertices are tried from the highest id down, so results are deterministic.
inline Cluster minimize_cluster(const Graph& g, Cluster c) {
  const std::size_t t = c.size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& b : c.branch_sets) {
      auto members = b.to_vector();
      for (auto it = members.rbegin(); it != members.rend(); ++it) {
        if (b.size() == 1) break;
        VertexSet saved = b;
        b.erase(*it);
        if (validate_cluster(g, c, t)) {
          changed = true;
        } else {
          b = saved;
        }
      }
    }
  }
  return c;
}

}  // namespace minorkit

#endif  // MINORKIT_CLUSTER_HPP
