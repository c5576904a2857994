#ifndef MINORKIT_BRUTE_FORCE_HPP
#define MINORKIT_BRUTE_FORCE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "minorkit/cluster.hpp"
#include "minorkit/graph.hpp"

namespace minorkit {

inline constexpr std::size_t brute_force_max_order = 12;

/// Exhaustive K_t-minor oracle, independent of find_t_cluster.
///
/// Enumerates every labelling of the vertices with "unused" or one of t set
/// labels, where labels first appear in increasing order (so each unordered
/// family of sets is seen once), and tests each complete labelling directly
/// against an adjacency matrix. Refuses graphs with more than 12 vertices.
inline std::optional<Cluster> brute_force_t_cluster(const Graph& g, std::size_t t) {
  if (g.order() > brute_force_max_order)
    throw RefusedError("brute force oracle limited to " + std::to_string(brute_force_max_order) + " vertices");
  if (t == 0) return Cluster{};
  const auto ids = g.vertices().to_vector();
  const std::size_t n = ids.size();
  if (n < t) return std::nullopt;

  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adj[i][j] = g.adjacent(ids[i], ids[j]) ? 1 : 0;

  std::vector<int> label(n, 0);  // 0 = unused, 1..t = set
  std::vector<int> seen(n);

  auto set_connected = [&](int s) {
    int start = -1;
    for (std::size_t i = 0; i < n; ++i)
      if (label[i] == s) {
        start = static_cast<int>(i);
        break;
      }
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (std::size_t u = 0; u < n; ++u)
        if (adj[v][u] && label[u] == s && !seen[u]) {
          seen[u] = 1;
          stack.push_back(static_cast<int>(u));
        }
    }
    for (std::size_t i = 0; i < n; ++i)
      if (label[i] == s && !seen[i]) return false;
    return true;
  };

  auto valid = [&]() {
    for (std::size_t a = 1; a <= t; ++a)
      for (std::size_t b = a + 1; b <= t; ++b) {
        bool joined = false;
        for (std::size_t i = 0; i < n && !joined; ++i)
          if (label[i] == static_cast<int>(a))
            for (std::size_t j = 0; j < n; ++j)
              if (label[j] == static_cast<int>(b) && adj[i][j]) {
                joined = true;
                break;
              }
        if (!joined) return false;
      }
    for (std::size_t s = 1; s <= t; ++s)
      if (!set_connected(static_cast<int>(s))) return false;
    return true;
  };

  // Depth-first over positions; `used` = number of labels opened so far.
  auto rec = [&](auto&& self, std::size_t pos, std::size_t used) -> bool {
    if (t - used > n - pos) return false;  // not enough positions left to open all labels
    if (pos == n) return used == t && valid();
    for (std::size_t l = 0; l <= used + 1 && l <= t; ++l) {
      label[pos] = static_cast<int>(l);
      if (self(self, pos + 1, l == used + 1 ? used + 1 : used)) return true;
    }
    label[pos] = 0;
    return false;
  };
  if (!rec(rec, 0, 0)) return std::nullopt;

  Cluster c;
  c.branch_sets.resize(t);
  for (std::size_t i = 0; i < n; ++i)
    if (label[i] > 0) c.branch_sets[label[i] - 1].insert(ids[i]);
  return c;
}

}  // namespace minorkit

#endif  // MINORKIT_BRUTE_FORCE_HPP
