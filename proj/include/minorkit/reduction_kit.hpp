#ifndef MINORKIT_REDUCTION_KIT_HPP
#define MINORKIT_REDUCTION_KIT_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "minorkit/graph.hpp"

namespace minorkit {

// ---------------------------------------------------------------------------
// Cover graphs

/// Graph on chosen B-vertices; u ~ v when some A-vertex outside `excluded`
/// sees both. `witness` records the lowest-id such vertex per edge.
struct CoverGraph {
  std::vector<Vertex> base;
  std::vector<Vertex> excluded;
  Graph graph;
  std::map<Edge, Vertex> witness;
};

namespace detail {
inline VertexSet distinct_on_side(const std::vector<Vertex>& xs, const VertexSet& side, const char* what) {
  VertexSet s;
  for (Vertex v : xs) {
    if (!side.contains(v)) throw InputError(std::string(what) + " vertex " + std::to_string(v) + " is on the wrong side");
    if (s.contains(v)) throw InputError(std::string(what) + " vertex " + std::to_string(v) + " repeated");
    s.insert(v);
  }
  return s;
}
}  // namespace detail

inline CoverGraph build_cover_graph(const Graph& g, const Bipartition& bip, const std::vector<Vertex>& a_list,
                                    const std::vector<Vertex>& b_list) {
  bip.check(g);
  const VertexSet excluded = detail::distinct_on_side(a_list, bip.side_a, "excluded");
  const VertexSet base = detail::distinct_on_side(b_list, bip.side_b, "base");
  const VertexSet pool = bip.side_a - excluded;
  CoverGraph h{b_list, a_list, {}, {}};
  std::vector<Edge> edges;
  for (Vertex u : base)
    for (Vertex v : base) {
      if (v <= u) continue;
      const VertexSet common = g.neighbors(u) & g.neighbors(v) & pool;
      if (common.empty()) continue;
      edges.emplace_back(u, v);
      h.witness[{u, v}] = common.front();
    }
  h.graph = Graph(base, edges);
  return h;
}

// ---------------------------------------------------------------------------
// Feasible partitions

using Partition = std::vector<VertexSet>;

inline constexpr std::size_t feasible_max_excluded = 12;

/// Finds pairwise disjoint X_1..X_k within `a_list` (possibly empty) with
/// each g[X_i ∪ Y_i] connected, or nullopt when none exists.
///
/// Fast paths: blocks that are already connected take X_i = ∅, and if every
/// remaining block is made connected by some single a-vertex, a matching of
/// blocks to distinct such vertices settles it. Otherwise every labelling of
/// a_list with a block index or "unused" is tried, so a nullopt is definitive.
inline std::optional<std::vector<VertexSet>> feasible_partition(const Graph& g, const Bipartition& bip,
                                                                const std::vector<Vertex>& a_list,
                                                                const std::vector<Vertex>& b_list,
                                                                const Partition& part) {
  bip.check(g);
  const VertexSet excluded = detail::distinct_on_side(a_list, bip.side_a, "a_list");
  const VertexSet base = detail::distinct_on_side(b_list, bip.side_b, "b_list");
  VertexSet covered;
  for (const auto& y : part) {
    if (y.empty()) throw InputError("partition has an empty block");
    if (y.intersects(covered)) throw InputError("partition blocks overlap");
    covered |= y;
  }
  if (covered != base) throw InputError("partition does not cover b_list exactly");
  if (a_list.size() > feasible_max_excluded) throw RefusedError("feasible_partition limited to 12 a-vertices");

  const std::size_t k = part.size();
  std::vector<VertexSet> xs(k);

  // Blocks needing help, and which single a-vertices would suffice.
  std::vector<std::size_t> needy;
  std::vector<std::vector<Vertex>> single_fix(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (g.is_connected_set(part[i])) continue;
    needy.push_back(i);
    for (Vertex a : excluded) {
      VertexSet y = part[i];
      y.insert(a);
      if (g.is_connected_set(y)) single_fix[i].push_back(a);
    }
  }
  if (needy.empty()) return xs;

  // Augmenting-path matching of needy blocks to distinct single fixes.
  {
    std::map<Vertex, std::size_t> owner;
    auto augment = [&](auto&& self, std::size_t i, VertexSet& visited) -> bool {
      for (Vertex a : single_fix[i]) {
        if (visited.contains(a)) continue;
        visited.insert(a);
        auto it = owner.find(a);
        if (it == owner.end() || self(self, it->second, visited)) {
          owner[a] = i;
          return true;
        }
      }
      return false;
    };
    bool all = true;
    for (std::size_t i : needy) {
      VertexSet visited;
      if (!augment(augment, i, visited)) {
        all = false;
        break;
      }
    }
    if (all) {
      for (auto [a, i] : owner) xs[i].insert(a);
      return xs;
    }
  }

  // Exhaustive labelling.
  std::vector<Vertex> as = excluded.to_vector();
  auto rec = [&](auto&& self, std::size_t pos) -> bool {
    if (pos == as.size()) {
      for (std::size_t i : needy)
        if (!g.is_connected_set(part[i] | xs[i])) return false;
      return true;
    }
    for (std::size_t l = 0; l <= k; ++l) {
      if (l < k) xs[l].insert(as[pos]);
      if (self(self, pos + 1)) return true;
      if (l < k) xs[l].erase(as[pos]);
    }
    return false;
  };
  if (rec(rec, 0)) return xs;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Chromatic number

inline constexpr std::size_t chromatic_max_order = 10;

/// Exact chromatic number by dynamic programming over vertex subsets.
inline std::size_t chromatic_number(const Graph& h) {
  const auto ids = h.vertices().to_vector();
  const std::size_t n = ids.size();
  if (n > chromatic_max_order) throw RefusedError("chromatic_number limited to 10 vertices");
  if (n == 0) return 0;
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint32_t> nb(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (h.adjacent(ids[i], ids[j])) nb[i] |= 1u << j;
  std::vector<char> stable(full + 1, 1);
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::size_t low = static_cast<std::size_t>(__builtin_ctz(s));
    const std::uint32_t rest = s & (s - 1);
    stable[s] = stable[rest] && !(nb[low] & rest);
  }
  std::vector<std::uint8_t> colours(full + 1, 0xff);
  colours[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    // Some colour class contains the lowest vertex of s.
    const std::uint32_t low = s & (~s + 1);
    const std::uint32_t rest = s ^ low;
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint32_t cls = sub | low;
      if (stable[cls]) colours[s] = std::min<std::uint8_t>(colours[s], colours[s ^ cls] + 1);
      if (sub == 0) break;
    }
  }
  return colours[full];
}

// ---------------------------------------------------------------------------
// K(p,q,r) patterns

/// a_i in A and b_j in B with a_i b_i non-adjacent for i < r and every other
/// pair adjacent.
struct KpqrEmbedding {
  std::size_t p = 0, q = 0, r = 0;
  std::vector<Vertex> a_vertices;
  std::vector<Vertex> b_vertices;
  friend bool operator==(const KpqrEmbedding&, const KpqrEmbedding&) = default;
};

inline bool is_kpqr_embedding(const Graph& g, const Bipartition& bip, const KpqrEmbedding& e) {
  if (e.a_vertices.size() != e.p || e.b_vertices.size() != e.q || e.r > std::min(e.p, e.q)) return false;
  VertexSet as, bs;
  for (Vertex a : e.a_vertices) {
    if (!bip.side_a.contains(a) || as.contains(a)) return false;
    as.insert(a);
  }
  for (Vertex b : e.b_vertices) {
    if (!bip.side_b.contains(b) || bs.contains(b)) return false;
    bs.insert(b);
  }
  for (std::size_t i = 0; i < e.p; ++i)
    for (std::size_t j = 0; j < e.q; ++j)
      if (g.adjacent(e.a_vertices[i], e.b_vertices[j]) != !(i == j && i < e.r)) return false;
  return true;
}

/// Lexicographically least K(p,q,r) embedding under (a_vertices, b_vertices),
/// or nullopt if g has none.
inline std::optional<KpqrEmbedding> find_kpqr(const Graph& g, const Bipartition& bip, std::size_t p, std::size_t q,
                                              std::size_t r) {
  bip.check(g);
  if (r > std::min(p, q)) throw InputError("r must not exceed min(p, q)");
  if (p > bip.side_a.size() || q > bip.side_b.size()) return std::nullopt;

  // A-candidates need at least q-1 neighbours (q when unmatched).
  std::vector<Vertex> cands;
  for (Vertex a : bip.side_a)
    if (g.degree(a) + (r > 0 ? 1 : 0) >= q) cands.push_back(a);

  std::vector<Vertex> chosen;
  VertexSet used;
  std::optional<KpqrEmbedding> best;

  // With all a's fixed, b_i (i < r) must miss a_i and see every other a;
  // the unmatched b's must see every a. The least choice is forced.
  auto complete_b = [&]() -> bool {
    VertexSet common = bip.side_b;
    for (Vertex a : chosen) common &= g.neighbors(a);
    std::vector<Vertex> bs;
    VertexSet taken;
    for (std::size_t i = 0; i < r; ++i) {
      VertexSet c = bip.side_b - g.neighbors(chosen[i]);
      for (std::size_t l = 0; l < p; ++l)
        if (l != i) c &= g.neighbors(chosen[l]);
      c -= taken;
      if (c.empty()) return false;
      bs.push_back(c.front());
      taken.insert(c.front());
    }
    common -= taken;
    if (common.size() < q - r) return false;
    for (Vertex b : common) {
      if (bs.size() == q) break;
      bs.push_back(b);
    }
    best = KpqrEmbedding{p, q, r, chosen, bs};
    return true;
  };

  auto rec = [&](auto&& self, std::size_t pos, VertexSet common_unmatched) -> bool {
    // Unmatched b's lie in the common neighbourhood of every chosen a.
    if (common_unmatched.size() < q - r) return false;
    if (pos == p) return complete_b();
    for (Vertex a : cands) {
      if (used.contains(a)) continue;
      // Unmatched a's are interchangeable, so keep them increasing.
      if (pos > r && a < chosen.back()) continue;
      used.insert(a);
      chosen.push_back(a);
      if (self(self, pos + 1, common_unmatched & g.neighbors(a))) return true;
      chosen.pop_back();
      used.erase(a);
    }
    return false;
  };
  rec(rec, 0, bip.side_b);
  return best;
}

// ---------------------------------------------------------------------------
// Attachment systems

inline constexpr std::size_t attachment_max_order = 16;

/// k pairwise-disjoint connected subsets of V(g) \ x, each containing a
/// neighbour of every vertex of x; nullopt when none exist. Only
/// inclusion-minimal candidate sets are considered, which loses nothing.
inline std::optional<std::vector<VertexSet>> find_attachment_system(const Graph& g, const VertexSet& x,
                                                                    std::size_t k) {
  detail::require_subset(g, x);
  if (x.empty()) throw InputError("attachment target set must be nonempty");
  if (k < 1) throw InputError("k must be at least 1");
  if (g.order() > attachment_max_order) throw RefusedError("attachment search limited to 16 vertices");

  const auto rest = (g.vertices() - x).to_vector();
  const std::size_t n = rest.size();
  auto to_set = [&](std::uint32_t mask) {
    VertexSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) s.insert(rest[i]);
    return s;
  };
  auto good = [&](const VertexSet& s) {
    if (!g.is_connected_set(s)) return false;
    for (Vertex v : x)
      if (!g.neighbors(v).intersects(s)) return false;
    return true;
  };

  std::vector<std::uint32_t> minimal;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const VertexSet s = to_set(mask);
    if (!good(s)) continue;
    bool is_min = true;
    for (std::size_t i = 0; i < n && is_min; ++i)
      if ((mask >> i & 1u) && (mask & ~(1u << i)) && good(to_set(mask & ~(1u << i)))) is_min = false;
    if (is_min) minimal.push_back(mask);
  }
  // Smaller sets first, then by value, for a stable answer.
  std::stable_sort(minimal.begin(), minimal.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });

  std::vector<std::uint32_t> pick;
  auto rec = [&](auto&& self, std::size_t from, std::uint32_t used) -> bool {
    if (pick.size() == k) return true;
    for (std::size_t i = from; i < minimal.size(); ++i) {
      if (minimal[i] & used) continue;
      pick.push_back(minimal[i]);
      if (self(self, i + 1, used | minimal[i])) return true;
      pick.pop_back();
    }
    return false;
  };
  if (!rec(rec, 0, 0)) return std::nullopt;
  std::vector<VertexSet> out;
  for (auto m : pick) out.push_back(to_set(m));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace minorkit

#endif  // MINORKIT_REDUCTION_KIT_HPP
