#ifndef MINORKIT_GAME_HPP
#define MINORKIT_GAME_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "minorkit/cluster.hpp"
#include "minorkit/graph.hpp"

namespace minorkit {

/// A 3-subset of {0..5}, stored sorted.
class Triangle {
 public:
  Triangle(Vertex x, Vertex y, Vertex z) : m_{x, y, z} {
    std::sort(m_.begin(), m_.end());
    if (m_[2] > 5) throw InputError("triangle labels must lie in 0..5");
    if (m_[0] == m_[1] || m_[1] == m_[2]) throw InputError("triangle labels must be distinct");
  }
  const std::array<Vertex, 3>& members() const { return m_; }
  bool contains(Vertex v) const { return std::find(m_.begin(), m_.end(), v) != m_.end(); }
  friend bool operator==(const Triangle&, const Triangle&) = default;
  friend auto operator<=>(const Triangle&, const Triangle&) = default;

 private:
  std::array<Vertex, 3> m_;
};

/// Path end-middle-end through the three members of a triangle.
struct PathChoice {
  Triangle triangle;
  Vertex middle;

  std::array<Edge, 2> edges() const {
    std::array<Edge, 2> out;
    std::size_t i = 0;
    for (Vertex v : triangle.members())
      if (v != middle) out[i++] = {std::min(v, middle), std::max(v, middle)};
    return out;
  }
};

/// All 20 triangles of K6 in lexicographic order.
inline std::vector<Triangle> all_triangles() {
  std::vector<Triangle> out;
  for (Vertex a = 0; a < 6; ++a)
    for (Vertex b = a + 1; b < 6; ++b)
      for (Vertex c = b + 1; c < 6; ++c) out.emplace_back(a, b, c);
  return out;
}

namespace detail {

// Edges of K6 on {0..5} are numbered 0..14 in lexicographic order.
inline constexpr int pair_index(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return static_cast<int>(u * 5 - u * (u - 1) / 2 + (v - u - 1));
}

using EdgeMask = std::uint16_t;

inline EdgeMask mask_of(const Graph& g6) {
  const auto ids = g6.vertices().to_vector();
  EdgeMask m = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      if (g6.adjacent(ids[i], ids[j])) m |= EdgeMask(1u << pair_index(Vertex(i), Vertex(j)));
  return m;
}

inline Graph graph_of(EdgeMask m) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v)
      if (m >> pair_index(u, v) & 1u) edges.emplace_back(u, v);
  return Graph::on_range(6, edges);
}

/// The 720 bijections {0..5} -> {0..5} in lexicographic order.
inline const std::vector<std::array<Vertex, 6>>& permutations6() {
  static const auto perms = [] {
    std::vector<std::array<Vertex, 6>> out;
    std::array<Vertex, 6> p{0, 1, 2, 3, 4, 5};
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

}  // namespace detail

/// K6 minus the paths 0-1-2 and 3-4-5: eleven edges, degree-three vertices
/// 1 and 4.
inline Graph j_template() {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v) {
      const bool removed = (u == 0 && v == 1) || (u == 1 && v == 2) || (u == 3 && v == 4) || (u == 4 && v == 5);
      if (!removed) edges.emplace_back(u, v);
    }
  return Graph::on_range(6, edges);
}

namespace detail {

/// For every edge set on {0..5}, the index of the first bijection (in
/// lexicographic order) carrying J into it, or -1. Built once by checking
/// all 720 bijections against each of the 2^15 edge sets.
inline const std::vector<std::int16_t>& j_table() {
  static const auto table = [] {
    const auto& perms = permutations6();
    const auto j_edges = j_template().edges();
    std::vector<EdgeMask> images(perms.size());
    for (std::size_t p = 0; p < perms.size(); ++p)
      for (auto [u, v] : j_edges) images[p] |= EdgeMask(1u << pair_index(perms[p][u], perms[p][v]));
    std::vector<std::int16_t> out(1u << 15, -1);
    for (std::uint32_t m = 0; m < (1u << 15); ++m)
      for (std::size_t p = 0; p < perms.size(); ++p)
        if ((images[p] & ~m) == 0) {
          out[m] = static_cast<std::int16_t>(p);
          break;
        }
    return out;
  }();
  return table;
}

}  // namespace detail

/// M(C_1..C_k): K6 minus every pair lying inside some listed triangle.
inline Graph build_M(const std::vector<Triangle>& triangles) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v) {
      bool inside = false;
      for (const auto& c : triangles) inside = inside || (c.contains(u) && c.contains(v));
      if (!inside) edges.emplace_back(u, v);
    }
  return Graph::on_range(6, edges);
}

/// Embedding of J into a 6-vertex graph: J-vertex i maps to result[i] (a
/// vertex id of g6). Tries the 720 bijections in lexicographic order.
inline std::optional<std::array<Vertex, 6>> contains_J(const Graph& g6) {
  if (g6.order() != 6) throw InputError("contains_J expects exactly 6 vertices");
  const int p = detail::j_table()[detail::mask_of(g6)];
  if (p < 0) return std::nullopt;
  const auto ids = g6.vertices().to_vector();
  std::array<Vertex, 6> out;
  for (std::size_t i = 0; i < 6; ++i) out[i] = ids[detail::permutations6()[p][i]];
  return out;
}

struct GameSolution {
  std::vector<PathChoice> choices;
  std::array<Vertex, 6> j_embedding{};
  std::size_t tried = 0;  // choice vectors examined, including the winner
};

/// M(C_1..C_k) plus the chosen paths.
inline Graph union_graph(const std::vector<Triangle>& triangles, const std::vector<PathChoice>& choices) {
  detail::EdgeMask m = detail::mask_of(build_M(triangles));
  for (const auto& c : choices)
    for (auto [u, v] : c.edges()) m |= detail::EdgeMask(1u << detail::pair_index(u, v));
  return detail::graph_of(m);
}

/// Picks a middle vertex for every triangle so that M plus the paths
/// contains J. Choice vectors are tried in lexicographic order of the middle
/// positions (each triangle's members in increasing order). Throws
/// LemmaViolation if none works.
inline GameSolution solve_game(const std::vector<Triangle>& triangles) {
  const std::size_t k = triangles.size();
  const detail::EdgeMask base = detail::mask_of(build_M(triangles));
  // Path edge masks for each triangle and middle position.
  std::vector<std::array<detail::EdgeMask, 3>> path(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t pos = 0; pos < 3; ++pos) {
      PathChoice pc{triangles[i], triangles[i].members()[pos]};
      for (auto [u, v] : pc.edges()) path[i][pos] |= detail::EdgeMask(1u << detail::pair_index(u, v));
    }
  const auto& table = detail::j_table();
  std::vector<std::size_t> digit(k, 0);
  std::size_t tried = 0;
  for (;;) {
    ++tried;
    detail::EdgeMask m = base;
    for (std::size_t i = 0; i < k; ++i) m |= path[i][digit[i]];
    if (const int p = table[m]; p >= 0) {
      GameSolution s;
      for (std::size_t i = 0; i < k; ++i) s.choices.push_back({triangles[i], triangles[i].members()[digit[i]]});
      for (std::size_t i = 0; i < 6; ++i) s.j_embedding[i] = detail::permutations6()[p][i];
      s.tried = tried;
      return s;
    }
    // Odometer with the last triangle varying fastest.
    std::size_t i = k;
    while (i > 0 && digit[i - 1] == 2) digit[--i] = 0;
    if (i == 0) break;
    ++digit[i - 1];
  }
  std::string msg = "no path choice yields J for triangles";
  for (const auto& t : triangles) {
    const auto& m = t.members();
    msg += " {" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "," + std::to_string(m[2]) + "}";
  }
  throw LemmaViolation(msg);
}

struct GameLemmaReport {
  std::size_t k_max = 0;
  std::vector<std::size_t> cases_by_size;  // index = multiset size
  std::size_t total_cases = 0;
  std::size_t max_width = 0;  // most choice vectors any case needed
};

/// Runs solve_game on every multiset of at most k_max triangles of K6.
/// Throws LemmaViolation naming the first failing multiset.
inline GameLemmaReport verify_game_lemma(std::size_t k_max, std::size_t workers = 1) {
  if (k_max > 4) throw InputError("k_max is limited to 4");
  const auto tris = all_triangles();
  std::vector<std::vector<Triangle>> cases;
  GameLemmaReport report;
  report.k_max = k_max;
  report.cases_by_size.assign(k_max + 1, 0);
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    std::vector<Triangle> ms;
    for (auto i : idx) ms.push_back(tris[i]);
    cases.push_back(ms);
    ++report.cases_by_size[idx.size()];
    if (idx.size() == k_max) return;
    for (std::size_t i = from; i < tris.size(); ++i) {
      idx.push_back(i);
      self(self, i);  // multisets: the same triangle may repeat
      idx.pop_back();
    }
  };
  rec(rec, 0);
  report.total_cases = cases.size();

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> width{0};
  std::mutex mu;
  std::optional<LemmaViolation> failure;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cases.size();) {
      try {
        const auto s = solve_game(cases[i]);
        std::size_t w = width.load();
        while (s.tried > w && !width.compare_exchange_weak(w, s.tried)) {
        }
      } catch (const LemmaViolation& e) {
        std::lock_guard lock(mu);
        if (!failure) failure = e;
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) throw *failure;
  report.max_width = width.load();
  return report;
}

/// The 5-cluster of the canonical J: {1,4} plus the four other singletons.
inline Cluster j_five_cluster() {
  return Cluster{{VertexSet{1, 4}, VertexSet{0}, VertexSet{2}, VertexSet{3}, VertexSet{5}}};
}

// ---------------------------------------------------------------------------
// 6-cluster around a degree-six vertex

struct SixClusterOutcome {
  std::optional<Cluster> cluster;  // empty means not applicable
  std::string reason;
  std::vector<Vertex> helpers;     // chosen covering A-vertices
};

/// Builds {{a}, Y_1..Y_5} from helpers a_i in A \ {a} with two or three
/// neighbours among N(a) that jointly cover all 15 pairs of N(a). Three-
/// neighbour helpers become game triangles; each helper joins the branch set
/// of its middle vertex (two-neighbour helpers use their lower neighbour).
inline SixClusterOutcome six_cluster_around(const Graph& g, const Bipartition& bip, Vertex a) {
  bip.check(g);
  if (!bip.side_a.contains(a)) throw InputError("vertex " + std::to_string(a) + " is not on side A");
  if (g.degree(a) != 6) throw InputError("vertex " + std::to_string(a) + " does not have degree six");
  const auto nb = g.neighbors(a).to_vector();
  auto label_of = [&](Vertex b) {
    return static_cast<Vertex>(std::find(nb.begin(), nb.end(), b) - nb.begin());
  };

  struct Helper {
    Vertex id;
    std::vector<Vertex> labels;
    std::uint16_t pairs = 0;
  };
  std::vector<Helper> helpers;
  for (Vertex h : bip.side_a) {
    if (h == a) continue;
    const VertexSet shared = g.neighbors(h) & g.neighbors(a);
    if (shared.size() >= 4)
      return {std::nullopt, "vertex " + std::to_string(h) + " has " + std::to_string(shared.size()) +
                                " neighbours in N(a)", {}};
    if (shared.size() < 2) continue;
    Helper hp{h, {}, 0};
    for (Vertex b : shared) hp.labels.push_back(label_of(b));
    for (std::size_t i = 0; i < hp.labels.size(); ++i)
      for (std::size_t j = i + 1; j < hp.labels.size(); ++j)
        hp.pairs |= std::uint16_t(1u << detail::pair_index(hp.labels[i], hp.labels[j]));
    helpers.push_back(hp);
  }

  // Greedy cover of the 15 pairs: most new pairs, then three-neighbour
  // helpers, then lowest id.
  std::uint16_t covered = 0;
  std::vector<std::size_t> chosen;
  std::vector<char> taken(helpers.size(), 0);
  while (covered != 0x7fff) {
    std::size_t best = helpers.size();
    int best_gain = 0;
    for (std::size_t i = 0; i < helpers.size(); ++i) {
      if (taken[i]) continue;
      const int gain = std::popcount(static_cast<std::uint16_t>(helpers[i].pairs & ~covered));
      if (gain > best_gain || (gain == best_gain && gain > 0 && best < helpers.size() &&
                               helpers[i].labels.size() > helpers[best].labels.size())) {
        best = i;
        best_gain = gain;
      }
    }
    if (best == helpers.size()) return {std::nullopt, "some pair of N(a) has no covering helper", {}};
    taken[best] = 1;
    chosen.push_back(best);
    covered |= helpers[best].pairs;
  }

  std::vector<Triangle> triangles;
  std::vector<std::size_t> triangle_owner;
  for (std::size_t i : chosen)
    if (helpers[i].labels.size() == 3) {
      const auto& l = helpers[i].labels;
      triangles.emplace_back(l[0], l[1], l[2]);
      triangle_owner.push_back(i);
    }
  const GameSolution sol = solve_game(triangles);

  // C(v): label v's neighbour of a plus the helpers whose middle is v.
  std::array<VertexSet, 6> cell;
  for (Vertex v = 0; v < 6; ++v) cell[v].insert(nb[v]);
  for (std::size_t t = 0; t < triangles.size(); ++t) cell[sol.choices[t].middle].insert(helpers[triangle_owner[t]].id);
  for (std::size_t i : chosen)
    if (helpers[i].labels.size() == 2) cell[helpers[i].labels.front()].insert(helpers[i].id);

  Cluster c;
  c.branch_sets.push_back(VertexSet{a});
  for (const auto& x : j_five_cluster().branch_sets) {
    VertexSet y;
    for (Vertex j : x) y |= cell[sol.j_embedding[j]];
    c.branch_sets.push_back(y);
  }
  if (auto v = validate_cluster(g, c, 6); !v)
    throw std::logic_error("internal error: assembled 6-cluster rejected: " + v.message);
  SixClusterOutcome out{c, {}, {}};
  for (std::size_t i : chosen) out.helpers.push_back(helpers[i].id);
  return out;
}

}  // namespace minorkit

#endif  // MINORKIT_GAME_HPP
