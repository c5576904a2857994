#ifndef MINORKIT_SUITES_HPP
#define MINORKIT_SUITES_HPP

// Named property suites behind `minorkit check` and the acceptance binary.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "minorkit/apex.hpp"
#include "minorkit/brute_force.hpp"
#include "minorkit/constructions.hpp"
#include "minorkit/game.hpp"
#include "minorkit/io.hpp"
#include "minorkit/reduction_kit.hpp"
#include "minorkit/search.hpp"
#include "minorkit/small_minor.hpp"

namespace minorkit {

struct SuiteParams {
  std::map<std::string, std::int64_t> values;
  std::uint64_t seed = 1;
  std::size_t workers = 1;

  std::int64_t get(const std::string& key, std::int64_t fallback) const {
    auto it = values.find(key);
    return it == values.end() ? fallback : it->second;
  }
};

struct SuiteReport {
  SuiteReport() = default;
  explicit SuiteReport(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  bool assisted = false;
  double seconds = 0;
  std::string summary;
  std::vector<std::string> log;

  void note(std::string line) { log.push_back(std::move(line)); }
  void fail(std::string line) {
    passed = false;
    log.push_back("FAIL " + std::move(line));
  }
};

namespace detail {

using SuiteClock = std::chrono::steady_clock;

inline double since(SuiteClock::time_point t0) {
  return std::chrono::duration<double>(SuiteClock::now() - t0).count();
}

template <class... Ts>
std::string cat(const Ts&... xs) {
  std::ostringstream out;
  (out << ... << xs);
  return out.str();
}

inline bool three_connected(const Graph& g) {
  if (g.order() < 4 || !g.is_connected()) return false;
  const auto vs = g.vertices().to_vector();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i; j < vs.size(); ++j)
      if (!delete_vertices(g, VertexSet{vs[i], vs[j]}).is_connected()) return false;
  return true;
}

inline bool is_subgraph(const Graph& h, const Graph& g) {
  if (!h.vertices().is_subset_of(g.vertices())) return false;
  for (auto [u, v] : h.edges())
    if (!g.adjacent(u, v)) return false;
  return true;
}

// Expects a found, validated t-cluster; records a failure otherwise.
inline bool expect_found(SuiteReport& r, const Graph& g, std::size_t t, const SearchResult& res,
                         const std::string& label) {
  if (res.status != SearchStatus::found || !res.cluster) {
    r.fail(cat(label, ": expected found, got ", to_string(res.status)));
    return false;
  }
  if (auto v = validate_cluster(g, *res.cluster, t); !v) {
    r.fail(cat(label, ": certificate rejected: ", v.message));
    return false;
  }
  return true;
}

inline bool expect_absent(SuiteReport& r, const SearchResult& res, const std::string& label) {
  if (res.status != SearchStatus::absent) {
    r.fail(cat(label, ": expected absent, got ", to_string(res.status)));
    return false;
  }
  return true;
}

// Set partitions of {0..n-1} into at most k blocks, as block-index vectors.
inline void set_partitions(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> lab(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t used) -> void {
    if (i == n) {
      f(lab);
      return;
    }
    for (std::size_t b = 0; b <= used && b < k; ++b) {
      lab[i] = b;
      self(self, i + 1, std::max(used, b + 1));
    }
  };
  if (n == 0) {
    f(lab);
    return;
  }
  lab[0] = 0;
  rec(rec, 1, 1);
}

}  // namespace detail

// ---------------------------------------------------------------------------

/// Random bipartite graphs with 6 <= |B| <= |A| <= 12 and A-degrees >= 6 all
/// have a validated K_6 certificate within the per-instance budget.
inline SuiteReport suite_main_theorem(const SuiteParams& p) {
  using namespace detail;
  SuiteReport r{"main-theorem"};
  const auto trials = p.get("trials", 300);
  const double per_case = static_cast<double>(p.get("per_case", 10));
  const double total_limit = static_cast<double>(p.get("total", 1800));
  std::mt19937_64 rng(p.seed);
  const auto t0 = SuiteClock::now();
  double worst = 0;
  for (std::int64_t i = 0; i < trials; ++i) {
    const std::size_t nb = 6 + rng() % 7;
    const std::size_t na = nb + rng() % (13 - nb);
    const std::uint64_t s = rng();
    const auto bg = gen_random_bipartite_mindegA(na, nb, 6, s);
    const auto c0 = SuiteClock::now();
    const auto res = find_t_cluster(bg.graph, 6, SearchBudget::seconds(per_case), p.workers);
    const double dt = since(c0);
    worst = std::max(worst, dt);
    const std::string label = cat("case ", i, " |A|=", na, " |B|=", nb, " m=", bg.graph.size(), " seed=", s);
    if (expect_found(r, bg.graph, 6, res, label)) {
      if (dt > per_case) r.fail(cat(label, ": took ", dt, " s"));
      r.note(cat(label, ": found, ", res.nodes, " nodes, ", dt, " s"));
    }
  }
  r.seconds = since(t0);
  if (r.seconds > total_limit) r.fail(cat("total time ", r.seconds, " s exceeds ", total_limit, " s"));
  r.summary = cat(trials, " instances, slowest ", worst, " s, total ", r.seconds, " s");
  return r;
}

/// gen_fig1(k): A-degrees 4 and no K_5 minor.
inline SuiteReport suite_fig1(const SuiteParams& p) {
  using namespace detail;
  SuiteReport r{"fig1"};
  const auto k = static_cast<std::size_t>(p.get("k", 3));
  const auto t0 = SuiteClock::now();
  const auto bg = gen_fig1(k);
  for (Vertex a : bg.bipartition.side_a)
    if (bg.graph.degree(a) != 4) r.fail(cat("A-vertex ", a, " has degree ", bg.graph.degree(a)));
  const auto res = find_t_cluster(bg.graph, 5, SearchBudget::seconds(static_cast<double>(p.get("time_limit", 300))),
                                  p.workers);
  expect_absent(r, res, cat("fig1(", k, ") t=5"));
  r.seconds = since(t0);
  r.summary = cat("fig1(", k, "): n=", bg.graph.order(), " m=", bg.graph.size(), ", t=5 ", to_string(res.status), " after ",
                  res.nodes, " nodes, ", r.seconds, " s");
  r.note(r.summary);
  return r;
}

/// gen_fig1(k) has no K_5 minor; the universal-vertex lemma is checked
/// against the oracle; fig1_apex(k) sits inside fig1(k) plus a universal
/// vertex and so has no K_6 minor.
inline SuiteReport suite_fig1_apex(const SuiteParams& p) {
  using namespace detail;
  SuiteReport r{"fig1-apex"};
  const auto k = static_cast<std::size_t>(p.get("k", 4));
  const auto t0 = SuiteClock::now();

  const auto base = gen_fig1(k);
  const auto res = find_t_cluster(base.graph, 5, SearchBudget::seconds(static_cast<double>(p.get("time_limit", 1800))),
                                  p.workers);
  if (res.status == SearchStatus::timeout)
    r.fail(cat("fig1(", k, ") t=5 timed out; the contraction fallback is not implemented"));
  else
    expect_absent(r, res, cat("fig1(", k, ") t=5"));
  r.note(cat("fig1(", k, ") t=5: ", to_string(res.status), ", ", res.nodes, " nodes, ", since(t0), " s"));

  // Apex lemma against the oracle.
  std::mt19937_64 rng(p.seed);
  const auto trials = p.get("trials", 200);
  std::size_t with_minor = 0;
  for (std::int64_t i = 0; i < trials; ++i) {
    const std::size_t n = 5 + rng() % 5;
    const std::size_t m = n + rng() % (n * (n - 1) / 2 - n + 1);
    const std::uint64_t s = rng();
    const Graph g = gen_random_graph(n, m, s);
    const auto [gv, apex] = add_universal_vertex(g);
    const bool big = brute_force_t_cluster(gv, 6).has_value();
    const bool small = brute_force_t_cluster(g, 5).has_value();
    const std::string label = cat("apex case ", i, " n=", n, " m=", m, " seed=", s);
    if (big != small) r.fail(cat(label, ": oracle gives K6(G+v)=", big, " but K5(G)=", small));
    const auto found = find_t_cluster(gv, 6);
    if ((found.status == SearchStatus::found) != big) r.fail(cat(label, ": search disagrees with oracle on G+v"));
    if (found.cluster) {
      ++with_minor;
      if (auto v = validate_cluster(g, drop_apex(*found.cluster, apex), 5); !v)
        r.fail(cat(label, ": dropped cluster rejected: ", v.message));
    }
  }
  r.note(cat("apex lemma: ", trials, " instances, ", with_minor, " with a K6 minor in G+v"));

  const auto [cover, apex] = add_universal_vertex(base.graph);
  const auto ap = gen_fig1_apex(k);
  if (!is_subgraph(ap.graph, cover))
    r.fail("fig1_apex is not a subgraph of fig1 plus a universal vertex");
  else
    r.note(cat("fig1_apex(", k, ") is a subgraph of fig1(", k, ") + universal vertex ", apex, "; no K6 minor"));
  for (Vertex a : ap.bipartition.side_a)
    if (ap.graph.degree(a) != 5) r.fail(cat("fig1_apex A-vertex ", a, " has degree ", ap.graph.degree(a)));

  r.seconds = since(t0);
  r.summary = cat("fig1(", k, ") t=5 ", to_string(res.status), "; apex lemma on ", trials, " instances; ", r.seconds, " s");
  return r;
}

/// Graphs with n vertices and 4n-9 edges always have a K_6 minor.
inline SuiteReport suite_mader_density(const SuiteParams& p) {
  using namespace detail;
  SuiteReport r{"mader-density"};
  std::vector<std::size_t> ns;
  if (p.values.count("n"))
    ns.push_back(static_cast<std::size_t>(p.get("n", 6)));
  else
    for (std::size_t n = 6; n <= 13; ++n) ns.push_back(n);
  const auto trials = p.get("trials", 100);
  std::mt19937_64 rng(p.seed);
  const auto t0 = SuiteClock::now();
  for (std::size_t n : ns) {
    if (n < 6) throw InputError("mader-density needs n >= 6");
    const std::size_t m = 4 * n - 9;
    std::uint64_t nodes = 0;
    for (std::int64_t i = 0; i < trials; ++i) {
      const std::uint64_t s = rng();
      const Graph g = gen_random_graph(n, m, s);
      const auto res = find_t_cluster(g, 6, SearchBudget::seconds(60), p.workers);
      nodes += res.nodes;
      expect_found(r, g, 6, res, cat("n=", n, " case ", i, " seed=", s));
    }
    r.note(cat("n=", n, " m=", m, ": ", trials, " graphs, ", nodes, " search nodes"));
  }
  r.seconds = since(t0);
  r.summary = cat(ns.size(), " orders x ", trials, " graphs, ", r.seconds, " s");
  return r;
}

/// Apex over a planar triangulation: 4|V|-10 edges, min degree 6, and for
/// m = 1 no K_6 minor.
inline SuiteReport suite_apex_planar(const SuiteParams& p) {
  using namespace detail;
  SuiteReport r{"apex-planar"};
  const auto t0 = SuiteClock::now();
  for (std::size_t m = 1; m <= 2; ++m) {
    const Graph g = gen_apex_planar(m);
    const std::size_t n = g.order();
    if (g.size() != 4 * n - 10) r.fail(cat("m=", m, ": ", g.size(), " edges, expected ", 4 * n - 10));
    if (g.min_degree() != 6) r.fail(cat("m=", m, ": min degree ", g.min_degree()));
    r.note(cat("m=", m, ": n=", n, " edges=", g.size(), " min degree ", g.min_degree()));
  }
  const Graph g1 = gen_apex_planar(1);
  const auto res =
      find_t_cluster(g1, 6, SearchBudget::seconds(static_cast<double>(p.get("time_limit", 600))), p.workers);
  expect_absent(r, res, "apex_planar(1) t=6");
  r.note(cat("apex_planar(1) t=6: ", to_string(res.status), ", ", res.nodes, " nodes"));
  r.seconds = since(t0);
  r.summary = cat("apex_planar(1) t=6 ", to_string(res.status), ", ", r.seconds, " s");
  return r;
}

/// The constructive finder for t <= 4 on random bipartite graphs meeting
/// |A| >= |B| > 0 and A-degrees >= t-1.
inline SuiteReport suite_small_minor(const SuiteParams& p) {
  using namespace detail;
  SuiteReport r{"small-minor"};
  const auto trials = p.get("trials", 200);
  std::mt19937_64 rng(p.seed);
  const auto t0 = SuiteClock::now();
  for (std::size_t t = 2; t <= 4; ++t) {
    std::size_t ok = 0;
    for (std::int64_t i = 0; i < trials; ++i) {
      const std::size_t lo = std::max<std::size_t>(1, t - 1);
      const std::size_t nb = lo + rng() % (9 - lo);
      const std::size_t na = nb + rng() % (11 - nb);
      const std::uint64_t s = rng();
      const auto bg = gen_random_bipartite_mindegA(na, nb, t - 1, s);
      const std::string label = cat("t=", t, " case ", i, " |A|=", na, " |B|=", nb, " seed=", s);
      try {
        const Cluster c = find_small_minor_bipartite(bg.graph, bg.bipartition, t);
        if (auto v = validate_cluster(bg.graph, c, t); !v)
          r.fail(cat(label, ": rejected: ", v.message));
        else
          ++ok;
      } catch (const std::exception& e) {
        r.fail(cat(label, ": ", e.what()));
      }
    }
    r.note(cat("t=", t, ": ", ok, "/", trials, " certificates validated"));
  }
  r.seconds = since(t0);
  r.summary = cat("t in {2,3,4}, ", trials, " instances each, ", r.seconds, " s");
  return r;
}

/// K_{3,n-3} has no K_5 minor and K_{4,n-4} no K_6 minor, n <= 12.
inline SuiteReport suite_complete_bipartite(const SuiteParams& p) {
  using namespace detail;
  SuiteReport r{"complete-bipartite"};
  const auto n_max = static_cast<std::size_t>(p.get("n", 12));
  const auto t0 = SuiteClock::now();
  for (std::size_t n = 4; n <= n_max; ++n) {
    const auto k3 = gen_complete_bipartite(3, n - 3);
    const auto res = find_t_cluster(k3.graph, 5, SearchBudget::seconds(600), p.workers);
    expect_absent(r, res, cat("K_{3,", n - 3, "} t=5"));
    r.note(cat("K_{3,", n - 3, "} t=5: ", to_string(res.status), ", ", res.nodes, " nodes"));
    if (n >= 5) {
      const auto k4 = gen_complete_bipartite(4, n - 4);
      const auto res4 = find_t_cluster(k4.graph, 6, SearchBudget::seconds(600), p.workers);
      expect_absent(r, res4, cat("K_{4,", n - 4, "} t=6"));
      r.note(cat("K_{4,", n - 4, "} t=6: ", to_string(res4.status), ", ", res4.nodes, " nodes"));
    }
  }
  r.seconds = since(t0);
  r.summary = cat("n = 4..", n_max, ", ", r.seconds, " s");
  return r;
}

/// Exhaustive path game on all multisets of at most four triangles, plus the
/// hand-solved four-triangle configuration.
inline SuiteReport suite_game_lemma(const SuiteParams& p) {
  using namespace detail;
  SuiteReport r{"game-lemma"};
  const auto t0 = SuiteClock::now();
  try {
    const auto rep = verify_game_lemma(4, p.workers);
    const std::vector<std::size_t> expected{1, 20, 210, 1540, 8855};
    if (rep.cases_by_size != expected) r.fail("multiset counts differ from C(19+k, k)");
    std::string counts;
    for (auto c : rep.cases_by_size) counts += cat(counts.empty() ? "" : ",", c);
    r.note(cat("cases by size [", counts, "], total ", rep.total_cases, ", max width ", rep.max_width));
  } catch (const LemmaViolation& e) {
    r.fail(e.what());
  }
  const double sweep = since(t0);
  if (sweep >= 60) r.fail(cat("sweep took ", sweep, " s"));

  const std::vector<Triangle> config{{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}};
  const std::vector<Vertex> middles{0, 4, 1, 5};
  std::vector<PathChoice> choices;
  for (std::size_t i = 0; i < 4; ++i) choices.push_back({config[i], middles[i]});
  const Graph u = union_graph(config, choices);
  const Graph j = j_template();
  if (u.size() != j.size() || !contains_J(u))
    r.fail(cat("explicit configuration: union has ", u.size(), " edges and is not J"));
  else
    r.note("explicit configuration: union graph is isomorphic to J");

  r.seconds = since(t0);
  r.summary = cat("sweep ", sweep, " s");
  return r;
}

/// Every partition of the seven b's of the standalone K(4,7,4) pattern into
/// at most three blocks is feasible.
inline SuiteReport suite_k474_feasibility(const SuiteParams&) {
  using namespace detail;
  SuiteReport r{"k474-feasibility"};
  const auto t0 = SuiteClock::now();
  const auto pat = gen_kpqr_pattern(4, 7, 4);
  const std::vector<Vertex> as{0, 1, 2, 3};
  const std::vector<Vertex> bs{4, 5, 6, 7, 8, 9, 10};
  std::size_t count = 0, feasible = 0;
  set_partitions(7, 3, [&](const std::vector<std::size_t>& lab) {
    ++count;
    std::size_t k = 0;
    for (auto l : lab) k = std::max(k, l + 1);
    std::vector<VertexSet> part(k);
    for (std::size_t i = 0; i < 7; ++i) part[lab[i]].insert(bs[i]);
    const auto xs = feasible_partition(pat.graph, pat.bipartition, as, bs, part);
    if (!xs) {
      std::string shown;
      for (const auto& y : part) shown += y.to_string();
      r.fail(cat("infeasible partition ", shown));
      return;
    }
    VertexSet used;
    for (std::size_t i = 0; i < k; ++i) {
      if (used.intersects((*xs)[i]) || !pat.graph.is_connected_set((*xs)[i] | part[i])) {
        r.fail("returned assignment does not check out");
        return;
      }
      used |= (*xs)[i];
    }
    ++feasible;
  });
  if (count != 365) r.fail(cat("enumerated ", count, " partitions, expected 365"));
  r.seconds = since(t0);
  r.summary = cat(feasible, "/", count, " partitions feasible");
  r.note(r.summary);
  return r;
}

/// find_t_cluster agrees with the brute-force oracle.
inline SuiteReport suite_oracle_equivalence(const SuiteParams& p) {
  using namespace detail;
  SuiteReport r{"oracle-equivalence"};
  const auto trials = p.get("trials", 1000);
  std::mt19937_64 rng(p.seed);
  const auto t0 = SuiteClock::now();
  std::size_t yes = 0;
  for (std::int64_t i = 0; i < trials; ++i) {
    const std::size_t n = 1 + rng() % 9;
    const std::size_t m = rng() % (n * (n - 1) / 2 + 1);
    const std::size_t t = 3 + static_cast<std::size_t>(i % 3);
    const std::uint64_t s = rng();
    const Graph g = gen_random_graph(n, m, s);
    const bool oracle = brute_force_t_cluster(g, t).has_value();
    const auto res = find_t_cluster(g, t);
    const std::string label = cat("case ", i, " n=", n, " m=", m, " t=", t, " seed=", s);
    if (res.status == SearchStatus::timeout) {
      r.fail(label + ": timeout");
      continue;
    }
    if ((res.status == SearchStatus::found) != oracle) r.fail(cat(label, ": oracle ", oracle, ", search ", to_string(res.status)));
    if (res.cluster) {
      ++yes;
      if (auto v = validate_cluster(g, *res.cluster, t); !v) r.fail(cat(label, ": ", v.message));
    }
  }
  r.seconds = since(t0);
  r.summary = cat(trials, " graphs, ", yes, " with the minor, ", r.seconds, " s");
  r.note(r.summary);
  return r;
}

/// Random graph satisfying six_cluster_around's precondition: a = 0 with
/// neighbours 1..6; helpers with two or three neighbours among them cover
/// all 15 pairs; noise vertices never see more than three of them.
inline BipartiteGraph planted_six_cluster_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto tris = all_triangles();
  std::vector<std::vector<Vertex>> helper_labels;
  std::uint16_t covered = 0;
  const std::size_t k = rng() % 5;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& m = tris[rng() % tris.size()].members();
    helper_labels.push_back({m[0], m[1], m[2]});
  }
  for (const auto& l : helper_labels)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) covered |= std::uint16_t(1u << detail::pair_index(l[i], l[j]));
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v)
      if (!(covered >> detail::pair_index(u, v) & 1u) || rng() % 8 == 0) helper_labels.push_back({u, v});

  // Noise A-vertices see at most one of b_1..b_6; noise B-vertices never see a.
  const std::size_t noise_a = rng() % 4, noise_b = rng() % 4;
  const std::size_t helpers = helper_labels.size();
  const Vertex first_helper = 7;
  const auto first_noise_a = static_cast<Vertex>(first_helper + helpers);
  const auto first_noise_b = static_cast<Vertex>(first_noise_a + noise_a);
  const auto n = static_cast<Vertex>(first_noise_b + noise_b);

  std::vector<Edge> edges;
  Bipartition bip;
  bip.side_a.insert(0);
  for (Vertex b = 1; b <= 6; ++b) {
    edges.emplace_back(0, b);
    bip.side_b.insert(b);
  }
  for (std::size_t h = 0; h < helpers; ++h) {
    const auto id = static_cast<Vertex>(first_helper + h);
    bip.side_a.insert(id);
    for (Vertex l : helper_labels[h]) edges.emplace_back(1 + l, id);
  }
  for (std::size_t i = 0; i < noise_a; ++i) {
    const auto id = static_cast<Vertex>(first_noise_a + i);
    bip.side_a.insert(id);
    if (rng() % 2) edges.emplace_back(static_cast<Vertex>(1 + rng() % 6), id);
  }
  for (std::size_t i = 0; i < noise_b; ++i) {
    const auto id = static_cast<Vertex>(first_noise_b + i);
    bip.side_b.insert(id);
    for (Vertex a : bip.side_a)
      if (a != 0 && rng() % 3 == 0) edges.emplace_back(a, id);
  }
  std::sort(edges.begin(), edges.end());
  return {Graph::on_range(n, edges), bip};
}

/// six_cluster_around on planted instances, cross-checked by the search.
inline SuiteReport suite_six_cluster(const SuiteParams& p) {
  using namespace detail;
  SuiteReport r{"six-cluster"};
  const auto trials = p.get("trials", 100);
  std::mt19937_64 rng(p.seed);
  const auto t0 = SuiteClock::now();
  std::size_t ok = 0;
  for (std::int64_t i = 0; i < trials; ++i) {
    const std::uint64_t s = rng();
    const auto inst = planted_six_cluster_instance(s);
    const std::string label = cat("case ", i, " n=", inst.graph.order(), " seed=", s);
    try {
      const auto out = six_cluster_around(inst.graph, inst.bipartition, 0);
      if (!out.cluster) {
        r.fail(cat(label, ": not applicable: ", out.reason));
        continue;
      }
      const auto& c = *out.cluster;
      bool good = true;
      if (auto v = validate_cluster(inst.graph, c, 6); !v) {
        r.fail(cat(label, ": rejected: ", v.message));
        good = false;
      }
      if (std::find(c.branch_sets.begin(), c.branch_sets.end(), VertexSet{0}) == c.branch_sets.end()) {
        r.fail(label + ": no branch set {a}");
        good = false;
      }
      const auto res = find_t_cluster(inst.graph, 6, SearchBudget::seconds(60), p.workers);
      if (!expect_found(r, inst.graph, 6, res, label + " cross-check")) good = false;
      if (good) ++ok;
    } catch (const std::exception& e) {
      r.fail(cat(label, ": ", e.what()));
    }
  }
  r.seconds = since(t0);
  r.summary = cat(ok, "/", trials, " planted instances", ", ", r.seconds, " s");
  r.note(r.summary);
  return r;
}

/// Size and degree invariants of every generator, and JSON round trips.
inline SuiteReport suite_generators(const SuiteParams& p) {
  using namespace detail;
  SuiteReport r{"generators"};
  const auto t0 = SuiteClock::now();
  auto round_trip = [&](const std::string& label, const Graph& g, const std::optional<Bipartition>& bip) {
    const auto back = graph_from_string(graph_to_json(g, bip).dump());
    if (!(back.graph == g) || back.bipartition != bip) r.fail(label + ": JSON round trip changed the graph");
  };

  for (std::size_t m = 1; m <= 8; ++m)
    for (std::size_t n = 1; n <= 8; ++n) {
      const auto g = gen_complete_bipartite(m, n);
      if (g.graph.size() != m * n || !g.bipartition.valid_for(g.graph)) r.fail(cat("K_{", m, ",", n, "}"));
      round_trip(cat("K_{", m, ",", n, "}"), g.graph, g.bipartition);
    }
  r.note("complete_bipartite m,n = 1..8: m*n edges");

  for (std::size_t k = 1; k <= 10; ++k) {
    const auto g = gen_fig1(k);
    if (g.bipartition.side_a.size() != 3 * k || g.bipartition.side_b.size() != 2 * k + 3)
      r.fail(cat("fig1(", k, ") side sizes"));
    for (Vertex a : g.bipartition.side_a)
      if (g.graph.degree(a) != 4) r.fail(cat("fig1(", k, ") A-degree"));
    if (!g.bipartition.valid_for(g.graph)) r.fail(cat("fig1(", k, ") bipartition"));
    round_trip(cat("fig1(", k, ")"), g.graph, g.bipartition);
    const auto ap = gen_fig1_apex(k);
    if (ap.graph.order() != 5 * k + 4 || ap.graph.size() != 15 * k || !ap.bipartition.valid_for(ap.graph))
      r.fail(cat("fig1_apex(", k, ")"));
    round_trip(cat("fig1_apex(", k, ")"), ap.graph, ap.bipartition);
  }
  r.note("fig1 k = 1..10: |A| = 3k, |B| = 2k+3, A-degrees 4; fig1_apex adds one B-vertex");

  for (std::size_t m = 1; m <= 5; ++m) {
    const Graph g = gen_geodesic(m);
    const std::size_t n = 10 * m * m + 2;
    bool ok = g.order() == n && g.size() == 3 * n - 6 && g.min_degree() == 5 && g.max_degree() == (m == 1 ? 5 : 6);
    std::size_t fives = 0;
    for (Vertex v : g.vertices()) fives += g.degree(v) == 5;
    ok = ok && fives == 12;
    if (m <= 3) ok = ok && three_connected(g);
    if (!ok) r.fail(cat("geodesic(", m, ")"));
    round_trip(cat("geodesic(", m, ")"), g, std::nullopt);
  }
  r.note("geodesic m = 1..5: 10m^2+2 vertices, 3V-6 edges, twelve of degree 5, 3-connected for m <= 3");

  for (std::size_t m = 1; m <= 4; ++m) {
    const Graph g = gen_apex_planar(m);
    if (g.size() != 4 * g.order() - 10 || g.min_degree() != 6) r.fail(cat("apex_planar(", m, ")"));
    round_trip(cat("apex_planar(", m, ")"), g, std::nullopt);
  }
  r.note("apex_planar m = 1..4: 4V-10 edges, min degree 6");

  {
    const Graph g = gen_five_k35();
    const auto bip = two_coloring(g);
    bool ok = g.order() == 42 && g.size() == 85 && bip && g.max_degree() == 5 && g.degree(40) == 5 && g.degree(41) == 5;
    for (Vertex c = 0; c < 5; ++c) ok = ok && g.degree(8 * c + 3) == 5;
    if (!ok) r.fail("five_k35");
    round_trip("five_k35", g, bip);
    r.note("five_k35: 42 vertices, 85 edges, bipartite, max degree 5");
  }

  {
    const auto base = gen_fig1(2);
    const Vertex b = base.bipartition.side_b.front();
    for (std::size_t k = 1; k <= 4; ++k)
      for (bool apex : {false, true}) {
        const auto g = gen_amplifier(base.graph, base.bipartition, b, k, apex);
        const std::size_t n = 1 + k * (base.graph.order() - 1) + (apex ? 1 : 0);
        const std::size_t m = k * base.graph.size() + (apex ? k * base.bipartition.side_a.size() : 0);
        if (g.graph.order() != n || g.graph.size() != m || !g.bipartition.valid_for(g.graph))
          r.fail(cat("amplifier k=", k, " apex=", apex));
        round_trip(cat("amplifier k=", k), g.graph, g.bipartition);
      }
    r.note("amplifier of fig1(2), k = 1..4: k copies glued at one vertex");
  }

  for (std::size_t pp = 1; pp <= 4; ++pp)
    for (std::size_t q = 1; q <= 7; ++q)
      for (std::size_t rr = 0; rr <= std::min(pp, q); ++rr) {
        const auto g = gen_kpqr_pattern(pp, q, rr);
        if (g.graph.size() != pp * q - rr || !g.bipartition.valid_for(g.graph)) r.fail(cat("kpqr ", pp, q, rr));
      }
  r.note("kpqr pattern p <= 4, q <= 7: pq - r edges");

  std::mt19937_64 rng(p.seed);
  for (int i = 0; i < 100; ++i) {
    const std::size_t na = 1 + rng() % 12, nb = 1 + rng() % 12, d = rng() % (nb + 1);
    const std::uint64_t s = rng();
    const auto g1 = gen_random_bipartite_mindegA(na, nb, d, s);
    const auto g2 = gen_random_bipartite_mindegA(na, nb, d, s);
    bool ok = g1.graph == g2.graph && g1.bipartition.valid_for(g1.graph);
    for (Vertex a : g1.bipartition.side_a) ok = ok && g1.graph.degree(a) >= d;
    if (!ok) r.fail(cat("random_bipartite_mindegA seed=", s));
    round_trip("random_bipartite_mindegA", g1.graph, g1.bipartition);
    const std::size_t n = 1 + rng() % 20, m = rng() % (n * (n - 1) / 2 + 1);
    const Graph h = gen_random_graph(n, m, s);
    if (h.order() != n || h.size() != m || !(h == gen_random_graph(n, m, s))) r.fail(cat("random_graph seed=", s));
  }
  r.note("random generators: deterministic per seed, degree and size targets met");

  r.seconds = since(t0);
  r.summary = cat(r.log.size(), " invariant groups checked, ", r.seconds, " s");
  return r;
}

// ---------------------------------------------------------------------------

using SuiteFn = SuiteReport (*)(const SuiteParams&);

inline const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"main-theorem", suite_main_theorem},
      {"fig1", suite_fig1},
      {"fig1-apex", suite_fig1_apex},
      {"mader-density", suite_mader_density},
      {"apex-planar", suite_apex_planar},
      {"small-minor", suite_small_minor},
      {"complete-bipartite", suite_complete_bipartite},
      {"game-lemma", suite_game_lemma},
      {"k474-feasibility", suite_k474_feasibility},
      {"oracle-equivalence", suite_oracle_equivalence},
      {"six-cluster", suite_six_cluster},
      {"generators", suite_generators},
  };
  return table;
}

/// Runs the named suite. Unknown names are InputErrors.
inline SuiteReport run_suite(const std::string& name, const SuiteParams& p = {}) {
  for (const auto& [n, f] : suite_table())
    if (n == name) return f(p);
  throw InputError("unknown suite '" + name + "'");
}

}  // namespace minorkit

#endif  // MINORKIT_SUITES_HPP
