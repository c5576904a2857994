#ifndef MINORKIT_SEARCH_HPP
#define MINORKIT_SEARCH_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "minorkit/cluster.hpp"
#include "minorkit/graph.hpp"
#include "minorkit/reduce.hpp"

namespace minorkit {

struct SearchBudget {
  std::uint64_t node_limit = std::numeric_limits<std::uint64_t>::max();
  double time_limit = std::numeric_limits<double>::infinity();  // seconds

  static SearchBudget unlimited() { return {}; }
  static SearchBudget seconds(double s) { return {std::numeric_limits<std::uint64_t>::max(), s}; }

  void check() const {
    if (node_limit == 0) throw InputError("node limit must be positive");
    if (!(time_limit > 0)) throw InputError("time limit must be positive");
  }
};

enum class SearchStatus { found, absent, timeout };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::absent: return "absent";
    case SearchStatus::timeout: return "timeout";
  }
  return "?";
}

struct SearchResult {
  SearchStatus status = SearchStatus::timeout;
  std::optional<Cluster> cluster;
  std::uint64_t nodes = 0;
};

/// Largest t accepted by find_t_cluster.
inline constexpr std::size_t max_search_t = 16;

namespace detail {

using Clock = std::chrono::steady_clock;

/// Shared stop/accounting state for one find_t_cluster call.
struct SearchControl {
  SearchBudget budget;
  Clock::time_point start = Clock::now();
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> out_of_budget{false};

  bool expired() {
    if (stop.load(std::memory_order_relaxed)) return true;
    if (nodes.load(std::memory_order_relaxed) >= budget.node_limit ||
        std::chrono::duration<double>(Clock::now() - start).count() >= budget.time_limit) {
      out_of_budget = true;
      stop = true;
      return true;
    }
    return false;
  }
};

/// Exact search for a partition of a connected graph into t connected,
/// pairwise adjacent parts. In a connected graph every K_t minor extends to
/// such a partition (unused vertices can be absorbed into a neighbouring
/// branch set), so exhausting the partitions proves absence.
///
/// Parts are labelled in creation order, so each partition is visited once.
template <std::size_t Words>
class PartitionSearch {
 public:
  using Mask = BasicVertexSet<Words>;

  struct State {
    std::array<Mask, max_search_t> parts{};
    std::array<Mask, max_search_t> reach{};  // union of neighbourhoods of each part
    std::size_t k = 0;
    Mask free;
    Mask assigned;
  };

  PartitionSearch(std::vector<Mask> adj, std::size_t t, SearchControl& ctl)
      : adj_(std::move(adj)), n_(adj_.size()), t_(t), ctl_(ctl) {
    all_ = Mask::range(static_cast<Vertex>(n_));
    degree_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) degree_[v] = adj_[v].size();
  }

  State root() const {
    State s;
    s.free = all_;
    Vertex best = 0;
    for (Vertex v = 1; v < n_; ++v)
      if (degree_[v] > degree_[best]) best = v;
    assign(s, best, 0);
    return s;
  }

  /// Returns true and fills `found` when a partition exists below `s`.
  /// Returns false on exhaustion or when the control signals a stop.
  bool run(const State& s, std::vector<Mask>& found) {
    found_ = &found;
    return dfs(s);
  }

  /// Expands the tree breadth-first until at least `want` open states
  /// exist, for distribution across workers. Solutions met on the way are
  /// returned through `found`.
  std::vector<State> split(const State& s, std::size_t want, std::vector<Mask>& found, bool& solved) {
    std::vector<State> layer{s};
    solved = false;
    while (!layer.empty() && layer.size() < want) {
      std::vector<State> next;
      bool progressed = false;
      for (const auto& st : layer) {
        if (st.free.empty()) {
          if (complete(st)) {
            found.assign(st.parts.begin(), st.parts.begin() + t_);
            solved = true;
            return {};
          }
          continue;
        }
        if (!feasible(st)) continue;
        progressed = true;
        for_each_child(st, [&](const State& c) {
          next.push_back(c);
          return false;
        });
      }
      layer = std::move(next);
      if (!progressed) break;
    }
    return layer;
  }

 private:
  void assign(State& s, Vertex v, std::size_t part) const {
    if (part == s.k) ++s.k;
    s.parts[part].insert(v);
    s.reach[part] |= adj_[v];
    s.free.erase(v);
    s.assigned.insert(v);
  }

  bool complete(const State& s) const {
    if (s.k != t_) return false;
    for (std::size_t i = 0; i < t_; ++i) {
      if (!connected_within(s.parts[i], s.parts[i])) return false;
      for (std::size_t j = i + 1; j < t_; ++j)
        if (!s.reach[i].intersects(s.parts[j])) return false;
    }
    return true;
  }

  bool connected_within(const Mask& x, const Mask& within) const {
    Mask seen{x.front()};
    Mask frontier = seen;
    while (!frontier.empty()) {
      Mask next;
      for (Vertex v : frontier) next |= adj_[v];
      next &= within;
      next -= seen;
      seen |= next;
      frontier = next;
    }
    return x.is_subset_of(seen);
  }

  /// Necessary conditions for extending `s` to a complete partition.
  bool feasible(const State& s) const {
    const std::size_t k = s.k;
    // Components of the unassigned region and the parts each one touches.
    std::array<std::uint32_t, max_search_t> pair_ok{};
    std::uint32_t full = (k == 32) ? ~0u : ((1u << k) - 1);
    bool host_for_new_parts = false;
    Mask rest = s.free;
    while (!rest.empty()) {
      Mask comp{rest.front()};
      Mask frontier = comp;
      Mask nb;
      while (!frontier.empty()) {
        Mask next;
        for (Vertex v : frontier) next |= adj_[v];
        nb |= next;
        next &= rest;
        next -= comp;
        comp |= next;
        frontier = next;
      }
      rest -= comp;
      std::uint32_t touch = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (nb.intersects(s.parts[i])) touch |= 1u << i;
      if (touch == 0) return false;  // nothing can ever absorb this region
      if (touch == full && comp.size() >= t_ - k) host_for_new_parts = true;
      for (std::size_t i = 0; i < k; ++i)
        if (touch >> i & 1u) pair_ok[i] |= touch;
    }
    if (k < t_ && !host_for_new_parts) return false;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j)
        if (!(pair_ok[i] >> j & 1u) && !s.reach[i].intersects(s.parts[j])) return false;
      if (s.parts[i].size() > 1 && !connected_within(s.parts[i], s.parts[i] | s.free)) return false;
    }
    return true;
  }

  Vertex pick(const State& s) const {
    Vertex best = VertexSet::capacity;
    std::size_t best_links = 0, best_deg = 0;
    for (Vertex v : s.free) {
      const std::size_t links = (adj_[v] & s.assigned).size();
      if (best == VertexSet::capacity || links > best_links ||
          (links == best_links && degree_[v] > best_deg)) {
        best = v;
        best_links = links;
        best_deg = degree_[v];
      }
    }
    return best;
  }

  /// Calls `visit` on each child of `s` in branching order; stops early when
  /// `visit` returns true.
  template <class Visit>
  bool for_each_child(const State& s, Visit&& visit) const {
    const Vertex v = pick(s);
    // Parts adjacent to v first, then a fresh part, then distant parts.
    for (std::size_t i = 0; i < s.k; ++i)
      if (adj_[v].intersects(s.parts[i])) {
        State c = s;
        assign(c, v, i);
        if (visit(c)) return true;
      }
    if (s.k < t_) {
      State c = s;
      assign(c, v, s.k);
      if (visit(c)) return true;
    }
    for (std::size_t i = 0; i < s.k; ++i)
      if (!adj_[v].intersects(s.parts[i])) {
        State c = s;
        assign(c, v, i);
        if (visit(c)) return true;
      }
    return false;
  }

  bool dfs(const State& s) {
    if ((ctl_.nodes.fetch_add(1, std::memory_order_relaxed) & 1023) == 0 && ctl_.expired()) return false;
    if (ctl_.stop.load(std::memory_order_relaxed)) return false;
    if (s.free.empty()) {
      if (!complete(s)) return false;
      found_->assign(s.parts.begin(), s.parts.begin() + t_);
      return true;
    }
    if (!feasible(s)) return false;
    return for_each_child(s, [this](const State& c) { return dfs(c); });
  }

  std::vector<Mask> adj_;
  std::size_t n_;
  std::size_t t_;
  SearchControl& ctl_;
  Mask all_;
  std::vector<std::size_t> degree_;
  std::vector<Mask>* found_ = nullptr;
};

/// Randomised greedy contraction: repeatedly merge a minimum-degree block
/// into the neighbour sharing the fewest common neighbours, looking for a
/// t-clique among blocks after each merge. Sound but incomplete.
template <std::size_t Words>
std::optional<std::vector<BasicVertexSet<Words>>> greedy_contraction(const std::vector<BasicVertexSet<Words>>& adj,
                                                                     std::size_t t, std::size_t rounds,
                                                                     std::uint64_t seed, SearchControl& ctl) {
  using Mask = BasicVertexSet<Words>;
  const std::size_t n = adj.size();
  std::mt19937_64 rng(seed);

  // Finds a clique of size t among `alive` blocks, writing its members.
  auto find_clique = [&](const std::vector<Mask>& qadj, const Mask& alive, std::vector<Vertex>& out) {
    Mask cand;
    for (Vertex v : alive)
      if (qadj[v].size() + 1 >= t) cand.insert(v);
    auto rec = [&](auto&& self, Mask c) -> bool {
      if (out.size() == t) return true;
      if (out.size() + c.size() < t) return false;
      while (!c.empty()) {
        if (out.size() + c.size() < t) return false;
        const Vertex v = c.front();
        c.erase(v);
        out.push_back(v);
        if (self(self, c & qadj[v])) return true;
        out.pop_back();
      }
      return false;
    };
    return rec(rec, cand);
  };

  for (std::size_t round = 0; round < rounds; ++round) {
    if (ctl.expired()) return std::nullopt;
    std::vector<Mask> qadj = adj;
    std::vector<Mask> members(n);
    for (Vertex v = 0; v < n; ++v) members[v].insert(v);
    Mask alive = Mask::range(static_cast<Vertex>(n));
    std::vector<Vertex> clique;
    for (;;) {
      clique.clear();
      if (find_clique(qadj, alive, clique)) {
        std::vector<Mask> parts;
        for (Vertex v : clique) parts.push_back(members[v]);
        return parts;
      }
      if (alive.size() <= t) break;
      // Minimum-degree block, random tie-break.
      std::size_t best_deg = SIZE_MAX;
      std::vector<Vertex> ties;
      for (Vertex v : alive) {
        const std::size_t d = qadj[v].size();
        if (d < best_deg) {
          best_deg = d;
          ties.assign(1, v);
        } else if (d == best_deg) {
          ties.push_back(v);
        }
      }
      const Vertex v = ties[rng() % ties.size()];
      if (qadj[v].empty()) {
        alive.erase(v);
        continue;
      }
      std::size_t best_common = SIZE_MAX;
      std::vector<Vertex> partners;
      for (Vertex u : qadj[v]) {
        const std::size_t c = (qadj[u] & qadj[v]).size();
        if (c < best_common) {
          best_common = c;
          partners.assign(1, u);
        } else if (c == best_common) {
          partners.push_back(u);
        }
      }
      const Vertex u = partners[rng() % partners.size()];
      // Merge v into u.
      members[u] |= members[v];
      Mask nb = qadj[v];
      nb.erase(u);
      for (Vertex w : qadj[v]) qadj[w].erase(v);
      for (Vertex w : nb) {
        qadj[w].insert(u);
        qadj[u].insert(w);
      }
      qadj[v] = {};
      alive.erase(v);
    }
  }
  return std::nullopt;
}

enum class EngineOutcome { found, absent, stopped };

template <std::size_t Words>
EngineOutcome solve_component(const std::vector<BasicVertexSet<Words>>& adj, std::size_t t, SearchControl& ctl,
                              std::size_t workers, std::vector<BasicVertexSet<Words>>& parts) {
  using Mask = BasicVertexSet<Words>;
  const std::size_t n = adj.size();
  std::size_t edges = 0;
  for (const auto& a : adj) edges += a.size();
  edges /= 2;
  if (n < t || edges < t * (t - 1) / 2) return EngineOutcome::absent;
  if (t == 1) {
    parts = {Mask{0}};
    return EngineOutcome::found;
  }

  if (auto hit = greedy_contraction(adj, t, 32, 0x5eed0000 + n * 131 + t, ctl)) {
    parts = std::move(*hit);
    return EngineOutcome::found;
  }
  if (ctl.stop) return EngineOutcome::stopped;

  PartitionSearch<Words> search(adj, t, ctl);
  auto root = search.root();
  if (workers <= 1) {
    if (search.run(root, parts)) return EngineOutcome::found;
    return ctl.out_of_budget ? EngineOutcome::stopped : EngineOutcome::absent;
  }

  bool solved = false;
  auto open = search.split(root, workers * 8, parts, solved);
  if (solved) return EngineOutcome::found;
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  bool any_found = false;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      PartitionSearch<Words> local(adj, t, ctl);
      std::vector<Mask> mine;
      for (std::size_t i; (i = next.fetch_add(1)) < open.size();) {
        if (ctl.stop) return;
        if (local.run(open[i], mine)) {
          std::lock_guard lock(mu);
          if (!any_found) {
            any_found = true;
            parts = mine;
          }
          ctl.stop = true;
          return;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (any_found) return EngineOutcome::found;
  return ctl.out_of_budget ? EngineOutcome::stopped : EngineOutcome::absent;
}

template <std::size_t Words>
EngineOutcome solve_on(const Graph& g, const VertexSet& comp, std::size_t t, SearchControl& ctl, std::size_t workers,
                       std::vector<VertexSet>& out) {
  using Mask = BasicVertexSet<Words>;
  const auto ids = comp.to_vector();
  std::vector<Vertex> index(comp.back() + 1, 0);
  for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<Vertex>(i);
  std::vector<Mask> adj(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (Vertex u : g.neighbors(ids[i]) & comp) adj[i].insert(index[u]);
  std::vector<Mask> parts;
  const auto outcome = solve_component<Words>(adj, t, ctl, workers, parts);
  if (outcome == EngineOutcome::found) {
    out.clear();
    for (const auto& p : parts) {
      VertexSet s;
      for (Vertex v : p) s.insert(ids[v]);
      out.push_back(s);
    }
  }
  return outcome;
}

}  // namespace detail

/// Exact K_t-minor search. On `found` the returned cluster is minimised and
/// validated against `g`; `absent` means the search space was exhausted.
inline SearchResult find_t_cluster(const Graph& g, std::size_t t, const SearchBudget& budget = {},
                                   std::size_t workers = 1) {
  budget.check();
  if (t < 1) throw InputError("t must be at least 1");
  if (t > max_search_t) throw RefusedError("t above " + std::to_string(max_search_t) + " is not supported");
  detail::SearchControl ctl;
  ctl.budget = budget;

  Reduction red;
  if (t >= 4) {
    red = reduce_for_minor_tracked(g, t);
  } else {
    red.graph = g;
    red.origin.resize(g.vertices().empty() ? 0 : g.vertices().back() + 1);
    for (Vertex v : g.vertices()) red.origin[v] = VertexSet{v};
  }

  bool timed_out = false;
  for (const auto& comp : components(red.graph)) {
    if (comp.size() < t) continue;
    std::vector<VertexSet> parts;
    detail::EngineOutcome outcome;
    if (comp.size() <= 64)
      outcome = detail::solve_on<1>(red.graph, comp, t, ctl, workers, parts);
    else if (comp.size() <= 128)
      outcome = detail::solve_on<2>(red.graph, comp, t, ctl, workers, parts);
    else
      outcome = detail::solve_on<4>(red.graph, comp, t, ctl, workers, parts);

    if (outcome == detail::EngineOutcome::found) {
      Cluster c;
      for (const auto& p : parts) c.branch_sets.push_back(red.lift(p));
      c = minimize_cluster(g, std::move(c));
      std::sort(c.branch_sets.begin(), c.branch_sets.end());
      if (auto verdict = validate_cluster(g, c, t); !verdict)
        throw std::logic_error("internal error: search produced an invalid cluster: " + verdict.message);
      return {SearchStatus::found, std::move(c), ctl.nodes.load()};
    }
    if (outcome == detail::EngineOutcome::stopped) {
      timed_out = true;
      break;
    }
  }
  return {timed_out ? SearchStatus::timeout : SearchStatus::absent, std::nullopt, ctl.nodes.load()};
}

}  // namespace minorkit

#endif  // MINORKIT_SEARCH_HPP
