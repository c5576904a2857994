// minorkit command line.
//
// Exit codes: 0 found / pass / accepted, 1 absent / fail / rejected /
// not applicable, 2 timeout, 3 refused (size guard), 64 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "minorkit/apex.hpp"
#include "minorkit/constructions.hpp"
#include "minorkit/game.hpp"
#include "minorkit/io.hpp"
#include "minorkit/reduce.hpp"
#include "minorkit/reduction_kit.hpp"
#include "minorkit/search.hpp"
#include "minorkit/small_minor.hpp"
#include "minorkit/suites.hpp"

using namespace minorkit;

namespace {

constexpr int exit_found = 0;
constexpr int exit_absent = 1;
constexpr int exit_timeout = 2;
constexpr int exit_refused = 3;
constexpr int exit_usage = 64;

using Clock = std::chrono::steady_clock;

struct Options {
  bool json = false;
  std::string out;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::size_t workers = 1;
};

// RunReport: command echo, instance summary, verdict, certificate path,
// wall time and search nodes.
struct RunReport {
  std::string command;
  json instance = json::object();
  std::string verdict;
  std::string certificate;
  double wall_time = 0;
  std::uint64_t nodes = 0;
  json extra = json::object();

  json to_json() const {
    json j{{"command", command}, {"instance", instance}, {"verdict", verdict}, {"wall_time", wall_time},
           {"nodes", nodes}};
    j["certificate"] = certificate.empty() ? json(nullptr) : json(certificate);
    for (auto& [k, v] : extra.items()) j[k] = v;
    return j;
  }
};

json summary_of(const Graph& g, const std::optional<Bipartition>& bip) {
  json s{{"n", g.order()}, {"m", g.size()}};
  if (bip) s["sides"] = {{"A", bip->side_a.size()}, {"B", bip->side_b.size()}};
  json hist = json::object();
  for (auto [d, c] : g.degree_histogram()) hist[std::to_string(d)] = c;
  s["degree_histogram"] = hist;
  return s;
}

std::map<std::string, std::int64_t> parse_params(const std::vector<std::string>& items) {
  std::map<std::string, std::int64_t> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("parameter '" + item + "' is not key=value");
    const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size()) throw InputError("parameter " + key + " needs an integer value");
    if (out.count(key)) throw InputError("parameter " + key + " given twice");
    out[key] = v;
  }
  return out;
}

std::vector<Vertex> parse_ids(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 0 || v > max_vertex_id) throw InputError("bad vertex id '" + tok + "'");
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

VertexSet to_set(const std::vector<Vertex>& v) {
  VertexSet s;
  for (Vertex x : v) s.insert(x);
  return s;
}

void write_json(const std::string& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << j.dump(2) << "\n";
}

Bipartition need_bipartition(const ParsedGraph& pg) {
  if (!pg.bipartition) throw InputError("input graph has no bipartition");
  return *pg.bipartition;
}

int finish(const Options& o, RunReport& r, Clock::time_point t0, int code) {
  r.wall_time = std::chrono::duration<double>(Clock::now() - t0).count();
  if (o.json) {
    std::cout << r.to_json().dump(2) << "\n";
  } else {
    std::cout << r.verdict;
    if (r.instance.contains("n")) std::cout << "  n=" << r.instance["n"] << " m=" << r.instance["m"];
    if (r.nodes) std::cout << "  nodes=" << r.nodes;
    std::cout << "  " << r.wall_time << " s";
    if (!r.certificate.empty()) std::cout << "  -> " << r.certificate;
    std::cout << "\n";
    for (auto& [k, v] : r.extra.items()) std::cout << "  " << k << ": " << v.dump() << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minorkit: clique minors in small graphs"};
  app.require_subcommand(1);
  Options o;
  std::string command_echo;
  for (int i = 0; i < argc; ++i) command_echo += (i ? " " : "") + std::string(argv[i]);

  auto common = [&](CLI::App* sub, bool with_out) {
    sub->add_flag("--json", o.json, "print a JSON run report");
    if (with_out) sub->add_option("--out", o.out, "output file");
  };

  // gen
  std::string family, base_path;
  std::vector<std::string> gen_params;
  bool dot = false;
  auto* gen = app.add_subcommand("gen", "generate a named graph family");
  gen->add_option("family", family, "family name")->required();
  gen->add_option("param", gen_params, "key=value parameters");
  gen->add_option("--params", gen_params, "key=value parameters");
  gen->add_option("--in", base_path, "base bipartite graph (amplifier)");
  gen->add_flag("--dot", dot, "write DOT instead of JSON");
  std::int64_t gen_seed = 0;
  gen->add_option("--seed", gen_seed, "seed for random families");
  common(gen, true);

  // find-minor
  std::string in_path;
  std::size_t t = 0;
  double time_limit = 0;
  std::uint64_t node_limit = 0;
  auto* find = app.add_subcommand("find-minor", "search for a K_t minor");
  find->add_option("graph", in_path)->required();
  find->add_option("--t", t)->required();
  find->add_option("--time-limit", time_limit, "seconds");
  find->add_option("--node-limit", node_limit);
  find->add_option("--workers", o.workers);
  common(find, true);

  // validate
  std::string cert_path;
  auto* validate = app.add_subcommand("validate", "check a branch-set certificate");
  validate->add_option("graph", in_path)->required();
  validate->add_option("certificate", cert_path)->required();
  validate->add_option("--t", t)->required();
  common(validate, false);

  // check
  std::string suite;
  std::vector<std::string> suite_params;
  auto* check = app.add_subcommand("check", "run a named acceptance suite");
  check->add_option("suite", suite)->required();
  check->add_option("params", suite_params, "key=value parameters");
  check->add_option("--seed", o.seed)->each([&](const std::string&) { o.seed_given = true; });
  check->add_option("--workers", o.workers);
  bool verbose = false;
  check->add_flag("--verbose", verbose, "print the per-case log");
  common(check, false);

  // small-minor
  auto* small = app.add_subcommand("small-minor", "constructive K_t minor (t <= 4) in a bipartite graph");
  small->add_option("graph", in_path)->required();
  small->add_option("--t", t)->required();
  common(small, true);

  // six-cluster
  Vertex apex_a = 0;
  auto* six = app.add_subcommand("six-cluster", "6-cluster around a degree-six A-vertex");
  six->add_option("graph", in_path)->required();
  six->add_option("--a", apex_a)->required();
  common(six, true);

  // reduce
  auto* reduce = app.add_subcommand("reduce", "strip vertices of degree <= 2 (t >= 4)");
  reduce->add_option("graph", in_path)->required();
  reduce->add_option("--t", t)->required();
  common(reduce, true);

  // cover / feasible / kpqr / chromatic / attachment
  std::string a_list, b_list, blocks, x_list;
  std::size_t kp = 0, kq = 0, kr = 0, k_att = 0;
  auto* cover = app.add_subcommand("cover", "cover graph of a_list, b_list");
  cover->add_option("graph", in_path)->required();
  cover->add_option("--a-list", a_list)->required();
  cover->add_option("--b-list", b_list)->required();
  common(cover, true);

  auto* feasible = app.add_subcommand("feasible", "is a partition of b_list feasible");
  feasible->add_option("graph", in_path)->required();
  feasible->add_option("--a-list", a_list)->required();
  feasible->add_option("--b-list", b_list)->required();
  feasible->add_option("--blocks", blocks, "blocks separated by '|', e.g. 4,5|6")->required();
  common(feasible, true);

  auto* kpqr = app.add_subcommand("kpqr", "find a K(p,q,r)-subgraph");
  kpqr->add_option("graph", in_path)->required();
  kpqr->add_option("--p", kp)->required();
  kpqr->add_option("--q", kq)->required();
  kpqr->add_option("--r", kr)->required();
  common(kpqr, true);

  auto* chromatic = app.add_subcommand("chromatic", "chromatic number (at most 10 vertices)");
  chromatic->add_option("graph", in_path)->required();
  common(chromatic, false);

  auto* attach = app.add_subcommand("attachment", "k disjoint connected sets each dominating x");
  attach->add_option("graph", in_path)->required();
  attach->add_option("--x", x_list)->required();
  attach->add_option("--k", k_att)->required();
  common(attach, true);

  // game
  std::size_t kmax = 4;
  std::string triangles;
  auto* game = app.add_subcommand("game", "path game on K6");
  game->require_subcommand(1);
  auto* game_verify = game->add_subcommand("verify", "solve every multiset of at most kmax triangles");
  game_verify->add_option("--kmax", kmax);
  game_verify->add_option("--workers", o.workers);
  common(game_verify, false);
  auto* game_solve = game->add_subcommand("solve", "solve one triangle list");
  game_solve->add_option("--triangles", triangles, "e.g. 012,034 (empty for none)")->required();
  common(game_solve, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  RunReport r;
  r.command = command_echo;
  const auto t0 = Clock::now();
  try {
    if (*gen) {
      FamilySpec spec{parse_family(family), parse_params(gen_params)};
      if (gen->count("--seed")) {
        if (spec.params.count("seed")) throw InputError("seed given twice");
        spec.params["seed"] = gen_seed;
      }
      std::optional<BipartiteGraph> base;
      if (!base_path.empty()) {
        auto pg = read_graph_file(base_path);
        base = BipartiteGraph{pg.graph, need_bipartition(pg)};
      }
      const Generated g = generate(spec, base);
      r.instance = summary_of(g.graph, g.bipartition);
      r.verdict = "pass";
      if (!o.out.empty()) {
        if (dot) {
          std::ofstream f(o.out);
          if (!f) throw InputError("cannot write " + o.out);
          f << to_dot(g.graph, g.bipartition);
        } else {
          write_json(o.out, graph_to_json(g.graph, g.bipartition));
        }
        r.certificate = o.out;
      } else if (!o.json) {
        std::cout << (dot ? to_dot(g.graph, g.bipartition) : graph_to_json(g.graph, g.bipartition).dump()) << "\n";
      }
      r.extra["family"] = family;
      return finish(o, r, t0, exit_found);
    }

    if (*find) {
      const auto pg = read_graph_file(in_path);
      r.instance = summary_of(pg.graph, pg.bipartition);
      SearchBudget budget;
      if (find->count("--time-limit")) budget.time_limit = time_limit;
      if (find->count("--node-limit")) budget.node_limit = node_limit;
      const auto res = find_t_cluster(pg.graph, t, budget, o.workers);
      r.verdict = to_string(res.status);
      r.nodes = res.nodes;
      if (res.cluster) {
        if (!o.out.empty()) {
          write_json(o.out, cluster_to_json(*res.cluster));
          r.certificate = o.out;
        }
        r.extra["branch_sets"] = cluster_to_json(*res.cluster)["branch_sets"];
      }
      const int code = res.status == SearchStatus::found    ? exit_found
                       : res.status == SearchStatus::absent ? exit_absent
                                                            : exit_timeout;
      return finish(o, r, t0, code);
    }

    if (*validate) {
      const auto pg = read_graph_file(in_path);
      r.instance = summary_of(pg.graph, pg.bipartition);
      std::ifstream f(cert_path);
      if (!f) throw InputError("cannot open " + cert_path);
      json cj;
      try {
        cj = json::parse(f);
      } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed certificate: ") + e.what());
      }
      const auto verdict = validate_cluster(pg.graph, cluster_from_json(cj), t);
      r.verdict = verdict ? "pass" : "fail";
      r.certificate = cert_path;
      if (!verdict) r.extra["reason"] = verdict.message;
      return finish(o, r, t0, verdict ? exit_found : exit_absent);
    }

    if (*check) {
      SuiteParams sp;
      sp.values = parse_params(suite_params);
      sp.workers = o.workers;
      if (auto it = sp.values.find("seed"); it != sp.values.end()) {
        o.seed = static_cast<std::uint64_t>(it->second);
        o.seed_given = true;
        sp.values.erase(it);
      }
      static const std::set<std::string> seeded{"main-theorem", "fig1-apex",   "mader-density", "small-minor",
                                                "oracle-equivalence", "six-cluster", "generators"};
      bool known = false;
      for (const auto& [name, fn] : suite_table()) known = known || name == suite;
      if (!known) throw InputError("unknown suite '" + suite + "'");
      if (seeded.count(suite) && !o.seed_given) throw InputError("suite " + suite + " is random and needs a seed");
      sp.seed = o.seed;
      const SuiteReport rep = run_suite(suite, sp);
      r.verdict = rep.passed ? "pass" : "fail";
      r.extra["suite"] = rep.name;
      r.extra["summary"] = rep.summary;
      if (o.json || verbose) {
        r.extra["log"] = rep.log;
      } else {
        json failures = json::array();
        for (const auto& line : rep.log)
          if (line.rfind("FAIL", 0) == 0) failures.push_back(line);
        if (!failures.empty()) r.extra["failures"] = failures;
      }
      return finish(o, r, t0, rep.passed ? exit_found : exit_absent);
    }

    if (*small) {
      const auto pg = read_graph_file(in_path);
      r.instance = summary_of(pg.graph, pg.bipartition);
      const Cluster c = find_small_minor_bipartite(pg.graph, need_bipartition(pg), t);
      r.verdict = "found";
      r.extra["branch_sets"] = cluster_to_json(c)["branch_sets"];
      if (!o.out.empty()) {
        write_json(o.out, cluster_to_json(c));
        r.certificate = o.out;
      }
      return finish(o, r, t0, exit_found);
    }

    if (*six) {
      const auto pg = read_graph_file(in_path);
      r.instance = summary_of(pg.graph, pg.bipartition);
      const auto out = six_cluster_around(pg.graph, need_bipartition(pg), apex_a);
      if (!out.cluster) {
        r.verdict = "not-applicable";
        r.extra["reason"] = out.reason;
        return finish(o, r, t0, exit_absent);
      }
      r.verdict = "found";
      r.extra["branch_sets"] = cluster_to_json(*out.cluster)["branch_sets"];
      r.extra["helpers"] = out.helpers;
      if (!o.out.empty()) {
        write_json(o.out, cluster_to_json(*out.cluster));
        r.certificate = o.out;
      }
      return finish(o, r, t0, exit_found);
    }

    if (*reduce) {
      const auto pg = read_graph_file(in_path);
      r.instance = summary_of(pg.graph, pg.bipartition);
      const Graph h = reduce_for_minor(pg.graph, t);
      r.verdict = "pass";
      r.extra["reduced"] = summary_of(h, std::nullopt);
      if (!o.out.empty()) {
        write_json(o.out, graph_to_json(h));
        r.certificate = o.out;
      }
      return finish(o, r, t0, exit_found);
    }

    if (*cover) {
      const auto pg = read_graph_file(in_path);
      r.instance = summary_of(pg.graph, pg.bipartition);
      const auto h = build_cover_graph(pg.graph, need_bipartition(pg), parse_ids(a_list), parse_ids(b_list));
      r.verdict = "pass";
      r.extra["cover"] = cover_graph_to_json(h);
      if (!o.out.empty()) {
        write_json(o.out, cover_graph_to_json(h));
        r.certificate = o.out;
      }
      return finish(o, r, t0, exit_found);
    }

    if (*feasible) {
      const auto pg = read_graph_file(in_path);
      r.instance = summary_of(pg.graph, pg.bipartition);
      Partition part;
      std::stringstream ss(blocks);
      std::string block;
      while (std::getline(ss, block, '|')) part.push_back(to_set(parse_ids(block)));
      const auto xs = feasible_partition(pg.graph, need_bipartition(pg), parse_ids(a_list), parse_ids(b_list), part);
      r.verdict = xs ? "found" : "absent";
      if (xs) {
        json assignment = json::array();
        for (const auto& x : *xs) assignment.push_back(x.to_vector());
        r.extra["assignment"] = assignment;
        if (!o.out.empty()) {
          write_json(o.out, {{"assignment", assignment}});
          r.certificate = o.out;
        }
      }
      return finish(o, r, t0, xs ? exit_found : exit_absent);
    }

    if (*kpqr) {
      const auto pg = read_graph_file(in_path);
      r.instance = summary_of(pg.graph, pg.bipartition);
      const auto e = find_kpqr(pg.graph, need_bipartition(pg), kp, kq, kr);
      r.verdict = e ? "found" : "absent";
      if (e) {
        r.extra["embedding"] = kpqr_to_json(*e);
        if (!o.out.empty()) {
          write_json(o.out, kpqr_to_json(*e));
          r.certificate = o.out;
        }
      }
      return finish(o, r, t0, e ? exit_found : exit_absent);
    }

    if (*chromatic) {
      const auto pg = read_graph_file(in_path);
      r.instance = summary_of(pg.graph, pg.bipartition);
      r.extra["chromatic_number"] = chromatic_number(pg.graph);
      r.verdict = "pass";
      return finish(o, r, t0, exit_found);
    }

    if (*attach) {
      const auto pg = read_graph_file(in_path);
      r.instance = summary_of(pg.graph, pg.bipartition);
      const auto sets = find_attachment_system(pg.graph, to_set(parse_ids(x_list)), k_att);
      r.verdict = sets ? "found" : "absent";
      if (sets) {
        json js = json::array();
        for (const auto& s : *sets) js.push_back(s.to_vector());
        r.extra["sets"] = js;
        if (!o.out.empty()) {
          write_json(o.out, {{"sets", js}});
          r.certificate = o.out;
        }
      }
      return finish(o, r, t0, sets ? exit_found : exit_absent);
    }

    if (*game_verify) {
      try {
        const auto rep = verify_game_lemma(kmax, o.workers);
        r.verdict = "pass";
        r.extra["cases_by_size"] = rep.cases_by_size;
        r.extra["total_cases"] = rep.total_cases;
        r.extra["max_width"] = rep.max_width;
        return finish(o, r, t0, exit_found);
      } catch (const LemmaViolation& e) {
        r.verdict = "fail";
        r.extra["reason"] = e.what();
        return finish(o, r, t0, exit_absent);
      }
    }

    if (*game_solve) {
      std::vector<Triangle> tris;
      std::stringstream ss(triangles);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok.size() != 3 || tok.find_first_not_of("012345") != std::string::npos)
          throw InputError("triangle '" + tok + "' must be three digits in 0..5");
        tris.emplace_back(tok[0] - '0', tok[1] - '0', tok[2] - '0');
      }
      try {
        const auto s = solve_game(tris);
        r.verdict = "found";
        r.extra["solution"] = game_solution_to_json(s);
        if (!o.out.empty()) {
          write_json(o.out, game_solution_to_json(s));
          r.certificate = o.out;
        }
        return finish(o, r, t0, exit_found);
      } catch (const LemmaViolation& e) {
        r.verdict = "fail";
        r.extra["reason"] = e.what();
        return finish(o, r, t0, exit_absent);
      }
    }
  } catch (const InputError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const PreconditionError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const RefusedError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return exit_refused;
  }
  return exit_usage;
}
