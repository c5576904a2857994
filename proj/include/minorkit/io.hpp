#ifndef MINORKIT_IO_HPP
#define MINORKIT_IO_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "minorkit/cluster.hpp"
#include "minorkit/game.hpp"
#include "minorkit/graph.hpp"
#include "minorkit/reduction_kit.hpp"

namespace minorkit {

using json = nlohmann::json;

inline json to_json(const VertexSet& s) { return json(s.to_vector()); }

/// {"n", "vertices", "edges" (u < v, sorted), "bipartition" (optional)}.
inline json graph_to_json(const Graph& g, const std::optional<Bipartition>& bip = std::nullopt) {
  json j;
  j["n"] = g.order();
  j["vertices"] = g.vertices().to_vector();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = edges;
  if (bip) j["bipartition"] = {{"A", to_json(bip->side_a)}, {"B", to_json(bip->side_b)}};
  return j;
}

struct ParsedGraph {
  Graph graph;
  std::optional<Bipartition> bipartition;
};

namespace detail {
inline VertexSet parse_id_list(const json& arr, const char* what) {
  if (!arr.is_array()) throw InputError(std::string(what) + " must be an array");
  VertexSet s;
  for (const auto& x : arr) {
    if (!x.is_number_integer()) throw InputError(std::string(what) + " entries must be integers");
    const auto v = x.get<std::int64_t>();
    if (v < 0 || v > static_cast<std::int64_t>(max_vertex_id))
      throw InputError(std::string(what) + " id " + std::to_string(v) + " out of range");
    if (s.contains(static_cast<Vertex>(v))) throw InputError(std::string(what) + " repeats id " + std::to_string(v));
    s.insert(static_cast<Vertex>(v));
  }
  return s;
}
}  // namespace detail

/// Parses the graph format written by graph_to_json. Loops, repeated edges,
/// unknown endpoints, a wrong "n" and invalid bipartitions are InputErrors.
inline ParsedGraph graph_from_json(const json& j) {
  if (!j.is_object()) throw InputError("graph JSON must be an object");
  if (!j.contains("vertices") || !j.contains("edges")) throw InputError("graph JSON needs vertices and edges");
  const VertexSet vs = detail::parse_id_list(j.at("vertices"), "vertices");
  if (j.contains("n") && (!j.at("n").is_number_integer() || j.at("n").get<std::int64_t>() != static_cast<std::int64_t>(vs.size())))
    throw InputError("n does not match the vertex count");
  std::vector<Edge> edges;
  if (!j.at("edges").is_array()) throw InputError("edges must be an array");
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw InputError("each edge must be a pair of integers");
    const auto u = e[0].get<std::int64_t>(), v = e[1].get<std::int64_t>();
    if (u < 0 || v < 0 || u > max_vertex_id || v > max_vertex_id) throw InputError("edge endpoint out of range");
    edges.emplace_back(static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v)));
  }
  ParsedGraph out{Graph(vs, edges), std::nullopt};
  if (j.contains("bipartition") && !j.at("bipartition").is_null()) {
    const auto& b = j.at("bipartition");
    if (!b.is_object() || !b.contains("A") || !b.contains("B")) throw InputError("bipartition needs A and B");
    Bipartition bip{detail::parse_id_list(b.at("A"), "A"), detail::parse_id_list(b.at("B"), "B")};
    bip.check(out.graph);
    out.bipartition = bip;
  }
  return out;
}

inline ParsedGraph graph_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return graph_from_json(j);
}

inline ParsedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return graph_from_string(ss.str());
}

/// {"t", "branch_sets"}.
inline json cluster_to_json(const Cluster& c) {
  json sets = json::array();
  for (const auto& b : c.branch_sets) sets.push_back(b.to_vector());
  return {{"t", c.size()}, {"branch_sets", sets}};
}

inline Cluster cluster_from_json(const json& j) {
  if (!j.is_object() || !j.contains("branch_sets")) throw InputError("certificate needs branch_sets");
  Cluster c;
  for (const auto& b : j.at("branch_sets")) c.branch_sets.push_back(detail::parse_id_list(b, "branch set"));
  if (j.contains("t") && j.at("t").get<std::size_t>() != c.size()) throw InputError("t does not match branch set count");
  return c;
}

/// {"middles", "embedding"}: one middle vertex per triangle, and the image
/// of each J-vertex 0..5.
inline json game_solution_to_json(const GameSolution& s) {
  std::vector<Vertex> middles;
  for (const auto& c : s.choices) middles.push_back(c.middle);
  return {{"middles", middles}, {"embedding", std::vector<Vertex>(s.j_embedding.begin(), s.j_embedding.end())}};
}

inline json kpqr_to_json(const KpqrEmbedding& e) {
  return {{"p", e.p}, {"q", e.q}, {"r", e.r}, {"a_vertices", e.a_vertices}, {"b_vertices", e.b_vertices}};
}

inline json cover_graph_to_json(const CoverGraph& h) {
  json witness = json::array();
  for (const auto& [e, w] : h.witness) witness.push_back({{"edge", {e.first, e.second}}, {"witness", w}});
  return {{"base", h.base}, {"excluded", h.excluded}, {"graph", graph_to_json(h.graph)}, {"witness", witness}};
}

/// DOT rendering; A-side vertices are boxes, B-side vertices circles.
inline std::string to_dot(const Graph& g, const std::optional<Bipartition>& bip = std::nullopt) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v : g.vertices()) {
    out << "  " << v;
    if (bip) out << " [shape=" << (bip->side_a.contains(v) ? "box" : "circle") << "]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace minorkit

#endif  // MINORKIT_IO_HPP
