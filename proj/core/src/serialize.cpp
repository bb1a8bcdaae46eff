#include "cayley/serialize.hpp"

#include <fstream>

#include "cayley/error.hpp"

namespace cayley::serialize {

Json to_json(const graph::Graph& g) {
  Json j;
  j["n"] = g.n();
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

graph::Graph graph_from_json(const Json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<graph::Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw UsageError("graph JSON edges must be pairs");
      edges.emplace_back(e[0].get<graph::Vertex>(), e[1].get<graph::Vertex>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    return graph::Graph(n, std::move(edges), std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed graph JSON: ") + e.what());
  }
}

Json to_json(const chroma::VertexColoring& c) {
  Json j;
  j["colors"] = c.colors;
  return j;
}

chroma::VertexColoring vertex_coloring_from_json(const Json& j) {
  try {
    return {j.at("colors").get<std::vector<int>>()};
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed vertex coloring JSON: ") + e.what());
  }
}

Json to_json(const chroma::EdgeColoring& c) {
  Json edges = Json::array();
  for (const auto& [e, col] : c.colors) edges.push_back({e.u, e.v, col});
  Json j;
  j["edges"] = std::move(edges);
  return j;
}

chroma::EdgeColoring edge_coloring_from_json(const Json& j) {
  try {
    chroma::EdgeColoring out;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw UsageError("edge coloring entries must be [u, v, color]");
      out.colors[graph::Edge(e[0].get<graph::Vertex>(), e[1].get<graph::Vertex>())] = e[2].get<int>();
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed edge coloring JSON: ") + e.what());
  }
}

Json to_json(const chroma::ElementRef& e) {
  Json j;
  if (e.kind == chroma::ElementRef::Kind::vertex) {
    j["vertex"] = e.u;
  } else {
    j["edge"] = {e.u, e.v};
  }
  return j;
}

Json to_json(const chroma::ColoringReport& r) {
  Json j;
  j["proper"] = r.proper;
  j["colors_used"] = r.colors_used;
  j["max_degree"] = r.max_degree;
  j["bound_class"] = std::string(chroma::to_string(r.bound_class));
  if (r.witness) {
    j["witness"] = {to_json(r.witness->first), to_json(r.witness->second)};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const chroma::ConformabilityReport& r) {
  Json j;
  j["conformable"] = r.conformable;
  j["required_classes"] = r.required_classes;
  j["class_sizes"] = r.class_sizes;
  j["coloring"] = to_json(r.coloring);
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

Json to_json(const oracle::OracleResult& r) {
  Json j;
  j["status"] = std::string(oracle::to_string(r.status));
  j["value"] = r.value;
  j["lower_bound"] = r.lower_bound;
  j["upper_bound"] = r.upper_bound;
  j["nodes_explored"] = r.nodes_explored;
  j["certification_nodes"] = r.certification_nodes;
  j["witness"] = r.witness;
  return j;
}

Json to_json(const gyro::AxiomReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    if (!c.passed) cj["counterexample"] = c.counterexample;
    checks.push_back(std::move(cj));
  }
  Json j;
  j["all_passed"] = r.all_passed();
  j["checks"] = std::move(checks);
  return j;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << dump(j);
}

}  // namespace cayley::serialize
