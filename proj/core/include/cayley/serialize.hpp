#pragma once

// JSON forms of graphs, colorings and reports. Key order is fixed by
// nlohmann::ordered_json so that dumps are byte-stable.

#include <nlohmann/json.hpp>

#include "cayley/chroma.hpp"
#include "cayley/graph.hpp"
#include "cayley/gyro.hpp"
#include "cayley/oracle.hpp"

namespace cayley::serialize {

using Json = nlohmann::ordered_json;

/// {"n": n, "edges": [[i,j],...], "labels": [...]} with edges lexicographic;
/// labels only when present.
Json to_json(const graph::Graph& g);
graph::Graph graph_from_json(const Json& j);

/// {"colors": [...]}.
Json to_json(const chroma::VertexColoring& c);
chroma::VertexColoring vertex_coloring_from_json(const Json& j);

/// {"edges": [[i,j,color],...]} in edge order.
Json to_json(const chroma::EdgeColoring& c);
chroma::EdgeColoring edge_coloring_from_json(const Json& j);

Json to_json(const chroma::ElementRef& e);
Json to_json(const chroma::ColoringReport& r);
Json to_json(const chroma::ConformabilityReport& r);
Json to_json(const oracle::OracleResult& r);
Json to_json(const gyro::AxiomReport& r);

Json read_json(const std::string& path);
/// Two-space indent, trailing newline.
void write_json(const std::string& path, const Json& j);
std::string dump(const Json& j);

}  // namespace cayley::serialize
