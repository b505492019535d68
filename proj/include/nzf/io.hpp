#pragma once

#include <string>
#include <utility>

#include <nlohmann/json_fwd.hpp>

#include "nzf/cdc.hpp"
#include "nzf/flow.hpp"
#include "nzf/graph.hpp"
#include "nzf/optimize.hpp"
#include "nzf/triangulate.hpp"

namespace nzf::io {

inline constexpr const char* kToolVersion = "0.1.0";

nlohmann::json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const nlohmann::json& j);

/// {"d": int, "graph": <edge list or graph6 string>, "values": [[..], ...]}
nlohmann::json flow_to_json(const Multigraph& g, const VectorFlow& f);
std::pair<Multigraph, VectorFlow> flow_from_json(const nlohmann::json& j);

/// {"k": int, "pairs": [[i, j], ...]} with 1-based cycle labels
nlohmann::json cover_to_json(const OrientedCycleDoubleCover& c);
OrientedCycleDoubleCover cover_from_json(const nlohmann::json& j);

/// {"triangles": [[[x,y],[x,y],[x,y]], ...], "side_map": [[v, s, e], ...]}
nlohmann::json triangulation_to_json(const FlowTriangulation& t);
FlowTriangulation triangulation_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const Multigraph& g, const OptimizeReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace nzf::io
