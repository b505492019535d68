#include "nzf/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nzf/errors.hpp"

namespace nzf::io {

using nlohmann::json;

json graph_to_json(const Multigraph& g) {
    json j;
    j["n"] = g.vertex_count();
    auto edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.tail, e.head});
    j["edges"] = edges;
    if (!g.name().empty()) j["name"] = g.name();
    return j;
}

Multigraph graph_from_json(const json& j) {
    if (j.is_string()) return parse_graph(j.get<std::string>(), GraphFormat::Graph6);
    return parse_graph(j.dump(), GraphFormat::EdgeListJson);
}

json flow_to_json(const Multigraph& g, const VectorFlow& f) {
    json j;
    j["d"] = f.dimension();
    j["graph"] = graph_to_json(g);
    auto values = json::array();
    for (int e = 0; e < f.edge_count(); ++e) {
        auto row = json::array();
        for (double c : f.value(e)) row.push_back(c);
        values.push_back(row);
    }
    j["values"] = values;
    return j;
}

std::pair<Multigraph, VectorFlow> flow_from_json(const json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("graph") || !j.contains("values"))
        throw SchemaError("flow JSON requires fields \"d\", \"graph\" and \"values\"");
    int d = j["d"].get<int>();
    if (d < 1) throw SchemaError("flow dimension must be positive");
    Multigraph g = graph_from_json(j["graph"]);
    const auto& values = j["values"];
    if (static_cast<int>(values.size()) != g.edge_count())
        throw ShapeError("flow JSON has " + std::to_string(values.size()) + " values for " +
                         std::to_string(g.edge_count()) + " edges");
    VectorFlow f(d, g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& row = values[static_cast<std::size_t>(e)];
        if (static_cast<int>(row.size()) != d)
            throw ShapeError("value " + std::to_string(e) + " has wrong dimension");
        for (int k = 0; k < d; ++k) f.value(e)[k] = row[static_cast<std::size_t>(k)].get<double>();
    }
    return {std::move(g), std::move(f)};
}

json cover_to_json(const OrientedCycleDoubleCover& c) {
    json j;
    j["k"] = c.k;
    auto pairs = json::array();
    for (auto [a, b] : c.pairs) pairs.push_back({a, b});
    j["pairs"] = pairs;
    return j;
}

OrientedCycleDoubleCover cover_from_json(const json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("pairs"))
        throw SchemaError("cover JSON requires fields \"k\" and \"pairs\"");
    OrientedCycleDoubleCover c;
    c.k = j["k"].get<int>();
    for (const auto& p : j["pairs"]) {
        if (!p.is_array() || p.size() != 2) throw SchemaError("cover pairs must be [i, j]");
        c.pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    return c;
}

json triangulation_to_json(const FlowTriangulation& t) {
    json j;
    auto triangles = json::array();
    for (const auto& tri : t.triangles) {
        auto pts = json::array();
        for (const Vec2& p : tri) pts.push_back({p.x, p.y});
        triangles.push_back(pts);
    }
    j["triangles"] = triangles;
    auto side_map = json::array();
    for (std::size_t v = 0; v < t.side_map.size(); ++v)
        for (int s = 0; s < 3; ++s)
            side_map.push_back({static_cast<int>(v), s, t.side_map[v][static_cast<std::size_t>(s)]});
    j["side_map"] = side_map;
    j["attached"] = t.attached;
    return j;
}

FlowTriangulation triangulation_from_json(const json& j) {
    if (!j.is_object() || !j.contains("triangles") || !j.contains("side_map"))
        throw SchemaError("triangulation JSON requires \"triangles\" and \"side_map\"");
    FlowTriangulation t;
    for (const auto& tri : j["triangles"]) {
        if (!tri.is_array() || tri.size() != 3) throw SchemaError("triangle must have 3 points");
        std::array<Vec2, 3> pts;
        for (int s = 0; s < 3; ++s)
            pts[static_cast<std::size_t>(s)] = {tri[static_cast<std::size_t>(s)][0].get<double>(),
                                                tri[static_cast<std::size_t>(s)][1].get<double>()};
        t.triangles.push_back(pts);
    }
    t.side_map.assign(t.triangles.size(), {-1, -1, -1});
    for (const auto& entry : j["side_map"]) {
        if (!entry.is_array() || entry.size() != 3) throw SchemaError("side_map entry must be [v, s, e]");
        int v = entry[0].get<int>(), s = entry[1].get<int>(), e = entry[2].get<int>();
        if (v < 0 || v >= static_cast<int>(t.side_map.size()) || s < 0 || s > 2)
            throw SchemaError("side_map entry out of range");
        t.side_map[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)] = e;
    }
    t.attached = j.value("attached", true);
    return t;
}

json report_to_json(const Multigraph& g, const OptimizeReport& r) {
    json j;
    j["graph"] = graph_to_json(g);
    j["d"] = r.best_flow.dimension();
    j["best_strength"] = r.best_strength;
    j["lower_bound"] = r.lower_bound;
    j["gap"] = r.gap;
    j["flow"] = flow_to_json(g, r.best_flow);
    auto starts = json::array();
    for (const StartDiagnostics& s : r.per_start)
        starts.push_back({{"strength", s.strength}, {"iterations", s.iterations}, {"converged", s.converged}});
    j["starts"] = starts;
    j["seed"] = r.seed;
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path);
    out << content;
}

}  // namespace nzf::io
