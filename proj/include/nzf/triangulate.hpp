#pragma once

#include <array>
#include <string>
#include <vector>

#include "nzf/flow.hpp"
#include "nzf/graph.hpp"
#include "nzf/vec2.hpp"

namespace nzf {

/// Per-vertex oriented triangle with a side-to-edge correspondence. Triangle
/// of vertex v is the point triple triangles[v] in counterclockwise order
/// (or degenerate); side s runs from corner s to corner (s+1) mod 3, and
/// side_map[v][s] is the edge realized by that side. The flow value of an
/// edge uv equals the ccw side vector at the head triangle T_v (equivalently
/// the reversed side vector at T_u).
struct FlowTriangulation {
    std::vector<std::array<Vec2, 3>> triangles;   // indexed by vertex id
    std::vector<std::array<int, 3>> side_map;     // (vertex, side) -> edge id
    bool attached = true;                         // false: exploded grid layout
    std::vector<int> degenerate;                  // vertices with collinear triangles

    int vertex_count() const { return static_cast<int>(triangles.size()); }
};

/// Builds the triangulation of a 2-dimensional flow on a cubic loopless
/// graph. Triangles are chained from the incoming-oriented edge vectors at
/// each vertex; placement anchors vertex 0 at the origin and glues along a
/// BFS spanning tree. If any two placed triangles overlap in their
/// interiors, the layout falls back to an exploded grid (attached = false).
FlowTriangulation triangulate(const Multigraph& g, const VectorFlow& f);

/// Reads the flow back off the triangulation: for edge uv the value is the
/// shared side directed with T_u on its right and T_v on its left. Requires
/// a triangulation that passes validate().
VectorFlow detriangulate(const Multigraph& g, const FlowTriangulation& t);

struct TriangulationViolation {
    std::string what;
    int vertex = -1;
    int edge = -1;
};

struct TriangulationReport {
    bool ok = false;
    std::vector<TriangulationViolation> violations;
};

/// Checks the triangulation axioms: (i) each vertex's sides map to its three
/// incident edges, every edge appearing on exactly two sides; (ii) all side
/// lengths lie in [1, r-1]; (iii) the two sides of each edge are attachable
/// (parallel, equal length, triangles on opposite sides after translation).
TriangulationReport validate(const Multigraph& g, const FlowTriangulation& t, double r,
                             double tolerance = kDefaultTolerance);

/// True if any two triangles share interior points (separating-axis test,
/// penetration above the tolerance).
bool has_interior_overlap(const FlowTriangulation& t, double tolerance = 1e-9);

enum class LayoutMode { Attached, Exploded };

/// Deterministic SVG 1.1 rendering: minimum-length sides bold, maximum-length
/// sides dashed, vertex labels at centroids; exploded mode annotates sides
/// with edge ids. 100 units per unit length, 4-decimal coordinates.
std::string render_svg(const FlowTriangulation& t, LayoutMode mode);

}  // namespace nzf
