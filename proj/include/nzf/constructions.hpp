#pragma once

#include <cstdint>
#include <vector>

#include "nzf/cdc.hpp"
#include "nzf/flow.hpp"
#include "nzf/graph.hpp"
#include "nzf/vec2.hpp"

namespace nzf {

struct FlowTriangulation;  // triangulate.hpp

using PointSet = std::vector<Vec2>;

/// Vertices of a regular k-gon with unit side, centred at the origin, first
/// vertex on the positive x-axis (k = 2 degenerates to two points at
/// distance 1). Pairwise distances lie in [1, D_k] with D_3 = 1, D_4 = sqrt 2,
/// D_5 = golden ratio.
PointSet kgon_points(int k);

/// Flow induced by an oriented cycle double cover: the edge with pair (i, j)
/// receives p_i - p_j. Strength is at most 1 + max pairwise distance of P.
VectorFlow flow_from_ocdc(const Multigraph& g, const OrientedCycleDoubleCover& c,
                          const PointSet& p);

/// Integer 2-flow and 3-flow covering every edge between them; values along
/// the reference orientation.
struct IntFlowPair {
    std::vector<int> f2;  // in {-1, 0, 1}
    std::vector<int> f3;  // in {-2, ..., 2}
};

struct IntFlowPairResult {
    SearchStatus status;  // Found or Timeout; exhaustion raises InternalError
    IntFlowPair pair;
    std::uint64_t nodes_expanded = 0;
};

/// Joint backtracking search for the pair; existence is guaranteed for
/// connected bridgeless graphs, so exhaustion indicates a bug.
IntFlowPairResult find_int_flow_pair(const Multigraph& g,
                                     std::uint64_t budget = kDefaultSearchBudget);

/// 2-dimensional flow (f2(e), f3(e)); norms lie in {1, sqrt 2, 2, sqrt 5},
/// so the strength is at most 1 + sqrt 5.
VectorFlow seymour_flow(const Multigraph& g, std::uint64_t budget = kDefaultSearchBudget);

/// Unit flow on a connected bipartite cubic graph: a proper 3-edge-colouring
/// maps colours to the three unit vectors at mutual angle 2*pi/3, oriented
/// from the part of vertex 0 to the other part. Strength exactly 2.
VectorFlow bipartite_cubic_flow(const Multigraph& g);

/// Proper 3-edge-colouring of a connected bipartite cubic graph
/// (alternating-path augmentation, deterministic edge order).
std::vector<int> bipartite_three_edge_colouring(const Multigraph& g);

/// The explicit ten-triangle plane figure realizing a flow on the Petersen
/// graph with side lengths 1, sqrt(4/3) and sqrt(7/3); exact coordinates.
FlowTriangulation petersen_figure();

/// Flow read off petersen_figure(); norms {1, sqrt(4/3), sqrt(7/3)} and
/// strength 1 + sqrt(7/3).
VectorFlow petersen_flow();

/// Extends a flow on the wheel W_n (n odd) to the prism P_n with the same
/// vectors: rim values copied to the outer cycle, hub-spoke values to the
/// prism spokes, and inner-cycle values reversed. Preserves strength.
/// Expects the gen::wheel / gen::prism edge layouts.
VectorFlow prism_flow(int n, const VectorFlow& wheel_flow);

}  // namespace nzf
