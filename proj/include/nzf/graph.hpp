#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nzf {

struct Edge {
    int id;
    int tail;
    int head;
};

/// Undirected multigraph with a fixed per-edge reference orientation
/// (tail -> head). Edge ids are dense 0..m-1 in construction order; loops
/// and parallel edges are allowed. Immutable after construction.
class Multigraph {
public:
    Multigraph() = default;
    Multigraph(int vertex_count, const std::vector<std::pair<int, int>>& edges,
               std::string name = "");

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::string& name() const { return name_; }

    /// Incident edge ids in ascending order; a loop appears once.
    std::span<const int> incident(int v) const;
    /// Loops count twice.
    int degree(int v) const { return degree_[static_cast<std::size_t>(v)]; }

    bool is_connected() const;
    bool is_cubic() const;
    bool has_loop() const;
    int components() const;
    /// Two-colouring (0/1 per vertex) if bipartite, nullopt otherwise.
    std::optional<std::vector<int>> bipartition() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::string name_;
    std::vector<int> degree_;
    std::vector<int> adj_;        // incident edge ids, grouped by vertex
    std::vector<int> adj_start_;  // size n_+1
};

enum class GraphFormat { Graph6, EdgeListJson };

/// Parses graph6 (simple graphs; edges emitted in lexicographic (i,j) order
/// with tail = min) or the edge-list JSON schema
/// {"n": int, "edges": [[tail,head], ...], "name": optional string}.
Multigraph parse_graph(const std::string& text, GraphFormat format);
std::string serialize_graph(const Multigraph& g, GraphFormat format);

/// Cut edges, ascending by id. Empty iff the graph is bridgeless.
std::vector<int> bridges(const Multigraph& g);

/// Length of a shortest odd cycle; nullopt iff bipartite (a loop counts as
/// an odd cycle of length 1).
std::optional<int> odd_girth(const Multigraph& g);

struct SignedEdge {
    int edge;
    int sign;  // +1 along the reference orientation, -1 against
};

struct FundamentalCycle {
    int nontree_edge;               // the defining non-tree edge
    std::vector<SignedEdge> edges;  // edges[0] == {nontree_edge, +1}
};

struct CycleBasis {
    std::vector<int> tree_edges;  // BFS spanning forest, ascending
    std::vector<FundamentalCycle> cycles;
    int components = 0;
};

/// Cycle basis from the BFS spanning forest rooted at vertex 0 (smallest
/// unvisited vertex per component, neighbours scanned in edge-id order).
/// Each fundamental cycle is oriented along its non-tree edge; loops are
/// their own cycles of length 1.
CycleBasis fundamental_cycles(const Multigraph& g);

namespace gen {

Multigraph cycle(int n);
/// Hub vertex n joined to an n-cycle 0..n-1; rim edges get ids 0..n-1,
/// spokes (i, n) get ids n..2n-1.
Multigraph wheel(int n);
/// Two n-cycles (outer 0..n-1, inner n..2n-1) plus the matching (i, n+i).
/// Outer rim ids 0..n-1, inner rim ids n..2n-1, spokes 2n..3n-1.
Multigraph prism(int n);
Multigraph complete(int n);
Multigraph k33();
/// Outer 5-cycle 0..4, inner pentagram 5..9 with chords (5+i, 5+(i+2) mod 5),
/// spokes (i, i+5). Edge ids: outer 0..4, spokes 5..9, inner 10..14.
Multigraph petersen();
/// Isaacs flower snark J_k for odd k >= 3: 4k vertices, 6k edges.
Multigraph flower_snark(int k);
/// Replaces every vertex of a cubic graph by a triangle. Images of the
/// original edges keep their ids; triangle edges follow, grouped by vertex.
Multigraph triangle_replaced(const Multigraph& base);

}  // namespace gen

}  // namespace nzf
