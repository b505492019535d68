#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nzf/graph.hpp"

namespace nzf {

/// Oriented k-cycle double cover: each edge carries an ordered pair (i, j)
/// of 1-based cycle labels, i != j; cycle i traverses the edge along its
/// reference orientation and cycle j against it.
struct OrientedCycleDoubleCover {
    int k = 0;
    std::vector<std::pair<int, int>> pairs;  // indexed by edge id
};

struct OcdcViolation {
    int cycle;   // 1-based cycle label
    int vertex;
    std::string description;
};

struct OcdcReport {
    bool ok = false;
    std::vector<OcdcViolation> violations;
};

/// Checks that every cycle of the cover is a directed even subgraph
/// (in-degree equals out-degree at each vertex).
OcdcReport verify_ocdc(const Multigraph& g, const OrientedCycleDoubleCover& c);

enum class SearchStatus { Found, Exhausted, Timeout };

struct OcdcSearchResult {
    SearchStatus status;
    std::optional<OrientedCycleDoubleCover> cover;
    std::uint64_t nodes_expanded = 0;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

/// Exhaustive backtracking search for an oriented k-cycle double cover.
/// Equivalent to a nowhere-zero flow with values e_i - e_j in Z^k; edges are
/// assigned in DFS order from vertex 0 with vertex-closure pruning and the
/// first edge pinned to (1, 2). Deterministic given (g, k, budget).
OcdcSearchResult find_ocdc(const Multigraph& g, int k,
                           std::uint64_t budget = kDefaultSearchBudget);

}  // namespace nzf
