#include "nzf/cdc.hpp"

#include <algorithm>
#include <cstdlib>

#include "nzf/errors.hpp"

namespace nzf {

OcdcReport verify_ocdc(const Multigraph& g, const OrientedCycleDoubleCover& c) {
    if (static_cast<int>(c.pairs.size()) != g.edge_count())
        throw ShapeError("cover has " + std::to_string(c.pairs.size()) + " pairs, graph has " +
                         std::to_string(g.edge_count()) + " edges");
    if (c.k < 2) throw ShapeError("cover needs k >= 2");
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [i, j] = c.pairs[static_cast<std::size_t>(e)];
        if (i < 1 || i > c.k || j < 1 || j > c.k || i == j)
            throw ShapeError("edge " + std::to_string(e) + " has invalid cycle pair");
    }
    OcdcReport report;
    // balance[cycle][vertex] = out-degree minus in-degree of that directed cycle.
    std::vector<int> balance(static_cast<std::size_t>(c.k) * static_cast<std::size_t>(g.vertex_count()), 0);
    auto at = [&](int cyc, int v) -> int& {
        return balance[static_cast<std::size_t>(cyc - 1) * static_cast<std::size_t>(g.vertex_count()) + static_cast<std::size_t>(v)];
    };
    for (const Edge& e : g.edges()) {
        if (e.tail == e.head) continue;  // a loop is balanced in both cycles
        auto [i, j] = c.pairs[static_cast<std::size_t>(e.id)];
        at(i, e.tail) += 1;  // cycle i goes tail -> head
        at(i, e.head) -= 1;
        at(j, e.head) += 1;  // cycle j goes head -> tail
        at(j, e.tail) -= 1;
    }
    for (int cyc = 1; cyc <= c.k; ++cyc)
        for (int v = 0; v < g.vertex_count(); ++v)
            if (at(cyc, v) != 0)
                report.violations.push_back({cyc, v,
                                             "cycle " + std::to_string(cyc) + " unbalanced at vertex " +
                                                 std::to_string(v)});
    report.ok = report.violations.empty();
    return report;
}

namespace {

// Edges in DFS order from vertex 0: each edge is recorded the first time it
// is scanned (tree edges on descent, back edges when first seen), which
// closes vertices as early as possible.
std::vector<int> dfs_edge_order(const Multigraph& g) {
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(g.edge_count()));
    std::vector<char> edge_seen(static_cast<std::size_t>(g.edge_count()), 0);
    std::vector<char> vertex_seen(static_cast<std::size_t>(g.vertex_count()), 0);
    struct Frame {
        int v;
        std::size_t next = 0;
    };
    std::vector<Frame> stack;
    if (g.vertex_count() == 0) return order;
    vertex_seen[0] = 1;
    stack.push_back({0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        auto inc = g.incident(f.v);
        if (f.next >= inc.size()) {
            stack.pop_back();
            continue;
        }
        int eid = inc[f.next++];
        const Edge& e = g.edge(eid);
        if (!edge_seen[static_cast<std::size_t>(eid)]) {
            edge_seen[static_cast<std::size_t>(eid)] = 1;
            order.push_back(eid);
        }
        int w = e.tail == f.v ? e.head : e.tail;
        if (!vertex_seen[static_cast<std::size_t>(w)]) {
            vertex_seen[static_cast<std::size_t>(w)] = 1;
            stack.push_back({w});
        }
    }
    return order;
}

}  // namespace

OcdcSearchResult find_ocdc(const Multigraph& g, int k, std::uint64_t budget) {
    if (k < 2) throw DomainError("find_ocdc: k must be >= 2");
    if (!g.is_connected()) throw DomainError("disconnected: find_ocdc needs a connected graph");
    if (!bridges(g).empty())
        throw DomainError("bridge: a bridge lies in no cycle, so no cycle double cover exists");

    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<int> order = dfs_edge_order(g);
    if (static_cast<int>(order.size()) != m) throw InternalError("DFS did not reach every edge");

    // Candidate pairs in lexicographic order; the first edge is pinned to
    // (1,2) since cycle labels are interchangeable.
    std::vector<std::pair<int, int>> candidates;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            if (i != j) candidates.emplace_back(i, j);

    std::vector<int> net(static_cast<std::size_t>(n) * static_cast<std::size_t>(k), 0);
    auto net_at = [&](int v, int cyc) -> int& {
        return net[static_cast<std::size_t>(v) * static_cast<std::size_t>(k) + static_cast<std::size_t>(cyc - 1)];
    };
    std::vector<int> remaining(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        if (e.tail == e.head) continue;
        remaining[static_cast<std::size_t>(e.tail)] += 1;
        remaining[static_cast<std::size_t>(e.head)] += 1;
    }

    auto vertex_ok = [&](int v) {
        int rem = remaining[static_cast<std::size_t>(v)];
        int total = 0;
        for (int cyc = 1; cyc <= k; ++cyc) {
            int x = std::abs(net_at(v, cyc));
            if (x > rem) return false;
            total += x;
        }
        return total <= 2 * rem;
    };

    std::vector<int> choice(static_cast<std::size_t>(m), -1);  // candidate index per depth
    OcdcSearchResult result{SearchStatus::Exhausted, std::nullopt, 0};

    auto apply = [&](const Edge& e, const std::pair<int, int>& pr, int dir) {
        if (e.tail == e.head) return;
        // net(v) = incoming minus outgoing of the Z^k values e_i - e_j
        net_at(e.head, pr.first) += dir;
        net_at(e.head, pr.second) -= dir;
        net_at(e.tail, pr.first) -= dir;
        net_at(e.tail, pr.second) += dir;
        remaining[static_cast<std::size_t>(e.tail)] -= dir;
        remaining[static_cast<std::size_t>(e.head)] -= dir;
    };

    int depth = 0;
    while (depth >= 0) {
        if (depth == m) {
            OrientedCycleDoubleCover cover;
            cover.k = k;
            cover.pairs.assign(static_cast<std::size_t>(m), {0, 0});
            for (int dpos = 0; dpos < m; ++dpos)
                cover.pairs[static_cast<std::size_t>(order[static_cast<std::size_t>(dpos)])] =
                    candidates[static_cast<std::size_t>(choice[static_cast<std::size_t>(dpos)])];
            result.status = SearchStatus::Found;
            result.cover = std::move(cover);
            return result;
        }
        const Edge& e = g.edge(order[static_cast<std::size_t>(depth)]);
        int limit = depth == 0 ? 1 : static_cast<int>(candidates.size());
        int next = choice[static_cast<std::size_t>(depth)] + 1;
        // Undo the previous attempt at this depth, if any.
        if (choice[static_cast<std::size_t>(depth)] >= 0)
            apply(e, candidates[static_cast<std::size_t>(choice[static_cast<std::size_t>(depth)])], -1);
        bool advanced = false;
        for (; next < limit; ++next) {
            if (result.nodes_expanded >= budget) {
                result.status = SearchStatus::Timeout;
                return result;
            }
            result.nodes_expanded += 1;
            apply(e, candidates[static_cast<std::size_t>(next)], +1);
            if (vertex_ok(e.tail) && vertex_ok(e.head)) {
                choice[static_cast<std::size_t>(depth)] = next;
                advanced = true;
                break;
            }
            apply(e, candidates[static_cast<std::size_t>(next)], -1);
        }
        if (advanced) {
            ++depth;
            if (depth < m) choice[static_cast<std::size_t>(depth)] = -1;
        } else {
            choice[static_cast<std::size_t>(depth)] = -1;
            --depth;
        }
    }
    result.status = SearchStatus::Exhausted;
    return result;
}

}  // namespace nzf
