#include "nzf/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "nzf/errors.hpp"
#include "nzf/triangulate.hpp"

namespace nzf {

PointSet kgon_points(int k) {
    if (k < 2) throw DomainError("kgon_points: k must be >= 2");
    const double pi = std::acos(-1.0);
    double circumradius = 1.0 / (2.0 * std::sin(pi / k));
    PointSet points;
    points.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        double a = 2.0 * pi * i / k;
        points.push_back({circumradius * std::cos(a), circumradius * std::sin(a)});
    }
    return points;
}

VectorFlow flow_from_ocdc(const Multigraph& g, const OrientedCycleDoubleCover& c,
                          const PointSet& p) {
    if (static_cast<int>(c.pairs.size()) != g.edge_count())
        throw ShapeError("cover does not match the graph's edge count");
    if (static_cast<int>(p.size()) != c.k)
        throw ShapeError("point set size " + std::to_string(p.size()) + " differs from k = " +
                         std::to_string(c.k));
    VectorFlow f(2, g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [i, j] = c.pairs[static_cast<std::size_t>(e)];
        if (i < 1 || i > c.k || j < 1 || j > c.k || i == j)
            throw ShapeError("edge " + std::to_string(e) + " has invalid cycle pair");
        Vec2 v = p[static_cast<std::size_t>(i - 1)] - p[static_cast<std::size_t>(j - 1)];
        f.value(e)[0] = v.x;
        f.value(e)[1] = v.y;
    }
    return f;
}

// ---------------------------------------------------------------------------
// Seymour-style integer flow pair

namespace {

// (f2, f3) candidates ordered by norm so the search reaches small flows
// first; a cycle therefore comes back as an f3 circulation with f2 = 0.
constexpr std::pair<int, int> kPairCandidates[] = {
    {0, 1},  {0, -1}, {1, 0},  {-1, 0},                      // norm 1
    {1, 1},  {1, -1}, {-1, 1}, {-1, -1},                     // norm sqrt 2
    {0, 2},  {0, -2},                                        // norm 2
    {1, 2},  {1, -2}, {-1, 2}, {-1, -2},                     // norm sqrt 5
};
constexpr int kPairCandidateCount = 14;

std::vector<int> dfs_edge_order_local(const Multigraph& g) {
    std::vector<int> order;
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

IntFlowPairResult find_int_flow_pair(const Multigraph& g, std::uint64_t budget) {
    if (!g.is_connected()) throw DomainError("disconnected: find_int_flow_pair needs a connected graph");
    if (!bridges(g).empty()) throw DomainError("bridge: no nowhere-zero flow exists");

    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<int> order = dfs_edge_order_local(g);
    if (static_cast<int>(order.size()) != m) throw InternalError("DFS did not reach every edge");

    std::vector<int> net2(static_cast<std::size_t>(n), 0), net3(static_cast<std::size_t>(n), 0);
    std::vector<int> remaining(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        if (e.tail == e.head) continue;
        remaining[static_cast<std::size_t>(e.tail)] += 1;
        remaining[static_cast<std::size_t>(e.head)] += 1;
    }
    auto vertex_ok = [&](int v) {
        int rem = remaining[static_cast<std::size_t>(v)];
        return std::abs(net2[static_cast<std::size_t>(v)]) <= rem &&
               std::abs(net3[static_cast<std::size_t>(v)]) <= 2 * rem;
    };
    auto apply = [&](const Edge& e, int c2, int c3, int dir) {
        if (e.tail == e.head) return;
        net2[static_cast<std::size_t>(e.head)] += dir * c2;
        net2[static_cast<std::size_t>(e.tail)] -= dir * c2;
        net3[static_cast<std::size_t>(e.head)] += dir * c3;
        net3[static_cast<std::size_t>(e.tail)] -= dir * c3;
        remaining[static_cast<std::size_t>(e.tail)] -= dir;
        remaining[static_cast<std::size_t>(e.head)] -= dir;
    };

    std::vector<int> choice(static_cast<std::size_t>(m), -1);
    IntFlowPairResult result{SearchStatus::Timeout, {}, 0};
    int depth = 0;
    while (depth >= 0) {
        if (depth == m) {
            result.status = SearchStatus::Found;
            result.pair.f2.assign(static_cast<std::size_t>(m), 0);
            result.pair.f3.assign(static_cast<std::size_t>(m), 0);
            for (int dpos = 0; dpos < m; ++dpos) {
                auto [c2, c3] = kPairCandidates[choice[static_cast<std::size_t>(dpos)]];
                result.pair.f2[static_cast<std::size_t>(order[static_cast<std::size_t>(dpos)])] = c2;
                result.pair.f3[static_cast<std::size_t>(order[static_cast<std::size_t>(dpos)])] = c3;
            }
            return result;
        }
        const Edge& e = g.edge(order[static_cast<std::size_t>(depth)]);
        int next = choice[static_cast<std::size_t>(depth)] + 1;
        if (choice[static_cast<std::size_t>(depth)] >= 0) {
            auto [c2, c3] = kPairCandidates[choice[static_cast<std::size_t>(depth)]];
            apply(e, c2, c3, -1);
        }
        bool advanced = false;
        for (; next < kPairCandidateCount; ++next) {
            if (result.nodes_expanded >= budget) {
                result.status = SearchStatus::Timeout;
                return result;
            }
            result.nodes_expanded += 1;
            auto [c2, c3] = kPairCandidates[next];
            apply(e, c2, c3, +1);
            if (vertex_ok(e.tail) && vertex_ok(e.head)) {
                choice[static_cast<std::size_t>(depth)] = next;
                advanced = true;
                break;
            }
            apply(e, c2, c3, -1);
        }
        if (advanced) {
            ++depth;
            if (depth < m) choice[static_cast<std::size_t>(depth)] = -1;
        } else {
            choice[static_cast<std::size_t>(depth)] = -1;
            --depth;
        }
    }
    // Seymour's theorem guarantees a pair exists for every connected
    // bridgeless graph, so running out of space means the search is broken.
    throw InternalError("integer flow pair search exhausted the space");
}

VectorFlow seymour_flow(const Multigraph& g, std::uint64_t budget) {
    IntFlowPairResult r = find_int_flow_pair(g, budget);
    if (r.status == SearchStatus::Timeout)
        throw TimeoutError("integer flow pair search hit its budget");
    VectorFlow f(2, g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        f.value(e)[0] = static_cast<double>(r.pair.f2[static_cast<std::size_t>(e)]);
        f.value(e)[1] = static_cast<double>(r.pair.f3[static_cast<std::size_t>(e)]);
    }
    return f;
}

// ---------------------------------------------------------------------------
// bipartite cubic graphs

std::vector<int> bipartite_three_edge_colouring(const Multigraph& g) {
    if (!g.is_cubic()) throw DomainError("non-cubic: 3-edge-colouring needs a cubic graph");
    if (!g.is_connected()) throw DomainError("disconnected: graph must be connected");
    if (!g.bipartition()) throw DomainError("non-bipartite: graph must be bipartite");

    const int kColours = 3;
    std::vector<int> colour(static_cast<std::size_t>(g.edge_count()), -1);
    // slot[v][c] = edge of colour c at v, or -1
    std::vector<std::array<int, 3>> slot(static_cast<std::size_t>(g.vertex_count()), {-1, -1, -1});
    auto free_colour = [&](int v) {
        for (int c = 0; c < kColours; ++c)
            if (slot[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] == -1) return c;
        return -1;
    };
    for (const Edge& e : g.edges()) {
        int a = free_colour(e.tail);
        int b = free_colour(e.head);
        if (a != b) {
            // Flip the maximal a/b alternating path from the head; in a
            // bipartite graph it cannot reach the tail, which frees a there.
            int v = e.head;
            int want = a;
            while (true) {
                int eid = slot[static_cast<std::size_t>(v)][static_cast<std::size_t>(want)];
                if (eid == -1) break;
                int other = want == a ? b : a;
                const Edge& pe = g.edge(eid);
                int w = pe.tail == v ? pe.head : pe.tail;
                colour[static_cast<std::size_t>(eid)] = other;
                slot[static_cast<std::size_t>(v)][static_cast<std::size_t>(want)] = -1;
                slot[static_cast<std::size_t>(v)][static_cast<std::size_t>(other)] = eid;
                slot[static_cast<std::size_t>(w)][static_cast<std::size_t>(want)] = -1;
                slot[static_cast<std::size_t>(w)][static_cast<std::size_t>(other)] = eid;
                v = w;
                want = want == a ? b : a;
            }
        }
        colour[static_cast<std::size_t>(e.id)] = a;
        slot[static_cast<std::size_t>(e.tail)][static_cast<std::size_t>(a)] = e.id;
        slot[static_cast<std::size_t>(e.head)][static_cast<std::size_t>(a)] = e.id;
    }
    return colour;
}

VectorFlow bipartite_cubic_flow(const Multigraph& g) {
    auto parts = g.bipartition();
    if (!parts) throw DomainError("non-bipartite: graph has an odd cycle");
    std::vector<int> colour = bipartite_three_edge_colouring(g);
    // Cube roots of unity; the three vectors sum to zero exactly in doubles.
    const double h = std::sqrt(3.0) / 2.0;
    const Vec2 unit[3] = {{1.0, 0.0}, {-0.5, h}, {-0.5, -h}};
    const std::vector<int>& side = *parts;
    int part_a = side[0];
    VectorFlow f(2, g.edge_count());
    for (const Edge& e : g.edges()) {
        Vec2 u = unit[colour[static_cast<std::size_t>(e.id)]];
        // oriented from vertex 0's part to the other part
        Vec2 v = side[static_cast<std::size_t>(e.tail)] == part_a ? u : -u;
        f.value(e.id)[0] = v.x;
        f.value(e.id)[1] = v.y;
    }
    return f;
}

// ---------------------------------------------------------------------------
// Petersen figure

namespace {

// Matches each graph edge to the pair of triangle sides realizing it:
// coincident segments for glued pairs, opposite parallel translates for the
// boundary pairs. Fills t.side_map from the point data.
void match_sides(const Multigraph& g, FlowTriangulation& t) {
    const double tol = 1e-9;
    t.side_map.assign(t.triangles.size(), {-1, -1, -1});
    for (const Edge& e : g.edges()) {
        const auto& tu = t.triangles[static_cast<std::size_t>(e.tail)];
        const auto& tv = t.triangles[static_cast<std::size_t>(e.head)];
        bool placed = false;
        for (int su = 0; su < 3 && !placed; ++su) {
            if (t.side_map[static_cast<std::size_t>(e.tail)][static_cast<std::size_t>(su)] != -1) continue;
            Vec2 a0 = tu[static_cast<std::size_t>(su)], a1 = tu[static_cast<std::size_t>((su + 1) % 3)];
            for (int sv = 0; sv < 3 && !placed; ++sv) {
                if (t.side_map[static_cast<std::size_t>(e.head)][static_cast<std::size_t>(sv)] != -1) continue;
                Vec2 b0 = tv[static_cast<std::size_t>(sv)], b1 = tv[static_cast<std::size_t>((sv + 1) % 3)];
                // ccw sides of attached triangles run in opposite directions
                if (distance(a1 - a0, b0 - b1) > tol) continue;
                t.side_map[static_cast<std::size_t>(e.tail)][static_cast<std::size_t>(su)] = e.id;
                t.side_map[static_cast<std::size_t>(e.head)][static_cast<std::size_t>(sv)] = e.id;
                placed = true;
            }
        }
        if (!placed) throw InternalError("figure side matching failed for edge " + std::to_string(e.id));
    }
}

}  // namespace

FlowTriangulation petersen_figure() {
    const double s3 = std::sqrt(3.0);
    // Equilateral triangle of side 1 centred at the origin.
    const Vec2 p1{0.0, 1.0 / s3};
    const Vec2 p2{-0.5, -0.5 / s3};
    const Vec2 p3{0.5, -0.5 / s3};
    // q_i: reflection of p_{i-1} through p_i; q'_i = -q_i completes the
    // regular hexagon q1 q3' q2 q1' q3 q2'.
    const Vec2 q1 = p1 * 2.0 - p3;
    const Vec2 q2 = p2 * 2.0 - p1;
    const Vec2 q3 = p3 * 2.0 - p2;
    const Vec2 q1p = -q1;
    const Vec2 q2p = -q2;
    const Vec2 q3p = -q3;

    // The ten triangular faces of the figure, one per Petersen vertex
    // (outer cycle 0..4, inner pentagram 5..9, spokes i <-> i+5), all ccw.
    FlowTriangulation t;
    t.triangles.assign(10, {});
    auto set = [&](int v, Vec2 a, Vec2 b, Vec2 c) {
        if ((b - a).cross(c - a) <= 0.0)
            throw InternalError("figure triangle " + std::to_string(v) + " is not ccw");
        t.triangles[static_cast<std::size_t>(v)] = {a, b, c};
    };
    set(0, p1, p2, p3);
    set(1, p1, q3p, p2);
    set(2, p1, q1, q3p);
    set(3, p3, q1p, q3);
    set(4, p2, q1p, p3);
    set(5, p3, q2p, p1);
    set(6, p2, q3p, q2);
    set(7, p1, q2p, q1);
    set(8, p3, q3, q2p);
    set(9, p2, q2, q1p);

    match_sides(gen::petersen(), t);
    t.attached = true;
    return t;
}

VectorFlow petersen_flow() {
    // Read the edge vectors off the attachable sides of the figure.
    return detriangulate(gen::petersen(), petersen_figure());
}

// ---------------------------------------------------------------------------
// wheel -> prism extension

VectorFlow prism_flow(int n, const VectorFlow& wheel_flow) {
    if (n < 3 || n % 2 == 0) throw DomainError("prism_flow: n must be odd and >= 3");
    if (wheel_flow.dimension() != 2) throw ShapeError("prism_flow expects a 2-dimensional flow");
    if (wheel_flow.edge_count() != 2 * n)
        throw ShapeError("flow does not match the wheel W" + std::to_string(n));
    FlowReport check = verify_flow(gen::wheel(n), wheel_flow);
    if (!check.valid()) throw InvalidFlowError("input is not a valid flow on W" + std::to_string(n));

    // For each 4-cycle u u' v' v (uu', vv' spokes) the flow from u to v on
    // the outer cycle equals the flow from v' to u' on the inner one, so the
    // inner copy of rim edge i carries the reversed vector.
    VectorFlow f(2, 3 * n);
    for (int i = 0; i < n; ++i) {
        auto rim = wheel_flow.value(i);
        f.value(i)[0] = rim[0];                // outer cycle, ids 0..n-1
        f.value(i)[1] = rim[1];
        f.value(n + i)[0] = -rim[0];           // inner cycle, ids n..2n-1
        f.value(n + i)[1] = -rim[1];
        auto spoke = wheel_flow.value(n + i);  // wheel spoke (i, hub)
        f.value(2 * n + i)[0] = spoke[0];      // prism spoke (i, n+i)
        f.value(2 * n + i)[1] = spoke[1];
    }
    return f;
}

}  // namespace nzf
