#include "nzf/triangulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <queue>

#include "nzf/errors.hpp"

namespace nzf {

namespace {

constexpr double kDegenerateArea = 1e-12;

Vec2 side_vector(const std::array<Vec2, 3>& tri, int s) {
    return tri[static_cast<std::size_t>((s + 1) % 3)] - tri[static_cast<std::size_t>(s)];
}

double signed_area2(const std::array<Vec2, 3>& tri) {
    return (tri[1] - tri[0]).cross(tri[2] - tri[0]);
}

// Separating-axis test for two triangles; interiors overlap when no axis
// separates them by more than the tolerance. Degenerate triangles have no
// interior and never overlap.
bool triangles_overlap(const std::array<Vec2, 3>& a, const std::array<Vec2, 3>& b, double tol) {
    if (std::abs(signed_area2(a)) <= kDegenerateArea || std::abs(signed_area2(b)) <= kDegenerateArea)
        return false;
    auto project = [](const std::array<Vec2, 3>& t, Vec2 axis, double& lo, double& hi) {
        lo = std::numeric_limits<double>::infinity();
        hi = -lo;
        for (const Vec2& p : t) {
            double x = p.dot(axis);
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
    };
    for (const auto* t : {&a, &b}) {
        for (int s = 0; s < 3; ++s) {
            Vec2 edge = side_vector(*t, s);
            double len = edge.norm();
            if (len == 0.0) continue;
            Vec2 axis{-edge.y / len, edge.x / len};
            double alo, ahi, blo, bhi;
            project(a, axis, alo, ahi);
            project(b, axis, blo, bhi);
            if (ahi <= blo + tol || bhi <= alo + tol) return false;
        }
    }
    return true;
}

}  // namespace

bool has_interior_overlap(const FlowTriangulation& t, double tolerance) {
    for (std::size_t i = 0; i < t.triangles.size(); ++i)
        for (std::size_t j = i + 1; j < t.triangles.size(); ++j)
            if (triangles_overlap(t.triangles[i], t.triangles[j], tolerance)) return true;
    return false;
}

FlowTriangulation triangulate(const Multigraph& g, const VectorFlow& f) {
    if (!g.is_cubic()) throw DomainError("non-cubic: flow triangulations need a cubic graph");
    if (g.has_loop()) throw DomainError("loop: a loop cannot form two triangle sides at one vertex");
    if (f.dimension() != 2) throw ShapeError("triangulate expects a 2-dimensional flow");
    FlowReport check = verify_flow(g, f);
    if (!check.valid()) throw InvalidFlowError("flow does not verify on the graph");

    const int n = g.vertex_count();
    FlowTriangulation t;
    t.triangles.assign(static_cast<std::size_t>(n), {});
    t.side_map.assign(static_cast<std::size_t>(n), {-1, -1, -1});

    // Chain the three incoming-oriented edge vectors head-to-tail; they sum
    // to zero, and swapping the last two makes the triangle ccw.
    for (int v = 0; v < n; ++v) {
        auto inc = g.incident(v);
        std::array<int, 3> eids = {inc[0], inc[1], inc[2]};
        std::array<Vec2, 3> w;
        for (int s = 0; s < 3; ++s) {
            const Edge& e = g.edge(eids[static_cast<std::size_t>(s)]);
            auto val = f.value(e.id);
            Vec2 x{val[0], val[1]};
            w[static_cast<std::size_t>(s)] = e.head == v ? x : -x;
        }
        double cr = w[0].cross(w[1]);
        double scale = w[0].norm() * w[1].norm();
        if (std::abs(cr) <= kDegenerateArea * std::max(1.0, scale)) {
            t.degenerate.push_back(v);
        } else if (cr < 0.0) {
            std::swap(w[1], w[2]);
            std::swap(eids[1], eids[2]);
        }
        t.triangles[static_cast<std::size_t>(v)] = {Vec2{0.0, 0.0}, w[0], w[0] + w[1]};
        t.side_map[static_cast<std::size_t>(v)] = eids;
    }

    // Greedy placement: anchor vertex 0, glue along a BFS spanning tree so
    // the shared side of each tree edge coincides.
    std::vector<Vec2> offset(static_cast<std::size_t>(n), Vec2{0.0, 0.0});
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    auto side_of = [&](int v, int eid) {
        for (int s = 0; s < 3; ++s)
            if (t.side_map[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)] == eid) return s;
        throw InternalError("edge missing from side map");
    };
    std::queue<int> q;
    if (n > 0) {
        placed[0] = 1;
        q.push(0);
    }
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int eid : g.incident(x)) {
            const Edge& e = g.edge(eid);
            int y = e.tail == x ? e.head : e.tail;
            if (placed[static_cast<std::size_t>(y)]) continue;
            int sx = side_of(x, eid);
            int sy = side_of(y, eid);
            const auto& tx = t.triangles[static_cast<std::size_t>(x)];
            const auto& ty = t.triangles[static_cast<std::size_t>(y)];
            // The shared segment runs in opposite directions on the two
            // triangles, so y's side starts where x's side ends.
            offset[static_cast<std::size_t>(y)] =
                (tx[static_cast<std::size_t>((sx + 1) % 3)] + offset[static_cast<std::size_t>(x)]) - ty[static_cast<std::size_t>(sy)];
            placed[static_cast<std::size_t>(y)] = 1;
            q.push(y);
        }
    }
    for (int v = 0; v < n; ++v)
        for (auto& p : t.triangles[static_cast<std::size_t>(v)]) p += offset[static_cast<std::size_t>(v)];

    t.attached = !has_interior_overlap(t);
    if (!t.attached) {
        // Exploded fallback: place each triangle on a grid, recentred on its
        // centroid; shared sides are recovered from the side map.
        double extent = 1.0;
        for (const auto& tri : t.triangles)
            for (int s = 0; s < 3; ++s) extent = std::max(extent, side_vector(tri, s).norm());
        double cell = 2.0 * extent;
        int cols = std::max(1, static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n)))));
        for (int v = 0; v < n; ++v) {
            auto& tri = t.triangles[static_cast<std::size_t>(v)];
            Vec2 centroid = (tri[0] + tri[1] + tri[2]) * (1.0 / 3.0);
            Vec2 target{cell * (v % cols), -cell * (v / cols)};
            for (auto& p : tri) p += target - centroid;
        }
    }
    return t;
}

TriangulationReport validate(const Multigraph& g, const FlowTriangulation& t, double r,
                             double tolerance) {
    if (t.vertex_count() != g.vertex_count() ||
        t.side_map.size() != t.triangles.size())
        throw ShapeError("triangulation does not match the graph's vertex count");
    TriangulationReport report;
    auto add = [&](std::string what, int v, int e) {
        report.violations.push_back({std::move(what), v, e});
    };

    // (i) sides of T_v are exactly the incident edges of v
    std::vector<int> seen(static_cast<std::size_t>(g.edge_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto inc = g.incident(v);
        std::vector<int> want(inc.begin(), inc.end());
        std::vector<int> have(t.side_map[static_cast<std::size_t>(v)].begin(), t.side_map[static_cast<std::size_t>(v)].end());
        std::sort(want.begin(), want.end());
        std::sort(have.begin(), have.end());
        if (want != have) {
            add("sides of vertex " + std::to_string(v) + " do not match its incident edges", v, -1);
            continue;
        }
        for (int e : have) seen[static_cast<std::size_t>(e)] += 1;
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (seen[static_cast<std::size_t>(e)] != 0 && seen[static_cast<std::size_t>(e)] != 2)
            add("edge " + std::to_string(e) + " appears on " + std::to_string(seen[static_cast<std::size_t>(e)]) + " sides", -1, e);

    // orientation: ccw or degenerate
    for (int v = 0; v < g.vertex_count(); ++v) {
        double a2 = signed_area2(t.triangles[static_cast<std::size_t>(v)]);
        if (a2 < -kDegenerateArea && std::abs(a2) > tolerance)
            add("triangle " + std::to_string(v) + " is clockwise", v, -1);
    }

    // (ii) side lengths within [1, r-1]
    if (std::isfinite(r)) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            for (int s = 0; s < 3; ++s) {
                double len = side_vector(t.triangles[static_cast<std::size_t>(v)], s).norm();
                if (len < 1.0 - tolerance || len > r - 1.0 + tolerance)
                    add("side length " + std::to_string(len) + " outside [1, r-1] at vertex " +
                            std::to_string(v),
                        v, t.side_map[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)]);
            }
        }
    }

    // (iii) attachability across each edge
    auto side_of = [&](int v, int eid, bool& ok) {
        for (int s = 0; s < 3; ++s)
            if (t.side_map[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)] == eid) return s;
        ok = false;
        return 0;
    };
    for (const Edge& e : g.edges()) {
        bool ok = true;
        int su = side_of(e.tail, e.id, ok);
        int sv = side_of(e.head, e.id, ok);
        if (!ok) continue;  // reported under (i)
        const auto& tu = t.triangles[static_cast<std::size_t>(e.tail)];
        const auto& tv = t.triangles[static_cast<std::size_t>(e.head)];
        Vec2 a = side_vector(tu, su);
        Vec2 b = side_vector(tv, sv);
        double la = a.norm(), lb = b.norm();
        if (la == 0.0 || lb == 0.0) {
            add("zero-length side on edge " + std::to_string(e.id), -1, e.id);
            continue;
        }
        if (std::abs(la - lb) > tolerance)
            add("sides of edge " + std::to_string(e.id) + " differ in length", -1, e.id);
        double cross_norm = std::abs(a.cross(b)) / (la * lb);
        if (cross_norm > tolerance) {
            add("sides of edge " + std::to_string(e.id) + " are not parallel", -1, e.id);
            continue;
        }
        // Translate T_u so the sides coincide, then both third points must
        // fall on opposite sides of the common line (degenerate triangles
        // have empty interiors and always attach).
        bool antiparallel = a.dot(b) < 0.0;
        Vec2 shift = antiparallel ? (tv[static_cast<std::size_t>((sv + 1) % 3)] - tu[static_cast<std::size_t>(su)])
                                  : (tv[static_cast<std::size_t>(sv)] - tu[static_cast<std::size_t>(su)]);
        Vec2 base = tv[static_cast<std::size_t>(sv)];
        Vec2 cu = tu[static_cast<std::size_t>((su + 2) % 3)] + shift;
        Vec2 cv = tv[static_cast<std::size_t>((sv + 2) % 3)];
        double s1 = b.cross(cu - base);
        double s2 = b.cross(cv - base);
        if ((s1 > tolerance && s2 > tolerance) || (s1 < -tolerance && s2 < -tolerance))
            add("triangles of edge " + std::to_string(e.id) + " lie on the same side", -1, e.id);
    }

    report.ok = report.violations.empty();
    return report;
}

VectorFlow detriangulate(const Multigraph& g, const FlowTriangulation& t) {
    TriangulationReport check = validate(g, t, std::numeric_limits<double>::infinity());
    if (!check.ok)
        throw InvalidTriangulationError(check.violations.front().what);
    VectorFlow f(2, g.edge_count());
    for (const Edge& e : g.edges()) {
        // head triangle lies on the left of the flow vector, so its ccw side
        // runs along the value
        int sv = -1;
        for (int s = 0; s < 3; ++s)
            if (t.side_map[static_cast<std::size_t>(e.head)][static_cast<std::size_t>(s)] == e.id) sv = s;
        Vec2 v = side_vector(t.triangles[static_cast<std::size_t>(e.head)], sv);
        f.value(e.id)[0] = v.x;
        f.value(e.id)[1] = v.y;
    }
    return f;
}

// ---------------------------------------------------------------------------
// SVG rendering

namespace {

std::string fmt(double x) {
    if (x == 0.0) x = 0.0;  // avoid "-0.0000"
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    // normalize "-0.0000" produced by tiny negatives after rounding
    if (std::string(buf) == "-0.0000") return "0.0000";
    return buf;
}

}  // namespace

std::string render_svg(const FlowTriangulation& t, LayoutMode mode) {
    const double scale = 100.0;
    FlowTriangulation laid = t;
    if (mode == LayoutMode::Exploded) {
        double extent = 1.0;
        for (const auto& tri : laid.triangles)
            for (int s = 0; s < 3; ++s) extent = std::max(extent, side_vector(tri, s).norm());
        double cell = 2.0 * extent;
        int n = laid.vertex_count();
        int cols = std::max(1, static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n)))));
        for (int v = 0; v < n; ++v) {
            auto& tri = laid.triangles[static_cast<std::size_t>(v)];
            Vec2 centroid = (tri[0] + tri[1] + tri[2]) * (1.0 / 3.0);
            Vec2 target{cell * (v % cols), -cell * (v / cols)};
            for (auto& p : tri) p += target - centroid;
        }
    }

    double min_len = std::numeric_limits<double>::infinity(), max_len = 0.0;
    for (const auto& tri : laid.triangles) {
        for (int s = 0; s < 3; ++s) {
            double len = side_vector(tri, s).norm();
            min_len = std::min(min_len, len);
            max_len = std::max(max_len, len);
        }
    }

    double xlo = 0.0, xhi = 1.0, ylo = 0.0, yhi = 1.0;
    bool first = true;
    for (const auto& tri : laid.triangles) {
        for (const Vec2& p : tri) {
            if (first) {
                xlo = xhi = p.x;
                ylo = yhi = p.y;
                first = false;
            }
            xlo = std::min(xlo, p.x);
            xhi = std::max(xhi, p.x);
            ylo = std::min(ylo, p.y);
            yhi = std::max(yhi, p.y);
        }
    }
    const double margin = 0.4;
    xlo -= margin; ylo -= margin; xhi += margin; yhi += margin;
    // SVG y grows downward; flip.
    auto X = [&](double x) { return (x - xlo) * scale; };
    auto Y = [&](double y) { return (yhi - y) * scale; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           fmt((xhi - xlo) * scale) + "\" height=\"" + fmt((yhi - ylo) * scale) + "\" viewBox=\"0 0 " +
           fmt((xhi - xlo) * scale) + " " + fmt((yhi - ylo) * scale) + "\">\n";

    const double kClassTol = 1e-6;
    for (int v = 0; v < laid.vertex_count(); ++v) {
        const auto& tri = laid.triangles[static_cast<std::size_t>(v)];
        svg += "<polygon points=\"";
        for (int s = 0; s < 3; ++s) {
            if (s) svg += " ";
            svg += fmt(X(tri[static_cast<std::size_t>(s)].x)) + "," + fmt(Y(tri[static_cast<std::size_t>(s)].y));
        }
        svg += "\" fill=\"#f2f2f2\" stroke=\"none\"/>\n";
        for (int s = 0; s < 3; ++s) {
            Vec2 p0 = tri[static_cast<std::size_t>(s)], p1 = tri[static_cast<std::size_t>((s + 1) % 3)];
            double len = (p1 - p0).norm();
            std::string style;
            if (len <= min_len + kClassTol)
                style = "stroke=\"black\" stroke-width=\"3\"";  // bold: minimum length
            else if (len >= max_len - kClassTol)
                style = "stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"8,4\"";  // dashed: maximum
            else
                style = "stroke=\"black\" stroke-width=\"1\"";
            svg += "<line x1=\"" + fmt(X(p0.x)) + "\" y1=\"" + fmt(Y(p0.y)) + "\" x2=\"" +
                   fmt(X(p1.x)) + "\" y2=\"" + fmt(Y(p1.y)) + "\" " + style + "/>\n";
            if (mode == LayoutMode::Exploded) {
                Vec2 mid = (p0 + p1) * 0.5;
                svg += "<text x=\"" + fmt(X(mid.x)) + "\" y=\"" + fmt(Y(mid.y)) +
                       "\" font-size=\"10\" fill=\"#888888\">e" +
                       std::to_string(laid.side_map[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)]) + "</text>\n";
            }
        }
    }
    // grey vertex labels at centroids
    for (int v = 0; v < laid.vertex_count(); ++v) {
        const auto& tri = laid.triangles[static_cast<std::size_t>(v)];
        Vec2 c = (tri[0] + tri[1] + tri[2]) * (1.0 / 3.0);
        svg += "<text x=\"" + fmt(X(c.x)) + "\" y=\"" + fmt(Y(c.y)) +
               "\" font-size=\"14\" fill=\"#999999\" text-anchor=\"middle\">" + std::to_string(v) +
               "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace nzf
