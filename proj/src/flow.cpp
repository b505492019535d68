#include "nzf/flow.hpp"

#include <cmath>
#include <limits>

#include "nzf/errors.hpp"

namespace nzf {

double VectorFlow::norm(int edge) const {
    double s = 0.0;
    for (double c : value(edge)) s += c * c;
    return std::sqrt(s);
}

FlowReport verify_flow(const Multigraph& g, const VectorFlow& f, double tolerance) {
    if (tolerance <= 0.0) throw DomainError("tolerance must be positive");
    if (f.edge_count() != g.edge_count())
        throw ShapeError("flow covers " + std::to_string(f.edge_count()) + " edges, graph has " +
                         std::to_string(g.edge_count()));
    if (f.dimension() <= 0) throw ShapeError("flow dimension must be positive");
    for (double c : f.raw())
        if (!std::isfinite(c)) throw DataError("flow value is not finite");

    const int d = f.dimension();
    FlowReport report;
    std::vector<double> net(static_cast<std::size_t>(g.vertex_count()) * static_cast<std::size_t>(d), 0.0);
    for (const Edge& e : g.edges()) {
        if (e.tail == e.head) continue;
        auto val = f.value(e.id);
        for (int c = 0; c < d; ++c) {
            net[static_cast<std::size_t>(e.tail) * d + c] += val[c];   // outgoing
            net[static_cast<std::size_t>(e.head) * d + c] -= val[c];   // incoming
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        double s = 0.0;
        for (int c = 0; c < d; ++c) {
            double x = net[static_cast<std::size_t>(v) * d + c];
            s += x * x;
        }
        double r = std::sqrt(s);
        report.max_conservation_residual = std::max(report.max_conservation_residual, r);
        if (r > tolerance)
            report.violations.push_back({FlowViolation::Kind::VertexImbalance, v,
                                         "vertex " + std::to_string(v) + " residual " + std::to_string(r)});
    }

    if (g.edge_count() > 0) {
        report.min_norm = std::numeric_limits<double>::infinity();
        for (const Edge& e : g.edges()) {
            double nrm = f.norm(e.id);
            report.min_norm = std::min(report.min_norm, nrm);
            report.max_norm = std::max(report.max_norm, nrm);
            if (nrm == 0.0)
                report.violations.push_back({FlowViolation::Kind::ZeroNorm, e.id,
                                             "edge " + std::to_string(e.id) + " has zero value"});
        }
    }

    if (report.min_norm > 0.0 && report.max_conservation_residual <= tolerance && g.edge_count() > 0)
        report.strength = 1.0 + report.max_norm / report.min_norm;
    return report;
}

double strength(const VectorFlow& f, const Multigraph& g, double tolerance) {
    FlowReport r = verify_flow(g, f, tolerance);
    if (!r.strength)
        throw InvalidFlowError(r.min_norm <= 0.0 ? "zero edge value" : "conservation violated");
    return *r.strength;
}

VectorFlow normalize(const VectorFlow& f) {
    double mn = std::numeric_limits<double>::infinity();
    for (int e = 0; e < f.edge_count(); ++e) mn = std::min(mn, f.norm(e));
    if (!(mn > 0.0) || !std::isfinite(mn)) throw InvalidFlowError("minimum edge norm is zero");
    VectorFlow out = f;
    for (double& c : out.raw()) c /= mn;
    return out;
}

double wheel_flow_number(int n) {
    if (n < 3) throw DomainError("wheel_flow_number: n must be >= 3");
    if (n % 2 == 0) return 2.0;
    const double pi = std::acos(-1.0);
    int r = n % 6;
    if (r == 1 || r == 3)
        return 1.0 + 2.0 * std::sin(pi / 6.0 * static_cast<double>(n) / static_cast<double>(n - 1));
    return 1.0 + 2.0 * std::sin(pi / 6.0 * static_cast<double>(n + 1) / static_cast<double>(n));
}

double lower_bound(const Multigraph& g, int d) {
    if (!g.is_connected()) throw DomainError("disconnected: lower_bound needs a connected graph");
    if (!bridges(g).empty()) throw DomainError("bridge: no nowhere-zero flow exists");
    if (d != 2) return 2.0;
    auto og = odd_girth(g);
    if (!og) return 2.0;  // bipartite
    // The wheel bound applies to cubic graphs (chordless odd cycle of
    // minimum length contracts to a wheel).
    if (!g.is_cubic()) return 2.0;
    return wheel_flow_number(*og);
}

}  // namespace nzf
