#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nzf/graph.hpp"

namespace nzf {

/// Assignment of a d-component real vector to every edge, expressed along
/// the edge's reference orientation.
class VectorFlow {
public:
    VectorFlow() = default;
    VectorFlow(int dimension, int edge_count)
        : d_(dimension), data_(static_cast<std::size_t>(dimension) * static_cast<std::size_t>(edge_count), 0.0) {}

    int dimension() const { return d_; }
    int edge_count() const { return d_ == 0 ? 0 : static_cast<int>(data_.size()) / d_; }

    std::span<double> value(int edge) {
        return {data_.data() + static_cast<std::size_t>(edge) * static_cast<std::size_t>(d_), static_cast<std::size_t>(d_)};
    }
    std::span<const double> value(int edge) const {
        return {data_.data() + static_cast<std::size_t>(edge) * static_cast<std::size_t>(d_), static_cast<std::size_t>(d_)};
    }
    double norm(int edge) const;

    std::vector<double>& raw() { return data_; }
    const std::vector<double>& raw() const { return data_; }

private:
    int d_ = 0;
    std::vector<double> data_;
};

struct FlowViolation {
    enum class Kind { VertexImbalance, ZeroNorm };
    Kind kind;
    int index;  // vertex id or edge id
    std::string description;
};

struct FlowReport {
    double max_conservation_residual = 0.0;
    double min_norm = 0.0;
    double max_norm = 0.0;
    std::optional<double> strength;  // 1 + max/min when conservative and nowhere-zero
    std::vector<FlowViolation> violations;

    bool valid() const { return violations.empty() && strength.has_value(); }
};

inline constexpr double kDefaultTolerance = 1e-9;

/// Checks conservation (per-vertex residual norm, loops contributing zero)
/// and the norm window. Throws ShapeError on edge-count/dimension mismatch
/// and DataError on non-finite entries.
FlowReport verify_flow(const Multigraph& g, const VectorFlow& f,
                       double tolerance = kDefaultTolerance);

/// 1 + max_norm/min_norm of a verified flow; invariant under positive
/// scaling. Throws InvalidFlowError if the flow does not verify.
double strength(const VectorFlow& f, const Multigraph& g,
                double tolerance = kDefaultTolerance);

/// Rescales so the minimum edge norm is exactly 1.
VectorFlow normalize(const VectorFlow& f);

/// Exact 2-dimensional flow number of the wheel W_n:
///   2                              n even
///   1 + 2 sin(pi/6 * n/(n-1))      n = 1, 3 (mod 6)
///   1 + 2 sin(pi/6 * (n+1)/n)      n = 5 (mod 6)
double wheel_flow_number(int n);

/// Certified lower bound on phi_d: 2 for bipartite graphs or d != 2, the
/// odd-girth wheel value for non-bipartite cubic graphs at d = 2, and the
/// trivial 2 otherwise. Requires a connected bridgeless graph.
double lower_bound(const Multigraph& g, int d = 2);

}  // namespace nzf
