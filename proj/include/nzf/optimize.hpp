#pragma once

#include <cstdint>
#include <vector>

#include "nzf/flow.hpp"
#include "nzf/graph.hpp"

namespace nzf {

struct OptimizeConfig {
    int d = 2;
    int starts = 64;
    std::uint64_t seed = 0;
    int max_iterations = 10000;  // per start, split across the beta schedule
    std::vector<double> beta_schedule = {4.0, 16.0, 64.0, 256.0};
    double tolerance = 1e-8;     // step-size convergence
    std::vector<VectorFlow> warm_starts;  // extra starts, polished only
    bool builtin_warm_starts = true;      // integer-pair and cycle-cover flows
    std::uint64_t warm_budget = 1'000'000;
    int threads = 0;  // 0: up to 4 hardware threads
};

struct StartDiagnostics {
    double strength = 0.0;
    int iterations = 0;
    bool converged = false;
};

struct OptimizeReport {
    VectorFlow best_flow;       // normalized (minimum norm 1)
    double best_strength = 0.0;
    double lower_bound = 0.0;
    double gap = 0.0;
    std::vector<StartDiagnostics> per_start;
    std::uint64_t seed = 0;
};

/// Multi-start minimization of the flow strength over the cycle space.
/// Variables are one d-vector per fundamental cycle, so conservation holds
/// identically; the objective is the ratio max||x_e|| / min||x_e||, descended
/// through a log-sum-exp smoothing schedule and finished with a monotone
/// pattern-search polish on the exact ratio. Deterministic given the config;
/// starts may run in parallel. The reported strength is an upper bound on
/// the flow number, never a claim of optimality.
OptimizeReport minimize(const Multigraph& g, const OptimizeConfig& config = {});

/// Projects a conservative flow onto cycle-space coordinates (exact: the
/// coefficient of each fundamental cycle is the value on its defining
/// non-tree edge) and runs only the polish pass. The result never has larger
/// strength than the input.
VectorFlow polish(const Multigraph& g, const VectorFlow& f, const OptimizeConfig& config = {});

}  // namespace nzf
