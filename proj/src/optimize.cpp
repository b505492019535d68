#include "nzf/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <limits>
#include <thread>

#include "nzf/cdc.hpp"
#include "nzf/constructions.hpp"
#include "nzf/errors.hpp"

namespace nzf {

namespace {

constexpr double kNormFloor = 1e-150;

struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    double uniform() {  // in (0,1)
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }
    double gaussian() {
        double u = uniform(), v = uniform();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586 * v);
    }
};

// Cycle-space parametrization: one d-vector per fundamental cycle, each edge
// value the signed sum of its cycles' coefficients.
struct CycleSpace {
    int m = 0;
    int d = 2;
    int cycles = 0;
    std::vector<int> nontree_edge;                         // per cycle
    std::vector<std::vector<std::pair<int, int>>> edge_terms;  // per edge: (cycle, sign)

    CycleSpace(const Multigraph& g, int dim) : m(g.edge_count()), d(dim) {
        CycleBasis basis = fundamental_cycles(g);
        cycles = static_cast<int>(basis.cycles.size());
        edge_terms.assign(static_cast<std::size_t>(m), {});
        nontree_edge.reserve(static_cast<std::size_t>(cycles));
        for (int c = 0; c < cycles; ++c) {
            const FundamentalCycle& fc = basis.cycles[static_cast<std::size_t>(c)];
            nontree_edge.push_back(fc.nontree_edge);
            for (const SignedEdge& se : fc.edges)
                edge_terms[static_cast<std::size_t>(se.edge)].emplace_back(c, se.sign);
        }
    }

    int vars() const { return cycles * d; }

    void edge_values(const std::vector<double>& y, std::vector<double>& x) const {
        x.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(d), 0.0);
        for (int e = 0; e < m; ++e) {
            double* xe = x.data() + static_cast<std::size_t>(e) * static_cast<std::size_t>(d);
            for (auto [c, sgn] : edge_terms[static_cast<std::size_t>(e)]) {
                const double* yc = y.data() + static_cast<std::size_t>(c) * static_cast<std::size_t>(d);
                if (sgn > 0)
                    for (int k = 0; k < d; ++k) xe[k] += yc[k];
                else
                    for (int k = 0; k < d; ++k) xe[k] -= yc[k];
            }
        }
    }

    VectorFlow to_flow(const std::vector<double>& y) const {
        std::vector<double> x;
        edge_values(y, x);
        VectorFlow f(d, m);
        f.raw() = x;
        return f;
    }
};

struct Objective {
    const CycleSpace& space;
    mutable std::vector<double> x;      // edge values
    mutable std::vector<double> norms;  // edge norms

    explicit Objective(const CycleSpace& s) : space(s) {}

    void compute_norms(const std::vector<double>& y) const {
        space.edge_values(y, x);
        norms.assign(static_cast<std::size_t>(space.m), 0.0);
        for (int e = 0; e < space.m; ++e) {
            double s = 0.0;
            const double* xe = x.data() + static_cast<std::size_t>(e) * static_cast<std::size_t>(space.d);
            for (int k = 0; k < space.d; ++k) s += xe[k] * xe[k];
            norms[static_cast<std::size_t>(e)] = std::max(std::sqrt(s), kNormFloor);
        }
    }

    // log(max norm) - log(min norm); the exact nonsmooth objective.
    double log_ratio(const std::vector<double>& y) const {
        compute_norms(y);
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (double n : norms) {
            lo = std::min(lo, n);
            hi = std::max(hi, n);
        }
        return std::log(hi) - std::log(lo);
    }

    // Smoothed objective: softmax plus softmin of log norms at sharpness
    // beta; upper-bounds the exact log ratio and converges to it.
    double smoothed(const std::vector<double>& y, double beta, std::vector<double>* grad) const {
        compute_norms(y);
        const int m = space.m, d = space.d;
        std::vector<double> ell(static_cast<std::size_t>(m));
        double lmax = -std::numeric_limits<double>::infinity(), lmin = -lmax;
        for (int e = 0; e < m; ++e) {
            ell[static_cast<std::size_t>(e)] = std::log(norms[static_cast<std::size_t>(e)]);
            lmax = std::max(lmax, ell[static_cast<std::size_t>(e)]);
            lmin = std::min(lmin, ell[static_cast<std::size_t>(e)]);
        }
        double zp = 0.0, zm = 0.0;
        for (int e = 0; e < m; ++e) {
            zp += std::exp(beta * (ell[static_cast<std::size_t>(e)] - lmax));
            zm += std::exp(-beta * (ell[static_cast<std::size_t>(e)] - lmin));
        }
        double value = (lmax + std::log(zp) / beta) + (-lmin + std::log(zm) / beta);
        if (grad) {
            grad->assign(static_cast<std::size_t>(space.vars()), 0.0);
            for (int e = 0; e < m; ++e) {
                double wp = std::exp(beta * (ell[static_cast<std::size_t>(e)] - lmax)) / zp;
                double wm = std::exp(-beta * (ell[static_cast<std::size_t>(e)] - lmin)) / zm;
                double coef = (wp - wm) / (norms[static_cast<std::size_t>(e)] * norms[static_cast<std::size_t>(e)]);
                if (coef == 0.0) continue;
                const double* xe = x.data() + static_cast<std::size_t>(e) * static_cast<std::size_t>(d);
                for (auto [c, sgn] : space.edge_terms[static_cast<std::size_t>(e)]) {
                    double* gc = grad->data() + static_cast<std::size_t>(c) * static_cast<std::size_t>(d);
                    double s = sgn > 0 ? coef : -coef;
                    for (int k = 0; k < d; ++k) gc[k] += s * xe[k];
                }
            }
        }
        return value;
    }
};

double rms(const std::vector<double>& y) {
    if (y.empty()) return 1.0;
    double s = 0.0;
    for (double v : y) s += v * v;
    return std::sqrt(s / static_cast<double>(y.size()));
}

// Armijo backtracking descent on the smoothed objective. Returns accepted
// iterations; converged when the accepted step is below the tolerance.
int smoothed_descent(const Objective& obj, std::vector<double>& y, double beta, int max_iter,
                     double tolerance, bool& converged) {
    converged = false;
    std::vector<double> grad, trial;
    double step = 1.0;
    int iters = 0;
    for (; iters < max_iter; ++iters) {
        double f0 = obj.smoothed(y, beta, &grad);
        double gnorm2 = 0.0;
        for (double g : grad) gnorm2 += g * g;
        if (gnorm2 == 0.0) {
            converged = true;
            break;
        }
        step = std::min(step * 2.0, 1e6);
        bool accepted = false;
        for (int bt = 0; bt < 60; ++bt) {
            trial.assign(y.begin(), y.end());
            for (std::size_t i = 0; i < y.size(); ++i) trial[i] -= step * grad[i];
            double ft = obj.smoothed(trial, beta, nullptr);
            if (ft <= f0 - 1e-4 * step * gnorm2) {
                y.swap(trial);
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            converged = true;  // no descent direction at this sharpness
            break;
        }
        double step_norm = step * std::sqrt(gnorm2);
        if (step_norm <= tolerance * (1.0 + rms(y))) {
            converged = true;
            ++iters;
            break;
        }
    }
    return iters;
}

// Monotone pattern search on the exact log ratio: best single-coordinate
// move per sweep, falling back to coordinate pairs before shrinking the
// step. Never accepts a worse point.
int polish_pass(const Objective& obj, std::vector<double>& y, std::uint64_t eval_budget,
                bool& finished) {
    const int vars = static_cast<int>(y.size());
    finished = true;
    if (vars == 0) return 0;
    double cur = obj.log_ratio(y);
    double scale = std::max(rms(y), 1e-6);
    double delta = 0.1 * scale;
    const double floor = 1e-12 * std::max(1.0, scale);
    std::uint64_t evals = 0;
    int moves = 0;
    std::vector<double> trial = y;
    auto try_move = [&](double& best, int& bi, int& bj, double& bsi, double& bsj, int i, int j,
                        double si, double sj) {
        trial.assign(y.begin(), y.end());
        trial[static_cast<std::size_t>(i)] += si * delta;
        if (j >= 0) trial[static_cast<std::size_t>(j)] += sj * delta;
        ++evals;
        double v = obj.log_ratio(trial);
        if (v < best - 1e-15) {
            best = v;
            bi = i;
            bj = j;
            bsi = si;
            bsj = sj;
        }
    };
    while (delta > floor) {
        if (evals >= eval_budget) {
            finished = false;
            break;
        }
        double best = cur;
        int bi = -1, bj = -1;
        double bsi = 0.0, bsj = 0.0;
        for (int i = 0; i < vars && evals < eval_budget; ++i) {
            try_move(best, bi, bj, bsi, bsj, i, -1, +1.0, 0.0);
            try_move(best, bi, bj, bsi, bsj, i, -1, -1.0, 0.0);
        }
        if (bi < 0) {
            for (int i = 0; i < vars && bi < 0 && evals < eval_budget; ++i)
                for (int j = i + 1; j < vars && bi < 0 && evals < eval_budget; ++j) {
                    try_move(best, bi, bj, bsi, bsj, i, j, +1.0, +1.0);
                    try_move(best, bi, bj, bsi, bsj, i, j, +1.0, -1.0);
                    try_move(best, bi, bj, bsi, bsj, i, j, -1.0, +1.0);
                    try_move(best, bi, bj, bsi, bsj, i, j, -1.0, -1.0);
                }
        }
        if (bi >= 0) {
            y[static_cast<std::size_t>(bi)] += bsi * delta;
            if (bj >= 0) y[static_cast<std::size_t>(bj)] += bsj * delta;
            assert(best <= cur + 1e-15);
            cur = best;
            ++moves;
        } else {
            delta *= 0.5;
        }
    }
    return moves;
}

std::vector<double> project_to_cycles(const CycleSpace& space, const VectorFlow& f) {
    // Each fundamental cycle contains its non-tree edge with sign +1 and no
    // other cycle contains it, so the coefficient is read off directly.
    std::vector<double> y(static_cast<std::size_t>(space.vars()), 0.0);
    for (int c = 0; c < space.cycles; ++c) {
        auto val = f.value(space.nontree_edge[static_cast<std::size_t>(c)]);
        for (int k = 0; k < space.d && k < static_cast<int>(val.size()); ++k)
            y[static_cast<std::size_t>(c) * static_cast<std::size_t>(space.d) + static_cast<std::size_t>(k)] = val[k];
    }
    return y;
}

VectorFlow pad_flow(const VectorFlow& f, int d) {
    VectorFlow out(d, f.edge_count());
    for (int e = 0; e < f.edge_count(); ++e) {
        auto src = f.value(e);
        auto dst = out.value(e);
        for (int k = 0; k < std::min(d, f.dimension()); ++k) dst[k] = src[k];
    }
    return out;
}

void require_optimizable(const Multigraph& g) {
    if (g.vertex_count() == 0 || g.edge_count() == 0)
        throw DomainError("empty: nothing to optimize");
    if (!g.is_connected()) throw DomainError("disconnected: minimize needs a connected graph");
    if (!bridges(g).empty())
        throw DomainError("bridge: a bridge edge lies in no cycle, so every flow value on it is zero");
}

}  // namespace

OptimizeReport minimize(const Multigraph& g, const OptimizeConfig& config) {
    require_optimizable(g);
    if (config.starts < 1) throw DomainError("starts must be >= 1");
    if (config.d < 1) throw DomainError("dimension must be >= 1");
    for (std::size_t i = 1; i < config.beta_schedule.size(); ++i)
        if (!(config.beta_schedule[i] > config.beta_schedule[i - 1]))
            throw DomainError("beta schedule must be strictly increasing");

    CycleSpace space(g, config.d);
    OptimizeReport report;
    report.seed = config.seed;
    report.lower_bound = lower_bound(g, config.d);

    if (space.cycles == 1) {
        // The cycle space is a single cycle: the optimum is exactly 2, with
        // any unit coefficient.
        std::vector<double> y(static_cast<std::size_t>(space.vars()), 0.0);
        y[0] = 1.0;
        report.best_flow = normalize(space.to_flow(y));
        report.best_strength = 2.0;
        report.gap = report.best_strength - report.lower_bound;
        report.per_start.assign(static_cast<std::size_t>(config.starts), {2.0, 0, true});
        return report;
    }

    struct StartResult {
        double strength = std::numeric_limits<double>::infinity();
        std::vector<double> y;
        StartDiagnostics diag;
    };

    // Deterministic warm starts: the integer flow pair and any cycle double
    // covers found within the budget, plus caller-provided flows.
    std::vector<std::vector<double>> warm;
    if (config.builtin_warm_starts && config.d >= 2) {
        try {
            warm.push_back(project_to_cycles(space, pad_flow(seymour_flow(g, config.warm_budget), config.d)));
        } catch (const TimeoutError&) {
        }
        for (int k = 3; k <= 5; ++k) {
            OcdcSearchResult r = find_ocdc(g, k, config.warm_budget);
            if (r.status == SearchStatus::Found)
                warm.push_back(project_to_cycles(
                    space, pad_flow(flow_from_ocdc(g, *r.cover, kgon_points(k)), config.d)));
        }
    }
    for (const VectorFlow& f : config.warm_starts) {
        if (f.dimension() > config.d || f.edge_count() != g.edge_count())
            throw ShapeError("warm start does not match the graph or dimension");
        FlowReport rep = verify_flow(g, f);
        if (!rep.valid()) throw InvalidFlowError("warm start flow does not verify");
        warm.push_back(project_to_cycles(space, pad_flow(f, config.d)));
    }

    const int total = config.starts + static_cast<int>(warm.size());
    std::vector<StartResult> results(static_cast<std::size_t>(total));
    const int stages = static_cast<int>(config.beta_schedule.size());
    const int iters_per_stage = std::max(50, config.max_iterations / std::max(1, stages));
    const std::uint64_t polish_budget = 400'000;

    auto run_start = [&](int idx) {
        Objective obj(space);
        StartResult& out = results[static_cast<std::size_t>(idx)];
        bool all_converged = true;
        int iterations = 0;
        if (idx < config.starts) {
            SplitMix rng{config.seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(idx) + 1};
            std::vector<double> y(static_cast<std::size_t>(space.vars()));
            for (int c = 0; c < space.cycles; ++c) {
                double s = 0.0;
                std::vector<double> u(static_cast<std::size_t>(space.d));
                for (int k = 0; k < space.d; ++k) {
                    u[static_cast<std::size_t>(k)] = rng.gaussian();
                    s += u[static_cast<std::size_t>(k)] * u[static_cast<std::size_t>(k)];
                }
                s = std::max(std::sqrt(s), 1e-12);
                for (int k = 0; k < space.d; ++k)
                    y[static_cast<std::size_t>(c) * static_cast<std::size_t>(space.d) + static_cast<std::size_t>(k)] =
                        u[static_cast<std::size_t>(k)] / s * static_cast<double>(space.m);
            }
            for (double beta : config.beta_schedule) {
                bool conv = false;
                iterations += smoothed_descent(obj, y, beta, iters_per_stage, config.tolerance, conv);
                all_converged = all_converged && conv;
            }
            out.y = std::move(y);
        } else {
            out.y = warm[static_cast<std::size_t>(idx - config.starts)];
        }
        bool finished = false;
        iterations += polish_pass(obj, out.y, polish_budget, finished);
        all_converged = all_converged && finished;
        out.strength = 1.0 + std::exp(obj.log_ratio(out.y));
        out.diag = {out.strength, iterations, all_converged};
    };

    unsigned hw = std::thread::hardware_concurrency();
    int nthreads = config.threads > 0 ? config.threads
                                      : static_cast<int>(std::max(1u, std::min(4u, hw)));
    nthreads = std::min(nthreads, total);
    if (nthreads <= 1) {
        for (int i = 0; i < total; ++i) run_start(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < total; i = next.fetch_add(1)) run_start(i);
            });
        for (auto& th : pool) th.join();
    }

    int best = 0;
    for (int i = 1; i < total; ++i)
        if (results[static_cast<std::size_t>(i)].strength < results[static_cast<std::size_t>(best)].strength) best = i;

    report.per_start.reserve(static_cast<std::size_t>(total));
    for (const StartResult& r : results) report.per_start.push_back(r.diag);
    report.best_flow = normalize(space.to_flow(results[static_cast<std::size_t>(best)].y));
    report.best_strength = results[static_cast<std::size_t>(best)].strength;
    report.gap = report.best_strength - report.lower_bound;
    if (report.best_strength < report.lower_bound - 1e-6)
        throw InternalError("found strength below the certified lower bound");
    return report;
}

VectorFlow polish(const Multigraph& g, const VectorFlow& f, const OptimizeConfig& config) {
    require_optimizable(g);
    FlowReport rep = verify_flow(g, f);
    if (!rep.valid()) throw InvalidFlowError("polish input does not verify");
    CycleSpace space(g, f.dimension());
    Objective obj(space);
    std::vector<double> y = project_to_cycles(space, f);
    bool finished = false;
    polish_pass(obj, y, 400'000, finished);
    (void)finished;
    return normalize(space.to_flow(y));
}

}  // namespace nzf
