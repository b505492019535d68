#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "nzf/graph.hpp"

namespace nzf::repro {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Result {
    std::string target;
    bool pass = false;
    std::vector<Check> checks;
};

inline constexpr std::uint64_t kPinnedSeed = 7;

/// Resolves built-in graph names: k4, k33, petersen, j5, pdelta, cube,
/// wheel:N, prism:N, flower:K, complete:N, cycle:N.
Multigraph builtin_graph(const std::string& name);

/// Runs one named experiment (k4 | k33 | wheels | prisms | petersen | j5 |
/// pdelta | tau2-check) with pinned seeds; returns per-check pass/fail.
Result run_target(const std::string& target);

nlohmann::json result_to_json(const Result& r);

}  // namespace nzf::repro
