#include <doctest.h>

#include <cmath>
#include <set>

#include "nzf/cdc.hpp"
#include "nzf/constructions.hpp"
#include "nzf/errors.hpp"
#include "nzf/flow.hpp"

using namespace nzf;

TEST_CASE("verify_ocdc on the oriented triangle") {
    Multigraph c3 = gen::cycle(3);
    OrientedCycleDoubleCover good{2, {{1, 2}, {1, 2}, {1, 2}}};
    CHECK(verify_ocdc(c3, good).ok);

    OrientedCycleDoubleCover bad{2, {{1, 2}, {1, 2}, {2, 1}}};
    OcdcReport r = verify_ocdc(c3, bad);
    CHECK(!r.ok);
    std::set<int> vertices;
    for (const OcdcViolation& v : r.violations) vertices.insert(v.vertex);
    CHECK(vertices.size() == 2);  // both endpoints of the swapped edge
}

TEST_CASE("verify_ocdc shape errors") {
    Multigraph c3 = gen::cycle(3);
    CHECK_THROWS_AS(verify_ocdc(c3, OrientedCycleDoubleCover{2, {{1, 2}}}), ShapeError);
    CHECK_THROWS_AS(verify_ocdc(c3, OrientedCycleDoubleCover{2, {{1, 1}, {1, 2}, {1, 2}}}), ShapeError);
}

namespace {

// Brute-force oracle: enumerate every assignment (first edge pinned by the
// same symmetry argument) and verify each one.
bool exists_ocdc_bruteforce(const Multigraph& g, int k) {
    std::vector<std::pair<int, int>> candidates;
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            if (i != j) candidates.emplace_back(i, j);
    int m = g.edge_count();
    std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
    while (true) {
        OrientedCycleDoubleCover c;
        c.k = k;
        for (int e = 0; e < m; ++e) c.pairs.push_back(candidates[idx[static_cast<std::size_t>(e)]]);
        if (verify_ocdc(g, c).ok) return true;
        int pos = m - 1;
        while (pos >= 1) {  // keep edge 0 pinned to (1,2)
            if (++idx[static_cast<std::size_t>(pos)] < candidates.size()) break;
            idx[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 1) return false;
    }
}

}  // namespace

TEST_CASE("K4 has no oriented 3-CDC (search agrees with brute force)") {
    Multigraph k4 = gen::complete(4);
    OcdcSearchResult r = find_ocdc(k4, 3);
    CHECK(r.status == SearchStatus::Exhausted);
    CHECK(!exists_ocdc_bruteforce(k4, 3));
}

TEST_CASE("K4 has an oriented 4-CDC giving a 1+sqrt2 flow") {
    Multigraph k4 = gen::complete(4);
    OcdcSearchResult r = find_ocdc(k4, 4);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(verify_ocdc(k4, *r.cover).ok);
    VectorFlow f = flow_from_ocdc(k4, *r.cover, kgon_points(4));
    CHECK(strength(f, k4) <= 1.0 + std::sqrt(2.0) + 1e-12);
}

TEST_CASE("Petersen has an oriented 5-CDC giving a flow within tau^2") {
    Multigraph p = gen::petersen();
    OcdcSearchResult r = find_ocdc(p, 5);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(verify_ocdc(p, *r.cover).ok);
    VectorFlow f = flow_from_ocdc(p, *r.cover, kgon_points(5));
    const double tau2 = (3.0 + std::sqrt(5.0)) / 2.0;
    CHECK(strength(f, p) <= tau2 + 1e-12);
}

TEST_CASE("K33 has an oriented 3-CDC giving a unit flow") {
    Multigraph g = gen::k33();
    OcdcSearchResult r = find_ocdc(g, 3);
    REQUIRE(r.status == SearchStatus::Found);
    VectorFlow f = flow_from_ocdc(g, *r.cover, kgon_points(3));
    FlowReport rep = verify_flow(g, f);
    REQUIRE(rep.strength.has_value());
    CHECK(*rep.strength == doctest::Approx(2.0).epsilon(1e-12));
    for (int e = 0; e < g.edge_count(); ++e) CHECK(f.norm(e) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("search is deterministic and respects budgets") {
    Multigraph p = gen::petersen();
    OcdcSearchResult a = find_ocdc(p, 5);
    OcdcSearchResult b = find_ocdc(p, 5);
    REQUIRE(a.cover.has_value());
    REQUIRE(b.cover.has_value());
    CHECK(a.cover->pairs == b.cover->pairs);
    CHECK(a.nodes_expanded == b.nodes_expanded);

    OcdcSearchResult tiny = find_ocdc(p, 5, 3);
    CHECK(tiny.status == SearchStatus::Timeout);
}

TEST_CASE("bridges are rejected up front") {
    // two triangles joined by a single edge
    Multigraph bridge(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}});
    CHECK_THROWS_AS(find_ocdc(bridge, 5), DomainError);
}
