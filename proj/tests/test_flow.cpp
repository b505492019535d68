#include <doctest.h>

#include <cmath>
#include <random>

#include "nzf/errors.hpp"
#include "nzf/flow.hpp"
#include "test_util.hpp"

using namespace nzf;

namespace {
VectorFlow make_flow(int d, std::vector<std::vector<double>> rows) {
    VectorFlow f(d, static_cast<int>(rows.size()));
    for (std::size_t e = 0; e < rows.size(); ++e)
        for (int k = 0; k < d; ++k) f.value(static_cast<int>(e))[k] = rows[e][static_cast<std::size_t>(k)];
    return f;
}
}  // namespace

TEST_CASE("verify_flow: cyclic circulation on C3") {
    Multigraph c3 = gen::cycle(3);
    VectorFlow f = make_flow(2, {{1, 0}, {1, 0}, {1, 0}});
    FlowReport r = verify_flow(c3, f);
    CHECK(r.max_conservation_residual == 0.0);
    REQUIRE(r.strength.has_value());
    CHECK(*r.strength == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("verify_flow flags zero norms and imbalance") {
    Multigraph c3 = gen::cycle(3);
    VectorFlow f = make_flow(2, {{1, 0}, {1, 0}, {0, 0}});
    FlowReport r = verify_flow(c3, f);
    CHECK(r.min_norm == 0.0);
    CHECK(!r.strength.has_value());
    bool has_zero = false, has_imbalance = false;
    for (const FlowViolation& v : r.violations) {
        has_zero = has_zero || v.kind == FlowViolation::Kind::ZeroNorm;
        has_imbalance = has_imbalance || v.kind == FlowViolation::Kind::VertexImbalance;
    }
    CHECK(has_zero);
    CHECK(has_imbalance);
}

TEST_CASE("verify_flow errors on shape and data problems") {
    Multigraph c3 = gen::cycle(3);
    CHECK_THROWS_AS(verify_flow(c3, VectorFlow(2, 2)), ShapeError);
    VectorFlow bad = make_flow(2, {{1, 0}, {1, 0}, {std::nan(""), 0}});
    CHECK_THROWS_AS(verify_flow(c3, bad), DataError);
}

TEST_CASE("loops contribute no residual but participate in the norm window") {
    Multigraph g(2, {{0, 1}, {0, 1}, {0, 0}});
    VectorFlow f = make_flow(2, {{1, 0}, {-1, 0}, {0, 3}});
    FlowReport r = verify_flow(g, f);
    CHECK(r.max_conservation_residual == 0.0);
    REQUIRE(r.strength.has_value());
    CHECK(*r.strength == doctest::Approx(4.0));  // 1 + 3/1
}

TEST_CASE("strength: known norm sets") {
    Multigraph g(2, {{0, 1}, {1, 0}});
    CHECK(strength(make_flow(2, {{1, 0}, {1, 0}}), g) == doctest::Approx(2.0));
    CHECK(strength(make_flow(2, {{1, 0}, {1, 1}}), g) == doctest::Approx(1.0 + std::sqrt(2.0)));
    const double tau = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(strength(make_flow(2, {{1, 0}, {tau, 0}}), g) == doctest::Approx(tau * tau).epsilon(1e-12));
}

TEST_CASE("strength is scale invariant (property)") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> cd(0.01, 100.0);
    int tested = 0;
    for (int rep = 0; rep < 200 && tested < 60; ++rep) {
        Multigraph g = testutil::random_bridgeless(rng);
        VectorFlow f = testutil::random_cycle_flow(g, 2, rng);
        FlowReport r = verify_flow(g, f);
        if (!r.strength) continue;
        ++tested;
        double c = cd(rng);
        VectorFlow scaled = f;
        for (double& x : scaled.raw()) x *= c;
        CHECK(strength(scaled, g) == doctest::Approx(*r.strength).epsilon(1e-12));
    }
    CHECK(tested >= 30);
}

TEST_CASE("conservation is orientation-convention independent (property)") {
    std::mt19937 rng(5);
    for (int rep = 0; rep < 60; ++rep) {
        Multigraph g = testutil::random_bridgeless(rng);
        VectorFlow f = testutil::random_cycle_flow(g, 2, rng);
        // flip every edge's reference orientation and negate its value
        std::vector<std::pair<int, int>> flipped;
        for (const Edge& e : g.edges()) flipped.emplace_back(e.head, e.tail);
        Multigraph g2(g.vertex_count(), flipped);
        VectorFlow f2 = f;
        for (double& x : f2.raw()) x = -x;
        FlowReport a = verify_flow(g, f);
        FlowReport b = verify_flow(g2, f2);
        CHECK(a.max_conservation_residual == doctest::Approx(b.max_conservation_residual).epsilon(1e-12));
        CHECK(a.min_norm == doctest::Approx(b.min_norm).epsilon(1e-15));
        CHECK(a.max_norm == doctest::Approx(b.max_norm).epsilon(1e-15));
        CHECK(a.strength.has_value() == b.strength.has_value());
    }
}

TEST_CASE("normalize") {
    Multigraph g(2, {{0, 1}, {1, 0}});
    VectorFlow f = make_flow(2, {{2, 0}, {2, 2}});
    VectorFlow n = normalize(f);
    CHECK(n.norm(0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(n.norm(1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    VectorFlow again = normalize(n);
    for (std::size_t i = 0; i < n.raw().size(); ++i) CHECK(again.raw()[i] == n.raw()[i]);
    CHECK(strength(n, g) == doctest::Approx(strength(f, g)).epsilon(1e-15));
    CHECK_THROWS_AS(normalize(make_flow(2, {{0, 0}})), InvalidFlowError);
}

TEST_CASE("wheel flow number: branches and limits") {
    CHECK(wheel_flow_number(3) == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-15));
    CHECK(wheel_flow_number(4) == 2.0);
    const double pi = std::acos(-1.0);
    CHECK(wheel_flow_number(5) == doctest::Approx(1.0 + 2.0 * std::sin(pi / 5.0)).epsilon(1e-15));
    CHECK(wheel_flow_number(7) == doctest::Approx(2.147152872702092).epsilon(1e-12));
    CHECK(wheel_flow_number(9) == doctest::Approx(2.111140466039204).epsilon(1e-12));
    CHECK_THROWS_AS(wheel_flow_number(2), DomainError);

    // each odd residue class decreases monotonically towards 2
    for (int start : {3, 5, 7}) {
        double prev = wheel_flow_number(start);
        CHECK(prev > 2.0);
        CHECK(prev <= 1.0 + std::sqrt(2.0) + 1e-15);
        for (int n = start + 6; n <= start + 60; n += 6) {
            double cur = wheel_flow_number(n);
            CHECK(cur < prev);
            CHECK(cur > 2.0);
            prev = cur;
        }
    }
}

TEST_CASE("lower bound") {
    CHECK(lower_bound(gen::k33()) == 2.0);
    CHECK(lower_bound(gen::petersen()) == doctest::Approx(wheel_flow_number(5)).epsilon(1e-15));
    CHECK(lower_bound(gen::complete(4)) == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-15));
    CHECK(lower_bound(gen::complete(5)) == 2.0);  // non-cubic, non-bipartite
    CHECK(lower_bound(gen::petersen(), 3) == 2.0);
    Multigraph path2(2, {{0, 1}});
    CHECK_THROWS_AS(lower_bound(path2), DomainError);
    Multigraph disconnected(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK_THROWS_AS(lower_bound(disconnected), DomainError);
}
