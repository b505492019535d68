#include <doctest.h>

#include <cmath>
#include <string>

#include "nzf/cdc.hpp"
#include "nzf/constructions.hpp"
#include "nzf/errors.hpp"
#include "nzf/flow.hpp"
#include "nzf/triangulate.hpp"

using namespace nzf;

namespace {

int count_occurrences(const std::string& hay, const std::string& needle) {
    int n = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
    return n;
}

VectorFlow k4_optimal_flow() {
    // 4-gon cover flow: norms exactly {1, sqrt 2}, strength 1 + sqrt 2
    Multigraph k4 = gen::complete(4);
    OcdcSearchResult r = find_ocdc(k4, 4);
    REQUIRE(r.status == SearchStatus::Found);
    return flow_from_ocdc(k4, *r.cover, kgon_points(4));
}

}  // namespace

TEST_CASE("round trip: detriangulate(triangulate(F)) == F exactly") {
    struct Case {
        Multigraph g;
        VectorFlow f;
    };
    std::vector<Case> cases;
    cases.push_back({gen::complete(4), k4_optimal_flow()});
    cases.push_back({gen::k33(), bipartite_cubic_flow(gen::k33())});
    cases.push_back({gen::prism(4), bipartite_cubic_flow(gen::prism(4))});
    cases.push_back({gen::petersen(), petersen_flow()});
    cases.push_back({gen::petersen(), seymour_flow(gen::petersen())});
    cases.push_back({gen::flower_snark(5), seymour_flow(gen::flower_snark(5))});
    for (const Case& c : cases) {
        FlowTriangulation t = triangulate(c.g, c.f);
        VectorFlow back = detriangulate(c.g, t);
        REQUIRE(back.edge_count() == c.f.edge_count());
        for (std::size_t i = 0; i < c.f.raw().size(); ++i)
            CHECK(back.raw()[i] == doctest::Approx(c.f.raw()[i]).epsilon(1e-12));
    }
}

TEST_CASE("reverse round trip: triangles reproduced up to translation") {
    Multigraph p = gen::petersen();
    FlowTriangulation t = petersen_figure();
    VectorFlow f = detriangulate(p, t);
    FlowTriangulation t2 = triangulate(p, f);
    REQUIRE(t2.vertex_count() == t.vertex_count());
    // same side vectors per (vertex, edge); compare via the edge value view
    VectorFlow f2 = detriangulate(p, t2);
    for (std::size_t i = 0; i < f.raw().size(); ++i)
        CHECK(f2.raw()[i] == doctest::Approx(f.raw()[i]).epsilon(1e-12));
}

TEST_CASE("triangulate validates its input") {
    CHECK_THROWS_AS(triangulate(gen::wheel(5), VectorFlow(2, 10)), DomainError);  // non-cubic
    Multigraph loopy(2, {{0, 0}, {0, 1}, {1, 1}});
    CHECK_THROWS_AS(triangulate(loopy, VectorFlow(2, 3)), DomainError);  // loops
    Multigraph k4 = gen::complete(4);
    CHECK_THROWS_AS(triangulate(k4, VectorFlow(2, 6)), InvalidFlowError);  // zero flow
    CHECK_THROWS_AS(triangulate(k4, VectorFlow(3, 6)), ShapeError);
}

TEST_CASE("K4 optimal flow gives 4 triangles with sides {1, sqrt2} attached") {
    Multigraph k4 = gen::complete(4);
    VectorFlow f = k4_optimal_flow();
    FlowTriangulation t = triangulate(k4, f);
    CHECK(t.vertex_count() == 4);
    CHECK(t.attached);
    TriangulationReport rep = validate(k4, t, 1.0 + std::sqrt(2.0));
    CHECK(rep.ok);
    for (const auto& tri : t.triangles)
        for (int s = 0; s < 3; ++s) {
            double len = distance(tri[static_cast<std::size_t>(s)], tri[static_cast<std::size_t>((s + 1) % 3)]);
            bool known = std::abs(len - 1.0) < 1e-9 || std::abs(len - std::sqrt(2.0)) < 1e-9;
            CHECK(known);
        }
}

TEST_CASE("K33 bipartite flow gives 6 unit equilateral triangles") {
    Multigraph g = gen::k33();
    FlowTriangulation t = triangulate(g, bipartite_cubic_flow(g));
    CHECK(t.vertex_count() == 6);
    for (const auto& tri : t.triangles)
        for (int s = 0; s < 3; ++s)
            CHECK(distance(tri[static_cast<std::size_t>(s)], tri[static_cast<std::size_t>((s + 1) % 3)]) ==
                  doctest::Approx(1.0).epsilon(1e-12));
    CHECK(validate(g, t, 2.0).ok);
}

TEST_CASE("validate catches reflected triangles and window violations") {
    Multigraph p = gen::petersen();
    FlowTriangulation t = petersen_figure();
    REQUIRE(validate(p, t, 1.0 + std::sqrt(7.0 / 3.0)).ok);

    // reflect one triangle in place: attachability must break
    FlowTriangulation bad = t;
    for (auto& pt : bad.triangles[0]) pt.y = -pt.y + 2.0 * bad.triangles[0][0].y;
    TriangulationReport rep = validate(p, bad, 1.0 + std::sqrt(7.0 / 3.0));
    CHECK(!rep.ok);

    // shrink the window: max-length sides fall outside [1, r-1]
    TriangulationReport windowed = validate(p, t, 2.5);
    CHECK(!windowed.ok);
}

TEST_CASE("degenerate triangles are permitted and flagged") {
    // theta multigraph: values (1,0), (1,0), (-2,0) are collinear
    Multigraph theta(2, {{0, 1}, {0, 1}, {1, 0}});
    VectorFlow f(2, 3);
    f.value(0)[0] = 1.0;
    f.value(1)[0] = 1.0;
    f.value(2)[0] = 2.0;  // oriented 1 -> 0, so it carries the return flow
    REQUIRE(verify_flow(theta, f).strength.has_value());
    FlowTriangulation t = triangulate(theta, f);
    CHECK(t.degenerate.size() == 2);
    VectorFlow back = detriangulate(theta, t);
    for (std::size_t i = 0; i < f.raw().size(); ++i)
        CHECK(back.raw()[i] == doctest::Approx(f.raw()[i]).epsilon(1e-12));
}

TEST_CASE("svg rendering conventions") {
    Multigraph k4 = gen::complete(4);
    FlowTriangulation t = triangulate(k4, k4_optimal_flow());
    std::string svg = render_svg(t, LayoutMode::Attached);
    CHECK(count_occurrences(svg, "<polygon") == 4);
    CHECK(count_occurrences(svg, "stroke-width=\"3\"") > 0);      // bold minimum sides
    CHECK(count_occurrences(svg, "stroke-dasharray") > 0);        // dashed maximum sides
    CHECK(svg.find("</svg>") != std::string::npos);

    FlowTriangulation pt = petersen_figure();
    std::string psvg = render_svg(pt, LayoutMode::Attached);
    CHECK(count_occurrences(psvg, "<polygon") == 10);
    // 12 sides at the max length sqrt(7/3), each drawn dashed
    CHECK(count_occurrences(psvg, "stroke-dasharray") == 12);

    std::string exploded = render_svg(pt, LayoutMode::Exploded);
    CHECK(count_occurrences(exploded, ">e") >= 30);  // per-side edge labels

    FlowTriangulation empty;
    std::string esvg = render_svg(empty, LayoutMode::Attached);
    CHECK(esvg.find("<svg") == 0);
    CHECK(esvg.find("</svg>") != std::string::npos);

    // deterministic output
    CHECK(render_svg(pt, LayoutMode::Attached) == psvg);
}
