#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "nzf/errors.hpp"
#include "nzf/graph.hpp"
#include "test_util.hpp"

using namespace nzf;

namespace {

// Independent graph6 encoder used as an oracle for the parser.
std::string encode_graph6(int n, const std::set<std::pair<int, int>>& edges) {
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    std::vector<int> bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            bits.push_back(edges.count({i, j}) ? 1 : 0);
    while (bits.size() % 6 != 0) bits.push_back(0);
    for (std::size_t b = 0; b < bits.size(); b += 6) {
        int v = 0;
        for (int k = 0; k < 6; ++k) v = (v << 1) | bits[b + static_cast<std::size_t>(k)];
        out.push_back(static_cast<char>(63 + v));
    }
    return out;
}

std::set<std::pair<int, int>> edge_set(const Multigraph& g) {
    std::set<std::pair<int, int>> s;
    for (const Edge& e : g.edges()) s.insert({std::min(e.tail, e.head), std::max(e.tail, e.head)});
    return s;
}

}  // namespace

TEST_CASE("graph6 parses K4 from C~") {
    Multigraph g = parse_graph("C~", GraphFormat::Graph6);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
    CHECK(edge_set(g) == edge_set(gen::complete(4)));
    // lexicographic (i,j) edge order, tail = smaller index
    CHECK(g.edge(0).tail == 0);
    CHECK(g.edge(0).head == 1);
    CHECK(g.edge(1).head == 2);
    CHECK(g.edge(5).tail == 2);
    CHECK(g.edge(5).head == 3);
}

TEST_CASE("graph6 round-trips the Petersen graph through an independent encoder") {
    Multigraph p = gen::petersen();
    std::string g6 = encode_graph6(10, edge_set(p));
    Multigraph parsed = parse_graph(g6, GraphFormat::Graph6);
    CHECK(parsed.vertex_count() == 10);
    CHECK(parsed.edge_count() == 15);
    CHECK(edge_set(parsed) == edge_set(p));
}

TEST_CASE("graph6 rejects malformed input with a byte offset") {
    CHECK_THROWS_AS(parse_graph("", GraphFormat::Graph6), ParseError);
    CHECK_THROWS_AS(parse_graph("C", GraphFormat::Graph6), ParseError);     // body too short
    CHECK_THROWS_AS(parse_graph("C~~", GraphFormat::Graph6), ParseError);   // trailing bytes
    try {
        parse_graph(std::string("C") + char(14), GraphFormat::Graph6);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.offset == 1);
    }
}

TEST_CASE("edge-list JSON handles multigraphs and bad schemas") {
    Multigraph g = parse_graph(R"({"n":2,"edges":[[0,1],[0,1]]})", GraphFormat::EdgeListJson);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 2);
    CHECK_THROWS_AS(parse_graph(R"({"n":2,"edges":[[0,5]]})", GraphFormat::EdgeListJson), SchemaError);
    CHECK_THROWS_AS(parse_graph(R"({"edges":[]})", GraphFormat::EdgeListJson), SchemaError);
    CHECK_THROWS_AS(parse_graph(R"({"n":2,"edges":)", GraphFormat::EdgeListJson), ParseError);
}

TEST_CASE("parse round-trips serialize for both formats") {
    std::mt19937 rng(42);
    for (int rep = 0; rep < 50; ++rep) {
        Multigraph g = testutil::random_multigraph(rng);
        Multigraph back = parse_graph(serialize_graph(g, GraphFormat::EdgeListJson), GraphFormat::EdgeListJson);
        REQUIRE(back.vertex_count() == g.vertex_count());
        REQUIRE(back.edge_count() == g.edge_count());
        for (const Edge& e : g.edges()) {
            CHECK(back.edge(e.id).tail == e.tail);
            CHECK(back.edge(e.id).head == e.head);
        }
    }
    // graph6: identity on graphs already in normalized edge order
    Multigraph p = parse_graph(encode_graph6(10, edge_set(gen::petersen())), GraphFormat::Graph6);
    Multigraph back = parse_graph(serialize_graph(p, GraphFormat::Graph6), GraphFormat::Graph6);
    for (const Edge& e : p.edges()) {
        CHECK(back.edge(e.id).tail == e.tail);
        CHECK(back.edge(e.id).head == e.head);
    }
}

TEST_CASE("generators have the stated sizes") {
    Multigraph w3 = gen::wheel(3);
    CHECK(w3.vertex_count() == 4);
    CHECK(w3.edge_count() == 6);
    CHECK(edge_set(w3) == edge_set(gen::complete(4)));  // W3 = K4

    for (int n = 3; n <= 9; ++n) {
        CHECK(gen::wheel(n).vertex_count() == n + 1);
        CHECK(gen::wheel(n).edge_count() == 2 * n);
        CHECK(gen::prism(n).vertex_count() == 2 * n);
        CHECK(gen::prism(n).edge_count() == 3 * n);
    }

    Multigraph j5 = gen::flower_snark(5);
    CHECK(j5.vertex_count() == 20);
    CHECK(j5.edge_count() == 30);
    CHECK(j5.is_cubic());

    Multigraph pd = gen::triangle_replaced(gen::petersen());
    CHECK(pd.vertex_count() == 30);
    CHECK(pd.edge_count() == 45);
    CHECK(pd.is_cubic());

    CHECK_THROWS_AS(gen::wheel(2), DomainError);
    CHECK_THROWS_AS(gen::flower_snark(4), DomainError);
    CHECK_THROWS_AS(gen::triangle_replaced(gen::wheel(5)), DomainError);
}

TEST_CASE("bridges: known graphs") {
    CHECK(bridges(gen::complete(4)).empty());
    CHECK(bridges(gen::petersen()).empty());
    Multigraph path2(2, {{0, 1}});
    CHECK(bridges(path2) == std::vector<int>{0});
}

TEST_CASE("bridges match a brute-force oracle and avoid fundamental cycles") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 200; ++rep) {
        Multigraph g = testutil::random_multigraph(rng);
        std::vector<int> fast = bridges(g);
        std::vector<int> slow = testutil::bridges_bruteforce(g);
        std::sort(slow.begin(), slow.end());
        REQUIRE(fast == slow);
        CycleBasis basis = fundamental_cycles(g);
        std::set<int> in_cycles;
        for (const FundamentalCycle& fc : basis.cycles)
            for (const SignedEdge& se : fc.edges) in_cycles.insert(se.edge);
        for (int b : fast) CHECK(in_cycles.count(b) == 0);
    }
}

TEST_CASE("odd girth") {
    CHECK(odd_girth(gen::complete(4)) == 3);
    CHECK(!odd_girth(gen::k33()).has_value());
    CHECK(odd_girth(gen::petersen()) == 5);
    CHECK(odd_girth(gen::cycle(5)) == 5);
    CHECK(!odd_girth(gen::cycle(6)).has_value());
    Multigraph loop(1, {{0, 0}});
    CHECK(odd_girth(loop) == 1);
}

TEST_CASE("fundamental cycles: counts and circulation property") {
    Multigraph tree(4, {{0, 1}, {1, 2}, {1, 3}});
    CHECK(fundamental_cycles(tree).cycles.empty());

    CycleBasis c5 = fundamental_cycles(gen::cycle(5));
    REQUIRE(c5.cycles.size() == 1);
    CHECK(c5.cycles[0].edges.size() == 5);

    CHECK(fundamental_cycles(gen::petersen()).cycles.size() == 6);

    std::mt19937 rng(11);
    for (int rep = 0; rep < 200; ++rep) {
        Multigraph g = testutil::random_multigraph(rng);
        CycleBasis basis = fundamental_cycles(g);
        CHECK(static_cast<int>(basis.cycles.size()) ==
              g.edge_count() - g.vertex_count() + basis.components);
        for (const FundamentalCycle& fc : basis.cycles) {
            REQUIRE(!fc.edges.empty());
            CHECK(fc.edges[0].edge == fc.nontree_edge);
            CHECK(fc.edges[0].sign == 1);
            // signed edges form a circulation
            std::vector<int> net(static_cast<std::size_t>(g.vertex_count()), 0);
            for (const SignedEdge& se : fc.edges) {
                const Edge& e = g.edge(se.edge);
                if (e.tail == e.head) continue;
                net[static_cast<std::size_t>(e.head)] += se.sign;
                net[static_cast<std::size_t>(e.tail)] -= se.sign;
            }
            for (int v : net) CHECK(v == 0);
        }
    }
}

TEST_CASE("structure queries") {
    CHECK(gen::petersen().is_cubic());
    CHECK(!gen::wheel(5).is_cubic());
    CHECK(gen::k33().bipartition().has_value());
    CHECK(!gen::petersen().bipartition().has_value());
    Multigraph two(2, {});
    CHECK(!two.is_connected());
    CHECK(two.components() == 2);
}
