#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <stdexcept>

#include "radmax/constructions.hpp"
#include "radmax/formats.hpp"
#include "radmax/graph.hpp"
#include "support/oracle.hpp"

using radmax::Graph;
using radmax::GraphFormat;

TEST_CASE("graph6 decodes the known 4-cycle string") {
    // "Cr": order 4, payload r = 110011 -> edges 01, 02, 13, 23
    const Graph g = radmax::from_graph6("Cr");
    CHECK(g.order() == 4);
    CHECK(g.edges() == std::vector<radmax::Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(radmax::to_graph6(g) == "Cr");
    CHECK(radmax::from_graph6(">>graph6<<Cr") == g);
    CHECK(radmax::from_graph6("Cr\n") == g); // trailing newline tolerated
}

TEST_CASE("graph6 small named graphs") {
    CHECK(radmax::to_graph6(Graph(1)) == "@");
    CHECK(radmax::to_graph6(Graph::from_edges(2, {{0, 1}})) == "A_");
    CHECK(radmax::from_graph6("A_").edge_count() == 1);
    CHECK(radmax::from_graph6("A?").edge_count() == 0);
}

TEST_CASE("graph6 matches an independent encoder") {
    std::mt19937 rng(772);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const Graph g = oracle::random_graph(rng, n, 0.4);
        const std::string enc = radmax::to_graph6(g);
        CHECK(enc == oracle::graph6(g));
        CHECK(radmax::from_graph6(enc) == g);
    }
    // family members too
    for (int r = 2; r <= 5; ++r) {
        const Graph g = radmax::build_self_centered(r, 2 * r + 2).graph;
        CHECK(radmax::to_graph6(g) == oracle::graph6(g));
        CHECK(radmax::from_graph6(radmax::to_graph6(g)) == g);
    }
}

TEST_CASE("graph6 long-form order header") {
    std::mt19937 rng(41);
    for (int n : {63, 64, 100}) {
        const Graph g = oracle::random_connected(rng, n);
        const std::string enc = radmax::to_graph6(g);
        CHECK(enc.substr(0, 1) == "~");
        CHECK(enc == oracle::graph6(g));
        CHECK(radmax::from_graph6(enc) == g);
    }
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(radmax::from_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(radmax::from_graph6("C"), std::invalid_argument);    // payload missing
    CHECK_THROWS_AS(radmax::from_graph6("Crr"), std::invalid_argument);  // payload too long
    CHECK_THROWS_AS(radmax::from_graph6("C\x1f"), std::invalid_argument); // byte below 63
    CHECK_THROWS_AS(radmax::from_graph6("C\x7f"), std::invalid_argument); // byte above 126
    // order 3 leaves three padding bits and order 2 leaves five; they must be zero
    CHECK_NOTHROW(radmax::from_graph6("BW"));
    CHECK_THROWS_AS(radmax::from_graph6("B@"), std::invalid_argument);
    CHECK_THROWS_AS(radmax::from_graph6("A@"), std::invalid_argument);
}

TEST_CASE("dot export and re-import") {
    const Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    const std::string plain = radmax::to_dot(g);
    CHECK(plain.find("graph") != std::string::npos);
    CHECK(radmax::from_dot(plain) == g);

    const std::map<std::string, int> names{{"x1", 0}, {"x2", 1}, {"x3", 2}, {"y1", 3}};
    const std::string labeled = radmax::to_dot(g, &names);
    CHECK(labeled.find("x1") != std::string::npos);
    CHECK(labeled.find("y1") != std::string::npos);
    CHECK(radmax::from_dot(labeled) == g); // labels are cosmetic

    // isolated vertices survive the round trip
    Graph iso(3);
    iso.add_edge(0, 1);
    CHECK(radmax::from_dot(radmax::to_dot(iso)) == iso);
}

TEST_CASE("dot parser accepts common hand-written shapes") {
    const Graph expect = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(radmax::from_dot("graph { 0 -- 1; 1 -- 2; }") == expect);
    CHECK(radmax::from_dot("strict graph G { 0 -- 1 -- 2 }") == expect);
    CHECK(radmax::from_dot("graph G {\n  node [shape=circle];\n  0 [label=\"a\"];\n"
                           "  1 ; 2;\n  0 -- 1 [weight=2];\n  1 -- 2;\n}") == expect);
    CHECK_THROWS_AS(radmax::from_dot("digraph { 0 -> 1 }"), std::invalid_argument);
    CHECK_THROWS_AS(radmax::from_dot("graph { 0 -- 0 }"), std::invalid_argument);
    CHECK_THROWS_AS(radmax::from_dot("graph { 0 -- 1"), std::invalid_argument);
}

TEST_CASE("edge list round trip") {
    const Graph g = Graph::from_edges(5, {{0, 4}, {1, 2}});
    const std::string text = radmax::to_edgelist(g);
    CHECK(radmax::from_edgelist(text) == g);
    CHECK(radmax::from_edgelist("5 2\n# comment line\n0 4\n1 2\n") == g);
    CHECK_THROWS_AS(radmax::from_edgelist("5 1\n0 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(radmax::from_edgelist("5 1\n0 9\n"), std::invalid_argument);
    CHECK_THROWS_AS(radmax::from_edgelist("5 2\n0 1\n"), std::invalid_argument); // count mismatch
    CHECK_THROWS_AS(radmax::from_edgelist("nope\n"), std::invalid_argument);
}

TEST_CASE("format sniffing") {
    CHECK(radmax::sniff_format("Cr") == GraphFormat::kGraph6);
    CHECK(radmax::sniff_format("graph { 0 -- 1 }") == GraphFormat::kDot);
    CHECK(radmax::sniff_format("strict graph {}") == GraphFormat::kDot);
    CHECK(radmax::sniff_format("3 1\n0 1\n") == GraphFormat::kEdgeList);

    const Graph c4 = radmax::from_graph6("Cr");
    CHECK(radmax::parse_graph_auto("Cr") == c4);
    CHECK(radmax::parse_graph_auto(radmax::to_dot(c4)) == c4);
    CHECK(radmax::parse_graph_auto(radmax::to_edgelist(c4)) == c4);
    CHECK(radmax::parse_graph(radmax::to_edgelist(c4), GraphFormat::kEdgeList) == c4);
    CHECK(radmax::format_graph(c4, GraphFormat::kGraph6) == "Cr");
    CHECK(radmax::from_edgelist(radmax::format_graph(c4, GraphFormat::kEdgeList)) == c4);
}
