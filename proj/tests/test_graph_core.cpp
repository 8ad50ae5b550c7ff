#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "radmax/bitset.hpp"
#include "radmax/eccentricity.hpp"
#include "radmax/graph.hpp"
#include "support/oracle.hpp"

using radmax::Graph;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

} // namespace

TEST_CASE("vertex set basics") {
    radmax::VertexSet s;
    CHECK(s.none());
    CHECK(s.count() == 0);
    s.set(0);
    s.set(5);
    s.set(70); // second word
    CHECK(s.any());
    CHECK(s.count() == 3);
    CHECK(s.test(70));
    CHECK_FALSE(s.test(69));
    CHECK(s.to_vector() == std::vector<int>{0, 5, 70});

    radmax::VertexSet t;
    t.set(5);
    t.set(6);
    radmax::VertexSet u = s;
    u.subtract(t);
    CHECK(u.to_vector() == std::vector<int>{0, 70});
    u |= t;
    CHECK(u.count() == 4);
    u &= t;
    CHECK(u.to_vector() == std::vector<int>{5, 6});

    int sum = 0;
    s.for_each([&](int v) { sum += v; });
    CHECK(sum == 75);

    s.reset(70);
    CHECK_FALSE(s.test(70));
    s.clear();
    CHECK(s.none());
}

TEST_CASE("graph construction and validation") {
    CHECK_THROWS_AS(Graph(0), std::invalid_argument);
    CHECK_THROWS_AS(Graph(radmax::kOrderCap + 1), std::invalid_argument);
    CHECK_NOTHROW(Graph(1));
    CHECK_NOTHROW(Graph(radmax::kOrderCap));

    Graph g(4);
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 0);
    g.add_edge(0, 1);
    g.add_edge(3, 1); // order of endpoints is irrelevant
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(1, 0));
    CHECK(g.has_edge(1, 3));
    CHECK_FALSE(g.has_edge(0, 3));
    CHECK(g.degree(1) == 2);
    CHECK(g.neighbors(1).to_vector() == std::vector<int>{0, 3});

    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument); // self loop
    CHECK_THROWS_AS(g.add_edge(0, 1), std::invalid_argument); // duplicate
    CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument); // out of range
    CHECK_THROWS_AS(g.add_edge(-1, 2), std::invalid_argument);

    const Graph h = Graph::from_edges(4, {{0, 1}, {1, 3}});
    CHECK(h == g);
    const Graph h2 = g.plus_edge(0, 3);
    CHECK(h2.has_edge(0, 3));
    CHECK_FALSE(g.has_edge(0, 3)); // plus_edge copies
    CHECK_THROWS_AS(g.plus_edge(0, 1), std::invalid_argument);
}

TEST_CASE("edges, non-edges, complement") {
    const Graph g = Graph::from_edges(4, {{2, 0}, {0, 1}, {2, 3}});
    CHECK(g.edges() == std::vector<radmax::Edge>{{0, 1}, {0, 2}, {2, 3}});
    CHECK(g.non_edges() == std::vector<radmax::Edge>{{0, 3}, {1, 2}, {1, 3}});
    CHECK(g.edges().size() + g.non_edges().size() == 6);

    const Graph c = g.complement();
    CHECK(c.edges() == g.non_edges());
    CHECK(c.complement() == g);

    const Graph k1(1);
    CHECK(k1.is_complete());
    CHECK(cycle(3).is_complete());
    CHECK_FALSE(cycle(4).is_complete());
}

TEST_CASE("connectivity") {
    CHECK(Graph(1).is_connected());
    CHECK_FALSE(Graph(2).is_connected());
    CHECK(cycle(5).is_connected());
    const Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(two_k2.is_connected());
}

TEST_CASE("bfs distances on small named graphs") {
    const Graph p3 = path(3);
    CHECK(radmax::bfs_distances(p3, 0) == std::vector<int>{0, 1, 2});
    CHECK(radmax::bfs_distances(p3, 1) == std::vector<int>{1, 0, 1});

    const Graph c8 = cycle(8);
    const auto d = radmax::bfs_distances(c8, 0);
    CHECK(d == std::vector<int>{0, 1, 2, 3, 4, 3, 2, 1});

    const Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
    const auto dd = radmax::bfs_distances(two_k2, 0);
    CHECK(dd[1] == 1);
    CHECK(dd[2] == radmax::kUnreachable);
    CHECK(dd[3] == radmax::kUnreachable);
}

TEST_CASE("eccentricity profile on named graphs") {
    const auto c4 = radmax::eccentricity_profile(cycle(4));
    CHECK(c4.connected);
    CHECK(c4.radius == 2);
    CHECK(c4.diameter == 2);
    CHECK(c4.ecc == std::vector<int>{2, 2, 2, 2});
    CHECK(c4.center == std::vector<int>{0, 1, 2, 3});

    const auto p3 = radmax::eccentricity_profile(path(3));
    CHECK(p3.radius == 1);
    CHECK(p3.diameter == 2);
    CHECK(p3.center == std::vector<int>{1});

    const auto c8 = radmax::eccentricity_profile(cycle(8));
    CHECK(c8.radius == 4);
    CHECK(c8.diameter == 4);

    const auto k2 = radmax::eccentricity_profile(Graph::from_edges(2, {{0, 1}}));
    CHECK(k2.radius == 1);
    CHECK(k2.diameter == 1);

    const auto k1 = radmax::eccentricity_profile(Graph(1));
    CHECK(k1.radius == 0);
    CHECK(k1.diameter == 0);
    CHECK(k1.connected);

    const auto split = radmax::eccentricity_profile(Graph::from_edges(4, {{0, 1}, {2, 3}}));
    CHECK_FALSE(split.connected);
    CHECK(split.radius == radmax::kUnreachable);
    CHECK(split.center.empty());
    CHECK(split.ecc == std::vector<int>(4, radmax::kUnreachable));
}

TEST_CASE("eccentric vertices and self-centered predicate") {
    const Graph c4 = cycle(4);
    CHECK(radmax::eccentric_vertices(c4, 0) == std::vector<int>{2});
    CHECK(radmax::eccentric_vertices(c4, 1) == std::vector<int>{3});
    CHECK(radmax::is_self_centered(c4));

    const Graph p3 = path(3);
    CHECK(radmax::eccentric_vertices(p3, 1) == std::vector<int>{0, 2});
    CHECK_FALSE(radmax::is_self_centered(p3));

    const Graph split = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(radmax::eccentric_vertices(split, 0), std::invalid_argument);
    CHECK_THROWS_AS(radmax::is_self_centered(split), std::invalid_argument);
}

TEST_CASE("bfs agrees with Floyd-Warshall on random graphs") {
    std::mt19937 rng(991);
    for (int trial = 0; trial < 600; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const Graph g = oracle::random_graph(rng, n, 0.15 + 0.7 * (trial % 5) / 4.0);
        const auto dist = oracle::all_pairs(g);
        const auto ref = oracle::profile(g);
        const auto got = radmax::eccentricity_profile(g);
        CHECK(got.connected == ref.connected);
        for (int s = 0; s < n; ++s) {
            const auto d = radmax::bfs_distances(g, s);
            for (int t = 0; t < n; ++t) {
                const int want = dist[s][t] >= oracle::kInf ? radmax::kUnreachable : dist[s][t];
                REQUIRE(d[t] == want);
            }
        }
        if (ref.connected) {
            CHECK(got.radius == ref.radius);
            CHECK(got.diameter == ref.diameter);
            CHECK(got.ecc == ref.ecc);
        }
    }
}

TEST_CASE("large-order sanity: cycle of order 200") {
    const Graph c = cycle(200);
    const auto p = radmax::eccentricity_profile(c);
    CHECK(p.radius == 100);
    CHECK(p.diameter == 100);
    CHECK(c.is_connected());
}
