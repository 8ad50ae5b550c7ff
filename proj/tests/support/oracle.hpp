#ifndef RADMAX_TESTS_SUPPORT_ORACLE_HPP
#define RADMAX_TESTS_SUPPORT_ORACLE_HPP

// Independent reference implementations for cross-checking the library.
// Everything here goes through Graph::has_edge only and shares no code with
// the BFS, encoding, or enumeration paths under test.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "radmax/graph.hpp"

namespace oracle {

inline constexpr int kInf = 1 << 24; // addition-safe infinity

// all-pairs shortest paths, Floyd-Warshall
inline std::vector<std::vector<int>> all_pairs(const radmax::Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, kInf));
    for (int i = 0; i < n; ++i) dist[i][i] = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) dist[u][v] = dist[v][u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
    return dist;
}

struct Profile {
    std::vector<int> ecc;
    int radius = kInf;
    int diameter = 0;
    bool connected = true;
};

inline Profile profile(const radmax::Graph& g) {
    const auto dist = all_pairs(g);
    const int n = g.order();
    Profile p;
    p.ecc.resize(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (dist[i][j] >= kInf) p.connected = false;
            p.ecc[i] = std::max(p.ecc[i], dist[i][j]);
        }
        p.radius = std::min(p.radius, p.ecc[i]);
        p.diameter = std::max(p.diameter, p.ecc[i]);
    }
    return p;
}

inline bool radially_maximal(const radmax::Graph& g) {
    const int n = g.order();
    if (g.edge_count() == n * (n - 1) / 2) return false;
    const Profile base = profile(g);
    if (!base.connected) return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            if (profile(g.plus_edge(u, v)).radius >= base.radius) return false;
        }
    return true;
}

// graph6 writer transcribed straight from the format definition
inline std::string graph6(const radmax::Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(63 + n);
    } else {
        out += '~';
        out += static_cast<char>(63 + ((n >> 12) & 63));
        out += static_cast<char>(63 + ((n >> 6) & 63));
        out += static_cast<char>(63 + (n & 63));
    }
    std::vector<int> bits;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) bits.push_back(g.has_edge(u, v) ? 1 : 0);
    while (bits.size() % 6 != 0) bits.push_back(0);
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int value = 0;
        for (std::size_t j = 0; j < 6; ++j) value = value * 2 + bits[i + j];
        out += static_cast<char>(63 + value);
    }
    return out;
}

// single-source distances by iterated edge relaxation (Bellman-Ford style),
// deliberately sharing nothing with the library's BFS
inline std::vector<int> relaxed_distances(const radmax::Graph& g, int src) {
    const int n = g.order();
    std::vector<int> dist(n, kInf);
    dist[src] = 0;
    for (int round = 0; round < n; ++round) {
        bool changed = false;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (!g.has_edge(u, v)) continue;
                if (dist[u] + 1 < dist[v]) {
                    dist[v] = dist[u] + 1;
                    changed = true;
                }
                if (dist[v] + 1 < dist[u]) {
                    dist[u] = dist[v] + 1;
                    changed = true;
                }
            }
        if (!changed) break;
    }
    return dist;
}

// uniform random graph, possibly disconnected
inline radmax::Graph random_graph(std::mt19937& rng, int n, double p = 0.5) {
    radmax::Graph g(n);
    std::bernoulli_distribution flip(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng)) g.add_edge(u, v);
    return g;
}

// random recursive tree plus a sprinkle of extra edges, always connected
inline radmax::Graph random_connected(std::mt19937& rng, int n) {
    radmax::Graph g(n);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        g.add_edge(pick(rng), v);
    }
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double extra = unit(rng) * 0.6;
    std::bernoulli_distribution flip(extra);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && flip(rng)) g.add_edge(u, v);
    return g;
}

} // namespace oracle

#endif
