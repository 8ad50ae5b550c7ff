#include "radmax/eccentricity.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace radmax {

std::vector<int> bfs_distances(const Graph& g, int source) {
    const int n = g.order();
    if (source < 0 || source >= n)
        throw std::invalid_argument("bfs source " + std::to_string(source) + " out of range");
    std::vector<int> dist(static_cast<std::size_t>(n), kUnreachable);
    dist[static_cast<std::size_t>(source)] = 0;
    VertexSet seen;
    seen.set(source);
    VertexSet frontier = seen;
    int level = 0;
    while (frontier.any()) {
        VertexSet next;
        frontier.for_each([&](int v) { next |= g.neighbors(v); });
        next.subtract(seen);
        ++level;
        next.for_each([&](int v) { dist[static_cast<std::size_t>(v)] = level; });
        seen |= next;
        frontier = next;
    }
    return dist;
}

EccentricityProfile eccentricity_profile(const Graph& g) {
    const int n = g.order();
    EccentricityProfile p;
    p.ecc.resize(static_cast<std::size_t>(n), kUnreachable);
    p.connected = g.is_connected();
    if (!p.connected) return p; // every eccentricity is infinite
    p.radius = kUnreachable;
    p.diameter = 0;
    for (int v = 0; v < n; ++v) {
        const auto dist = bfs_distances(g, v);
        const int e = *std::max_element(dist.begin(), dist.end());
        p.ecc[static_cast<std::size_t>(v)] = e;
        p.radius = std::min(p.radius, e);
        p.diameter = std::max(p.diameter, e);
    }
    for (int v = 0; v < n; ++v)
        if (p.ecc[static_cast<std::size_t>(v)] == p.radius) p.center.push_back(v);
    return p;
}

std::vector<int> eccentric_vertices(const Graph& g, int v) {
    if (!g.is_connected())
        throw std::invalid_argument("eccentric_vertices requires a connected graph");
    const auto dist = bfs_distances(g, v);
    const int e = *std::max_element(dist.begin(), dist.end());
    std::vector<int> out;
    for (int u = 0; u < g.order(); ++u)
        if (dist[static_cast<std::size_t>(u)] == e) out.push_back(u);
    return out;
}

bool is_self_centered(const Graph& g) {
    const auto p = eccentricity_profile(g);
    if (!p.connected)
        throw std::invalid_argument("is_self_centered requires a connected graph");
    return p.radius == p.diameter;
}

} // namespace radmax
