#ifndef RADMAX_ECCENTRICITY_HPP
#define RADMAX_ECCENTRICITY_HPP

#include <limits>
#include <vector>

#include "radmax/graph.hpp"

namespace radmax {

/// Distance sentinel for unreachable vertices.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Hop distances from source to every vertex; kUnreachable where no path exists.
std::vector<int> bfs_distances(const Graph& g, int source);

/// Per-vertex eccentricities with the derived radius, diameter and center.
/// Disconnected graphs get kUnreachable everywhere and an empty center.
struct EccentricityProfile {
    std::vector<int> ecc;
    int radius = kUnreachable;
    int diameter = kUnreachable;
    std::vector<int> center; // sorted ids with ecc == radius
    bool connected = false;
};

EccentricityProfile eccentricity_profile(const Graph& g);

/// Vertices at distance e(v) from v, sorted. Throws on disconnected input.
std::vector<int> eccentric_vertices(const Graph& g, int v);

/// radius == diameter. Throws on disconnected input.
bool is_self_centered(const Graph& g);

} // namespace radmax

#endif
