#include "radmax/maximality.hpp"

#include <algorithm>

#include "radmax/constructions.hpp"
#include "radmax/eccentricity.hpp"

namespace radmax {

namespace {

// True iff some vertex of g reaches every vertex within `limit` hops.
// Sources are tried in the order given; each BFS stops at depth `limit`.
bool some_ecc_at_most(const Graph& g, int limit, const std::vector<int>& source_order) {
    if (limit < 0) return false;
    const int n = g.order();
    for (int z : source_order) {
        VertexSet seen;
        seen.set(z);
        VertexSet frontier = seen;
        for (int depth = 0; depth < limit && frontier.any(); ++depth) {
            VertexSet next;
            frontier.for_each([&](int v) { next |= g.neighbors(v); });
            next.subtract(seen);
            seen |= next;
            frontier = next;
        }
        if (seen.count() == n) return true;
    }
    return false;
}

// Vertices sorted by ascending eccentricity (central first), id as tie-break.
// Central vertices are by far the most likely witnesses.
std::vector<int> by_eccentricity(const EccentricityProfile& p) {
    std::vector<int> order(p.ecc.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return p.ecc[static_cast<std::size_t>(a)] <
                                                p.ecc[static_cast<std::size_t>(b)]; });
    return order;
}

EccentricityProfile connected_profile(const Graph& g, const char* op) {
    auto p = eccentricity_profile(g);
    if (!p.connected)
        throw std::invalid_argument(std::string(op) +
                                    " requires a connected graph (radius is infinite)");
    return p;
}

} // namespace

bool is_radially_maximal(const Graph& g) {
    const auto p = connected_profile(g, "is_radially_maximal");
    if (g.is_complete()) return false;
    if (p.radius == 1) return false; // no edge addition can reach radius 0 on n >= 2
    const auto sources = by_eccentricity(p);
    for (auto [u, v] : g.non_edges())
        if (!some_ecc_at_most(g.plus_edge(u, v), p.radius - 1, sources)) return false;
    return true;
}

MaximalityCertificate certificate(const Graph& g) {
    const auto p = connected_profile(g, "certificate");
    if (g.is_complete())
        throw std::invalid_argument("certificate: complete graphs are not radially maximal");

    MaximalityCertificate cert;
    cert.radius = p.radius;
    for (auto [u, v] : g.non_edges()) {
        const Graph t = g.plus_edge(u, v);
        int witness = -1, new_ecc = 0;
        for (int z = 0; z < t.order(); ++z) {
            const auto dist = bfs_distances(t, z);
            const int e = *std::max_element(dist.begin(), dist.end());
            if (e < p.radius) {
                witness = z;
                new_ecc = e;
                break;
            }
        }
        if (witness < 0)
            throw NotRadiallyMaximalError(
                "adding non-edge {" + std::to_string(u) + "," + std::to_string(v) +
                    "} keeps the radius at " + std::to_string(p.radius),
                {u, v});
        cert.entries.push_back({{u, v}, witness, new_ecc});
    }
    return cert;
}

bool check_certificate(const Graph& g, const MaximalityCertificate& cert) {
    const auto p = eccentricity_profile(g);
    if (!p.connected || p.radius != cert.radius) return false;
    const auto non_edges = g.non_edges();
    if (cert.entries.size() != non_edges.size()) return false;
    for (std::size_t i = 0; i < non_edges.size(); ++i) {
        const auto& e = cert.entries[i];
        if (e.non_edge != non_edges[i]) return false;
        if (e.new_ecc >= cert.radius) return false;
        const Graph t = g.plus_edge(e.non_edge.first, e.non_edge.second);
        const auto dist = bfs_distances(t, e.witness);
        if (*std::max_element(dist.begin(), dist.end()) != e.new_ecc) return false;
    }
    return true;
}

HWitnessReport verify_H_witnesses(int r, int d) {
    const LabeledConstruction lc = build_H(r, d); // validates feasibility
    const Graph& h = lc.graph;
    const auto p = eccentricity_profile(h);

    const int m = 2 * r - 1;
    auto x = [&](int k) { return ((k - 1) % m + m) % m; };     // id of x_k, k mod 2r-1
    auto y = [&](int j) { return 2 * r - 2 + j; };             // id of y_j

    auto central = [&](int id) {
        return p.ecc[static_cast<std::size_t>(id)] == p.radius;
    };
    auto unique_eccentric = [&](int id, int target) {
        const auto ev = eccentric_vertices(h, id);
        return ev.size() == 1 && ev.front() == target;
    };

    HWitnessReport rep;
    rep.r = r;
    rep.d = d;
    rep.facts.push_back({"x(d-r+1) is central and e(y_r) = d",
                         central(x(d - r + 1)) &&
                             p.ecc[static_cast<std::size_t>(y(r))] == d && p.radius == r &&
                             p.diameter == d});
    rep.facts.push_back({"x(r) is central with unique eccentric vertex y(1)",
                         central(x(r)) && unique_eccentric(x(r), y(1))});
    rep.facts.push_back({"x(r-1) and x(r-2) are central with unique eccentric vertex y(2)",
                         central(x(r - 1)) && unique_eccentric(x(r - 1), y(2)) &&
                             central(x(r - 2)) && unique_eccentric(x(r - 2), y(2))});
    rep.facts.push_back({"x(r+1) and x(2d-3r+1) are central with unique eccentric vertex y(r)",
                         central(x(r + 1)) && unique_eccentric(x(r + 1), y(r)) &&
                             central(x(2 * d - 3 * r + 1)) &&
                             unique_eccentric(x(2 * d - 3 * r + 1), y(r))});
    bool never_eccentric = true;
    for (int v = 0; v < h.order() && never_eccentric; ++v) {
        const auto ev = eccentric_vertices(h, v);
        if (std::find(ev.begin(), ev.end(), x(2 * r - 2)) != ev.end()) never_eccentric = false;
    }
    rep.facts.push_back({"x(2r-2) is not an eccentric vertex of any vertex", never_eccentric});

    rep.all_pass = std::all_of(rep.facts.begin(), rep.facts.end(),
                               [](const HWitnessFact& f) { return f.pass; });
    return rep;
}

} // namespace radmax
