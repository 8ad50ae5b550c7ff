#include "radmax/constructions.hpp"

#include <cassert>

#include "radmax/eccentricity.hpp"

namespace radmax {

namespace {

std::string fmt_params(const ConstructionParams& p) {
    return "(r=" + std::to_string(p.radius) + ", d=" + std::to_string(p.diameter) +
           ", n=" + std::to_string(p.order) + ")";
}

[[noreturn]] void reject(const Classification& c) { throw InfeasibleError(c.kind, c.reason); }

} // namespace

Classification classify(const ConstructionParams& p) {
    const int r = p.radius, d = p.diameter, n = p.order;
    if (r < 1 || d < 1 || n < 1)
        return {Feasibility::kInfeasible,
                fmt_params(p) + ": radius, diameter and order must be positive"};
    if (d < r)
        return {Feasibility::kInfeasible,
                fmt_params(p) + ": d < r is impossible for any graph (r <= d)"};
    if (d > 2 * r - 2)
        return {Feasibility::kInfeasible,
                fmt_params(p) + ": d = " + std::to_string(d) + " violates d <= 2r-2 = " +
                    std::to_string(2 * r - 2) +
                    "; no radially maximal graph has diameter above 2r-2"};
    // now r <= d <= 2r-2, which forces r >= 2, and r >= 3 when d > r
    if (d == r) {
        if (n < 2 * r)
            return {Feasibility::kUnsupportedOrder,
                    fmt_params(p) + ": order below the self-centered floor 2r = " +
                        std::to_string(2 * r)};
        return {Feasibility::kSelfCentered, ""};
    }
    if (n < 3 * r - 1)
        return {Feasibility::kUnsupportedOrder,
                fmt_params(p) + ": order below the non-self-centered floor 3r-1 = " +
                    std::to_string(3 * r - 1)};
    return {Feasibility::kNonSelfCentered, ""};
}

bool is_feasible(const Classification& c) {
    return c.kind == Feasibility::kSelfCentered || c.kind == Feasibility::kNonSelfCentered;
}

int LabeledConstruction::id_of(const std::string& name) const {
    const auto it = labels.find(name);
    if (it == labels.end()) throw std::invalid_argument("no vertex labeled '" + name + "'");
    return it->second;
}

std::vector<std::string> LabeledConstruction::names_by_id() const {
    std::vector<std::string> out(static_cast<std::size_t>(graph.order()));
    for (const auto& [name, id] : labels) out[static_cast<std::size_t>(id)] = name;
    return out;
}

Graph extend(const Graph& g, int v) {
    const int n = g.order();
    if (v < 0 || v >= n)
        throw std::invalid_argument("extend: vertex " + std::to_string(v) + " out of range");
    Graph out(n + 1);
    for (auto [a, b] : g.edges()) out.add_edge(a, b);
    out.add_edge(v, n);
    g.neighbors(v).for_each([&](int u) { out.add_edge(u, n); });
    return out;
}

namespace {

// appends one extension at base_id and records the primed label
void extend_labeled(LabeledConstruction& lc, int base_id, const std::string& base_name,
                    int copy_index) {
    lc.graph = extend(lc.graph, base_id);
    lc.labels[base_name + std::string(static_cast<std::size_t>(copy_index), '\'')] =
        lc.graph.order() - 1;
}

} // namespace

LabeledConstruction build_self_centered(int r, int n) {
    const Classification c = classify({r, r, n});
    if (c.kind != Feasibility::kSelfCentered) reject(c);

    LabeledConstruction lc{Graph(2 * r), {}};
    for (int i = 0; i < 2 * r; ++i) {
        lc.graph.add_edge(i, (i + 1) % (2 * r));
        lc.labels["x" + std::to_string(i + 1)] = i;
    }
    for (int k = 1; k <= n - 2 * r; ++k) extend_labeled(lc, 0, "x1", k);
    return lc;
}

LabeledConstruction build_H(int r, int d) {
    const Classification c = classify({r, d, 3 * r - 1});
    if (c.kind == Feasibility::kSelfCentered)
        throw InfeasibleError(Feasibility::kInfeasible,
                              fmt_params({r, d, 3 * r - 1}) +
                                  ": the y-vertex family needs d > r; self-centered targets "
                                  "use the even-cycle builder");
    if (c.kind != Feasibility::kNonSelfCentered) reject(c);

    const int m = 2 * r - 1; // odd cycle length
    auto x = [&](int i) {
        // x_{2r} == x_1; all other subscripts are already in 1..2r-1
        const int norm = (i - 1) % m + 1;
        assert(norm == i || i == 2 * r);
        return norm - 1;
    };
    auto y = [&](int j) {
        assert(1 <= j && j <= r);
        return 2 * r - 2 + j;
    };

    LabeledConstruction lc{Graph(3 * r - 1), {}};
    for (int i = 1; i <= m; ++i) lc.labels["x" + std::to_string(i)] = i - 1;
    for (int j = 1; j <= r; ++j) lc.labels["y" + std::to_string(j)] = y(j);

    for (int i = 1; i <= m; ++i) lc.graph.add_edge(x(i), x(i + 1));
    lc.graph.add_edge(x(2 * r - 1), y(1));
    for (int j = 1; j <= 2 * r - d; ++j) lc.graph.add_edge(x(2 * r - 2 * j + 2), y(j));
    lc.graph.add_edge(x(d - r + 1), y(2 * r - d + 1));
    if (d >= r + 2)
        for (int t = 2 * r - d + 1; t <= r - 1; ++t) lc.graph.add_edge(y(t), y(t + 1));
    return lc;
}

LabeledConstruction build_radially_maximal(const ConstructionParams& p) {
    const Classification c = classify(p);
    if (!is_feasible(c)) reject(c);
    if (c.kind == Feasibility::kSelfCentered) return build_self_centered(p.radius, p.order);

    LabeledConstruction lc = build_H(p.radius, p.diameter);
    const std::string base = "x" + std::to_string(2 * p.radius - 2);
    const int base_id = lc.id_of(base);
    for (int k = 1; k <= p.order - (3 * p.radius - 1); ++k)
        extend_labeled(lc, base_id, base, k);
    return lc;
}

bool is_safe_extension_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order())
        throw std::invalid_argument("is_safe_extension_vertex: vertex out of range");
    const auto p = eccentricity_profile(g);
    if (!p.connected)
        throw std::invalid_argument("is_safe_extension_vertex requires a connected graph");
    for (int c : p.center) {
        const auto dist = bfs_distances(g, c);
        if (dist[static_cast<std::size_t>(v)] == p.ecc[static_cast<std::size_t>(c)])
            return false; // v is an eccentric vertex of the central vertex c
    }
    return true;
}

} // namespace radmax
