#ifndef RADMAX_CONSTRUCTIONS_HPP
#define RADMAX_CONSTRUCTIONS_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "radmax/graph.hpp"

namespace radmax {

struct ConstructionParams {
    int radius = 0;
    int diameter = 0;
    int order = 0;
};

enum class Feasibility {
    kSelfCentered,       // d == r, r >= 2, n >= 2r
    kNonSelfCentered,    // r < d <= 2r-2, n >= 3r-1
    kInfeasible,         // d outside [r, 2r-2]: no such radially maximal graph
    kUnsupportedOrder,   // d admissible but n below the family's floor
};

struct Classification {
    Feasibility kind;
    std::string reason; // empty for feasible kinds
};

Classification classify(const ConstructionParams& p);

bool is_feasible(const Classification& c);

/// Thrown when a requested (r, d, n) triple is not buildable.
class InfeasibleError : public std::invalid_argument {
public:
    InfeasibleError(Feasibility kind, const std::string& reason)
        : std::invalid_argument(reason), kind_(kind) {}
    Feasibility kind() const { return kind_; }

private:
    Feasibility kind_;
};

/// A built graph together with the family's vertex names.
/// x_i maps to id i-1, y_j to id 2r-2+j; extension copies are appended in
/// creation order and named by priming the base vertex ("x4'", "x4''", ...).
struct LabeledConstruction {
    Graph graph;
    std::map<std::string, int> labels;

    int id_of(const std::string& name) const;
    std::vector<std::string> names_by_id() const;
};

/// G{v}: new vertex v' adjacent to v and to every neighbor of v.
/// Preserves every old eccentricity on connected graphs of order >= 2.
Graph extend(const Graph& g, int v);

/// Self-centered radially maximal family: C_{2r} followed by n-2r extensions
/// at the fixed cycle vertex x1. Requires r >= 2, n >= 2r.
LabeledConstruction build_self_centered(int r, int n);

/// The order-(3r-1) graph of radius r and diameter d: the odd cycle
/// x1..x_{2r-1} plus pendant y-vertices and one y-path. Requires r < d <= 2r-2.
LabeledConstruction build_H(int r, int d);

/// Radially maximal graph with exactly the requested radius, diameter, order;
/// dispatches to the self-centered family when d == r, otherwise grows H by
/// extensions at x_{2r-2}. Throws InfeasibleError otherwise.
LabeledConstruction build_radially_maximal(const ConstructionParams& p);

/// True iff v is not an eccentric vertex of any central vertex, the
/// precondition under which extension preserves radial maximality.
bool is_safe_extension_vertex(const Graph& g, int v);

} // namespace radmax

#endif
