#ifndef RADMAX_MAXIMALITY_HPP
#define RADMAX_MAXIMALITY_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "radmax/graph.hpp"

namespace radmax {

/// One certificate entry: adding non_edge drops witness's eccentricity to
/// new_ecc, which is strictly below the input graph's radius.
struct CertificateEntry {
    Edge non_edge;
    int witness;
    int new_ecc;
};

/// Checkable witness list, one entry per non-edge of the input graph.
struct MaximalityCertificate {
    int radius = 0;
    std::vector<CertificateEntry> entries;
};

/// Thrown by certificate() when some non-edge keeps the radius.
class NotRadiallyMaximalError : public std::runtime_error {
public:
    NotRadiallyMaximalError(const std::string& what, Edge non_edge)
        : std::runtime_error(what), non_edge_(non_edge) {}
    Edge non_edge() const { return non_edge_; }

private:
    Edge non_edge_;
};

/// Non-complete and every added edge strictly decreases the radius.
/// Early-exits on the first non-edge that keeps the radius.
/// Throws std::invalid_argument on disconnected input (radius is infinite).
bool is_radially_maximal(const Graph& g);

/// Full per-non-edge witness scan; the witness is the minimum-id vertex whose
/// eccentricity in g+uv falls below radius(g). Throws NotRadiallyMaximalError
/// (naming the offending non-edge) if g is not radially maximal, and
/// std::invalid_argument on disconnected or complete input.
MaximalityCertificate certificate(const Graph& g);

/// Recomputes every entry from scratch; true iff all entries reproduce and
/// new_ecc < radius throughout, with exactly one entry per non-edge.
bool check_certificate(const Graph& g, const MaximalityCertificate& cert);

struct HWitnessFact {
    std::string name;
    bool pass = false;
};

struct HWitnessReport {
    int r = 0;
    int d = 0;
    std::vector<HWitnessFact> facts;
    bool all_pass = false;
};

/// Checks the named central-vertex and eccentric-vertex facts on H(r,d,3r-1):
/// the x_{d-r+1} / e(y_r) pair, the unique eccentric vertices of x_r, x_{r-1},
/// x_{r-2}, x_{r+1} and x_{2d-3r+1}, and that x_{2r-2} is nobody's eccentric
/// vertex. Subscripts are normalized modulo 2r-1 onto 1..2r-1.
HWitnessReport verify_H_witnesses(int r, int d);

} // namespace radmax

#endif
