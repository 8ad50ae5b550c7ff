#ifndef RADMAX_SEARCH_HPP
#define RADMAX_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "radmax/graph.hpp"

namespace radmax {

/// Default enumeration order cap: 2^28 labeled graphs at n = 8.
inline constexpr int kDefaultSearchCap = 8;

/// Masks are 64-bit, so n(n-1)/2 <= 63 regardless of any cap override.
inline constexpr int kHardSearchCap = 11;

/// Upper-triangle bit index of pair u < v, column-major (graph6 bit order).
constexpr int pair_bit_index(int u, int v) { return v * (v - 1) / 2 + u; }

/// Visits every labeled simple graph on n vertices exactly once, in
/// increasing adjacency-mask order. Returns the number of graphs visited.
/// Throws when n exceeds the cap.
std::uint64_t enumerate_labeled(int n, const std::function<void(const Graph&)>& visit,
                                int order_cap = kDefaultSearchCap);

struct SearchOptions {
    int order_cap = kDefaultSearchCap;
    int shards = 1;      // number of mask-range shards per order
    int shard = -1;      // run only this shard if >= 0, else all of them
    int threads = 1;     // worker threads when running all shards
    int witness_cap = 8; // max stored witness examples per scan
};

struct OrderStats {
    int order = 0;
    std::uint64_t graphs = 0; // 2^{n(n-1)/2} over a full run
    std::uint64_t connected = 0;
    std::uint64_t radially_maximal = 0;
    std::uint64_t self_centered_radially_maximal = 0;
    std::map<int, std::uint64_t> non_self_centered_by_radius;
};

struct BoundViolation {
    std::string graph6;
    int radius = 0;
    int diameter = 0;
};

struct ConstructedWitness {
    std::string graph6;
    int order = 0;
    int radius = 0;
    int diameter = 0;
    bool verified = false; // passed is_radially_maximal
};

/// Mergeable enumeration outcome. Counts are exact and deterministic;
/// extremal examples are canonical-form samples capped per run.
struct SearchReport {
    std::vector<OrderStats> per_order;            // sorted by order
    std::vector<std::string> extremal_examples;   // canonical graph6, sorted
    std::vector<BoundViolation> violations;       // expected empty
    std::optional<ConstructedWitness> constructed_witness;

    int order_lo() const { return per_order.empty() ? 0 : per_order.front().order; }
    int order_hi() const { return per_order.empty() ? 0 : per_order.back().order; }

    /// Commutative merge: counts add per order, example/violation lists are
    /// concatenated then sorted and deduplicated.
    void merge(const SearchReport& other);
};

std::string to_json(const SearchReport& report, int indent = -1);

/// Decides radial maximality for every connected labeled graph on n vertices
/// and records any accepted graph whose diameter falls outside [r, 2r-2].
/// Extremal examples are the non-self-centered radially maximal graphs found.
SearchReport check_bound_all(int n, const SearchOptions& opts = {});

/// Counts non-self-centered radially maximal graphs of the given radius at
/// every order up to n_max, and attaches the verified order-(3r-1) witness
/// built from the (r, r+1) family. Requires r >= 3.
SearchReport min_order_nonselfcentered(int r, int n_max, const SearchOptions& opts = {});

/// Minimum adjacency mask over all vertex relabelings; n <= kHardSearchCap.
std::uint64_t canonical_mask(std::uint64_t mask, int n);

} // namespace radmax

#endif
