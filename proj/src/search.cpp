#include "radmax/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "radmax/constructions.hpp"
#include "radmax/eccentricity.hpp"
#include "radmax/formats.hpp"
#include "radmax/maximality.hpp"

namespace radmax {

namespace {

// ---- mask <-> pair bookkeeping -------------------------------------------

struct PairTab {
    std::array<std::uint8_t, 64> u{}, v{};
};

constexpr PairTab make_pair_tab() {
    PairTab t{};
    int k = 0;
    for (int vv = 1; vv < 12 && k < 64; ++vv)
        for (int uu = 0; uu < vv && k < 64; ++uu, ++k) {
            t.u[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(uu);
            t.v[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(vv);
        }
    return t;
}

constexpr PairTab kPairs = make_pair_tab();

constexpr int mask_bits(int n) { return n * (n - 1) / 2; }

Graph graph_from_mask(std::uint64_t mask, int n) {
    Graph g(n);
    while (mask) {
        const int k = std::countr_zero(mask);
        mask &= mask - 1;
        g.add_edge(kPairs.u[static_cast<std::size_t>(k)], kPairs.v[static_cast<std::size_t>(k)]);
    }
    return g;
}

// ---- cheap connectivity filter straight off the edge mask ----------------

inline int dsu_find(std::int8_t* p, int x) {
    while (p[x] != x) {
        p[x] = p[p[x]];
        x = p[x];
    }
    return x;
}

inline bool mask_connected(std::uint64_t mask, int n) {
    if (n <= 1) return true;
    std::int8_t p[12];
    for (int i = 0; i < n; ++i) p[i] = static_cast<std::int8_t>(i);
    int comps = n;
    while (mask) {
        const int k = std::countr_zero(mask);
        mask &= mask - 1;
        const int ru = dsu_find(p, kPairs.u[static_cast<std::size_t>(k)]);
        const int rv = dsu_find(p, kPairs.v[static_cast<std::size_t>(k)]);
        if (ru != rv) {
            p[ru] = static_cast<std::int8_t>(rv);
            --comps;
        }
    }
    return comps == 1;
}

// ---- packed 8x8 boolean-matrix kernel (n <= 8) ---------------------------
//
// The adjacency matrix lives in one 64-bit word, row i in byte i. Reachability
// closures for all vertices advance simultaneously: one step ORs N(j) into
// every row that already contains j, so eccentricities come out in at most
// diameter steps of word-parallel arithmetic.

constexpr std::uint64_t kLsbBytes = 0x0101010101010101ull;
constexpr std::uint64_t kLow7Bytes = 0x7f7f7f7f7f7f7f7full;
constexpr std::uint64_t kMsbBytes = 0x8080808080808080ull;

inline std::uint64_t packed_add_pair(std::uint64_t a, int u, int v) {
    return a | (1ull << (8 * u + v)) | (1ull << (8 * v + u));
}

inline std::uint64_t closure_step(std::uint64_t r, std::uint64_t a, int n) {
    std::uint64_t out = r;
    for (int j = 0; j < n; ++j) {
        const std::uint64_t rows_with_j = (r >> j) & kLsbBytes;
        out |= (rows_with_j * 0xffull) & (((a >> (8 * j)) & 0xffull) * kLsbBytes);
    }
    return out;
}

// 0x80 in every byte whose row equals the full vertex set; rows >= n never match
inline std::uint64_t full_rows(std::uint64_t r, std::uint64_t full_bcast) {
    const std::uint64_t x = r ^ full_bcast; // zero byte == full row
    const std::uint64_t t = ((x & kLow7Bytes) + kLow7Bytes) | x;
    return ~(t | kLow7Bytes) & kMsbBytes;
}

struct PackedGeometry {
    int n = 0;
    std::uint64_t diag = 0;       // bit i of byte i
    std::uint64_t full_bcast = 0; // the full row value replicated in every byte
    std::uint64_t target = 0;     // full_rows() value when all n rows are full
};

PackedGeometry packed_geometry(int n) {
    PackedGeometry g;
    g.n = n;
    for (int i = 0; i < n; ++i) g.diag |= 1ull << (9 * i);
    const std::uint64_t full = (n == 64 / 8 ? 0xffull : (1ull << n) - 1);
    g.full_bcast = full * kLsbBytes;
    const std::uint64_t row_mask = (n == 8) ? ~0ull : ((1ull << (8 * n)) - 1);
    g.target = kMsbBytes & row_mask;
    return g;
}

// eccentricities of every vertex; returns false when disconnected
inline bool packed_eccentricities(std::uint64_t a, const PackedGeometry& geo, int ecc[8]) {
    const int n = geo.n;
    if (n == 1) {
        ecc[0] = 0;
        return true;
    }
    std::uint64_t r = geo.diag | a;
    std::uint64_t done = full_rows(r, geo.full_bcast);
    int k = 1;
    std::uint64_t fresh = done;
    while (true) {
        std::uint64_t f = fresh;
        while (f) {
            const int row = std::countr_zero(f) / 8;
            f &= f - 1;
            ecc[row] = k;
        }
        if (done == geo.target || k >= n) break;
        r = closure_step(r, a, n);
        ++k;
        fresh = full_rows(r, geo.full_bcast) & ~done;
        done |= fresh;
    }
    return done == geo.target;
}

// true iff some vertex reaches everything within `limit` hops
inline bool packed_radius_at_most(std::uint64_t a, const PackedGeometry& geo, int limit) {
    if (limit <= 0) return geo.n == 1;
    std::uint64_t r = geo.diag | a;
    if (full_rows(r, geo.full_bcast)) return true;
    for (int k = 2; k <= limit; ++k) {
        r = closure_step(r, a, geo.n);
        if (full_rows(r, geo.full_bcast)) return true;
    }
    return false;
}

// ---- mask -> packed adjacency via two table lookups ----------------------

struct UnpackTables {
    int lo_bits = 0;
    std::vector<std::uint64_t> lo, hi;
};

UnpackTables build_unpack_tables(int n) {
    const int bits = mask_bits(n);
    UnpackTables t;
    t.lo_bits = std::min(bits, 14);
    const int hi_bits = bits - t.lo_bits;
    t.lo.resize(1ull << t.lo_bits);
    t.hi.resize(1ull << hi_bits);
    auto fill = [](std::vector<std::uint64_t>& tab, int offset) {
        tab[0] = 0;
        for (std::size_t m = 1; m < tab.size(); ++m) {
            const int k = std::countr_zero(m) + offset;
            tab[m] = tab[m & (m - 1)] |
                     packed_add_pair(0, kPairs.u[static_cast<std::size_t>(k)],
                                     kPairs.v[static_cast<std::size_t>(k)]);
        }
    };
    fill(t.lo, 0);
    fill(t.hi, t.lo_bits);
    return t;
}

// ---- one shard of one order ----------------------------------------------

struct ShardScan {
    OrderStats stats;
    std::vector<std::uint64_t> witness_masks; // capped
    std::vector<BoundViolation> violations;
};

void record_accepted(ShardScan& out, std::uint64_t mask, int n, int r, int d,
                     int witness_radius, int witness_cap) {
    ++out.stats.radially_maximal;
    if (r == d) {
        ++out.stats.self_centered_radially_maximal;
    } else {
        ++out.stats.non_self_centered_by_radius[r];
    }
    if (!(r <= d && d <= 2 * r - 2))
        out.violations.push_back({to_graph6(graph_from_mask(mask, n)), r, d});
    const bool wanted = (witness_radius < 0) ? (r != d) : (r != d && r == witness_radius);
    if (wanted && static_cast<int>(out.witness_masks.size()) < witness_cap)
        out.witness_masks.push_back(mask);
}

// fast path: packed kernel, n <= 8
ShardScan scan_masks_fast(int n, std::uint64_t lo, std::uint64_t hi, int witness_radius,
                          int witness_cap, const UnpackTables& tabs) {
    ShardScan out;
    out.stats.order = n;
    const PackedGeometry geo = packed_geometry(n);
    const int bits = mask_bits(n);
    const std::uint64_t full_mask = (bits == 0) ? 0 : ((bits == 64) ? ~0ull : (1ull << bits) - 1);
    const std::uint64_t lo_mask = (1ull << tabs.lo_bits) - 1;

    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        ++out.stats.graphs;
        if (!mask_connected(mask, n)) continue;
        ++out.stats.connected;
        if (mask == full_mask) continue; // complete, not radially maximal
        const std::uint64_t a = tabs.lo[mask & lo_mask] | tabs.hi[mask >> tabs.lo_bits];
        int ecc[8];
        const bool connected = packed_eccentricities(a, geo, ecc);
        assert(connected);
        (void)connected;
        int r = ecc[0], d = ecc[0];
        for (int i = 1; i < n; ++i) {
            r = std::min(r, ecc[i]);
            d = std::max(d, ecc[i]);
        }
        if (r == 1) continue; // adding an edge cannot push the radius below 1
        bool accepted = true;
        std::uint64_t absent = full_mask & ~mask;
        while (absent) {
            const int k = std::countr_zero(absent);
            absent &= absent - 1;
            const std::uint64_t a2 = packed_add_pair(a, kPairs.u[static_cast<std::size_t>(k)],
                                                     kPairs.v[static_cast<std::size_t>(k)]);
            if (!packed_radius_at_most(a2, geo, r - 1)) {
                accepted = false;
                break;
            }
        }
        if (accepted) record_accepted(out, mask, n, r, d, witness_radius, witness_cap);
    }
    return out;
}

// generic fallback for cap overrides beyond 8 vertices
ShardScan scan_masks_generic(int n, std::uint64_t lo, std::uint64_t hi, int witness_radius,
                             int witness_cap) {
    ShardScan out;
    out.stats.order = n;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        ++out.stats.graphs;
        if (!mask_connected(mask, n)) continue;
        ++out.stats.connected;
        const Graph g = graph_from_mask(mask, n);
        if (g.is_complete()) continue;
        if (!is_radially_maximal(g)) continue;
        const auto p = eccentricity_profile(g);
        record_accepted(out, mask, n, p.radius, p.diameter, witness_radius, witness_cap);
    }
    return out;
}

void merge_shard(ShardScan& into, ShardScan&& from, int witness_cap) {
    assert(into.stats.order == from.stats.order);
    into.stats.graphs += from.stats.graphs;
    into.stats.connected += from.stats.connected;
    into.stats.radially_maximal += from.stats.radially_maximal;
    into.stats.self_centered_radially_maximal += from.stats.self_centered_radially_maximal;
    for (const auto& [radius, count] : from.stats.non_self_centered_by_radius)
        into.stats.non_self_centered_by_radius[radius] += count;
    for (std::uint64_t m : from.witness_masks)
        if (static_cast<int>(into.witness_masks.size()) < witness_cap)
            into.witness_masks.push_back(m);
    into.violations.insert(into.violations.end(), from.violations.begin(), from.violations.end());
}

int check_order_cap(int n, int order_cap) {
    const int cap = std::min(order_cap > 0 ? order_cap : kDefaultSearchCap, kHardSearchCap);
    if (n < 1) throw std::invalid_argument("search order must be at least 1");
    if (n > cap)
        throw std::invalid_argument("order " + std::to_string(n) +
                                    " above the enumeration cap " + std::to_string(cap));
    return cap;
}

ShardScan scan_order(int n, int witness_radius, const SearchOptions& opts) {
    check_order_cap(n, opts.order_cap);
    const std::uint64_t total = 1ull << mask_bits(n);
    const int shards = std::max(1, opts.shards);
    auto shard_range = [&](int i) {
        const std::uint64_t lo = total / shards * i + std::min<std::uint64_t>(i, total % shards);
        const std::uint64_t len = total / shards + (static_cast<std::uint64_t>(i) < total % shards);
        return std::pair<std::uint64_t, std::uint64_t>{lo, lo + len};
    };
    UnpackTables tabs;
    if (n <= 8) tabs = build_unpack_tables(n);
    auto run_range = [&](std::uint64_t lo, std::uint64_t hi) {
        return n <= 8 ? scan_masks_fast(n, lo, hi, witness_radius, opts.witness_cap, tabs)
                      : scan_masks_generic(n, lo, hi, witness_radius, opts.witness_cap);
    };

    if (opts.shard >= 0) {
        if (opts.shard >= shards)
            throw std::invalid_argument("shard index " + std::to_string(opts.shard) +
                                        " out of range [0, " + std::to_string(shards) + ")");
        const auto [lo, hi] = shard_range(opts.shard);
        return run_range(lo, hi);
    }

    const int threads = std::clamp(opts.threads, 1, shards);
    std::vector<ShardScan> results(static_cast<std::size_t>(shards));
    if (threads == 1) {
        for (int i = 0; i < shards; ++i) {
            const auto [lo, hi] = shard_range(i);
            results[static_cast<std::size_t>(i)] = run_range(lo, hi);
        }
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < shards; i = next.fetch_add(1)) {
                    const auto [lo, hi] = shard_range(i);
                    results[static_cast<std::size_t>(i)] = run_range(lo, hi);
                }
            });
        for (auto& th : pool) th.join();
    }
    // deterministic merge in shard order regardless of scheduling
    ShardScan merged;
    merged.stats.order = n;
    for (auto& r : results) merge_shard(merged, std::move(r), opts.witness_cap);
    return merged;
}

SearchReport report_from_scans(std::vector<ShardScan>&& scans, int witness_cap) {
    SearchReport rep;
    std::set<std::string> canon;
    for (auto& s : scans) {
        for (std::uint64_t mask : s.witness_masks)
            canon.insert(to_graph6(graph_from_mask(canonical_mask(mask, s.stats.order),
                                                   s.stats.order)));
        for (auto& v : s.violations) rep.violations.push_back(std::move(v));
        rep.per_order.push_back(std::move(s.stats));
    }
    rep.extremal_examples.assign(canon.begin(), canon.end());
    if (static_cast<int>(rep.extremal_examples.size()) > witness_cap)
        rep.extremal_examples.resize(static_cast<std::size_t>(witness_cap));
    std::sort(rep.per_order.begin(), rep.per_order.end(),
              [](const OrderStats& a, const OrderStats& b) { return a.order < b.order; });
    std::sort(rep.violations.begin(), rep.violations.end(),
              [](const BoundViolation& a, const BoundViolation& b) {
                  return a.graph6 < b.graph6;
              });
    return rep;
}

} // namespace

std::uint64_t enumerate_labeled(int n, const std::function<void(const Graph&)>& visit,
                                int order_cap) {
    check_order_cap(n, order_cap);
    const std::uint64_t total = 1ull << mask_bits(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) visit(graph_from_mask(mask, n));
    return total;
}

std::uint64_t canonical_mask(std::uint64_t mask, int n) {
    if (n < 1 || n > kHardSearchCap)
        throw std::invalid_argument("canonical_mask supports 1 <= n <= " +
                                    std::to_string(kHardSearchCap));
    std::array<int, 11> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    std::uint64_t best = ~0ull;
    do {
        std::uint64_t relabeled = 0;
        std::uint64_t rest = mask;
        while (rest) {
            const int k = std::countr_zero(rest);
            rest &= rest - 1;
            const int pu = perm[kPairs.u[static_cast<std::size_t>(k)]];
            const int pv = perm[kPairs.v[static_cast<std::size_t>(k)]];
            relabeled |= 1ull << pair_bit_index(std::min(pu, pv), std::max(pu, pv));
        }
        best = std::min(best, relabeled);
    } while (std::next_permutation(perm.begin(), perm.begin() + n));
    return best;
}

void SearchReport::merge(const SearchReport& other) {
    for (const auto& stats : other.per_order) {
        auto it = std::find_if(per_order.begin(), per_order.end(),
                               [&](const OrderStats& s) { return s.order == stats.order; });
        if (it == per_order.end()) {
            per_order.push_back(stats);
            continue;
        }
        it->graphs += stats.graphs;
        it->connected += stats.connected;
        it->radially_maximal += stats.radially_maximal;
        it->self_centered_radially_maximal += stats.self_centered_radially_maximal;
        for (const auto& [radius, count] : stats.non_self_centered_by_radius)
            it->non_self_centered_by_radius[radius] += count;
    }
    std::sort(per_order.begin(), per_order.end(),
              [](const OrderStats& a, const OrderStats& b) { return a.order < b.order; });

    extremal_examples.insert(extremal_examples.end(), other.extremal_examples.begin(),
                             other.extremal_examples.end());
    std::sort(extremal_examples.begin(), extremal_examples.end());
    extremal_examples.erase(std::unique(extremal_examples.begin(), extremal_examples.end()),
                            extremal_examples.end());

    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    std::sort(violations.begin(), violations.end(),
              [](const BoundViolation& a, const BoundViolation& b) { return a.graph6 < b.graph6; });

    if (!constructed_witness && other.constructed_witness)
        constructed_witness = other.constructed_witness;
}

std::string to_json(const SearchReport& report, int indent) {
    nlohmann::json j;
    j["order_range"] = {report.order_lo(), report.order_hi()};
    j["per_order"] = nlohmann::json::array();
    for (const auto& s : report.per_order) {
        nlohmann::json by_radius = nlohmann::json::object();
        for (const auto& [radius, count] : s.non_self_centered_by_radius)
            by_radius[std::to_string(radius)] = count;
        j["per_order"].push_back({{"order", s.order},
                                  {"graphs", s.graphs},
                                  {"connected", s.connected},
                                  {"radially_maximal", s.radially_maximal},
                                  {"self_centered_radially_maximal",
                                   s.self_centered_radially_maximal},
                                  {"non_self_centered_by_radius", by_radius}});
    }
    j["extremal_examples"] = report.extremal_examples;
    j["violations"] = nlohmann::json::array();
    for (const auto& v : report.violations)
        j["violations"].push_back(
            {{"graph6", v.graph6}, {"radius", v.radius}, {"diameter", v.diameter}});
    if (report.constructed_witness) {
        const auto& w = *report.constructed_witness;
        j["constructed_witness"] = {{"graph6", w.graph6},
                                    {"order", w.order},
                                    {"radius", w.radius},
                                    {"diameter", w.diameter},
                                    {"verified", w.verified}};
    }
    return indent >= 0 ? j.dump(indent) : j.dump();
}

SearchReport check_bound_all(int n, const SearchOptions& opts) {
    std::vector<ShardScan> scans;
    scans.push_back(scan_order(n, -1, opts));
    return report_from_scans(std::move(scans), opts.witness_cap);
}

SearchReport min_order_nonselfcentered(int r, int n_max, const SearchOptions& opts) {
    if (r < 3)
        throw std::invalid_argument(
            "non-self-centered radially maximal graphs require radius >= 3, got " +
            std::to_string(r));
    check_order_cap(n_max, opts.order_cap);
    std::vector<ShardScan> scans;
    for (int n = 1; n <= n_max; ++n) scans.push_back(scan_order(n, r, opts));
    SearchReport rep = report_from_scans(std::move(scans), opts.witness_cap);

    // the order floor 3r-1, as a concrete verified example
    if (r <= 16) {
        const LabeledConstruction lc = build_H(r, r + 1);
        const auto p = eccentricity_profile(lc.graph);
        rep.constructed_witness = ConstructedWitness{to_graph6(lc.graph), lc.graph.order(),
                                                     p.radius, p.diameter,
                                                     is_radially_maximal(lc.graph)};
    }
    return rep;
}

} // namespace radmax
