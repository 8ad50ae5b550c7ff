#ifndef RADMAX_GRAPH_HPP
#define RADMAX_GRAPH_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "radmax/bitset.hpp"

namespace radmax {

using Edge = std::pair<int, int>;

/// Undirected simple graph on vertex ids 0..n-1, adjacency as bitset rows.
/// Adjacency stays symmetric and irreflexive; queries are const and safe to
/// share across threads.
class Graph {
public:
    /// Empty (edgeless) graph on n vertices. Throws if n < 1 or n > kOrderCap.
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int order() const { return n_; }
    std::size_t edge_count() const;

    bool has_edge(int u, int v) const;

    /// Inserts edge uv. Throws on out-of-range ids, self-loops and duplicates.
    void add_edge(int u, int v);

    /// Copy of this graph with one extra edge (same error conditions).
    Graph plus_edge(int u, int v) const;

    const VertexSet& neighbors(int v) const;
    int degree(int v) const { return neighbors(v).count(); }

    /// Edges as sorted (u,v) pairs with u < v.
    std::vector<Edge> edges() const;

    /// Absent pairs, i.e. the complement's edges, sorted with u < v.
    std::vector<Edge> non_edges() const;

    Graph complement() const;

    bool is_connected() const;
    bool is_complete() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const;

    int n_;
    std::vector<VertexSet> adj_;
};

} // namespace radmax

#endif
