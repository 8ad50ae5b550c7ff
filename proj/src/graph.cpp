#include "radmax/graph.hpp"

#include <stdexcept>
#include <string>

namespace radmax {

Graph::Graph(int n) : n_(n) {
    if (n < 1)
        throw std::invalid_argument("graph order must be at least 1, got " + std::to_string(n));
    if (n > kOrderCap)
        throw std::invalid_argument("graph order " + std::to_string(n) +
                                    " exceeds the configured cap " + std::to_string(kOrderCap));
    adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " +
                                    std::to_string(n_) + ")");
}

std::size_t Graph::edge_count() const {
    std::size_t deg_sum = 0;
    for (const auto& row : adj_) deg_sum += static_cast<std::size_t>(row.count());
    return deg_sum / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<std::size_t>(u)].test(v);
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u) + " rejected");
    if (adj_[static_cast<std::size_t>(u)].test(v))
        throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                    "} already present");
    adj_[static_cast<std::size_t>(u)].set(v);
    adj_[static_cast<std::size_t>(v)].set(u);
}

Graph Graph::plus_edge(int u, int v) const {
    Graph g = *this;
    g.add_edge(u, v);
    return g;
}

const VertexSet& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        adj_[static_cast<std::size_t>(u)].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

std::vector<Edge> Graph::non_edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!adj_[static_cast<std::size_t>(u)].test(v)) out.emplace_back(u, v);
    return out;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (auto [u, v] : non_edges()) g.add_edge(u, v);
    return g;
}

bool Graph::is_connected() const {
    VertexSet seen;
    seen.set(0);
    VertexSet frontier = seen;
    while (frontier.any()) {
        VertexSet next;
        frontier.for_each([&](int v) { next |= adj_[static_cast<std::size_t>(v)]; });
        next.subtract(seen);
        seen |= next;
        frontier = next;
    }
    return seen.count() == n_;
}

bool Graph::is_complete() const {
    return edge_count() == static_cast<std::size_t>(n_) * (n_ - 1) / 2;
}

} // namespace radmax
