#include "ramsey/graph.hpp"

#include <stdexcept>
#include <string>

namespace ramsey {

namespace {

void check_order(int n)
{
    if (n < 1 || n > kMaxVertices) {
        throw std::invalid_argument("graph order must be in 1..64, got " + std::to_string(n));
    }
}

void check_vertex(const Graph& g, int v)
{
    if (v < 0 || v >= g.order()) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " +
                                    std::to_string(g.order()));
    }
}

} // namespace

std::vector<int> mask_to_vertices(VertexMask m)
{
    std::vector<int> out;
    out.reserve(popcount(m));
    for_each_vertex(m, [&](int v) { out.push_back(v); });
    return out;
}

VertexMask vertices_to_mask(std::span<const int> vertices, int n)
{
    VertexMask m = 0;
    for (int v : vertices) {
        if (v < 0 || v >= n) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
        }
        m |= bit(v);
    }
    return m;
}

Graph::Graph(int n) : n_(n)
{
    check_order(n);
}

Graph Graph::from_masks(int n, std::span<const VertexMask> adj)
{
    check_order(n);
    if (adj.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("expected one neighbor mask per vertex");
    }
    Graph g(n);
    const VertexMask all = low_mask(n);
    for (int u = 0; u < n; ++u) {
        if (adj[u] & ~all) {
            throw std::invalid_argument("neighbor index out of range at vertex " + std::to_string(u));
        }
        if (adj[u] & bit(u)) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        }
        g.adj_[u] = adj[u];
    }
    for (int u = 0; u < n; ++u) {
        for_each_vertex(adj[u], [&](int v) {
            if (!(adj[v] & bit(u))) {
                throw std::invalid_argument("asymmetric adjacency between " + std::to_string(u) +
                                            " and " + std::to_string(v));
            }
        });
    }
    return g;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges)
{
    check_order(n);
    std::vector<VertexMask> adj(n, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
            throw std::invalid_argument("invalid edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        }
        adj[u] |= bit(v);
        adj[v] |= bit(u);
    }
    return from_masks(n, adj);
}

int Graph::edge_count() const noexcept
{
    int twice = 0;
    for (int v = 0; v < n_; ++v) {
        twice += popcount(adj_[v]);
    }
    return twice / 2;
}

std::vector<int> Graph::degree_sequence() const
{
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) {
        d[v] = degree(v);
    }
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        for_each_vertex(adj_[u] & ~low_mask(u + 1), [&](int v) { out.emplace_back(u, v); });
    }
    return out;
}

Graph complete_graph(int n)
{
    check_order(n);
    std::vector<VertexMask> adj(n);
    for (int v = 0; v < n; ++v) {
        adj[v] = low_mask(n) & ~bit(v);
    }
    return Graph::from_masks(n, adj);
}

Graph cycle_graph(int n)
{
    if (n < 3) {
        throw std::invalid_argument("cycle needs at least 3 vertices");
    }
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v) {
        e.emplace_back(v, (v + 1) % n);
    }
    return Graph::from_edges(n, e);
}

Graph path_graph(int n)
{
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) {
        e.emplace_back(v, v + 1);
    }
    return Graph::from_edges(n, e);
}

Graph star_graph(int leaves)
{
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v <= leaves; ++v) {
        e.emplace_back(0, v);
    }
    return Graph::from_edges(leaves + 1, e);
}

Graph toggle_edge(const Graph& g, int u, int v)
{
    check_vertex(g, u);
    check_vertex(g, v);
    if (u == v) {
        throw std::invalid_argument("cannot toggle a self-loop");
    }
    std::vector<VertexMask> adj(g.order());
    for (int w = 0; w < g.order(); ++w) {
        adj[w] = g.neighbors(w);
    }
    adj[u] ^= bit(v);
    adj[v] ^= bit(u);
    return Graph::from_masks(g.order(), adj);
}

Graph induced_subgraph(const Graph& g, VertexMask s)
{
    if (s == 0) {
        throw std::invalid_argument("induced subgraph of the empty set");
    }
    if (s & ~g.vertices()) {
        throw std::invalid_argument("vertex set exceeds graph order");
    }
    const std::vector<int> keep = mask_to_vertices(s);
    const int k = static_cast<int>(keep.size());
    std::vector<VertexMask> adj(k, 0);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (g.has_edge(keep[i], keep[j])) {
                adj[i] |= bit(j);
            }
        }
    }
    return Graph::from_masks(k, adj);
}

Graph complement(const Graph& g)
{
    const int n = g.order();
    std::vector<VertexMask> adj(n);
    for (int v = 0; v < n; ++v) {
        adj[v] = ~g.neighbors(v) & low_mask(n) & ~bit(v);
    }
    return Graph::from_masks(n, adj);
}

VertexDeletion delete_vertex(const Graph& g, int v)
{
    check_vertex(g, v);
    if (g.order() < 2) {
        throw std::invalid_argument("cannot delete the only vertex");
    }
    const VertexMask keep = g.vertices() & ~bit(v);
    return {induced_subgraph(g, keep), mask_to_vertices(keep)};
}

Graph relabel(const Graph& g, std::span<const int> perm)
{
    const int n = g.order();
    if (perm.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("permutation size mismatch");
    }
    VertexMask seen = 0;
    for (int p : perm) {
        if (p < 0 || p >= n || (seen & bit(p))) {
            throw std::invalid_argument("not a permutation");
        }
        seen |= bit(p);
    }
    std::vector<VertexMask> adj(n, 0);
    for (auto [u, w] : g.edges()) {
        adj[perm[u]] |= bit(perm[w]);
        adj[perm[w]] |= bit(perm[u]);
    }
    return Graph::from_masks(n, adj);
}

int edge_difference(const Graph& a, const Graph& b)
{
    if (a.order() != b.order()) {
        throw std::invalid_argument("edge_difference needs graphs of equal order");
    }
    int twice = 0;
    for (int v = 0; v < a.order(); ++v) {
        twice += popcount(a.neighbors(v) ^ b.neighbors(v));
    }
    return twice / 2;
}

} // namespace ramsey
