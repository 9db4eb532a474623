#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ramsey {

using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline int popcount(VertexMask m) noexcept { return std::popcount(m); }

inline VertexMask bit(int v) noexcept { return VertexMask{1} << v; }

/// Mask with the low n bits set.
inline VertexMask low_mask(int n) noexcept
{
    return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

/// Calls f(v) for each set bit of m in increasing order.
template <class F>
void for_each_vertex(VertexMask m, F&& f)
{
    while (m) {
        f(std::countr_zero(m));
        m &= m - 1;
    }
}

std::vector<int> mask_to_vertices(VertexMask m);
VertexMask vertices_to_mask(std::span<const int> vertices, int n);

/// Undirected simple graph on 1..64 vertices, one neighbor bitmask per vertex.
///
/// Graphs are immutable values: every operation that "changes" a graph
/// returns a new one.
class Graph
{
public:
    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Builds from per-vertex neighbor masks. Throws std::invalid_argument
    /// unless the masks are symmetric, loop-free and confined to 0..n-1.
    static Graph from_masks(int n, std::span<const VertexMask> adj);
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

    int order() const noexcept { return n_; }
    VertexMask vertices() const noexcept { return low_mask(n_); }
    VertexMask neighbors(int v) const noexcept { return adj_[v]; }
    bool has_edge(int u, int v) const noexcept { return (adj_[u] >> v) & 1U; }
    int degree(int v) const noexcept { return popcount(adj_[v]); }
    int edge_count() const noexcept;
    std::vector<int> degree_sequence() const;

    /// Edges as (u, v) with u < v, lexicographic.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::array<VertexMask, kMaxVertices> adj_{};
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// Star with center 0 and `leaves` leaves.
Graph star_graph(int leaves);

/// Returns g with edge {u,v} flipped. Throws std::invalid_argument when
/// u == v or either index is out of range.
Graph toggle_edge(const Graph& g, int u, int v);

/// Subgraph induced by the vertices in `s`, relabeled in increasing order.
/// `s` must be non-empty and within 0..n-1.
Graph induced_subgraph(const Graph& g, VertexMask s);

Graph complement(const Graph& g);

struct VertexDeletion
{
    Graph graph;
    /// label_map[new_label] = old_label
    std::vector<int> label_map;
};

VertexDeletion delete_vertex(const Graph& g, int v);

/// Applies a vertex permutation: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

/// Number of edges present in exactly one of a and b (same order required).
int edge_difference(const Graph& a, const Graph& b);

} // namespace ramsey
