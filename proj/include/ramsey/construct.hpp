#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramsey/bounds.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

/// Graph induced on the added vertices, with each vertex's degree inside it.
struct InnerGraph
{
    Graph graph;
    std::vector<int> t;
    /// Position in enumerate_triangle_free(order) of this graph's
    /// isomorphism class, or -1 when unknown.
    int index = -1;

    int order() const noexcept { return graph.order(); }
};

InnerGraph make_inner_graph(const Graph& g, int index = -1);

/// One representative per isomorphism class of triangle-free graphs on k
/// vertices, 1 <= k <= 7. Each representative is the relabeling with the
/// smallest graph6 code; the list is ordered by (edge count, code).
/// Throws UnsupportedInstance outside 1..7.
std::vector<InnerGraph> enumerate_triangle_free(int k);

/// Smallest graph6 code over all relabelings of g (order <= 8).
std::string canonical_code(const Graph& g);

/// Base graph plus a set of added vertices: their inner graph and, for each
/// added vertex, the base vertices it is joined to.
///
/// A valid state has pairwise disjoint attachment sets and every added
/// vertex's total degree inside `degree_range`; see extension_violations().
/// decompose_extension() may return states that break these rules.
struct ExtensionState
{
    Graph base;
    InnerGraph inner;
    std::vector<VertexMask> attachments;
    DegreeRange degree_range;

    int base_order() const noexcept { return base.order(); }
    int added() const noexcept { return inner.order(); }
    int added_degree(int i) const noexcept { return popcount(attachments[i]) + inner.t[i]; }
    /// Union of all attachment sets.
    VertexMask attached() const noexcept;
};

/// Human-readable descriptions of every broken invariant; empty if valid.
std::vector<std::string> extension_violations(const ExtensionState& ext);

/// Deterministic core of random_extension(): added vertex k receives the
/// permutation entries in positions (S_{k-1}, S_k], S_k = sum_{j<=k} (deg_j - t_j).
/// `permutation` lists base vertices (0-indexed).
ExtensionState extension_from_permutation(const Graph& base, const InnerGraph& inner, std::span<const int> degrees,
                                          std::span<const int> permutation, DegreeRange range);

/// Samples each added degree uniformly from the admissible part of `range`
/// (resampling the whole vector while the required attachments exceed the
/// base order) and chunks a uniform random permutation of the base.
/// Throws std::invalid_argument when no degree vector is feasible.
ExtensionState random_extension(const Graph& base, const InnerGraph& inner, DegreeRange range, Rng& rng);

/// Base vertices keep their labels; added vertex i becomes base_order + i.
Graph extension_to_graph(const ExtensionState& ext);

/// Splits g into its first `base_order` vertices and the remaining added
/// vertices. The result is not validated.
ExtensionState decompose_extension(const Graph& g, int base_order, DegreeRange range);

/// Toggles exactly one attachment edge while keeping the state valid:
/// removes (u_i, v) when u_i is above range.lo, or adds (u_i, v) for a base
/// vertex v attached to no added vertex when u_i is below range.hi. The
/// added vertex is drawn among those with a legal move. Returns nullopt if
/// no legal move exists.
std::optional<ExtensionState> mutate_extension(const ExtensionState& ext, Rng& rng);

} // namespace ramsey
