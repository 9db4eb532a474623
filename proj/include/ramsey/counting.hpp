#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

using Count = std::uint64_t;

inline constexpr Count kNoCap = std::numeric_limits<Count>::max();

/// Value of the objective f(G): number of p-cliques plus number of
/// q-independent sets. `exact` is false when either count stopped at a cap.
struct FitnessReport
{
    Count clique_count = 0;
    Count indep_count = 0;
    Count total = 0;
    bool exact = true;

    bool is_witness() const noexcept { return total == 0; }

    friend bool operator==(const FitnessReport&, const FitnessReport&) = default;
};

/// Counts k-subsets of `candidates` that are pairwise compatible, where
/// compat[v] holds the vertices compatible with v. Stops once `cap` is
/// reached and returns min(count, cap).
///
/// Subsets are grown in increasing vertex order, each step intersecting the
/// candidate set with the new vertex's compatibility mask, and a branch is
/// cut as soon as fewer candidates remain than vertices still needed.
Count count_compatible_subsets(std::span<const VertexMask> compat, VertexMask candidates, int k,
                               Count cap = kNoCap);

/// compat masks for cliques (neighbors) and independent sets (non-neighbors).
std::vector<VertexMask> clique_masks(const Graph& g);
std::vector<VertexMask> independence_masks(const Graph& g);

/// Exact number of p-vertex complete subgraphs. Requires 1 <= p <= n.
Count count_cliques(const Graph& g, int p);
/// Exact number of q-vertex independent sets. Requires 1 <= q <= n.
Count count_independent_sets(const Graph& g, int q);

Count count_cliques_capped(const Graph& g, int p, Count cap);
Count count_independent_sets_capped(const Graph& g, int q, Count cap);

FitnessReport fitness(const Graph& g, int p, int q);

/// Like fitness(), but each count stops at `cap`. Used during search where
/// full counts are unaffordable; certification always uses fitness().
FitnessReport fitness_capped(const Graph& g, int p, int q, Count cap);

/// Lexicographically first p-clique / q-independent set, or nullopt.
std::optional<std::vector<int>> find_clique(const Graph& g, int p);
std::optional<std::vector<int>> find_independent_set(const Graph& g, int q);

struct MaxSetResult
{
    int size = 0;
    std::vector<int> witness;
};

/// Exact independence number with a witnessing set (branch and bound,
/// greedy-colouring bounds).
MaxSetResult max_independent_set(const Graph& g);
MaxSetResult max_clique(const Graph& g);

} // namespace ramsey
