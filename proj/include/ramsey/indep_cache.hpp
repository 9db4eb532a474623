#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ramsey/construct.hpp"
#include "ramsey/counting.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

/// All independent sets of a fixed base graph for each size in [k_lo, k_hi].
///
/// Each set is stored with the mask of base vertices that are neither in it
/// nor adjacent to it. A set S combines with added vertices T exactly when
/// the base neighbours of T avoid S.
class IndepSetCache
{
public:
    struct Entry
    {
        VertexMask members;
        VertexMask free;
    };

    static constexpr std::size_t kDefaultMaxSets = 50'000'000;

    /// Throws std::invalid_argument for an empty or out-of-range k range and
    /// ResourceError when a size class would exceed `max_sets` entries.
    static IndepSetCache build(const Graph& base, int k_lo, int k_hi, std::size_t max_sets = kDefaultMaxSets);

    const Graph& base() const noexcept { return base_; }
    const std::string& key() const noexcept { return key_; }
    int k_lo() const noexcept { return k_lo_; }
    int k_hi() const noexcept { return k_hi_; }

    bool covers(int k) const noexcept { return k >= k_lo_ && k <= k_hi_; }
    std::span<const Entry> sets(int k) const;
    Count count(int k) const { return sets(k).size(); }

    /// Number of k-sets avoiding `blocked`. Sizes above k_hi are answered
    /// with 0 when the k_hi class is already empty; otherwise they, and
    /// sizes below k_lo, throw std::invalid_argument.
    Count count_avoiding(int k, VertexMask blocked) const;

    /// Structured-text file keyed by the base graph's graph6 string.
    void save(const std::filesystem::path& path) const;
    /// Throws ParseError when the file is malformed or keyed to another base.
    static IndepSetCache load(const std::filesystem::path& path, const Graph& expected_base);

private:
    IndepSetCache(Graph base, int k_lo, int k_hi);

    Graph base_;
    std::string key_;
    int k_lo_;
    int k_hi_;
    std::vector<std::vector<Entry>> by_size_;
};

/// fitness(extension_to_graph(ext), p, q) computed from the cache:
/// q-independent sets are counted as (k-set of the base, (q-k)-set of the
/// added vertices) pairs with no edge between them, and p-cliques as the
/// base's own cliques plus those containing an added vertex.
/// Throws std::invalid_argument when ext.base differs from the cache base.
FitnessReport extension_fitness(const IndepSetCache& cache, const ExtensionState& ext, int p, int q);

} // namespace ramsey
