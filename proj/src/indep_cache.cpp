#include "ramsey/indep_cache.hpp"

#include <json.hpp>

#include "ramsey/errors.hpp"
#include "ramsey/graph_io.hpp"

namespace ramsey {

namespace {

constexpr const char* kCacheFormat = "ramsey-indep-cache";
constexpr int kCacheVersion = 1;

struct Enumerator
{
    std::span<const VertexMask> nonadj;
    int k_lo;
    int k_hi;
    std::size_t max_sets;
    std::vector<std::vector<IndepSetCache::Entry>>& out;

    // `free` holds vertices outside S and not adjacent to it; only those
    // above the last chosen vertex are offered as extensions.
    void grow(VertexMask members, VertexMask free, VertexMask cand, int size)
    {
        if (size >= k_lo) {
            auto& bucket = out[size - k_lo];
            if (bucket.size() >= max_sets) {
                throw ResourceError("independent sets of size " + std::to_string(size) + " exceed the limit of " +
                                    std::to_string(max_sets));
            }
            bucket.push_back({members, free});
        }
        if (size == k_hi) {
            return;
        }
        while (cand) {
            const int v = std::countr_zero(cand);
            cand &= cand - 1;
            const VertexMask next_free = free & nonadj[v];
            grow(members | bit(v), next_free, cand & nonadj[v], size + 1);
        }
    }
};

} // namespace

IndepSetCache::IndepSetCache(Graph base, int k_lo, int k_hi)
    : base_(std::move(base)), key_(encode_graph6(base_)), k_lo_(k_lo), k_hi_(k_hi),
      by_size_(static_cast<std::size_t>(k_hi - k_lo + 1))
{
}

IndepSetCache IndepSetCache::build(const Graph& base, int k_lo, int k_hi, std::size_t max_sets)
{
    if (k_lo < 1 || k_hi < k_lo || k_hi > base.order()) {
        throw std::invalid_argument("cache size range [" + std::to_string(k_lo) + "," + std::to_string(k_hi) +
                                    "] must lie within 1.." + std::to_string(base.order()));
    }
    IndepSetCache cache(base, k_lo, k_hi);
    const auto nonadj = independence_masks(base);
    Enumerator e{nonadj, k_lo, k_hi, max_sets, cache.by_size_};
    const VertexMask all = base.vertices();
    VertexMask cand = all;
    while (cand) {
        const int v = std::countr_zero(cand);
        cand &= cand - 1;
        e.grow(bit(v), all & nonadj[v], cand & nonadj[v], 1);
    }
    return cache;
}

std::span<const IndepSetCache::Entry> IndepSetCache::sets(int k) const
{
    if (!covers(k)) {
        throw std::invalid_argument("cache does not cover independent sets of size " + std::to_string(k));
    }
    return by_size_[k - k_lo_];
}

Count IndepSetCache::count_avoiding(int k, VertexMask blocked) const
{
    if (k > k_hi_ && k > 0 && sets(k_hi_).empty()) {
        return 0;
    }
    const auto entries = sets(k);
    Count c = 0;
    for (const auto& e : entries) {
        c += (e.members & blocked) == 0;
    }
    return c;
}

void IndepSetCache::save(const std::filesystem::path& path) const
{
    nlohmann::json j;
    j["format"] = kCacheFormat;
    j["version"] = kCacheVersion;
    j["base_graph6"] = key_;
    j["k_lo"] = k_lo_;
    j["k_hi"] = k_hi_;
    nlohmann::json sizes = nlohmann::json::object();
    for (int k = k_lo_; k <= k_hi_; ++k) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& e : sets(k)) {
            list.push_back(e.members);
        }
        sizes[std::to_string(k)] = std::move(list);
    }
    j["sets"] = std::move(sizes);
    write_text_file(path, j.dump() + "\n");
}

IndepSetCache IndepSetCache::load(const std::filesystem::path& path, const Graph& expected_base)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_text_file(path));
        if (j.at("format") != kCacheFormat || j.at("version") != kCacheVersion) {
            throw ParseError(0, "unsupported cache format in " + path.string());
        }
        const std::string key = j.at("base_graph6");
        if (key != encode_graph6(expected_base)) {
            throw ParseError(0, "cache " + path.string() + " was built for a different base graph");
        }
        const int k_lo = j.at("k_lo");
        const int k_hi = j.at("k_hi");
        if (k_lo < 1 || k_hi < k_lo || k_hi > expected_base.order()) {
            throw ParseError(0, "cache size range out of bounds");
        }
        IndepSetCache cache(expected_base, k_lo, k_hi);
        const auto nonadj = independence_masks(expected_base);
        for (int k = k_lo; k <= k_hi; ++k) {
            for (const auto& item : j.at("sets").at(std::to_string(k))) {
                const VertexMask members = item.get<VertexMask>();
                VertexMask free = expected_base.vertices();
                bool ok = popcount(members) == k && (members & ~expected_base.vertices()) == 0;
                for_each_vertex(members, [&](int v) {
                    if (members & ~bit(v) & ~nonadj[v]) {
                        ok = false;
                    }
                    free &= nonadj[v];
                });
                if (!ok) {
                    throw ParseError(0, "cache entry is not an independent set of size " + std::to_string(k));
                }
                cache.by_size_[k - k_lo].push_back({members, free});
            }
        }
        return cache;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, "malformed cache file " + path.string() + ": " + e.what());
    }
}

FitnessReport extension_fitness(const IndepSetCache& cache, const ExtensionState& ext, int p, int q)
{
    if (!(ext.base == cache.base())) {
        throw std::invalid_argument("extension base differs from the cached base graph");
    }
    const int m = ext.base_order();
    const int a = ext.added();
    const int n = m + a;
    if (p < 1 || p > n || q < 1 || q > n) {
        throw std::invalid_argument("clique/independent-set orders must lie in 1.." + std::to_string(n));
    }
    const Graph g = extension_to_graph(ext);

    FitnessReport r;
    r.clique_count = p <= m ? count_cliques(ext.base, p) : 0;
    const auto adj = clique_masks(g);
    for (int i = 0; i < a; ++i) {
        const int u = m + i;
        // Cliques are attributed to their lowest added vertex.
        const VertexMask earlier_added = low_mask(u) & ~low_mask(m);
        r.clique_count += count_compatible_subsets(adj, g.neighbors(u) & ~earlier_added, p - 1);
    }

    for (VertexMask t = 0; t < (VertexMask{1} << a); ++t) {
        bool independent = true;
        VertexMask blocked = 0;
        for_each_vertex(t, [&](int i) {
            if (ext.inner.graph.neighbors(i) & t) {
                independent = false;
            }
            blocked |= ext.attachments[i];
        });
        const int j = popcount(t);
        if (!independent || j > q) {
            continue;
        }
        const int k = q - j;
        if (k == 0) {
            r.indep_count += 1;
        } else if (k <= m) {
            r.indep_count += cache.count_avoiding(k, blocked);
        }
    }
    r.total = r.clique_count + r.indep_count;
    return r;
}

} // namespace ramsey
