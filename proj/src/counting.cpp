#include "ramsey/counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ramsey {

namespace {

void check_order_arg(const Graph& g, int k, const char* what)
{
    if (k < 1 || k > g.order()) {
        throw std::invalid_argument(std::string(what) + " must be in 1.." + std::to_string(g.order()) + ", got " +
                                    std::to_string(k));
    }
}

struct SubsetCounter
{
    std::span<const VertexMask> compat;
    Count cap;
    Count found = 0;

    void run(VertexMask cand, int k)
    {
        if (k == 1) {
            add(static_cast<Count>(popcount(cand)));
            return;
        }
        while (cand && found < cap) {
            if (popcount(cand) < k) {
                return;
            }
            const int v = std::countr_zero(cand);
            cand &= cand - 1;
            const VertexMask next = cand & compat[v];
            if (k == 2) {
                add(static_cast<Count>(popcount(next)));
            } else if (popcount(next) >= k - 1) {
                run(next, k - 1);
            }
        }
    }

    void add(Count c)
    {
        found = (cap - found <= c) ? cap : found + c;
    }
};

bool find_first(std::span<const VertexMask> compat, VertexMask cand, int k, std::vector<int>& chosen)
{
    if (k == 0) {
        return true;
    }
    while (cand) {
        if (popcount(cand) < k) {
            return false;
        }
        const int v = std::countr_zero(cand);
        cand &= cand - 1;
        chosen.push_back(v);
        if (find_first(compat, cand & compat[v], k - 1, chosen)) {
            return true;
        }
        chosen.pop_back();
    }
    return false;
}

// Maximum compatible set. Colour classes are built from pairwise
// incompatible vertices, so a class contributes at most one vertex.
class MaxSetSearch
{
public:
    explicit MaxSetSearch(std::span<const VertexMask> compat) : compat_(compat) {}

    MaxSetResult solve(VertexMask all)
    {
        best_.clear();
        current_.clear();
        if (all) {
            // Any single vertex is a valid starting incumbent.
            best_.push_back(std::countr_zero(all));
        }
        expand(all);
        return {static_cast<int>(best_.size()), best_};
    }

private:
    void expand(VertexMask cand)
    {
        int order[kMaxVertices];
        int colour[kMaxVertices];
        int len = 0;
        VertexMask uncoloured = cand;
        int c = 0;
        while (uncoloured) {
            ++c;
            VertexMask q = uncoloured;
            while (q) {
                const int v = std::countr_zero(q);
                q &= ~(compat_[v] | bit(v));
                uncoloured &= ~bit(v);
                order[len] = v;
                colour[len] = c;
                ++len;
            }
        }
        for (int i = len - 1; i >= 0; --i) {
            if (static_cast<int>(current_.size()) + colour[i] <= static_cast<int>(best_.size())) {
                return;
            }
            const int v = order[i];
            current_.push_back(v);
            const VertexMask next = cand & compat_[v];
            if (next == 0) {
                if (current_.size() > best_.size()) {
                    best_ = current_;
                }
            } else {
                expand(next);
            }
            current_.pop_back();
            cand &= ~bit(v);
        }
    }

    std::span<const VertexMask> compat_;
    std::vector<int> current_;
    std::vector<int> best_;
};

} // namespace

Count count_compatible_subsets(std::span<const VertexMask> compat, VertexMask candidates, int k, Count cap)
{
    if (k < 0) {
        throw std::invalid_argument("subset size must be non-negative");
    }
    if (cap == 0) {
        return 0;
    }
    if (k == 0) {
        return 1;
    }
    SubsetCounter counter{compat, cap};
    counter.run(candidates, k);
    return counter.found;
}

std::vector<VertexMask> clique_masks(const Graph& g)
{
    std::vector<VertexMask> m(g.order());
    for (int v = 0; v < g.order(); ++v) {
        m[v] = g.neighbors(v);
    }
    return m;
}

std::vector<VertexMask> independence_masks(const Graph& g)
{
    std::vector<VertexMask> m(g.order());
    for (int v = 0; v < g.order(); ++v) {
        m[v] = g.vertices() & ~g.neighbors(v) & ~bit(v);
    }
    return m;
}

Count count_cliques_capped(const Graph& g, int p, Count cap)
{
    check_order_arg(g, p, "clique order p");
    const auto m = clique_masks(g);
    return count_compatible_subsets(m, g.vertices(), p, cap);
}

Count count_independent_sets_capped(const Graph& g, int q, Count cap)
{
    check_order_arg(g, q, "independent set order q");
    const auto m = independence_masks(g);
    return count_compatible_subsets(m, g.vertices(), q, cap);
}

Count count_cliques(const Graph& g, int p)
{
    return count_cliques_capped(g, p, kNoCap);
}

Count count_independent_sets(const Graph& g, int q)
{
    return count_independent_sets_capped(g, q, kNoCap);
}

FitnessReport fitness_capped(const Graph& g, int p, int q, Count cap)
{
    FitnessReport r;
    r.clique_count = count_cliques_capped(g, p, cap);
    r.indep_count = count_independent_sets_capped(g, q, cap);
    r.total = r.clique_count + r.indep_count;
    r.exact = cap == kNoCap || (r.clique_count < cap && r.indep_count < cap);
    return r;
}

FitnessReport fitness(const Graph& g, int p, int q)
{
    return fitness_capped(g, p, q, kNoCap);
}

std::optional<std::vector<int>> find_clique(const Graph& g, int p)
{
    check_order_arg(g, p, "clique order p");
    const auto m = clique_masks(g);
    std::vector<int> chosen;
    if (find_first(m, g.vertices(), p, chosen)) {
        return chosen;
    }
    return std::nullopt;
}

std::optional<std::vector<int>> find_independent_set(const Graph& g, int q)
{
    check_order_arg(g, q, "independent set order q");
    const auto m = independence_masks(g);
    std::vector<int> chosen;
    if (find_first(m, g.vertices(), q, chosen)) {
        return chosen;
    }
    return std::nullopt;
}

MaxSetResult max_independent_set(const Graph& g)
{
    const auto m = independence_masks(g);
    auto r = MaxSetSearch(m).solve(g.vertices());
    std::sort(r.witness.begin(), r.witness.end());
    return r;
}

MaxSetResult max_clique(const Graph& g)
{
    const auto m = clique_masks(g);
    auto r = MaxSetSearch(m).solve(g.vertices());
    std::sort(r.witness.begin(), r.witness.end());
    return r;
}

} // namespace ramsey
