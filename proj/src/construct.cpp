#include "ramsey/construct.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ramsey/counting.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph_io.hpp"

namespace ramsey {

namespace {

// Upper triangle in graph6 order as an integer, first bit most significant.
std::uint64_t triangle_bits(const Graph& g, const std::vector<int>& perm)
{
    std::uint64_t code = 0;
    const int n = g.order();
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            code = (code << 1) | (g.has_edge(perm[i], perm[j]) ? 1U : 0U);
        }
    }
    return code;
}

Graph canonical_form(const Graph& g)
{
    const int n = g.order();
    if (n > 8) {
        throw UnsupportedInstance("canonical form limited to 8 vertices");
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best = perm;
    std::uint64_t best_code = triangle_bits(g, perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
        const auto code = triangle_bits(g, perm);
        if (code < best_code) {
            best_code = code;
            best = perm;
        }
    }
    // best maps new label -> old label; relabel() wants old -> new.
    std::vector<int> inverse(n);
    for (int i = 0; i < n; ++i) {
        inverse[best[i]] = i;
    }
    return relabel(g, inverse);
}

void check_range(DegreeRange range)
{
    if (range.lo < 0 || range.lo > range.hi) {
        throw std::invalid_argument("invalid degree range [" + std::to_string(range.lo) + "," +
                                    std::to_string(range.hi) + "]");
    }
}

} // namespace

InnerGraph make_inner_graph(const Graph& g, int index)
{
    return {g, g.degree_sequence(), index};
}

std::string canonical_code(const Graph& g)
{
    return encode_graph6(canonical_form(g));
}

std::vector<InnerGraph> enumerate_triangle_free(int k)
{
    if (k < 1 || k > 7) {
        throw UnsupportedInstance("triangle-free enumeration supports 1..7 vertices, got " + std::to_string(k));
    }
    std::set<std::string> codes{encode_graph6(Graph(1))};
    for (int order = 2; order <= k; ++order) {
        std::set<std::string> next;
        for (const auto& code : codes) {
            const Graph smaller = decode_graph6(code);
            const auto nonadj = independence_masks(smaller);
            // Join the new vertex to every independent set of the smaller graph.
            for (VertexMask s = 0; s < (VertexMask{1} << smaller.order()); ++s) {
                bool independent = true;
                for_each_vertex(s, [&](int v) {
                    if ((s & ~bit(v)) & ~nonadj[v]) {
                        independent = false;
                    }
                });
                if (!independent) {
                    continue;
                }
                std::vector<VertexMask> adj(order, 0);
                for (int v = 0; v < smaller.order(); ++v) {
                    adj[v] = smaller.neighbors(v);
                }
                adj[order - 1] = s;
                for_each_vertex(s, [&](int v) { adj[v] |= bit(order - 1); });
                next.insert(canonical_code(Graph::from_masks(order, adj)));
            }
        }
        codes = std::move(next);
    }
    std::vector<Graph> graphs;
    for (const auto& code : codes) {
        graphs.push_back(decode_graph6(code));
    }
    std::stable_sort(graphs.begin(), graphs.end(),
                     [](const Graph& a, const Graph& b) { return a.edge_count() < b.edge_count(); });
    std::vector<InnerGraph> out;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        out.push_back(make_inner_graph(graphs[i], static_cast<int>(i)));
    }
    return out;
}

VertexMask ExtensionState::attached() const noexcept
{
    VertexMask m = 0;
    for (auto a : attachments) {
        m |= a;
    }
    return m;
}

std::vector<std::string> extension_violations(const ExtensionState& ext)
{
    std::vector<std::string> out;
    if (ext.attachments.size() != static_cast<std::size_t>(ext.added())) {
        out.push_back("attachment list count differs from inner graph order");
        return out;
    }
    if (ext.base.order() + ext.added() > kMaxVertices) {
        out.push_back("assembled graph exceeds 64 vertices");
    }
    if (ext.added() >= 3 && count_cliques(ext.inner.graph, 3) != 0) {
        out.push_back("inner graph contains a triangle");
    }
    VertexMask seen = 0;
    for (int i = 0; i < ext.added(); ++i) {
        const VertexMask a = ext.attachments[i];
        if (a & ~ext.base.vertices()) {
            out.push_back("added vertex " + std::to_string(i) + " attaches outside the base");
        }
        if (a & seen) {
            out.push_back("added vertex " + std::to_string(i) + " shares attachment(s) " +
                          std::to_string(popcount(a & seen)) + " with an earlier added vertex");
        }
        seen |= a;
        const int d = ext.added_degree(i);
        if (!ext.degree_range.contains(d)) {
            out.push_back("added vertex " + std::to_string(i) + " has degree " + std::to_string(d) + " outside [" +
                          std::to_string(ext.degree_range.lo) + "," + std::to_string(ext.degree_range.hi) + "]");
        }
    }
    return out;
}

ExtensionState extension_from_permutation(const Graph& base, const InnerGraph& inner, std::span<const int> degrees,
                                          std::span<const int> permutation, DegreeRange range)
{
    check_range(range);
    const int m = base.order();
    const int a = inner.order();
    if (degrees.size() != static_cast<std::size_t>(a)) {
        throw std::invalid_argument("one degree per added vertex required");
    }
    if (permutation.size() != static_cast<std::size_t>(m)) {
        throw std::invalid_argument("permutation must cover the base vertices");
    }
    VertexMask seen = 0;
    for (int v : permutation) {
        if (v < 0 || v >= m || (seen & bit(v))) {
            throw std::invalid_argument("not a permutation of the base vertices");
        }
        seen |= bit(v);
    }
    ExtensionState ext{base, inner, std::vector<VertexMask>(a, 0), range};
    int pos = 0;
    for (int i = 0; i < a; ++i) {
        const int want = degrees[i] - inner.t[i];
        if (want < 0) {
            throw std::invalid_argument("degree " + std::to_string(degrees[i]) + " below inner degree " +
                                        std::to_string(inner.t[i]));
        }
        if (pos + want > m) {
            throw std::invalid_argument("degrees need more attachments than the base has vertices");
        }
        for (int k = 0; k < want; ++k) {
            ext.attachments[i] |= bit(permutation[pos++]);
        }
    }
    return ext;
}

ExtensionState random_extension(const Graph& base, const InnerGraph& inner, DegreeRange range, Rng& rng)
{
    check_range(range);
    const int m = base.order();
    const int a = inner.order();
    if (m + a > kMaxVertices) {
        throw std::invalid_argument("assembled graph would exceed 64 vertices");
    }
    int minimum = 0;
    for (int i = 0; i < a; ++i) {
        if (inner.t[i] > range.hi) {
            throw std::invalid_argument("inner degree " + std::to_string(inner.t[i]) + " exceeds range.hi");
        }
        minimum += std::max(range.lo, inner.t[i]) - inner.t[i];
    }
    if (minimum > m) {
        throw std::invalid_argument("degree range needs at least " + std::to_string(minimum) +
                                    " attachments but the base has " + std::to_string(m) + " vertices");
    }
    std::vector<int> degrees(a);
    while (true) {
        int needed = 0;
        for (int i = 0; i < a; ++i) {
            degrees[i] = uniform_int(rng, std::max(range.lo, inner.t[i]), range.hi);
            needed += degrees[i] - inner.t[i];
        }
        if (needed <= m) {
            break;
        }
    }
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return extension_from_permutation(base, inner, degrees, perm, range);
}

Graph extension_to_graph(const ExtensionState& ext)
{
    const int m = ext.base_order();
    const int a = ext.added();
    const int n = m + a;
    if (n > kMaxVertices) {
        throw std::invalid_argument("assembled graph would exceed 64 vertices");
    }
    std::vector<VertexMask> adj(n, 0);
    for (int v = 0; v < m; ++v) {
        adj[v] = ext.base.neighbors(v);
    }
    for (int i = 0; i < a; ++i) {
        const int u = m + i;
        adj[u] |= ext.inner.graph.neighbors(i) << m;
        adj[u] |= ext.attachments[i];
        for_each_vertex(ext.attachments[i], [&](int v) { adj[v] |= bit(u); });
    }
    return Graph::from_masks(n, adj);
}

ExtensionState decompose_extension(const Graph& g, int base_order, DegreeRange range)
{
    const int n = g.order();
    if (base_order < 1 || base_order >= n) {
        throw std::invalid_argument("base order must leave at least one added vertex");
    }
    const VertexMask base_mask = low_mask(base_order);
    const Graph inner_graph = induced_subgraph(g, g.vertices() & ~base_mask);
    int index = -1;
    if (inner_graph.order() <= 7 && (inner_graph.order() < 3 || count_cliques(inner_graph, 3) == 0)) {
        const auto code = canonical_code(inner_graph);
        const auto classes = enumerate_triangle_free(inner_graph.order());
        for (const auto& c : classes) {
            if (encode_graph6(c.graph) == code) {
                index = c.index;
            }
        }
    }
    ExtensionState ext{induced_subgraph(g, base_mask), make_inner_graph(inner_graph, index), {}, range};
    for (int u = base_order; u < n; ++u) {
        ext.attachments.push_back(g.neighbors(u) & base_mask);
    }
    return ext;
}

std::optional<ExtensionState> mutate_extension(const ExtensionState& ext, Rng& rng)
{
    const VertexMask free_base = ext.base.vertices() & ~ext.attached();
    struct Move
    {
        int vertex;
        int base_vertex;
    };
    std::vector<int> movable;
    for (int i = 0; i < ext.added(); ++i) {
        const int d = ext.added_degree(i);
        const bool can_remove = d > ext.degree_range.lo && ext.attachments[i] != 0;
        const bool can_add = d < ext.degree_range.hi && free_base != 0;
        if (can_remove || can_add) {
            movable.push_back(i);
        }
    }
    if (movable.empty()) {
        return std::nullopt;
    }
    const int i = movable[uniform_int(rng, 0, static_cast<int>(movable.size()) - 1)];
    const int d = ext.added_degree(i);
    std::vector<Move> moves;
    if (d > ext.degree_range.lo) {
        for_each_vertex(ext.attachments[i], [&](int v) { moves.push_back({i, v}); });
    }
    if (d < ext.degree_range.hi) {
        for_each_vertex(free_base, [&](int v) { moves.push_back({i, v}); });
    }
    const Move mv = moves[uniform_int(rng, 0, static_cast<int>(moves.size()) - 1)];
    ExtensionState out = ext;
    out.attachments[mv.vertex] ^= bit(mv.base_vertex);
    return out;
}

} // namespace ramsey
