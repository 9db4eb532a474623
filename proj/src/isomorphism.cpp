#include "ramsey/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace ramsey {

namespace {

using Colouring = std::vector<int>;

int colour_count(const Colouring& c)
{
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Refines both colourings to a joint stable partition. Colour ids are
// assigned from the sorted signatures of both graphs, so equal ids mean
// equal refinement histories. Returns false if the colour histograms differ.
bool refine(const Graph& g, const Graph& h, Colouring& cg, Colouring& ch)
{
    const int n = g.order();
    using Signature = std::vector<int>;
    int before = -1;
    while (true) {
        std::vector<Signature> sg(n);
        std::vector<Signature> sh(n);
        auto sign = [](const Graph& gr, const Colouring& c, int v) {
            Signature s{c[v]};
            std::vector<int> nb;
            for_each_vertex(gr.neighbors(v), [&](int w) { nb.push_back(c[w]); });
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            return s;
        };
        std::map<Signature, int> ids;
        for (int v = 0; v < n; ++v) {
            sg[v] = sign(g, cg, v);
            sh[v] = sign(h, ch, v);
            ids.emplace(sg[v], 0);
            ids.emplace(sh[v], 0);
        }
        int next = 0;
        for (auto& [sig, id] : ids) {
            id = next++;
        }
        std::vector<int> hist(next, 0);
        for (int v = 0; v < n; ++v) {
            cg[v] = ids[sg[v]];
            ch[v] = ids[sh[v]];
            ++hist[cg[v]];
            --hist[ch[v]];
        }
        if (std::any_of(hist.begin(), hist.end(), [](int x) { return x != 0; })) {
            return false;
        }
        if (next == before) {
            return true;
        }
        before = next;
    }
}

bool search(const Graph& g, const Graph& h, Colouring cg, Colouring ch, std::vector<int>& mapping)
{
    if (!refine(g, h, cg, ch)) {
        return false;
    }
    const int n = g.order();
    const int colours = colour_count(cg);
    if (colours == n) {
        std::vector<int> where(n);
        for (int w = 0; w < n; ++w) {
            where[ch[w]] = w;
        }
        for (int v = 0; v < n; ++v) {
            mapping[v] = where[cg[v]];
        }
        return verify_isomorphism(g, h, mapping);
    }
    std::vector<int> size(colours, 0);
    for (int v = 0; v < n; ++v) {
        ++size[cg[v]];
    }
    int cell = -1;
    for (int c = 0; c < colours; ++c) {
        if (size[c] > 1 && (cell < 0 || size[c] < size[cell])) {
            cell = c;
        }
    }
    const int v = static_cast<int>(std::find(cg.begin(), cg.end(), cell) - cg.begin());
    for (int w = 0; w < n; ++w) {
        if (ch[w] != cell) {
            continue;
        }
        Colouring ng = cg;
        Colouring nh = ch;
        ng[v] = colours;
        nh[w] = colours;
        if (search(g, h, std::move(ng), std::move(nh), mapping)) {
            return true;
        }
    }
    return false;
}

} // namespace

bool verify_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& mapping)
{
    const int n = g.order();
    if (h.order() != n || mapping.size() != static_cast<std::size_t>(n)) {
        return false;
    }
    VertexMask seen = 0;
    for (int w : mapping) {
        if (w < 0 || w >= n || (seen & bit(w))) {
            return false;
        }
        seen |= bit(w);
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v) != h.has_edge(mapping[u], mapping[v])) {
                return false;
            }
        }
    }
    return true;
}

std::optional<std::vector<int>> is_isomorphic(const Graph& g, const Graph& h)
{
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) {
        return std::nullopt;
    }
    std::vector<int> mapping(g.order(), -1);
    if (search(g, h, Colouring(g.order(), 0), Colouring(h.order(), 0), mapping)) {
        return mapping;
    }
    return std::nullopt;
}

} // namespace ramsey
