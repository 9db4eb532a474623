#include <gtest/gtest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "oracle.hpp"
#include "ramsey/construct.hpp"
#include "ramsey/counting.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph_io.hpp"
#include "ramsey/isomorphism.hpp"
#include "ramsey/verify.hpp"

using namespace ramsey;

namespace {

Graph appendix_base()
{
    const auto data = load_appendix(default_data_dir() / "appendix");
    return induced_subgraph(data.at("A").graph, low_mask(35));
}

void expect_valid(const ExtensionState& ext)
{
    const auto problems = extension_violations(ext);
    EXPECT_TRUE(problems.empty()) << (problems.empty() ? "" : problems.front());
}

} // namespace

TEST(TriangleFree, ClassCountsMatchExhaustion)
{
    for (int k = 1; k <= 6; ++k) {
        EXPECT_EQ(enumerate_triangle_free(k).size(), oracle::triangle_free_classes(k)) << "k=" << k;
    }
}

TEST(TriangleFree, SevenVertexClassCount)
{
    // Published count of triangle-free graphs on 7 unlabeled vertices.
    EXPECT_EQ(enumerate_triangle_free(7).size(), 107U);
}

TEST(TriangleFree, RepresentativesArePairwiseDistinctAndOrdered)
{
    for (int k = 1; k <= 6; ++k) {
        const auto classes = enumerate_triangle_free(k);
        for (std::size_t i = 0; i < classes.size(); ++i) {
            const auto& c = classes[i];
            EXPECT_EQ(c.index, static_cast<int>(i));
            if (k >= 3) {
                EXPECT_EQ(count_cliques(c.graph, 3), 0U);
            }
            EXPECT_EQ(encode_graph6(c.graph), canonical_code(c.graph));
            for (int v = 0; v < k; ++v) {
                EXPECT_EQ(c.t[v], c.graph.degree(v));
            }
            for (std::size_t j = i + 1; j < classes.size(); ++j) {
                EXPECT_FALSE(is_isomorphic(c.graph, classes[j].graph));
                const auto& d = classes[j];
                EXPECT_TRUE(c.graph.edge_count() < d.graph.edge_count() ||
                            (c.graph.edge_count() == d.graph.edge_count() &&
                             encode_graph6(c.graph) < encode_graph6(d.graph)));
            }
        }
    }
}

TEST(TriangleFree, OutOfRange)
{
    EXPECT_THROW(enumerate_triangle_free(0), UnsupportedInstance);
    EXPECT_THROW(enumerate_triangle_free(8), UnsupportedInstance);
}

TEST(TriangleFree, CanonicalCodeIsRelabelInvariant)
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const Graph g = oracle::random_graph(n, 0.5, rng);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_EQ(canonical_code(g), canonical_code(relabel(g, perm)));
    }
}

TEST(Extension, PermutationChunking)
{
    // Base C5, inner graph: a single edge between the two added vertices.
    const Graph base = cycle_graph(5);
    const InnerGraph inner = make_inner_graph(path_graph(2));
    const std::vector<int> degrees{3, 2};
    const std::vector<int> perm{4, 0, 3, 1, 2};
    const auto ext = extension_from_permutation(base, inner, degrees, perm, {2, 3});
    // Vertex 0 needs 3-1 = 2 attachments, vertex 1 needs 2-1 = 1.
    EXPECT_EQ(ext.attachments[0], bit(4) | bit(0));
    EXPECT_EQ(ext.attachments[1], bit(3));
    expect_valid(ext);
    const Graph g = extension_to_graph(ext);
    EXPECT_EQ(g.order(), 7);
    EXPECT_TRUE(g.has_edge(5, 6));
    EXPECT_TRUE(g.has_edge(5, 4));
    EXPECT_TRUE(g.has_edge(6, 3));
    EXPECT_EQ(g.degree(5), 3);
    EXPECT_EQ(g.degree(6), 2);
}

TEST(Extension, PermutationChecksInputs)
{
    const Graph base = cycle_graph(5);
    const InnerGraph inner = make_inner_graph(Graph(2));
    const std::vector<int> perm{0, 1, 2, 3, 4};
    EXPECT_THROW(extension_from_permutation(base, inner, std::vector<int>{4, 4}, perm, {0, 4}),
                 std::invalid_argument);
    EXPECT_THROW(extension_from_permutation(base, inner, std::vector<int>{1}, perm, {0, 4}), std::invalid_argument);
    EXPECT_THROW(extension_from_permutation(base, inner, std::vector<int>{1, 1}, std::vector<int>{0, 0, 1, 2, 3},
                                            {0, 4}),
                 std::invalid_argument);
}

TEST(Extension, RandomExtensionsSatisfyInvariants)
{
    const Graph base = appendix_base();
    std::mt19937_64 seeds(42);
    for (int k = 1; k <= 5; ++k) {
        for (const auto& inner : enumerate_triangle_free(k)) {
            Rng rng(seeds());
            const auto ext = random_extension(base, inner, {4, 9}, rng);
            expect_valid(ext);
            const Graph g = extension_to_graph(ext);
            EXPECT_EQ(induced_subgraph(g, low_mask(35)), base);
            EXPECT_EQ(induced_subgraph(g, ~low_mask(35) & g.vertices()), inner.graph);
            for (int i = 0; i < k; ++i) {
                EXPECT_GE(g.degree(35 + i), 4);
                EXPECT_LE(g.degree(35 + i), 9);
            }
        }
    }
}

TEST(Extension, InfeasibleRangeIsRejected)
{
    const InnerGraph inner = make_inner_graph(complete_graph(2));
    Rng rng(1);
    // Two added vertices each needing 9 attachments on a 5-vertex base.
    EXPECT_THROW(random_extension(cycle_graph(5), make_inner_graph(Graph(2)), {9, 9}, rng), std::invalid_argument);
    // An inner degree above the range cannot be repaired by attachments.
    EXPECT_THROW(random_extension(cycle_graph(5), inner, {0, 0}, rng), std::invalid_argument);
}

TEST(Extension, DecomposeInvertsAssembly)
{
    const Graph base = appendix_base();
    Rng rng(43);
    const auto inner = enumerate_triangle_free(5)[9];
    const auto ext = random_extension(base, inner, {4, 9}, rng);
    const auto back = decompose_extension(extension_to_graph(ext), 35, {4, 9});
    EXPECT_EQ(back.base, ext.base);
    EXPECT_EQ(back.inner.graph, ext.inner.graph);
    EXPECT_EQ(back.inner.index, 9);
    EXPECT_EQ(back.attachments, ext.attachments);
}

TEST(Extension, AppendixGraphsBreakTheValidityRules)
{
    const auto data = load_appendix(default_data_dir() / "appendix");
    for (const auto& ng : data.graphs) {
        const auto ext = decompose_extension(ng.graph, 35, {4, 9});
        EXPECT_EQ(ext.base, appendix_base()) << ng.name;
        EXPECT_EQ(extension_to_graph(ext), ng.graph);
    }
    const auto a = decompose_extension(data.at("A").graph, 35, {4, 9});
    EXPECT_FALSE(extension_violations(a).empty());
}

TEST(Extension, MutationKeepsStateValidAndMovesOneEdge)
{
    const Graph base = appendix_base();
    Rng rng(44);
    auto ext = random_extension(base, enumerate_triangle_free(5)[3], {4, 9}, rng);
    for (int step = 0; step < 500; ++step) {
        const auto next = mutate_extension(ext, rng);
        ASSERT_TRUE(next.has_value());
        expect_valid(*next);
        EXPECT_EQ(edge_difference(extension_to_graph(ext), extension_to_graph(*next)), 1);
        ext = *next;
    }
}

TEST(Extension, MutationWithNoLegalMove)
{
    // Every base vertex is attached and each added vertex sits at range.lo.
    const Graph base = path_graph(2);
    const InnerGraph inner = make_inner_graph(Graph(2));
    const auto ext = extension_from_permutation(base, inner, std::vector<int>{1, 1}, std::vector<int>{0, 1}, {1, 1});
    Rng rng(45);
    EXPECT_FALSE(mutate_extension(ext, rng).has_value());
}
