#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "oracle.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph_io.hpp"
#include "ramsey/verify.hpp"

using namespace ramsey;

namespace {

/// Straight transcription of the graph6 layout for n <= 62.
std::string reference_graph6(const Graph& g)
{
    std::string out(1, static_cast<char>(g.order() + 63));
    std::vector<int> bits;
    for (int v = 1; v < g.order(); ++v) {
        for (int u = 0; u < v; ++u) {
            bits.push_back(g.has_edge(u, v) ? 1 : 0);
        }
    }
    while (bits.size() % 6 != 0) {
        bits.push_back(0);
    }
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int value = 0;
        for (int j = 0; j < 6; ++j) {
            value = value * 2 + bits[i + j];
        }
        out += static_cast<char>(value + 63);
    }
    return out;
}

} // namespace

TEST(Graph6, KnownStrings)
{
    // Widely published encodings.
    EXPECT_EQ(encode_graph6(complete_graph(4)), "C~");
    EXPECT_EQ(encode_graph6(cycle_graph(5)), "Dhc");
    EXPECT_EQ(encode_graph6(Graph(1)), "@");
    EXPECT_EQ(decode_graph6("C~"), complete_graph(4));
    EXPECT_EQ(decode_graph6(">>graph6<<Dhc\n"), cycle_graph(5));
}

TEST(Graph6, MatchesReferenceEncoder)
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 62);
        const Graph g = oracle::random_graph(n, 0.5, rng);
        EXPECT_EQ(encode_graph6(g), reference_graph6(g));
    }
}

TEST(Graph6, RoundTripsAllOrders)
{
    std::mt19937_64 rng(22);
    for (int n = 1; n <= 64; ++n) {
        const Graph g = oracle::random_graph(n, 0.37, rng);
        const std::string code = encode_graph6(g);
        EXPECT_EQ(decode_graph6(code), g) << "n=" << n;
        if (n >= 63) {
            EXPECT_EQ(code[0], '~');
        }
    }
}

TEST(Graph6, RejectsMalformed)
{
    EXPECT_THROW(decode_graph6(""), ParseError);
    EXPECT_THROW(decode_graph6("D"), ParseError);     // body too short
    EXPECT_THROW(decode_graph6("Dhcc"), ParseError);  // body too long
    EXPECT_THROW(decode_graph6("Bx"), ParseError);    // nonzero padding
    EXPECT_THROW(decode_graph6("D h"), ParseError);   // bad character
    EXPECT_THROW(decode_graph6("?"), ParseError);     // zero vertices
}

TEST(AdjacencyList, ParsesAndEmits)
{
    const auto r = parse_adjacency_list("1:2 5\n2:1 3\n3:2 4\n4:3 5\n5:1 4\n");
    EXPECT_TRUE(r.warnings.empty());
    EXPECT_EQ(r.graph, cycle_graph(5));
    EXPECT_EQ(emit_adjacency_list(cycle_graph(5)), "1:2 5\n2:1 3\n3:2 4\n4:3 5\n5:1 4");
}

TEST(AdjacencyList, IsolatedVerticesAndWhitespace)
{
    const auto r = parse_adjacency_list("  1:2 \n\n2:1\n3:\n");
    EXPECT_EQ(r.graph.order(), 3);
    EXPECT_EQ(r.graph.edge_count(), 1);
    EXPECT_EQ(emit_adjacency_list(r.graph), "1:2\n2:1\n3:");
}

TEST(AdjacencyList, ReconcilesOneSidedEntries)
{
    const auto r = parse_adjacency_list("1:2 3\n2:1\n3:\n");
    EXPECT_TRUE(r.graph.has_edge(0, 2));
    ASSERT_EQ(r.warnings.size(), 1U);
    EXPECT_EQ(r.warnings[0].kind, WarningKind::Unreciprocated);
    EXPECT_EQ(r.warnings[0].u, 0);
    EXPECT_EQ(r.warnings[0].v, 2);
    EXPECT_EQ(r.warnings[0].line, 1);
}

TEST(AdjacencyList, ErrorsNameTheLine)
{
    try {
        parse_adjacency_list("1:2\n2:1 7\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2);
    }
    EXPECT_THROW(parse_adjacency_list("1:2\n1:2\n"), ParseError);
    EXPECT_THROW(parse_adjacency_list("1:2\n3:1\n"), ParseError);
    EXPECT_THROW(parse_adjacency_list("1 2\n"), ParseError);
    EXPECT_THROW(parse_adjacency_list("1:x\n"), ParseError);
    EXPECT_THROW(parse_adjacency_list("1:2,3\n2:1\n3:1\n"), ParseError);
    EXPECT_THROW(parse_adjacency_list(""), ParseError);
}

TEST(AdjacencyList, RoundTripsRandomGraphs)
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 64);
        const Graph g = oracle::random_graph(n, 0.2, rng);
        const auto r = parse_adjacency_list(emit_adjacency_list(g));
        EXPECT_TRUE(r.warnings.empty());
        EXPECT_EQ(r.graph, g);
    }
}

TEST(AdjacencyList, AppendixGraphsParseCleanly)
{
    const auto data = load_appendix(default_data_dir() / "appendix");
    ASSERT_EQ(data.graphs.size(), 4U);
    for (const auto& ng : data.graphs) {
        EXPECT_EQ(ng.graph.order(), 40) << ng.name;
        EXPECT_TRUE(ng.warnings.empty()) << ng.name;
        EXPECT_EQ(decode_graph6(encode_graph6(ng.graph)), ng.graph);
    }
}

TEST(Files, SaveAndLoadBothFormats)
{
    const auto dir = std::filesystem::temp_directory_path() / "ramsey_graph_io_test";
    std::filesystem::remove_all(dir);
    const Graph g = fixtures::g1();
    save_graph(dir / "g1", g);
    EXPECT_EQ(load_graph(dir / "g1.adj").graph, g);
    EXPECT_EQ(load_graph(dir / "g1.g6").graph, g);
    EXPECT_THROW(load_graph(dir / "missing.adj"), ParseError);
    std::filesystem::remove_all(dir);
}
