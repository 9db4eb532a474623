#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/bounds.hpp"
#include "ramsey/counting.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/graph_io.hpp"

namespace ramsey {

/// Exact verdict on whether g is an r(p,q,n) graph.
struct Certificate
{
    int p = 0;
    int q = 0;
    int n = 0;
    bool is_witness = false;
    Count clique_count = 0;
    Count indep_count = 0;
    /// Lexicographically first offending subsets, 0-indexed.
    std::optional<std::vector<int>> clique_violation;
    std::optional<std::vector<int>> indep_violation;
    /// Degree check against degree_range(p,q,n); empty when the range
    /// cannot be computed from exactly known values.
    std::optional<DegreeRange> degree_range;
    std::optional<bool> degree_feasible;
};

/// Exact counts, no caps. Requires 1 <= p,q <= n.
Certificate certify(const Graph& g, int p, int q);

/// Re-checks every reported violation against g via induced subgraphs.
bool recheck(const Certificate& c, const Graph& g);

struct NamedGraph
{
    std::string name;
    Graph graph;
    std::vector<ParseWarning> warnings;
};

/// Graphs A-D in file order.
struct AppendixDataset
{
    std::vector<NamedGraph> graphs;

    const NamedGraph& at(const std::string& name) const;
};

/// Reads graph_a.adj .. graph_d.adj from `dir`; throws ParseError when a
/// file is missing or malformed.
AppendixDataset load_appendix(const std::filesystem::path& dir);

std::filesystem::path default_data_dir();

/// A published value next to the value we computed.
struct Claim
{
    std::string subject;
    std::string quantity;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct AppendixRow
{
    std::string name;
    int vertices = 0;
    int edges = 0;
    std::size_t warnings = 0;
    Count triangles = 0;
    Count ten_independent_sets = 0;
    Count fitness_total = 0;
    int independence_number = 0;
};

struct AppendixReport
{
    std::vector<AppendixRow> rows;
    std::vector<Claim> claims;
    /// Whether every graph has the same subgraph on vertices 1-35.
    bool shared_base = false;
    std::vector<std::string> base_mismatches;

    bool all_claims_pass() const;
};

/// Triangle counts (3,3,2,2) and 10-independent-set counts (0,0,0,0) are
/// checked against exact computation. Failures are recorded, never raised.
AppendixReport verify_appendix(const AppendixDataset& data);

struct DeletionRow
{
    std::string graph;
    int vertex = 0; // 1-indexed, as printed
    Count triangles = 0;
    Count ten_independent_sets = 0;
    bool is_witness = false;
    /// True unless the vertex lay on no triangle yet the triangle count changed.
    bool consistent = true;
};

struct IsomorphismPair
{
    std::string a;
    std::string b;
    bool isomorphic = false;
};

struct DeletionReport
{
    /// The four named deletions with their certificates.
    std::vector<DeletionRow> named;
    std::vector<Claim> claims;
    /// Every single-vertex deletion of every graph, ordered by (graph, vertex).
    std::vector<DeletionRow> scan;
    std::vector<IsomorphismPair> named_isomorphism;

    std::vector<DeletionRow> witnesses() const;
    bool all_claims_pass() const;
};

/// Certifies A-37, A-38, C-3 and C-38 (1-indexed) at (3,10), scans all
/// single deletions, and compares the named results pairwise for isomorphism.
DeletionReport verify_deletions(const AppendixDataset& data, int threads = 1);

} // namespace ramsey
