#include "ramsey/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "ramsey/errors.hpp"
#include "ramsey/isomorphism.hpp"
#include "ramsey/parallel.hpp"

namespace ramsey {

namespace {

constexpr int kBaseOrder = 35;

struct NamedDeletion
{
    const char* graph;
    int vertex; // 1-indexed
};

constexpr NamedDeletion kNamedDeletions[] = {{"A", 37}, {"A", 38}, {"C", 3}, {"C", 38}};

struct AppendixClaimRow
{
    const char* name;
    Count triangles;
    Count ten_independent_sets;
};

constexpr AppendixClaimRow kAppendixClaims[] = {{"A", 3, 0}, {"B", 3, 0}, {"C", 2, 0}, {"D", 2, 0}};

Claim make_claim(std::string subject, std::string quantity, Count expected, Count computed)
{
    return {std::move(subject), std::move(quantity), std::to_string(expected), std::to_string(computed),
            expected == computed};
}

bool is_complete(const Graph& g, const std::vector<int>& vs)
{
    const Graph h = induced_subgraph(g, vertices_to_mask(vs, g.order()));
    return h.edge_count() * 2 == h.order() * (h.order() - 1);
}

DeletionRow delete_and_certify(const NamedGraph& ng, int vertex1)
{
    const Graph& g = ng.graph;
    const int v = vertex1 - 1;
    const Graph h = delete_vertex(g, v).graph;
    const Certificate c = certify(h, 3, 10);
    DeletionRow row{ng.name, vertex1, c.clique_count, c.indep_count, c.is_witness, true};
    const auto nb = g.neighbors(v);
    bool on_triangle = false;
    for_each_vertex(nb, [&](int w) {
        if (g.neighbors(w) & nb) {
            on_triangle = true;
        }
    });
    if (!on_triangle && row.triangles != count_cliques(g, 3)) {
        row.consistent = false;
    }
    return row;
}

} // namespace

Certificate certify(const Graph& g, int p, int q)
{
    Certificate c;
    c.p = p;
    c.q = q;
    c.n = g.order();
    c.clique_count = count_cliques(g, p);
    c.indep_count = count_independent_sets(g, q);
    if (c.clique_count > 0) {
        c.clique_violation = find_clique(g, p);
    }
    if (c.indep_count > 0) {
        c.indep_violation = find_independent_set(g, q);
    }
    c.is_witness = c.clique_count == 0 && c.indep_count == 0;
    if (p >= 2 && q >= 2) {
        try {
            const DegreeRange r = degree_range(p, q, g.order());
            c.degree_range = r;
            const auto degs = g.degree_sequence();
            c.degree_feasible = std::all_of(degs.begin(), degs.end(), [&](int d) { return r.contains(d); });
        } catch (const UnsupportedInstance&) {
        }
    }
    return c;
}

bool recheck(const Certificate& c, const Graph& g)
{
    if (c.clique_violation) {
        const auto& vs = *c.clique_violation;
        if (static_cast<int>(vs.size()) != c.p || !is_complete(g, vs)) {
            return false;
        }
    }
    if (c.indep_violation) {
        const auto& vs = *c.indep_violation;
        if (static_cast<int>(vs.size()) != c.q ||
            induced_subgraph(g, vertices_to_mask(vs, g.order())).edge_count() != 0) {
            return false;
        }
    }
    return c.is_witness == (c.clique_count == 0 && c.indep_count == 0) &&
           c.clique_violation.has_value() == (c.clique_count > 0) &&
           c.indep_violation.has_value() == (c.indep_count > 0);
}

const NamedGraph& AppendixDataset::at(const std::string& name) const
{
    for (const auto& g : graphs) {
        if (g.name == name) {
            return g;
        }
    }
    throw std::invalid_argument("no appendix graph named " + name);
}

AppendixDataset load_appendix(const std::filesystem::path& dir)
{
    AppendixDataset data;
    for (const char* name : {"A", "B", "C", "D"}) {
        std::string file = "graph_";
        file += static_cast<char>(name[0] - 'A' + 'a');
        file += ".adj";
        const auto path = dir / file;
        if (!std::filesystem::exists(path)) {
            throw ParseError(0, "appendix graph missing: " + path.string());
        }
        auto report = parse_adjacency_list(read_text_file(path));
        data.graphs.push_back({name, std::move(report.graph), std::move(report.warnings)});
    }
    return data;
}

std::filesystem::path default_data_dir()
{
    return std::filesystem::path(RAMSEY_DATA_DIR);
}

bool AppendixReport::all_claims_pass() const
{
    return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

AppendixReport verify_appendix(const AppendixDataset& data)
{
    AppendixReport report;
    for (const auto& expected : kAppendixClaims) {
        const NamedGraph& ng = data.at(expected.name);
        AppendixRow row;
        row.name = ng.name;
        row.vertices = ng.graph.order();
        row.edges = ng.graph.edge_count();
        row.warnings = ng.warnings.size();
        if (ng.graph.order() < 10) {
            throw ParseError(0, "appendix graph " + ng.name + " has fewer than 10 vertices");
        }
        const FitnessReport f = fitness(ng.graph, 3, 10);
        row.triangles = f.clique_count;
        row.ten_independent_sets = f.indep_count;
        row.fitness_total = f.total;
        row.independence_number = max_independent_set(ng.graph).size;
        report.rows.push_back(row);

        const std::string subject = "graph " + ng.name;
        report.claims.push_back(make_claim(subject, "triangles", expected.triangles, row.triangles));
        report.claims.push_back(
            make_claim(subject, "10-independent sets", expected.ten_independent_sets, row.ten_independent_sets));
        report.claims.push_back(make_claim(subject, "fitness(3,10)",
                                           expected.triangles + expected.ten_independent_sets, row.fitness_total));
    }

    report.shared_base = true;
    const Graph& first = data.graphs.front().graph;
    if (first.order() < kBaseOrder) {
        report.shared_base = false;
        report.base_mismatches.push_back("graph " + data.graphs.front().name + " has fewer than 35 vertices");
        return report;
    }
    const Graph reference = induced_subgraph(first, low_mask(kBaseOrder));
    for (const auto& ng : data.graphs) {
        if (ng.graph.order() < kBaseOrder) {
            report.shared_base = false;
            report.base_mismatches.push_back("graph " + ng.name + " has fewer than 35 vertices");
            continue;
        }
        const Graph base = induced_subgraph(ng.graph, low_mask(kBaseOrder));
        if (!(base == reference)) {
            report.shared_base = false;
            report.base_mismatches.push_back("graph " + ng.name + " differs from graph " + data.graphs.front().name +
                                             " on vertices 1-35 in " +
                                             std::to_string(edge_difference(base, reference)) + " edge(s)");
        }
    }
    return report;
}

std::vector<DeletionRow> DeletionReport::witnesses() const
{
    std::vector<DeletionRow> out;
    std::copy_if(scan.begin(), scan.end(), std::back_inserter(out), [](const DeletionRow& r) { return r.is_witness; });
    return out;
}

bool DeletionReport::all_claims_pass() const
{
    return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

DeletionReport verify_deletions(const AppendixDataset& data, int threads)
{
    DeletionReport report;
    std::vector<Graph> named_graphs;
    for (const auto& nd : kNamedDeletions) {
        const NamedGraph& ng = data.at(nd.graph);
        if (nd.vertex > ng.graph.order()) {
            throw ParseError(0, "graph " + ng.name + " has no vertex " + std::to_string(nd.vertex));
        }
        const DeletionRow row = delete_and_certify(ng, nd.vertex);
        report.named.push_back(row);
        report.claims.push_back({"graph " + ng.name + " minus vertex " + std::to_string(nd.vertex),
                                 "triangle-free with no 10-independent set", "true", row.is_witness ? "true" : "false",
                                 row.is_witness});
        named_graphs.push_back(delete_vertex(ng.graph, nd.vertex - 1).graph);
    }

    struct Job
    {
        const NamedGraph* graph;
        int vertex;
    };
    std::vector<Job> jobs;
    for (const auto& ng : data.graphs) {
        for (int v = 1; v <= ng.graph.order(); ++v) {
            jobs.push_back({&ng, v});
        }
    }
    report.scan.resize(jobs.size());
    parallel_for(jobs.size(), threads,
                 [&](std::size_t i) { report.scan[i] = delete_and_certify(*jobs[i].graph, jobs[i].vertex); });

    for (std::size_t i = 0; i < named_graphs.size(); ++i) {
        for (std::size_t j = i + 1; j < named_graphs.size(); ++j) {
            const auto label = [](const DeletionRow& r) { return r.graph + "-" + std::to_string(r.vertex); };
            report.named_isomorphism.push_back({label(report.named[i]), label(report.named[j]),
                                                is_isomorphic(named_graphs[i], named_graphs[j]).has_value()});
        }
    }
    return report;
}

} // namespace ramsey
