#include "ramsey/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <stdexcept>

#include "ramsey/errors.hpp"
#include "ramsey/graph_io.hpp"
#include "ramsey/isomorphism.hpp"
#include "ramsey/verify.hpp"

namespace ramsey {

using nlohmann::json;

namespace {

constexpr int kBaseOrder = 35;

struct IndepCountClaim
{
    int k;
    Count expected;
};

constexpr IndepCountClaim kBaseIndepCounts[] = {{5, 20265}, {6, 22995}, {7, 13760}, {8, 3360}};

int to_int(std::string_view s)
{
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    }
    return value;
}

std::string one_indexed(const std::vector<int>& vs)
{
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        s += (i ? "," : "") + std::to_string(vs[i] + 1);
    }
    return s + "}";
}

void write_graph_files(const std::filesystem::path& stem, const Graph& g, const RunConfig& config)
{
    if (config.write_adjacency) {
        write_text_file(stem.string() + ".adj", emit_adjacency_list(g) + "\n");
    }
    if (config.write_graph6) {
        write_text_file(stem.string() + ".g6", encode_graph6(g) + "\n");
    }
}

std::filesystem::path fresh_directory(const std::filesystem::path& wanted)
{
    std::filesystem::path dir = wanted;
    for (int i = 1; std::filesystem::exists(dir); ++i) {
        dir = wanted.string() + "-" + std::to_string(i);
    }
    std::filesystem::create_directories(dir);
    return dir;
}

void print_pass_fail(std::ostream& out, bool pass, const std::string& what)
{
    out << (pass ? "PASS  " : "FAIL  ") << what << '\n';
}

void print_claim(std::ostream& out, const Claim& c)
{
    print_pass_fail(out, c.pass,
                    c.subject + ": " + c.quantity + " expected " + c.expected + ", computed " + c.computed);
}

json claim_json(const Claim& c)
{
    return {{"subject", c.subject},
            {"quantity", c.quantity},
            {"expected", c.expected},
            {"computed", c.computed},
            {"pass", c.pass}};
}

} // namespace

std::pair<int, int> parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int k = to_int(text);
        return {k, k};
    }
    const int lo = to_int(std::string_view(text).substr(0, dots));
    const int hi = to_int(std::string_view(text).substr(dots + 2));
    if (lo > hi) {
        throw std::invalid_argument("empty range '" + text + "'");
    }
    return {lo, hi};
}

std::filesystem::path output_root(const std::filesystem::path& configured)
{
    const char* env = std::getenv(kOutputDirEnv);
    return env && *env ? std::filesystem::path(env) : configured;
}

int cmd_search(RunConfig config, std::ostream& out, std::ostream& err)
{
    try {
        resolve(config);
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "data error: " << e.what() << '\n';
        return kExitData;
    }

    const auto started = std::chrono::steady_clock::now();
    std::optional<SearchResult> found;
    try {
        found = run(config.search);
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << '\n';
        return kExitData;
    }
    const SearchResult& result = *found;
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    const auto dir = fresh_directory(
        run_directory(output_root(config.output_dir), config.search.seed, std::chrono::system_clock::now()));
    const RunRecord record = make_record(config, result, wall);
    save_config(dir / "config.json", config);
    save_record(dir / "record.json", record);
    write_text_file(dir / "history.csv", history_csv(result.history));
    write_graph_files(dir / "best", result.best_graph, config);
    const bool witness = result.reason == Termination::WitnessFound;
    if (witness) {
        write_graph_files(dir / "witness", result.best_graph, config);
    }

    out << "mode        " << to_string(config.search.mode) << '\n'
        << "target      r(" << config.search.p << ',' << config.search.q << ',' << result.best_graph.order() << ")\n"
        << "seed        " << config.search.seed << '\n'
        << "outcome     " << to_string(result.reason) << '\n'
        << "rounds      " << result.rounds << '\n'
        << "evaluations " << result.evaluations << '\n'
        << "best        cliques " << result.best_fitness.clique_count << ", independent sets "
        << result.best_fitness.indep_count << ", total " << result.best_fitness.total << '\n'
        << "graph6      " << encode_graph6(result.best_graph) << '\n'
        << "run dir     " << dir.string() << '\n';
    return witness ? kExitOk : kExitBudget;
}

int cmd_replay(const std::filesystem::path& record_path, std::optional<int> threads, std::ostream& out,
               std::ostream& err)
{
    RunRecord record;
    RunConfig config;
    try {
        record = load_record(record_path);
        config = record.config;
        if (threads) {
            config.search.threads = *threads;
        }
        resolve(config);
    } catch (const ParseError& e) {
        err << "data error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    const SearchResult result = run(config.search);
    const std::string expected = history_csv(record.history);
    const std::string actual = history_csv(result.history);
    if (expected == actual && encode_graph6(result.best_graph) == record.best_graph6) {
        out << "replay identical: " << result.history.size() << " rounds, " << result.evaluations
            << " evaluations\n";
        return kExitOk;
    }
    std::size_t round = 0;
    while (round < record.history.size() && round < result.history.size() &&
           history_csv({record.history[round]}) == history_csv({result.history[round]})) {
        ++round;
    }
    out << "replay diverged at history row " << round << '\n';
    return kExitNegative;
}

int cmd_verify(const std::vector<std::filesystem::path>& paths, int p, int q, std::ostream& out, std::ostream& err)
{
    bool all_witnesses = true;
    for (const auto& path : paths) {
        ParseReport report{Graph(1), {}};
        try {
            report = load_graph(path);
        } catch (const ParseError& e) {
            err << path.string() << ": " << e.what() << '\n';
            return kExitData;
        } catch (const std::invalid_argument& e) {
            err << path.string() << ": " << e.what() << '\n';
            return kExitData;
        }
        for (const auto& w : report.warnings) {
            err << path.string() << ": warning: " << describe(w) << '\n';
        }
        const Graph& g = report.graph;
        if (p < 1 || q < 1 || p > g.order() || q > g.order()) {
            err << "usage error: need 1 <= p,q <= " << g.order() << '\n';
            return kExitUsage;
        }
        const Certificate c = certify(g, p, q);
        out << path.string() << ": n=" << g.order() << " p=" << p << " q=" << q << ' '
            << (c.is_witness ? "WITNESS" : "NOT A WITNESS") << '\n'
            << "  " << p << "-cliques " << c.clique_count << ", " << q << "-independent sets " << c.indep_count
            << '\n';
        if (c.clique_violation) {
            out << "  clique " << one_indexed(*c.clique_violation) << '\n';
        }
        if (c.indep_violation) {
            out << "  independent set " << one_indexed(*c.indep_violation) << '\n';
        }
        if (c.degree_range) {
            out << "  degree range [" << c.degree_range->lo << ',' << c.degree_range->hi << "] "
                << (*c.degree_feasible ? "satisfied" : "violated") << '\n';
        }
        all_witnesses = all_witnesses && c.is_witness;
    }
    return all_witnesses ? kExitOk : kExitNegative;
}

int cmd_verify_appendix(const AppendixOptions& options, std::ostream& out, std::ostream& err)
{
    AppendixDataset data;
    try {
        data = load_appendix(options.data_dir);
    } catch (const ParseError& e) {
        err << "data error: " << e.what() << '\n';
        return kExitData;
    }
    std::vector<json> records;
    const AppendixReport report = verify_appendix(data);

    out << "graph  n   edges  warnings  triangles  10-indep  fitness  alpha\n";
    for (const auto& r : report.rows) {
        out << std::left << std::setw(7) << r.name << std::setw(4) << r.vertices << std::setw(7) << r.edges
            << std::setw(10) << r.warnings << std::setw(11) << r.triangles << std::setw(10)
            << r.ten_independent_sets << std::setw(9) << r.fitness_total << r.independence_number << '\n';
        records.push_back({{"record", "appendix-graph"},
                           {"graph", r.name},
                           {"vertices", r.vertices},
                           {"edges", r.edges},
                           {"parse_warnings", r.warnings},
                           {"triangles", r.triangles},
                           {"ten_independent_sets", r.ten_independent_sets},
                           {"fitness_total", r.fitness_total},
                           {"independence_number", r.independence_number}});
    }
    out << std::right << '\n';
    for (const auto& ng : data.graphs) {
        for (const auto& w : ng.warnings) {
            out << "warning: graph " << ng.name << ": " << describe(w) << '\n';
        }
    }
    for (const auto& c : report.claims) {
        print_claim(out, c);
        records.push_back({{"record", "claim"}, {"claim", claim_json(c)}});
    }
    out << "shared base on vertices 1-35: " << (report.shared_base ? "yes" : "no") << '\n';
    for (const auto& m : report.base_mismatches) {
        out << "  " << m << '\n';
    }
    bool claims_pass = report.all_claims_pass();

    if (options.deletions) {
        const DeletionReport del = verify_deletions(data, options.threads);
        out << "\nnamed deletions at (3,10):\n";
        for (const auto& c : del.claims) {
            print_claim(out, c);
            records.push_back({{"record", "claim"}, {"claim", claim_json(c)}});
        }
        for (const auto& r : del.scan) {
            records.push_back({{"record", "deletion"},
                               {"graph", r.graph},
                               {"vertex", r.vertex},
                               {"triangles", r.triangles},
                               {"ten_independent_sets", r.ten_independent_sets},
                               {"witness", r.is_witness},
                               {"consistent", r.consistent}});
            if (!r.consistent) {
                out << "inconsistent deletion: graph " << r.graph << " vertex " << r.vertex << '\n';
            }
        }
        const auto witnesses = del.witnesses();
        out << "\nall " << del.scan.size() << " single deletions scanned; " << witnesses.size()
            << " give r(3,10,39) graphs:\n";
        for (const auto& r : witnesses) {
            out << "  graph " << r.graph << " minus vertex " << r.vertex << '\n';
        }
        out << "\nisomorphism between named deletions:\n";
        for (const auto& iso : del.named_isomorphism) {
            out << "  " << iso.a << " vs " << iso.b << ": " << (iso.isomorphic ? "isomorphic" : "not isomorphic")
                << '\n';
            records.push_back(
                {{"record", "isomorphism"}, {"a", iso.a}, {"b", iso.b}, {"isomorphic", iso.isomorphic}});
        }
        claims_pass = claims_pass && del.all_claims_pass();
    }

    if (options.records_path) {
        std::string text;
        for (const auto& r : records) {
            text += r.dump() + "\n";
        }
        write_text_file(*options.records_path, text);
    }
    out << "\n" << (claims_pass ? "all claims confirmed" : "some claims contradicted") << '\n';
    return claims_pass ? kExitOk : kExitClaim;
}

int cmd_count(const CountOptions& options, std::ostream& out, std::ostream& err)
{
    if (!options.indep && !options.cliques && !(options.p && options.q)) {
        err << "usage error: give --p and --q, --indep, or --cliques\n";
        return kExitUsage;
    }
    ParseReport report{Graph(1), {}};
    try {
        report = load_graph(options.file);
    } catch (const std::exception& e) {
        err << options.file.string() << ": " << e.what() << '\n';
        return kExitData;
    }
    const Graph& g = report.graph;
    for (const auto& w : report.warnings) {
        err << "warning: " << describe(w) << '\n';
    }
    try {
        if (options.p && options.q) {
            const FitnessReport f = fitness(g, *options.p, *options.q);
            out << "cliques " << f.clique_count << " independent_sets " << f.indep_count << " total " << f.total
                << '\n';
        }
        const auto print_counts = [&](std::pair<int, int> range, auto count) {
            for (int k = range.first; k <= range.second; ++k) {
                out << (k == range.first ? "" : " ") << count(g, k);
            }
            out << '\n';
        };
        if (options.cliques) {
            print_counts(*options.cliques, [](const Graph& h, int k) { return count_cliques(h, k); });
        }
        if (options.indep) {
            print_counts(*options.indep, [](const Graph& h, int k) { return count_independent_sets(h, k); });
        }
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_bounds(int p, int q, std::optional<int> n, std::ostream& out, std::ostream& err)
{
    try {
        const RamseyValue r = known_ramsey(p, q);
        out << "R(" << p << ',' << q << ") ";
        if (!r.known) {
            out << "unknown\n";
        } else if (r.exact()) {
            out << "= " << r.lower << '\n';
        } else {
            out << "in [" << r.lower << ',' << r.upper << "]\n";
        }
        if (p == q) {
            out << "probabilistic lower bound " << std::fixed << std::setprecision(5) << erdos_diagonal_lower(p)
                << std::defaultfloat << '\n';
        }
        if (n) {
            const DegreeRange d = degree_range(p, q, *n);
            out << "degree range [" << d.lo << ',' << d.hi << "]\n";
            if (const auto printed = printed_degree_range(p, q, *n); printed && !printed->agrees()) {
                out << "note: published table prints [" << printed->printed.lo << ',' << printed->printed.hi
                    << "]; " << printed->note << '\n';
            }
        }
    } catch (const UnsupportedInstance& e) {
        err << "cannot compute: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_enumerate_tf(int k, const std::optional<std::filesystem::path>& file, std::ostream& out, std::ostream& err)
{
    std::vector<InnerGraph> classes;
    try {
        classes = enumerate_triangle_free(k);
    } catch (const std::exception& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    std::string text;
    for (const auto& c : classes) {
        text += encode_graph6(c.graph) + "\n";
    }
    out << text;
    if (file) {
        write_text_file(*file, text);
    }
    return kExitOk;
}

int cmd_extract_base(const std::filesystem::path& appendix_dir, const std::filesystem::path& stem, std::ostream& out,
                     std::ostream& err)
{
    AppendixDataset data;
    try {
        data = load_appendix(appendix_dir);
    } catch (const ParseError& e) {
        err << "data error: " << e.what() << '\n';
        return kExitData;
    }
    const Graph& a = data.at("A").graph;
    if (a.order() < kBaseOrder) {
        err << "data error: graph A has fewer than 35 vertices\n";
        return kExitData;
    }
    const Graph base = induced_subgraph(a, low_mask(kBaseOrder));
    save_graph(stem, base);
    const Graph reread = load_graph(stem.string() + ".adj").graph;

    bool ok = true;
    const auto check = [&](bool pass, const std::string& what) {
        print_pass_fail(out, pass, what);
        ok = ok && pass;
    };
    check(reread == base && decode_graph6(encode_graph6(base)) == base, "base files re-read identically");
    const auto degs = base.degree_sequence();
    check(std::all_of(degs.begin(), degs.end(), [](int d) { return d == 8; }), "8-regular");
    check(count_cliques(base, 3) == 0, "triangle-free");
    const int alpha = max_independent_set(base).size;
    check(alpha == 8, "independence number 8 (computed " + std::to_string(alpha) + ")");
    for (const auto& [k, expected] : kBaseIndepCounts) {
        const Count got = count_independent_sets(base, k);
        check(got == expected, std::to_string(k) + "-independent sets expected " + std::to_string(expected) +
                                   ", computed " + std::to_string(got));
    }
    out << "wrote " << stem.string() << ".adj and " << stem.string() << ".g6\n";
    return ok ? kExitOk : kExitClaim;
}

int cmd_isomorphic(const std::filesystem::path& a, const std::filesystem::path& b, std::ostream& out,
                   std::ostream& err)
{
    std::optional<Graph> g;
    std::optional<Graph> h;
    try {
        g = load_graph(a).graph;
        h = load_graph(b).graph;
    } catch (const std::exception& e) {
        err << "data error: " << e.what() << '\n';
        return kExitData;
    }
    const auto mapping = is_isomorphic(*g, *h);
    if (!mapping) {
        out << "not isomorphic\n";
        return kExitNegative;
    }
    out << "isomorphic:";
    for (std::size_t v = 0; v < mapping->size(); ++v) {
        out << ' ' << v + 1 << "->" << (*mapping)[v] + 1;
    }
    out << '\n';
    return kExitOk;
}

} // namespace ramsey
