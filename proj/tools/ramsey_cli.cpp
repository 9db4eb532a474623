#include <iostream>

#include <CLI11.hpp>

#include "ramsey/cli.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/parallel.hpp"

using namespace ramsey;

namespace {

/// Flags given on the command line override values loaded with --config.
struct SearchFlags
{
    std::string config_file;
    RunConfig config;
    std::string mode = "full";
    std::string degree_range;
    std::string base;
    std::string output;
    Count ceiling = 0;
    bool no_adjacency = false;
    bool no_graph6 = false;
};

void add_search(CLI::App& app, SearchFlags& f, int& code)
{
    auto* cmd = app.add_subcommand("search", "run the bee colony search for an r(p,q,n) graph");
    SearchParams& s = f.config.search;
    cmd->add_option("--config", f.config_file, "load a run config (JSON); other flags override it")
        ->check(CLI::ExistingFile);
    cmd->add_option("--p", s.p, "clique order to avoid");
    cmd->add_option("--q", s.q, "independent-set order to avoid");
    cmd->add_option("--n", s.n, "vertex count (full mode)");
    cmd->add_option("--mode", f.mode, "full | extension");
    cmd->add_option("--base", f.base, "base graph file (extension mode)");
    cmd->add_option("--added", s.added_vertices, "vertices added to the base (extension mode)");
    cmd->add_option("--degree-range", f.degree_range, "lo..hi for added vertices (extension mode)");
    cmd->add_option("--colony", s.colony_size, "number of bees");
    cmd->add_option("--maxlimit", s.maxlimit, "stagnation rounds before an employed bee scouts");
    cmd->add_option("--alpha", s.alpha, "onlooker selection scale in (0,1]");
    cmd->add_option("--seed", s.seed, "master seed");
    cmd->add_option("--budget", s.budget, "fitness evaluations before giving up");
    cmd->add_option("--density", s.init_density, "edge probability of random graphs (negative: automatic)");
    cmd->add_option("--ceiling", f.ceiling, "per-count cap while searching (0: exact)");
    cmd->add_option("--threads", s.threads, "worker threads");
    cmd->add_option("--output", f.output, "run directory root (overrides $RAMSEY_OUTPUT_DIR)");
    cmd->add_flag("--no-adj", f.no_adjacency, "skip adjacency-list graph files");
    cmd->add_flag("--no-g6", f.no_graph6, "skip graph6 graph files");
    cmd->callback([cmd, &f, &code] {
        RunConfig config;
        if (!f.config_file.empty()) {
            try {
                config = load_config(f.config_file);
            } catch (const ParseError& e) {
                std::cerr << "data error: " << e.what() << '\n';
                code = kExitData;
                return;
            } catch (const std::invalid_argument& e) {
                std::cerr << "usage error: " << e.what() << '\n';
                code = kExitUsage;
                return;
            }
        } else {
            for (const char* required : {"--p", "--q"}) {
                if (cmd->count(required) == 0) {
                    throw CLI::RequiredError(required);
                }
            }
            config.search.threads = default_threads();
        }
        if (const char* env = std::getenv(kOutputDirEnv); env && *env) {
            config.output_dir = env;
        }
        const SearchParams& s = f.config.search;
        const auto given = [&](const char* flag) { return cmd->count(flag) > 0; };
        if (given("--p")) config.search.p = s.p;
        if (given("--q")) config.search.q = s.q;
        if (given("--n")) config.search.n = s.n;
        if (given("--added")) config.search.added_vertices = s.added_vertices;
        if (given("--colony")) config.search.colony_size = s.colony_size;
        if (given("--maxlimit")) config.search.maxlimit = s.maxlimit;
        if (given("--alpha")) config.search.alpha = s.alpha;
        if (given("--seed")) config.search.seed = s.seed;
        if (given("--budget")) config.search.budget = s.budget;
        if (given("--density")) config.search.init_density = s.init_density;
        if (given("--threads")) config.search.threads = s.threads;
        if (given("--ceiling")) config.search.count_ceiling = f.ceiling == 0 ? kNoCap : f.ceiling;
        if (given("--output")) config.output_dir = f.output;
        if (given("--base")) config.base_path = f.base;
        if (given("--no-adj")) config.write_adjacency = false;
        if (given("--no-g6")) config.write_graph6 = false;
        try {
            if (given("--mode")) config.search.mode = parse_search_mode(f.mode);
            if (given("--degree-range")) {
                const auto [lo, hi] = parse_range(f.degree_range);
                config.search.degree_range = {lo, hi};
            }
        } catch (const std::invalid_argument& e) {
            std::cerr << "usage error: " << e.what() << '\n';
            code = kExitUsage;
            return;
        }
        code = cmd_search(std::move(config), std::cout, std::cerr);
    });
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Search for and certify Ramsey lower-bound graphs"};
    app.require_subcommand(1);
    int code = kExitOk;

    SearchFlags search;
    add_search(app, search, code);

    std::string record;
    std::optional<int> replay_threads;
    auto* replay = app.add_subcommand("replay", "re-run a recorded search and compare histories");
    replay->add_option("record", record, "record.json of an earlier run")->required()->check(CLI::ExistingFile);
    replay->add_option("--threads", replay_threads, "worker threads");
    replay->callback([&] { code = cmd_replay(record, replay_threads, std::cout, std::cerr); });

    std::vector<std::string> verify_files;
    int verify_p = 0;
    int verify_q = 0;
    auto* verify = app.add_subcommand("verify", "certify graph files as r(p,q,n) graphs");
    verify->add_option("files", verify_files, "adjacency-list or .g6 files")->required();
    verify->add_option("--p", verify_p)->required();
    verify->add_option("--q", verify_q)->required();
    verify->callback([&] {
        code = cmd_verify({verify_files.begin(), verify_files.end()}, verify_p, verify_q, std::cout, std::cerr);
    });

    AppendixOptions appendix;
    appendix.threads = default_threads();
    std::string records_path;
    bool skip_deletions = false;
    auto* va = app.add_subcommand("verify-appendix", "check the published claims about graphs A-D");
    va->add_option("--data-dir", appendix.data_dir, "directory holding graph_a.adj .. graph_d.adj");
    va->add_option("--threads", appendix.threads, "worker threads for the deletion scan");
    va->add_option("--records", records_path, "write JSON-lines records here");
    va->add_flag("--no-deletions", skip_deletions, "skip the vertex-deletion checks");
    va->callback([&] {
        appendix.deletions = !skip_deletions;
        if (!records_path.empty()) {
            appendix.records_path = records_path;
        }
        code = cmd_verify_appendix(appendix, std::cout, std::cerr);
    });

    CountOptions count;
    std::string indep_range;
    std::string clique_range;
    auto* cnt = app.add_subcommand("count", "count cliques and independent sets");
    cnt->add_option("--file", count.file, "graph file")->required();
    cnt->add_option("--p", count.p, "clique order for the fitness report");
    cnt->add_option("--q", count.q, "independent-set order for the fitness report");
    cnt->add_option("--indep", indep_range, "independent-set sizes, k or lo..hi");
    cnt->add_option("--cliques", clique_range, "clique sizes, k or lo..hi");
    cnt->callback([&] {
        try {
            if (!indep_range.empty()) count.indep = parse_range(indep_range);
            if (!clique_range.empty()) count.cliques = parse_range(clique_range);
        } catch (const std::invalid_argument& e) {
            std::cerr << "usage error: " << e.what() << '\n';
            code = kExitUsage;
            return;
        }
        code = cmd_count(count, std::cout, std::cerr);
    });

    int bp = 0;
    int bq = 0;
    std::optional<int> bn;
    auto* bounds = app.add_subcommand("bounds", "known Ramsey values and the degree range of r(p,q,n) graphs");
    bounds->add_option("p", bp)->required();
    bounds->add_option("q", bq)->required();
    bounds->add_option("n", bn);
    bounds->callback([&] { code = cmd_bounds(bp, bq, bn, std::cout, std::cerr); });

    int tf_k = 0;
    std::optional<std::string> tf_out;
    auto* tf = app.add_subcommand("enumerate-tf", "triangle-free graphs on k vertices up to isomorphism");
    tf->add_option("k", tf_k)->required();
    tf->add_option("--out", tf_out, "also write the list to this file");
    tf->callback([&] {
        std::optional<std::filesystem::path> file;
        if (tf_out) file = *tf_out;
        code = cmd_enumerate_tf(tf_k, file, std::cout, std::cerr);
    });

    std::filesystem::path base_appendix = std::filesystem::path(RAMSEY_DATA_DIR) / "appendix";
    std::filesystem::path base_stem = std::filesystem::path(RAMSEY_DATA_DIR) / "base" / "r3_9_35";
    auto* eb = app.add_subcommand("extract-base", "write vertices 1-35 of graph A and check them");
    eb->add_option("--data-dir", base_appendix, "appendix directory");
    eb->add_option("--out", base_stem, "output path without extension");
    eb->callback([&] { code = cmd_extract_base(base_appendix, base_stem, std::cout, std::cerr); });

    std::string iso_a;
    std::string iso_b;
    auto* iso = app.add_subcommand("isomorphic", "test two graph files for isomorphism");
    iso->add_option("a", iso_a)->required();
    iso->add_option("b", iso_b)->required();
    iso->callback([&] { code = cmd_isomorphic(iso_a, iso_b, std::cout, std::cerr); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e);
        return status == 0 ? kExitOk : kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return code;
}
