#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <sys/wait.h>

#include "oracle.hpp"
#include "ramsey/cli.hpp"
#include "ramsey/graph_io.hpp"
#include "ramsey/verify.hpp"

using namespace ramsey;

namespace {

struct Captured
{
    int code;
    std::string out;
    std::string err;
};

template <class F>
Captured capture(F&& f)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = f(out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / ("ramsey_cli_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

/// Runs the built executable; returns its exit status.
int run_cli(const std::string& args, const std::filesystem::path& log)
{
    const std::string cmd = std::string(RAMSEY_CLI_PATH) + " " + args + " > " + log.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::filesystem::path only_subdirectory(const std::filesystem::path& dir)
{
    std::vector<std::filesystem::path> found;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        found.push_back(e.path());
    }
    EXPECT_EQ(found.size(), 1U);
    return found.empty() ? dir : found.front();
}

} // namespace

TEST(Cli, ParseRange)
{
    EXPECT_EQ(parse_range("5..8"), (std::pair{5, 8}));
    EXPECT_EQ(parse_range("7"), (std::pair{7, 7}));
    EXPECT_THROW(parse_range("8..5"), std::invalid_argument);
    EXPECT_THROW(parse_range("a..b"), std::invalid_argument);
}

TEST(Cli, SearchWritesRunDirectory)
{
    const auto dir = scratch("search");
    RunConfig c;
    c.search.p = 3;
    c.search.q = 3;
    c.search.n = 5;
    c.search.seed = 1;
    c.output_dir = dir;
    ::unsetenv(kOutputDirEnv);
    const auto r = capture([&](auto& o, auto& e) { return cmd_search(c, o, e); });
    EXPECT_EQ(r.code, kExitOk) << r.err;
    const auto run_dir = only_subdirectory(dir);
    EXPECT_NE(run_dir.filename().string().find("-seed1"), std::string::npos);
    for (const char* f : {"config.json", "record.json", "history.csv", "best.adj", "best.g6", "witness.adj",
                          "witness.g6"}) {
        EXPECT_TRUE(std::filesystem::exists(run_dir / f)) << f;
    }
    const Graph w = load_graph(run_dir / "witness.adj").graph;
    EXPECT_EQ(load_graph(run_dir / "witness.g6").graph, w);
    EXPECT_TRUE(certify(w, 3, 3).is_witness);

    const auto replay = capture([&](auto& o, auto& e) { return cmd_replay(run_dir / "record.json", 3, o, e); });
    EXPECT_EQ(replay.code, kExitOk) << replay.out << replay.err;
    std::filesystem::remove_all(dir);
}

TEST(Cli, SearchBudgetExhaustionHasItsOwnCode)
{
    const auto dir = scratch("budget");
    RunConfig c;
    c.search.p = 3;
    c.search.q = 3;
    c.search.n = 6;
    c.search.budget = 200;
    c.output_dir = dir;
    ::setenv(kOutputDirEnv, (dir / "env").c_str(), 1);
    const auto r = capture([&](auto& o, auto& e) { return cmd_search(c, o, e); });
    ::unsetenv(kOutputDirEnv);
    EXPECT_EQ(r.code, kExitBudget);
    // The environment variable overrides the configured root.
    const auto run_dir = only_subdirectory(dir / "env");
    EXPECT_FALSE(std::filesystem::exists(run_dir / "witness.adj"));
    EXPECT_TRUE(std::filesystem::exists(run_dir / "best.adj"));
    std::filesystem::remove_all(dir);
}

TEST(Cli, SearchConfigErrorsAreUsageErrors)
{
    RunConfig c;
    c.search.q = 9;
    c.search.n = 5;
    const auto r = capture([&](auto& o, auto& e) { return cmd_search(c, o, e); });
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, VerifyReportsViolations)
{
    const auto dir = scratch("verify");
    save_graph(dir / "g1", fixtures::g1());
    save_graph(dir / "c5", cycle_graph(5));
    const auto bad = capture([&](auto& o, auto& e) { return cmd_verify({dir / "g1.adj"}, 3, 3, o, e); });
    EXPECT_EQ(bad.code, kExitNegative);
    EXPECT_NE(bad.out.find("clique {2,3,4}"), std::string::npos) << bad.out;
    EXPECT_NE(bad.out.find("independent set {1,3,5}"), std::string::npos) << bad.out;
    const auto good = capture([&](auto& o, auto& e) { return cmd_verify({dir / "c5.g6"}, 3, 3, o, e); });
    EXPECT_EQ(good.code, kExitOk);
    EXPECT_NE(good.out.find("WITNESS"), std::string::npos);
    const auto missing = capture([&](auto& o, auto& e) { return cmd_verify({dir / "nope.adj"}, 3, 3, o, e); });
    EXPECT_EQ(missing.code, kExitData);
    write_text_file(dir / "broken.adj", "1:2\n2:9\n");
    const auto broken = capture([&](auto& o, auto& e) { return cmd_verify({dir / "broken.adj"}, 1, 1, o, e); });
    EXPECT_EQ(broken.code, kExitData);
    EXPECT_NE(broken.err.find("line 2"), std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST(Cli, VerifyAppendix)
{
    const auto dir = scratch("appendix");
    AppendixOptions opts;
    opts.data_dir = default_data_dir() / "appendix";
    opts.threads = 4;
    opts.records_path = dir / "records.jsonl";
    const auto r = capture([&](auto& o, auto& e) { return cmd_verify_appendix(opts, o, e); });
    EXPECT_EQ(r.code, kExitOk) << r.out;
    EXPECT_NE(r.out.find("all claims confirmed"), std::string::npos);
    const std::string records = read_text_file(dir / "records.jsonl");
    std::size_t lines = 0;
    for (char ch : records) {
        lines += ch == '\n';
    }
    // 4 graphs + 12 claims + 4 deletion claims + 160 deletions + 6 pairs.
    EXPECT_EQ(lines, 186U);

    opts.data_dir = dir / "missing";
    opts.records_path.reset();
    EXPECT_EQ(capture([&](auto& o, auto& e) { return cmd_verify_appendix(opts, o, e); }).code, kExitData);
    std::filesystem::remove_all(dir);
}

TEST(Cli, CountBoundsEnumerate)
{
    const auto dir = scratch("count");
    const auto base = capture([&](auto& o, auto& e) {
        return cmd_extract_base(default_data_dir() / "appendix", dir / "base", o, e);
    });
    EXPECT_EQ(base.code, kExitOk) << base.out;
    EXPECT_EQ(base.out.find("FAIL"), std::string::npos);

    CountOptions count;
    count.file = dir / "base.adj";
    count.indep = std::pair{5, 8};
    const auto counted = capture([&](auto& o, auto& e) { return cmd_count(count, o, e); });
    EXPECT_EQ(counted.code, kExitOk);
    EXPECT_EQ(counted.out, "20265 22995 13760 3360\n");

    const auto bounds = capture([&](auto& o, auto& e) { return cmd_bounds(3, 10, 40, o, e); });
    EXPECT_NE(bounds.out.find("[4,9]"), std::string::npos);
    const auto odd = capture([&](auto& o, auto& e) { return cmd_bounds(4, 6, 36, o, e); });
    EXPECT_NE(odd.out.find("[11,17]"), std::string::npos);
    EXPECT_NE(odd.out.find("[11,24]"), std::string::npos);

    const auto tf = capture([&](auto& o, auto& e) { return cmd_enumerate_tf(5, dir / "tf5.txt", o, e); });
    EXPECT_EQ(tf.code, kExitOk);
    std::istringstream lines(tf.out);
    std::string line;
    int n = 0;
    while (std::getline(lines, line)) {
        EXPECT_EQ(decode_graph6(line).order(), 5);
        ++n;
    }
    EXPECT_EQ(n, 14);
    EXPECT_EQ(read_text_file(dir / "tf5.txt"), tf.out);
    std::filesystem::remove_all(dir);
}

TEST(CliBinary, ExitCodes)
{
    const auto dir = scratch("binary");
    const auto log = dir / "log.txt";
    const std::string out = " --output " + (dir / "runs").string();
    EXPECT_EQ(run_cli("search --p 3 --q 3 --n 5 --seed 1 --budget 10000 --threads 2" + out, log), 0);
    EXPECT_EQ(run_cli("search --q 3 --n 5" + out, log), 2);
    EXPECT_EQ(run_cli("search --p 3 --q 3 --n 6 --budget 100" + out, log), 4);
    EXPECT_EQ(run_cli("frobnicate", log), 2);
    EXPECT_EQ(run_cli("bounds 3 10 40", log), 0);
    EXPECT_NE(read_text_file(log).find("[4,9]"), std::string::npos);
    EXPECT_EQ(run_cli("verify " + (dir / "absent.adj").string() + " --p 3 --q 3", log), 3);
    save_graph(dir / "g1", fixtures::g1());
    EXPECT_EQ(run_cli("verify " + (dir / "g1.g6").string() + " --p 3 --q 3", log), 1);
    write_text_file(dir / "bad.adj", "1:2\n2:x\n");
    EXPECT_EQ(run_cli("count --file " + (dir / "bad.adj").string() + " --p 2 --q 2", log), 3);
    EXPECT_EQ(run_cli("verify-appendix --threads 2", log), 0);
    EXPECT_EQ(run_cli("enumerate-tf 9", log), 2);
    std::filesystem::remove_all(dir);
}

TEST(CliBinary, ConfigFileAndFlagOverrides)
{
    const auto dir = scratch("config");
    RunConfig c;
    c.search.p = 3;
    c.search.q = 3;
    c.search.n = 6;
    c.search.budget = 100;
    c.output_dir = dir / "runs";
    save_config(dir / "c.json", c);
    const auto log = dir / "log.txt";
    EXPECT_EQ(run_cli("search --config " + (dir / "c.json").string(), log), 4);
    EXPECT_EQ(run_cli("search --config " + (dir / "c.json").string() + " --n 5 --budget 10000", log), 0);
    write_text_file(dir / "bad.json", "{\"p\": 3, \"unknown\": 1}");
    EXPECT_EQ(run_cli("search --config " + (dir / "bad.json").string(), log), 2);
    std::filesystem::remove_all(dir);
}
