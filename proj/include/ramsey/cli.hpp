#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/run_io.hpp"

namespace ramsey {

enum ExitCode : int
{
    kExitOk = 0,
    /// A verified graph is not a witness, or a replay diverged.
    kExitNegative = 1,
    kExitUsage = 2,
    kExitData = 3,
    kExitBudget = 4,
    kExitClaim = 5,
};

/// Parses "a..b" or a single integer "a" into an inclusive range.
std::pair<int, int> parse_range(const std::string& text);

/// Output root: $RAMSEY_OUTPUT_DIR when set, else `configured`.
std::filesystem::path output_root(const std::filesystem::path& configured);

/// Runs the search and writes config.json, record.json, history.csv and
/// best.{adj,g6} into a fresh run directory, plus witness.{adj,g6} on success.
int cmd_search(RunConfig config, std::ostream& out, std::ostream& err);

/// Re-runs the config and seed stored in a run record and compares the histories.
int cmd_replay(const std::filesystem::path& record_path, std::optional<int> threads, std::ostream& out,
               std::ostream& err);

int cmd_verify(const std::vector<std::filesystem::path>& paths, int p, int q, std::ostream& out, std::ostream& err);

struct AppendixOptions
{
    std::filesystem::path data_dir = std::filesystem::path(RAMSEY_DATA_DIR) / "appendix";
    bool deletions = true;
    int threads = 1;
    /// Structured records, one JSON object per line.
    std::optional<std::filesystem::path> records_path;
};

int cmd_verify_appendix(const AppendixOptions& options, std::ostream& out, std::ostream& err);

struct CountOptions
{
    std::filesystem::path file;
    std::optional<int> p;
    std::optional<int> q;
    std::optional<std::pair<int, int>> indep;
    std::optional<std::pair<int, int>> cliques;
};

int cmd_count(const CountOptions& options, std::ostream& out, std::ostream& err);

int cmd_bounds(int p, int q, std::optional<int> n, std::ostream& out, std::ostream& err);

/// Prints one graph6 line per class; also writes them to `file` when given.
int cmd_enumerate_tf(int k, const std::optional<std::filesystem::path>& file, std::ostream& out, std::ostream& err);

/// Writes vertices 1-35 of appendix graph A to `<stem>.adj` and `<stem>.g6`
/// and checks the base-graph properties.
int cmd_extract_base(const std::filesystem::path& appendix_dir, const std::filesystem::path& stem, std::ostream& out,
                     std::ostream& err);

int cmd_isomorphic(const std::filesystem::path& a, const std::filesystem::path& b, std::ostream& out,
                   std::ostream& err);

} // namespace ramsey
