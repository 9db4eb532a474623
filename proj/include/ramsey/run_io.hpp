#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramsey/abc.hpp"

namespace ramsey {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kOutputDirEnv = "RAMSEY_OUTPUT_DIR";

/// Search parameters plus the paths and output toggles of a run.
/// `search.base` is not serialized; it is loaded from `base_path`.
struct RunConfig
{
    SearchParams search;
    std::filesystem::path output_dir = "runs";
    std::optional<std::filesystem::path> base_path;
    std::filesystem::path data_dir = std::filesystem::path(RAMSEY_DATA_DIR);
    bool write_adjacency = true;
    bool write_graph6 = true;
};

nlohmann::json config_to_json(const RunConfig& config);
/// Missing keys keep their defaults; unknown keys and wrongly typed values
/// throw std::invalid_argument.
RunConfig config_from_json(const nlohmann::json& j);

void save_config(const std::filesystem::path& path, const RunConfig& config);
RunConfig load_config(const std::filesystem::path& path);

/// Loads the base graph named by base_path into search.base and checks the
/// search parameters. Throws std::invalid_argument for bad settings and
/// ParseError for unreadable files.
void resolve(RunConfig& config);

nlohmann::json position_to_json(const Position& pos);
/// Extension positions need their base graph and degree range to rebuild.
Position position_from_json(const nlohmann::json& j);

struct RunRecord
{
    RunConfig config;
    std::vector<RoundRecord> history;
    FitnessReport best_fitness;
    std::string best_graph6;
    nlohmann::json best_position;
    std::uint64_t rounds = 0;
    std::uint64_t evaluations = 0;
    Termination reason = Termination::BudgetExhausted;
    double wall_seconds = 0.0;
    std::string version = kToolVersion;
    std::uint64_t seed = 0;
};

RunRecord make_record(const RunConfig& config, const SearchResult& result, double wall_seconds);

nlohmann::json record_to_json(const RunRecord& record);
RunRecord record_from_json(const nlohmann::json& j);

void save_record(const std::filesystem::path& path, const RunRecord& record);
RunRecord load_record(const std::filesystem::path& path);

/// Header "round,best_total,evaluations,employed,onlooker,scout,followed",
/// one line per round, trailing newline. Contains no timing data.
std::string history_csv(const std::vector<RoundRecord>& history);

/// `<root>/<UTC timestamp>-seed<seed>`, e.g. runs/20240101T000000Z-seed7.
std::filesystem::path run_directory(const std::filesystem::path& root, std::uint64_t seed,
                                    std::chrono::system_clock::time_point when);

} // namespace ramsey
