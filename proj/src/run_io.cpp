#include "ramsey/run_io.hpp"

#include <ctime>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ramsey/errors.hpp"
#include "ramsey/graph_io.hpp"

namespace ramsey {

using nlohmann::json;

namespace {

const std::set<std::string> kConfigKeys = {
    "p",         "q",       "n",          "colony_size",    "maxlimit",      "alpha",
    "seed",      "budget",  "mode",       "init_density",   "degree_range",  "added_vertices",
    "count_ceiling", "threads", "output_dir", "base_path", "data_dir", "write_adjacency", "write_graph6",
};

template <class T>
void read_field(const json& j, const char* key, T& out)
{
    if (!j.contains(key)) {
        return;
    }
    try {
        out = j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config field '") + key + "': " + e.what());
    }
}

json fitness_to_json(const FitnessReport& f)
{
    return {{"clique_count", f.clique_count}, {"indep_count", f.indep_count}, {"total", f.total}, {"exact", f.exact}};
}

FitnessReport fitness_from_json(const json& j)
{
    FitnessReport f;
    f.clique_count = j.at("clique_count").get<Count>();
    f.indep_count = j.at("indep_count").get<Count>();
    f.total = j.at("total").get<Count>();
    f.exact = j.at("exact").get<bool>();
    return f;
}

Termination parse_termination(const std::string& s)
{
    if (s == to_string(Termination::WitnessFound)) {
        return Termination::WitnessFound;
    }
    if (s == to_string(Termination::BudgetExhausted)) {
        return Termination::BudgetExhausted;
    }
    throw ParseError(0, "unknown termination reason '" + s + "'");
}

} // namespace

json config_to_json(const RunConfig& c)
{
    const SearchParams& s = c.search;
    json j;
    j["p"] = s.p;
    j["q"] = s.q;
    j["n"] = s.n;
    j["colony_size"] = s.colony_size;
    j["maxlimit"] = s.maxlimit;
    j["alpha"] = s.alpha;
    j["seed"] = s.seed;
    j["budget"] = s.budget;
    j["mode"] = to_string(s.mode);
    j["init_density"] = s.init_density;
    j["degree_range"] = {s.degree_range.lo, s.degree_range.hi};
    j["added_vertices"] = s.added_vertices;
    j["count_ceiling"] = s.count_ceiling == kNoCap ? json(nullptr) : json(s.count_ceiling);
    j["threads"] = s.threads;
    j["output_dir"] = c.output_dir.string();
    j["base_path"] = c.base_path ? json(c.base_path->string()) : json(nullptr);
    j["data_dir"] = c.data_dir.string();
    j["write_adjacency"] = c.write_adjacency;
    j["write_graph6"] = c.write_graph6;
    return j;
}

RunConfig config_from_json(const json& j)
{
    if (!j.is_object()) {
        throw std::invalid_argument("config must be a JSON object");
    }
    for (const auto& [key, value] : j.items()) {
        if (!kConfigKeys.contains(key)) {
            throw std::invalid_argument("unknown config field '" + key + "'");
        }
    }
    RunConfig c;
    SearchParams& s = c.search;
    read_field(j, "p", s.p);
    read_field(j, "q", s.q);
    read_field(j, "n", s.n);
    read_field(j, "colony_size", s.colony_size);
    read_field(j, "maxlimit", s.maxlimit);
    read_field(j, "alpha", s.alpha);
    read_field(j, "seed", s.seed);
    read_field(j, "budget", s.budget);
    read_field(j, "init_density", s.init_density);
    read_field(j, "added_vertices", s.added_vertices);
    read_field(j, "threads", s.threads);
    read_field(j, "write_adjacency", c.write_adjacency);
    read_field(j, "write_graph6", c.write_graph6);
    if (j.contains("mode")) {
        std::string mode;
        read_field(j, "mode", mode);
        s.mode = parse_search_mode(mode);
    }
    if (j.contains("degree_range")) {
        std::vector<int> r;
        read_field(j, "degree_range", r);
        if (r.size() != 2) {
            throw std::invalid_argument("config field 'degree_range' must be [lo, hi]");
        }
        s.degree_range = {r[0], r[1]};
    }
    if (j.contains("count_ceiling") && !j.at("count_ceiling").is_null()) {
        read_field(j, "count_ceiling", s.count_ceiling);
    }
    std::string path;
    if (j.contains("output_dir")) {
        read_field(j, "output_dir", path);
        c.output_dir = path;
    }
    if (j.contains("data_dir")) {
        read_field(j, "data_dir", path);
        c.data_dir = path;
    }
    if (j.contains("base_path") && !j.at("base_path").is_null()) {
        read_field(j, "base_path", path);
        c.base_path = path;
    }
    return c;
}

void save_config(const std::filesystem::path& path, const RunConfig& config)
{
    write_text_file(path, config_to_json(config).dump(2) + "\n");
}

RunConfig load_config(const std::filesystem::path& path)
{
    json j;
    try {
        j = json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        throw ParseError(0, path.string() + ": " + e.what());
    }
    return config_from_json(j);
}

void resolve(RunConfig& config)
{
    if (config.base_path) {
        if (!std::filesystem::exists(*config.base_path)) {
            throw ParseError(0, "base graph not found: " + config.base_path->string());
        }
        config.search.base = load_graph(*config.base_path).graph;
    } else if (config.search.mode == SearchMode::Extension) {
        throw std::invalid_argument("extension mode needs a base graph file");
    }
    if (config.search.mode == SearchMode::Extension && config.search.base) {
        config.search.n = config.search.base->order() + config.search.added_vertices;
    }
    validate(config.search);
}

json position_to_json(const Position& pos)
{
    if (const auto* g = std::get_if<Graph>(&pos)) {
        return {{"kind", "graph"}, {"graph6", encode_graph6(*g)}};
    }
    const auto& ext = std::get<ExtensionState>(pos);
    json attachments = json::array();
    for (VertexMask m : ext.attachments) {
        json row = json::array();
        for (int v : mask_to_vertices(m)) {
            row.push_back(v + 1);
        }
        attachments.push_back(std::move(row));
    }
    return {
        {"kind", "extension"},
        {"base_graph6", encode_graph6(ext.base)},
        {"inner_graph6", encode_graph6(ext.inner.graph)},
        {"inner_index", ext.inner.index},
        {"attachments", std::move(attachments)},
        {"degree_range", {ext.degree_range.lo, ext.degree_range.hi}},
    };
}

Position position_from_json(const json& j)
{
    try {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "graph") {
            return decode_graph6(j.at("graph6").get<std::string>());
        }
        if (kind != "extension") {
            throw ParseError(0, "unknown position kind '" + kind + "'");
        }
        ExtensionState ext{
            decode_graph6(j.at("base_graph6").get<std::string>()),
            make_inner_graph(decode_graph6(j.at("inner_graph6").get<std::string>()), j.at("inner_index").get<int>()),
            {},
            {j.at("degree_range").at(0).get<int>(), j.at("degree_range").at(1).get<int>()},
        };
        for (const auto& row : j.at("attachments")) {
            VertexMask m = 0;
            for (const auto& v : row) {
                const int u = v.get<int>();
                if (u < 1 || u > ext.base_order()) {
                    throw ParseError(0, "attachment vertex " + std::to_string(u) + " outside the base");
                }
                m |= bit(u - 1);
            }
            ext.attachments.push_back(m);
        }
        if (static_cast<int>(ext.attachments.size()) != ext.added()) {
            throw ParseError(0, "attachment count does not match the inner graph order");
        }
        return ext;
    } catch (const json::exception& e) {
        throw ParseError(0, std::string("malformed position: ") + e.what());
    }
}

RunRecord make_record(const RunConfig& config, const SearchResult& result, double wall_seconds)
{
    RunRecord r;
    r.config = config;
    r.history = result.history;
    r.best_fitness = result.best_fitness;
    r.best_graph6 = encode_graph6(result.best_graph);
    r.best_position = position_to_json(result.best_position);
    r.rounds = result.rounds;
    r.evaluations = result.evaluations;
    r.reason = result.reason;
    r.wall_seconds = wall_seconds;
    r.seed = config.search.seed;
    return r;
}

json record_to_json(const RunRecord& r)
{
    json history = json::array();
    for (const auto& h : r.history) {
        history.push_back({{"round", h.round},
                           {"best_total", h.best_total},
                           {"evaluations", h.evaluations},
                           {"employed", h.roles.employed},
                           {"onlooker", h.roles.onlooker},
                           {"scout", h.roles.scout},
                           {"followed", h.roles.followed}});
    }
    return {
        {"format", "ramsey-run-record"},
        {"version", r.version},
        {"seed", r.seed},
        {"config", config_to_json(r.config)},
        {"history", std::move(history)},
        {"result",
         {{"reason", to_string(r.reason)},
          {"rounds", r.rounds},
          {"evaluations", r.evaluations},
          {"best_fitness", fitness_to_json(r.best_fitness)},
          {"best_graph6", r.best_graph6},
          {"best_position", r.best_position}}},
        {"wall_seconds", r.wall_seconds},
    };
}

RunRecord record_from_json(const json& j)
{
    try {
        if (j.at("format").get<std::string>() != "ramsey-run-record") {
            throw ParseError(0, "not a run record");
        }
        RunRecord r;
        r.version = j.at("version").get<std::string>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.config = config_from_json(j.at("config"));
        for (const auto& h : j.at("history")) {
            RoundRecord rec;
            rec.round = h.at("round").get<std::uint64_t>();
            rec.best_total = h.at("best_total").get<Count>();
            rec.evaluations = h.at("evaluations").get<std::uint64_t>();
            rec.roles = {h.at("employed").get<int>(), h.at("onlooker").get<int>(), h.at("scout").get<int>(),
                         h.at("followed").get<int>()};
            r.history.push_back(rec);
        }
        const json& res = j.at("result");
        r.reason = parse_termination(res.at("reason").get<std::string>());
        r.rounds = res.at("rounds").get<std::uint64_t>();
        r.evaluations = res.at("evaluations").get<std::uint64_t>();
        r.best_fitness = fitness_from_json(res.at("best_fitness"));
        r.best_graph6 = res.at("best_graph6").get<std::string>();
        r.best_position = res.at("best_position");
        r.wall_seconds = j.at("wall_seconds").get<double>();
        return r;
    } catch (const json::exception& e) {
        throw ParseError(0, std::string("malformed run record: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, std::string("malformed run record config: ") + e.what());
    }
}

void save_record(const std::filesystem::path& path, const RunRecord& record)
{
    write_text_file(path, record_to_json(record).dump(2) + "\n");
}

RunRecord load_record(const std::filesystem::path& path)
{
    json j;
    try {
        j = json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        throw ParseError(0, path.string() + ": " + e.what());
    }
    return record_from_json(j);
}

std::string history_csv(const std::vector<RoundRecord>& history)
{
    std::ostringstream out;
    out << "round,best_total,evaluations,employed,onlooker,scout,followed\n";
    for (const auto& h : history) {
        out << h.round << ',' << h.best_total << ',' << h.evaluations << ',' << h.roles.employed << ','
            << h.roles.onlooker << ',' << h.roles.scout << ',' << h.roles.followed << '\n';
    }
    return out.str();
}

std::filesystem::path run_directory(const std::filesystem::path& root, std::uint64_t seed,
                                    std::chrono::system_clock::time_point when)
{
    const std::time_t t = std::chrono::system_clock::to_time_t(when);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y%m%dT%H%M%SZ", &tm);
    return root / (std::string(stamp) + "-seed" + std::to_string(seed));
}

} // namespace ramsey
