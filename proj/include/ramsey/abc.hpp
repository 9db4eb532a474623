#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ramsey/bounds.hpp"
#include "ramsey/construct.hpp"
#include "ramsey/counting.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/indep_cache.hpp"

namespace ramsey {

enum class SearchMode
{
    FullGraph,
    Extension,
};

const char* to_string(SearchMode mode);
SearchMode parse_search_mode(const std::string& s);

struct SearchParams
{
    int p = 3;
    int q = 3;
    /// Vertex count in full-graph mode; derived from the base in extension mode.
    int n = 5;
    int colony_size = 20;
    int maxlimit = 50;
    double alpha = 1.0;
    std::uint64_t seed = 1;
    std::uint64_t budget = 10'000;
    SearchMode mode = SearchMode::FullGraph;
    /// Edge probability for random graphs; negative selects the midpoint of
    /// degree_range(p,q,n) over n-1, or 0.5 when that range is unavailable.
    double init_density = -1.0;
    /// Degree bounds for added vertices in extension mode.
    DegreeRange degree_range{4, 9};
    int added_vertices = 5;
    /// Per-count ceiling while searching in full-graph mode; kNoCap counts exactly.
    Count count_ceiling = kNoCap;
    int threads = 1;
    /// Base graph for extension mode.
    std::optional<Graph> base;
};

/// Throws std::invalid_argument describing the first bad field.
void validate(const SearchParams& params);

using Position = std::variant<Graph, ExtensionState>;

/// Random positions, one-step neighbours and fitness for a search mode.
class SearchSpace
{
public:
    explicit SearchSpace(const SearchParams& params);

    SearchMode mode() const noexcept { return mode_; }
    int order() const noexcept { return n_; }
    double init_density() const noexcept { return density_; }

    /// Full-graph mode draws an Erdos-Renyi graph; extension mode draws
    /// random_extension() with the inner graph chosen by `slot` modulo the
    /// number of triangle-free classes.
    Position random_position(Rng& rng, int slot) const;

    /// One uniformly random adjacent position: a single edge toggle, or
    /// mutate_extension(). A state with no legal move is returned unchanged.
    Position neighbor(const Position& pos, Rng& rng) const;

    FitnessReport evaluate(const Position& pos) const;
    FitnessReport evaluate_exact(const Position& pos) const;
    Graph to_graph(const Position& pos) const;

    const std::vector<InnerGraph>& inner_graphs() const noexcept { return inners_; }
    const IndepSetCache* cache() const noexcept { return cache_.get(); }

private:
    SearchMode mode_;
    int p_;
    int q_;
    int n_;
    double density_;
    DegreeRange degree_range_;
    Count ceiling_;
    std::optional<Graph> base_;
    std::vector<InnerGraph> inners_;
    std::shared_ptr<const IndepSetCache> cache_;
};

enum class Role
{
    Employed,
    Onlooker,
    Scout,
};

const char* to_string(Role role);

struct Bee
{
    Role role = Role::Onlooker;
    std::optional<Position> position;
    FitnessReport fitness;
    int staynum = 1;
    /// Employed bee: index of its onlooker. Onlooker: index of the employed bee it follows.
    std::optional<int> partner;
};

struct RoleCounts
{
    int employed = 0;
    int onlooker = 0;
    int scout = 0;
    int followed = 0;
};

struct RoundRecord
{
    std::uint64_t round = 0;
    Count best_total = 0;
    std::uint64_t evaluations = 0;
    RoleCounts roles;
};

struct Colony
{
    std::vector<Bee> bees;
    std::uint64_t round = 0;
    std::uint64_t evaluations = 0;
    std::optional<Position> best_position;
    FitnessReport best_fitness;
    bool witness_found = false;

    RoleCounts role_counts() const;
    /// Employed indices sorted by fitness ascending, ties by index.
    std::vector<int> ranked_employed() const;
};

enum class Termination
{
    WitnessFound,
    BudgetExhausted,
};

const char* to_string(Termination t);

struct SearchResult
{
    Position best_position;
    Graph best_graph;
    /// Exact counts for the best position, recomputed at termination.
    FitnessReport best_fitness;
    std::uint64_t rounds = 0;
    std::uint64_t evaluations = 0;
    std::vector<RoundRecord> history;
    Termination reason = Termination::BudgetExhausted;
};

/// Artificial bee colony over graphs, minimising clique + independent-set counts.
///
/// Every random draw comes from a stream derived from (seed, phase, round,
/// bee), and per-bee work is merged in bee order, so a run is fully
/// determined by its parameters regardless of `threads`.
class AbcSearch
{
public:
    explicit AbcSearch(SearchParams params);

    const SearchParams& params() const noexcept { return params_; }
    const SearchSpace& space() const noexcept { return space_; }

    /// Evaluates colony_size random positions; the better half (by fitness,
    /// ties by draw order) are employed with staynum 1, the rest become
    /// idle onlookers.
    Colony init_colony() const;

    /// Each employed bee and its follower sample one neighbour each; the best
    /// sample is taken if strictly better (staynum = 1), else staynum += 1.
    /// Bees with staynum >= maxlimit then turn scout and release their
    /// followers. Stops at the first witness or when the budget runs out.
    void employed_phase(Colony& colony) const;

    /// Unpaired onlookers pick, in turn, an employed bee without a follower
    /// with probability alpha * w_j / sum of w over unfollowed bees, where w
    /// runs from E (best) down to 1 (worst) over the E employed bees.
    void onlooker_phase(Colony& colony) const;

    /// Scouts draw fresh random positions and rejoin as employed bees.
    void scout_phase(Colony& colony) const;

    SearchResult run() const;

    /// Runs one round; exposed for tracing tests.
    void step(Colony& colony) const;

    RoundRecord record(const Colony& colony) const;

private:
    bool budget_left(const Colony& colony) const noexcept { return colony.evaluations < params_.budget; }
    void consider_best(Colony& colony, const Position& pos, const FitnessReport& f) const;

    SearchParams params_;
    SearchSpace space_;
};

SearchResult run(const SearchParams& params);

} // namespace ramsey
