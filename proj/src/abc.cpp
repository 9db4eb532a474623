#include "ramsey/abc.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ramsey/errors.hpp"
#include "ramsey/parallel.hpp"

namespace ramsey {

namespace {

// Stream tags, one per kind of random draw.
enum : std::uint64_t
{
    kInitStream = 0,
    kEmployedStream = 1,
    kFollowerStream = 2,
    kOnlookerStream = 3,
    kScoutStream = 4,
};

double auto_density(int p, int q, int n)
{
    if (n < 2) {
        return 0.5;
    }
    try {
        const DegreeRange r = degree_range(p, q, n);
        const double mid = (r.lo + r.hi) / 2.0;
        return std::clamp(mid / (n - 1), 0.0, 1.0);
    } catch (const UnsupportedInstance&) {
        return 0.5;
    } catch (const std::invalid_argument&) {
        return 0.5;
    }
}

} // namespace

const char* to_string(SearchMode mode)
{
    return mode == SearchMode::FullGraph ? "full" : "extension";
}

SearchMode parse_search_mode(const std::string& s)
{
    if (s == "full") {
        return SearchMode::FullGraph;
    }
    if (s == "extension") {
        return SearchMode::Extension;
    }
    throw std::invalid_argument("unknown search mode '" + s + "' (expected full or extension)");
}

const char* to_string(Role role)
{
    switch (role) {
    case Role::Employed:
        return "employed";
    case Role::Onlooker:
        return "onlooker";
    case Role::Scout:
        return "scout";
    }
    return "unknown";
}

const char* to_string(Termination t)
{
    return t == Termination::WitnessFound ? "witness-found" : "budget-exhausted";
}

void validate(const SearchParams& params)
{
    auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
    if (params.colony_size < 4 || params.colony_size % 2 != 0) {
        fail("colony_size must be even and at least 4");
    }
    if (params.maxlimit < 1) {
        fail("maxlimit must be at least 1");
    }
    if (!(params.alpha > 0.0 && params.alpha <= 1.0)) {
        fail("alpha must lie in (0, 1]");
    }
    if (params.budget == 0) {
        fail("budget must be positive");
    }
    if (params.budget < static_cast<std::uint64_t>(params.colony_size)) {
        fail("budget must cover the initial colony evaluation (budget >= colony_size)");
    }
    if (params.init_density > 1.0) {
        fail("init_density must not exceed 1");
    }
    if (params.threads < 1) {
        fail("threads must be at least 1");
    }
    int n = params.n;
    if (params.mode == SearchMode::Extension) {
        if (!params.base) {
            fail("extension mode needs a base graph");
        }
        if (params.added_vertices < 1 || params.added_vertices > 7) {
            fail("extension mode supports 1..7 added vertices");
        }
        n = params.base->order() + params.added_vertices;
        if (n > kMaxVertices) {
            fail("base plus added vertices exceeds 64");
        }
    } else if (n < 2 || n > kMaxVertices) {
        fail("n must lie in 2..64");
    }
    if (params.p < 1 || params.p > n || params.q < 1 || params.q > n) {
        fail("p and q must lie in 1..n");
    }
}

SearchSpace::SearchSpace(const SearchParams& params)
    : mode_(params.mode), p_(params.p), q_(params.q), n_(params.n), density_(0.5),
      degree_range_(params.degree_range), ceiling_(params.count_ceiling)
{
    validate(params);
    if (mode_ == SearchMode::Extension) {
        base_ = params.base;
        const int m = base_->order();
        n_ = m + params.added_vertices;
        inners_ = enumerate_triangle_free(params.added_vertices);
        const int k_lo = std::max(1, q_ - params.added_vertices);
        const int k_hi = std::min(q_, m);
        if (k_lo <= k_hi) {
            cache_ = std::make_shared<const IndepSetCache>(IndepSetCache::build(*base_, k_lo, k_hi));
        } else {
            cache_ = std::make_shared<const IndepSetCache>(IndepSetCache::build(*base_, 1, 1));
        }
    } else {
        density_ = params.init_density >= 0.0 ? params.init_density : auto_density(p_, q_, n_);
    }
}

Position SearchSpace::random_position(Rng& rng, int slot) const
{
    if (mode_ == SearchMode::Extension) {
        const auto& inner = inners_[static_cast<std::size_t>(slot) % inners_.size()];
        return random_extension(*base_, inner, degree_range_, rng);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if (uniform_unit(rng) < density_) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(n_, edges);
}

Position SearchSpace::neighbor(const Position& pos, Rng& rng) const
{
    if (const auto* ext = std::get_if<ExtensionState>(&pos)) {
        auto next = mutate_extension(*ext, rng);
        return next ? Position(std::move(*next)) : pos;
    }
    const Graph& g = std::get<Graph>(pos);
    const int u = uniform_int(rng, 0, n_ - 1);
    int v = uniform_int(rng, 0, n_ - 2);
    if (v >= u) {
        ++v;
    }
    return toggle_edge(g, u, v);
}

FitnessReport SearchSpace::evaluate(const Position& pos) const
{
    if (const auto* ext = std::get_if<ExtensionState>(&pos)) {
        return extension_fitness(*cache_, *ext, p_, q_);
    }
    return fitness_capped(std::get<Graph>(pos), p_, q_, ceiling_);
}

FitnessReport SearchSpace::evaluate_exact(const Position& pos) const
{
    if (const auto* ext = std::get_if<ExtensionState>(&pos)) {
        return extension_fitness(*cache_, *ext, p_, q_);
    }
    return fitness(std::get<Graph>(pos), p_, q_);
}

Graph SearchSpace::to_graph(const Position& pos) const
{
    if (const auto* ext = std::get_if<ExtensionState>(&pos)) {
        return extension_to_graph(*ext);
    }
    return std::get<Graph>(pos);
}

RoleCounts Colony::role_counts() const
{
    RoleCounts c;
    for (const Bee& b : bees) {
        switch (b.role) {
        case Role::Employed:
            ++c.employed;
            c.followed += b.partner.has_value();
            break;
        case Role::Onlooker:
            ++c.onlooker;
            break;
        case Role::Scout:
            ++c.scout;
            break;
        }
    }
    return c;
}

std::vector<int> Colony::ranked_employed() const
{
    std::vector<int> idx;
    for (int i = 0; i < static_cast<int>(bees.size()); ++i) {
        if (bees[i].role == Role::Employed) {
            idx.push_back(i);
        }
    }
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return bees[a].fitness.total < bees[b].fitness.total; });
    return idx;
}

AbcSearch::AbcSearch(SearchParams params) : params_(std::move(params)), space_(params_) {}

void AbcSearch::consider_best(Colony& colony, const Position& pos, const FitnessReport& f) const
{
    if (!colony.best_position || f.total < colony.best_fitness.total) {
        colony.best_position = pos;
        colony.best_fitness = f;
    }
    if (f.total == 0) {
        colony.witness_found = true;
    }
}

Colony AbcSearch::init_colony() const
{
    const int size = params_.colony_size;
    std::vector<FitnessReport> fit(size);
    std::vector<std::optional<Position>> slots(size);
    parallel_for(size, params_.threads, [&](std::size_t i) {
        Rng rng = make_stream(params_.seed, {kInitStream, 0, i});
        slots[i] = space_.random_position(rng, static_cast<int>(i));
        fit[i] = space_.evaluate(*slots[i]);
    });

    std::vector<int> order(size);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return fit[a].total < fit[b].total; });

    Colony colony;
    colony.bees.resize(size);
    colony.evaluations = static_cast<std::uint64_t>(size);
    for (int r = 0; r < size; ++r) {
        Bee& bee = colony.bees[r];
        const int src = order[r];
        if (r < size / 2) {
            bee.role = Role::Employed;
            bee.position = std::move(slots[src]);
            bee.fitness = fit[src];
            consider_best(colony, *bee.position, bee.fitness);
        } else {
            bee.role = Role::Onlooker;
        }
        bee.staynum = 1;
    }
    return colony;
}

void AbcSearch::employed_phase(Colony& colony) const
{
    if (colony.witness_found) {
        return;
    }
    struct Plan
    {
        int bee;
        int draws;
        std::optional<Position> best;
        FitnessReport best_fit;
    };
    std::vector<Plan> plans;
    std::uint64_t planned = colony.evaluations;
    for (int i = 0; i < static_cast<int>(colony.bees.size()) && planned < params_.budget; ++i) {
        const Bee& bee = colony.bees[i];
        if (bee.role != Role::Employed) {
            continue;
        }
        const std::uint64_t want = bee.partner ? 2 : 1;
        const int draws = static_cast<int>(std::min(want, params_.budget - planned));
        planned += draws;
        plans.push_back({i, draws, std::nullopt, {}});
    }

    parallel_for(plans.size(), params_.threads, [&](std::size_t k) {
        Plan& plan = plans[k];
        const Bee& bee = colony.bees[plan.bee];
        const auto tag = static_cast<std::uint64_t>(plan.bee);
        Rng own = make_stream(params_.seed, {kEmployedStream, colony.round, tag});
        Position cand = space_.neighbor(*bee.position, own);
        FitnessReport f = space_.evaluate(cand);
        if (plan.draws > 1) {
            Rng follower = make_stream(params_.seed, {kFollowerStream, colony.round, tag});
            Position other = space_.neighbor(*bee.position, follower);
            FitnessReport g = space_.evaluate(other);
            if (g.total < f.total) {
                cand = std::move(other);
                f = g;
            }
        }
        plan.best = std::move(cand);
        plan.best_fit = f;
    });

    for (Plan& plan : plans) {
        Bee& bee = colony.bees[plan.bee];
        colony.evaluations += plan.draws;
        if (plan.best_fit.total < bee.fitness.total) {
            bee.position = std::move(plan.best);
            bee.fitness = plan.best_fit;
            bee.staynum = 1;
            consider_best(colony, *bee.position, bee.fitness);
            if (colony.witness_found) {
                return;
            }
        } else {
            ++bee.staynum;
        }
    }

    for (Bee& bee : colony.bees) {
        if (bee.role != Role::Employed || bee.staynum < params_.maxlimit) {
            continue;
        }
        bee.role = Role::Scout;
        bee.position.reset();
        if (bee.partner) {
            colony.bees[*bee.partner].partner.reset();
            bee.partner.reset();
        }
    }
}

void AbcSearch::onlooker_phase(Colony& colony) const
{
    if (colony.witness_found) {
        return;
    }
    const std::vector<int> ranked = colony.ranked_employed();
    const int employed = static_cast<int>(ranked.size());
    std::vector<int> weight(colony.bees.size(), 0);
    std::vector<int> pool;
    for (int r = 0; r < employed; ++r) {
        weight[ranked[r]] = employed - r;
        if (!colony.bees[ranked[r]].partner) {
            pool.push_back(ranked[r]);
        }
    }
    Rng rng = make_stream(params_.seed, {kOnlookerStream, colony.round});
    for (int i = 0; i < static_cast<int>(colony.bees.size()) && !pool.empty(); ++i) {
        Bee& onlooker = colony.bees[i];
        if (onlooker.role != Role::Onlooker || onlooker.partner) {
            continue;
        }
        double total = 0;
        for (int j : pool) {
            total += weight[j];
        }
        const double r = uniform_unit(rng);
        double cumulative = 0;
        auto chosen = pool.end();
        for (auto it = pool.begin(); it != pool.end(); ++it) {
            cumulative += params_.alpha * weight[*it] / total;
            if (r < cumulative) {
                chosen = it;
                break;
            }
        }
        if (chosen == pool.end() && params_.alpha >= 1.0) {
            chosen = pool.end() - 1; // rounding left the sum just below 1
        }
        if (chosen == pool.end()) {
            continue;
        }
        onlooker.partner = *chosen;
        colony.bees[*chosen].partner = i;
        pool.erase(chosen);
    }
}

void AbcSearch::scout_phase(Colony& colony) const
{
    if (colony.witness_found) {
        return;
    }
    std::vector<int> scouts;
    std::uint64_t planned = colony.evaluations;
    for (int i = 0; i < static_cast<int>(colony.bees.size()) && planned < params_.budget; ++i) {
        if (colony.bees[i].role == Role::Scout) {
            scouts.push_back(i);
            ++planned;
        }
    }
    std::vector<std::optional<Position>> pos(scouts.size());
    std::vector<FitnessReport> fit(scouts.size());
    parallel_for(scouts.size(), params_.threads, [&](std::size_t k) {
        Rng rng = make_stream(params_.seed, {kScoutStream, colony.round, static_cast<std::uint64_t>(scouts[k])});
        pos[k] = space_.random_position(rng, scouts[k]);
        fit[k] = space_.evaluate(*pos[k]);
    });
    for (std::size_t k = 0; k < scouts.size(); ++k) {
        Bee& bee = colony.bees[scouts[k]];
        ++colony.evaluations;
        bee.role = Role::Employed;
        bee.position = std::move(pos[k]);
        bee.fitness = fit[k];
        bee.staynum = 1;
        bee.partner.reset();
        consider_best(colony, *bee.position, bee.fitness);
        if (colony.witness_found) {
            return;
        }
    }
}

void AbcSearch::step(Colony& colony) const
{
    ++colony.round;
    employed_phase(colony);
    onlooker_phase(colony);
    scout_phase(colony);
}

RoundRecord AbcSearch::record(const Colony& colony) const
{
    return {colony.round, colony.best_fitness.total, colony.evaluations, colony.role_counts()};
}

SearchResult AbcSearch::run() const
{
    Colony colony = init_colony();
    std::vector<RoundRecord> history{record(colony)};
    while (!colony.witness_found && budget_left(colony)) {
        step(colony);
        history.push_back(record(colony));
    }
    const Position& best = *colony.best_position;
    return SearchResult{
        best,
        space_.to_graph(best),
        space_.evaluate_exact(best),
        colony.round,
        colony.evaluations,
        std::move(history),
        colony.witness_found ? Termination::WitnessFound : Termination::BudgetExhausted,
    };
}

SearchResult run(const SearchParams& params)
{
    return AbcSearch(params).run();
}

} // namespace ramsey
