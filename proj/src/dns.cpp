#include "netsel/dns.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace netsel {

double ConvergenceReport::mean_updates_per_user() const {
    if (updates_per_user.empty()) return 0.0;
    double total = std::accumulate(updates_per_user.begin(), updates_per_user.end(), 0.0);
    return total / static_cast<double>(updates_per_user.size());
}

Route default_initial_route(const NetworkSystem& system, int user,
                            const MobilityPattern& pattern) {
    bool cellular_everywhere = true;
    for (int t = 0; t < system.slots(); ++t) {
        if (!system.is_available(user, pattern[static_cast<size_t>(t)], t, kCellularNetwork)) {
            cellular_everywhere = false;
            break;
        }
    }
    Route route;
    route.reserve(static_cast<size_t>(system.slots()));
    const int network = cellular_everywhere ? kCellularNetwork : kIdleNetwork;
    for (int t = 0; t < system.slots(); ++t) route.push_back({network, t});
    return route;
}

StrategyProfile default_initial_strategies(const NetworkSystem& system,
                                           const std::vector<TypeSpace>& type_spaces) {
    StrategyProfile strategies(type_spaces.size());
    for (int i = 0; i < static_cast<int>(type_spaces.size()); ++i) {
        for (const MobilityPattern& pattern : type_spaces[static_cast<size_t>(i)].patterns)
            strategies[static_cast<size_t>(i)].push_back(default_initial_route(system, i, pattern));
    }
    return strategies;
}

PlanningResult run_planning(const NetworkSystem& system,
                            const std::vector<TypeSpace>& type_spaces,
                            const EngineConfig& config, const StrategyProfile* initial) {
    if (config.max_passes < 1) throw input_error("max_passes must be at least 1");
    const int users = system.users();
    if (static_cast<int>(type_spaces.size()) != users)
        throw input_error("one type space per user required");

    PlanningResult result;
    result.strategies = initial != nullptr ? *initial
                                           : default_initial_strategies(system, type_spaces);
    check_strategy_profile(system, type_spaces, result.strategies);
    result.report.updates_per_user.assign(static_cast<size_t>(users), 0);

    StatsBoard board(users, system.networks(), system.slots());
    for (int i = 0; i < users; ++i)
        board.report(i, selection_stats(system, type_spaces[static_cast<size_t>(i)],
                                        result.strategies[static_cast<size_t>(i)]));

    std::vector<int> order(static_cast<size_t>(users));
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 shuffle_rng(config.shuffle_seed);

    for (int pass = 0; pass < config.max_passes; ++pass) {
        if (config.order == UpdateOrder::SeededShuffle)
            std::shuffle(order.begin(), order.end(), shuffle_rng);
        bool changed_this_pass = false;
        for (int user : order) {
            ++result.report.updates_per_user[static_cast<size_t>(user)];
            CongestionPmf pmf = board.query(user);
            NodeGains gains(system, pmf);
            const TypeSpace& types = type_spaces[static_cast<size_t>(user)];
            std::vector<Route>& strategy = result.strategies[static_cast<size_t>(user)];
            bool changed_this_user = false;
            for (int k = 0; k < types.size(); ++k) {
                Route& current = strategy[static_cast<size_t>(k)];
                BestResponse br = best_response(system, user,
                                                types.patterns[static_cast<size_t>(k)],
                                                gains, &current);
                double current_value = expected_route_value(system, current, gains);
                if (br.value > current_value + config.epsilon && br.route != current) {
                    current = br.route;
                    changed_this_user = true;
                }
            }
            if (changed_this_user) {
                board.report(user, selection_stats(system, types, strategy));
                changed_this_pass = true;
                ++result.report.route_changes;
                if (config.track_potential)
                    result.report.potential_trace.push_back(
                        bayesian_potential(system, type_spaces, result.strategies));
            }
        }
        ++result.report.passes;
        if (!changed_this_pass) {
            result.report.converged = true;
            break;
        }
    }
    return result;
}

ActionProfile realize_actions(const std::vector<TypeSpace>& type_spaces,
                              const StrategyProfile& strategies,
                              const std::vector<MobilityPattern>& realized) {
    if (realized.size() != strategies.size() ||
        type_spaces.size() != strategies.size())
        throw input_error("realize_actions: one pattern per user required");
    ActionProfile actions(strategies.size());
    for (size_t i = 0; i < strategies.size(); ++i) {
        const auto& patterns = type_spaces[i].patterns;
        auto it = std::find(patterns.begin(), patterns.end(), realized[i]);
        if (it == patterns.end())
            throw input_error("realize_actions: pattern of user " + std::to_string(i) +
                              " not in his type space");
        actions[i] = strategies[i][static_cast<size_t>(it - patterns.begin())];
    }
    return actions;
}

} // namespace netsel
