#pragma once

#include <cstdint>
#include <vector>

#include "netsel/best_response.hpp"
#include "netsel/congestion_stats.hpp"
#include "netsel/game.hpp"

namespace netsel {

enum class UpdateOrder { RoundRobin, SeededShuffle };

struct EngineConfig {
    int max_passes = 20;          // iteration limit of the planning phase
    double epsilon = 1e-9;        // minimum accepted per-type improvement
    UpdateOrder order = UpdateOrder::RoundRobin;
    uint64_t shuffle_seed = 0;    // used by SeededShuffle
    bool track_potential = false; // record the Bayesian potential per accepted update
};

struct ConvergenceReport {
    bool converged = false;
    int passes = 0;                    // full passes executed, final quiet pass included
    std::vector<int> updates_per_user; // user visits that ran best responses
    int route_changes = 0;             // accepted strategy changes
    std::vector<double> potential_trace; // Bayesian potential after each accepted change
    double mean_updates_per_user() const;
};

struct PlanningResult {
    StrategyProfile strategies;
    ConvergenceReport report;
};

// Cellular wherever the pattern allows it on every slot, otherwise all idle.
Route default_initial_route(const NetworkSystem& system, int user,
                            const MobilityPattern& pattern);
StrategyProfile default_initial_strategies(const NetworkSystem& system,
                                           const std::vector<TypeSpace>& type_spaces);

// Asynchronous best-response dynamics: each pass visits users in the
// configured order; a visited user queries the operator's congestion pmf,
// best-responds for every type, and reports his refreshed selection
// statistics. Stops after a pass with no accepted change, or at max_passes.
PlanningResult run_planning(const NetworkSystem& system,
                            const std::vector<TypeSpace>& type_spaces,
                            const EngineConfig& config = {},
                            const StrategyProfile* initial = nullptr);

// Network selection phase: look up each user's route for his realized
// pattern. Unknown patterns are input errors.
ActionProfile realize_actions(const std::vector<TypeSpace>& type_spaces,
                              const StrategyProfile& strategies,
                              const std::vector<MobilityPattern>& realized);

} // namespace netsel
