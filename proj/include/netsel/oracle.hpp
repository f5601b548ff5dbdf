#pragma once

#include <optional>

#include "netsel/game.hpp"
#include "netsel/model.hpp"

namespace netsel {

// Exponential-time ground-truth solvers, usable on small instances only;
// every enumeration is cap-guarded.

constexpr long kDefaultProfileCap = 1'000'000;

struct SocialOptimum {
    ActionProfile profile;
    double welfare = 0.0;
};

// Exhaustive maximization of the social welfare over all joint feasible
// routes (deterministic patterns). Ties resolve to the lexicographically
// smallest profile. Throws cap_error when the joint route space exceeds cap.
SocialOptimum brute_social_optimum(const NetworkSystem& system,
                                   const std::vector<MobilityPattern>& patterns,
                                   long cap = kDefaultProfileCap);

// Repeatedly reroutes one user off a point shared by several users onto idle
// segments, never decreasing welfare, until every point carries at most one
// user. Candidate reroutes replace a dropped stretch of the route with idle
// per the idle triangle inequalities; a candidate is only accepted when the
// recomputed welfare does not drop. Throws input_error if no acceptable
// reroute exists (does not occur under the halved-idle-cost systems used
// here).
ActionProfile lemma1_normalize(const NetworkSystem& system,
                               const std::vector<MobilityPattern>& patterns,
                               const ActionProfile& profile);

struct BneViolation {
    int user = 0;
    std::vector<Route> deviation; // per-type alternative strategy
    double improvement = 0.0;
};

// Checks every user's every alternative per-type route map for an expected
// utility improvement above epsilon. Returns nullopt when the profile is a
// pure Bayesian Nash equilibrium. Throws cap_error when the deviation space
// of some user exceeds cap.
std::optional<BneViolation> certify_bne(const NetworkSystem& system,
                                        const std::vector<TypeSpace>& type_spaces,
                                        const StrategyProfile& strategies,
                                        double epsilon = 1e-9,
                                        long cap = kDefaultProfileCap);

} // namespace netsel
