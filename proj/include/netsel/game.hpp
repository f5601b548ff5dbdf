#pragma once

#include <vector>

#include "netsel/model.hpp"

namespace netsel {

// One route per user, against realized mobility patterns.
using ActionProfile = std::vector<Route>;

// Per user, one route per type-space index.
using StrategyProfile = std::vector<std::vector<Route>>;

// Congestion level per (network, slot): number of users whose route passes
// through the point.
class CongestionField {
public:
    CongestionField(int networks, int slots)
        : networks_(networks), slots_(slots),
          counts_(static_cast<size_t>(networks) * slots, 0) {}

    int at(int network, int slot) const {
        return counts_[static_cast<size_t>(network) * slots_ + slot];
    }
    int& at(int network, int slot) {
        return counts_[static_cast<size_t>(network) * slots_ + slot];
    }
    int networks() const { return networks_; }
    int slots() const { return slots_; }
    long total() const;

private:
    int networks_;
    int slots_;
    std::vector<int> counts_;
};

CongestionField congestion(const NetworkSystem& system, const ActionProfile& profile);

// Sum over the user's points of capacity / congestion, minus his switching
// costs.
double utility(const NetworkSystem& system, const ActionProfile& profile, int user);
double utility(const NetworkSystem& system, const ActionProfile& profile,
               const CongestionField& field, int user);

double social_welfare(const NetworkSystem& system, const ActionProfile& profile);

// Exact potential: sum over points of the harmonic throughput stack
// capacity * (1 + 1/2 + ... + 1/congestion), minus all users' switching costs.
// Unilateral route changes move it by exactly the deviator's utility change.
double potential(const NetworkSystem& system, const ActionProfile& profile);

void check_profile(const NetworkSystem& system,
                   const std::vector<MobilityPattern>& patterns,
                   const ActionProfile& profile);
void check_strategy_profile(const NetworkSystem& system,
                            const std::vector<TypeSpace>& type_spaces,
                            const StrategyProfile& strategies);

// Number of joint type profiles (product over users), saturating at cap + 1.
constexpr long kJointTypeCap = 1'000'000;
long joint_type_count(const std::vector<TypeSpace>& type_spaces, long cap = kJointTypeCap);

// Ex-ante expected utility under independent per-user type priors: the
// type-profile-weighted average of the deterministic utility. Enumerates the
// joint type space; guarded by cap.
double expected_utility(const NetworkSystem& system,
                        const std::vector<TypeSpace>& type_spaces,
                        const StrategyProfile& strategies, int user,
                        long cap = kJointTypeCap);

// Type-profile-weighted average of the potential; the Bayesian game's exact
// potential.
double bayesian_potential(const NetworkSystem& system,
                          const std::vector<TypeSpace>& type_spaces,
                          const StrategyProfile& strategies,
                          long cap = kJointTypeCap);

} // namespace netsel
