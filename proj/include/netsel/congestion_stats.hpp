#pragma once

#include <vector>

#include "netsel/game.hpp"
#include "netsel/model.hpp"

namespace netsel {

// One user's reported selection statistics: probability that his strategy
// occupies each (network, slot) point, marginalized over his type prior.
class SelectionStats {
public:
    SelectionStats() = default;
    SelectionStats(int networks, int slots)
        : networks_(networks), slots_(slots),
          prob_(static_cast<size_t>(networks) * slots, 0.0) {}

    double at(int network, int slot) const {
        return prob_[static_cast<size_t>(network) * slots_ + slot];
    }
    double& at(int network, int slot) {
        return prob_[static_cast<size_t>(network) * slots_ + slot];
    }
    int networks() const { return networks_; }
    int slots() const { return slots_; }

private:
    int networks_ = 0;
    int slots_ = 0;
    std::vector<double> prob_;
};

// p_i[n,t] = sum of type priors whose mapped route passes through (n,t).
SelectionStats selection_stats(const NetworkSystem& system, const TypeSpace& types,
                               const std::vector<Route>& strategy);

// Congestion-level pmf over q = 0..levels-1 for every point, excluding one
// user: the distribution of how many of the other users occupy each point.
class CongestionPmf {
public:
    CongestionPmf(int networks, int slots, int levels)
        : networks_(networks), slots_(slots), levels_(levels),
          pmf_(static_cast<size_t>(networks) * slots * levels, 0.0) {}

    const double* at(int network, int slot) const {
        return pmf_.data() + (static_cast<size_t>(network) * slots_ + slot) * levels_;
    }
    double* at(int network, int slot) {
        return pmf_.data() + (static_cast<size_t>(network) * slots_ + slot) * levels_;
    }
    int networks() const { return networks_; }
    int slots() const { return slots_; }
    int levels() const { return levels_; }

private:
    int networks_;
    int slots_;
    int levels_;
    std::vector<double> pmf_;
};

// Distribution of the number of successes among independent Bernoulli trials,
// by the O(k^2) convolution recurrence. Returns a vector of length
// probabilities.size() + 1.
std::vector<double> poisson_binomial(const std::vector<double>& probabilities);

// Exponential-time reference for the same distribution, summing over every
// subset of trials. Kept as the independent oracle for the recurrence; only
// usable for small inputs.
std::vector<double> poisson_binomial_subset_reference(const std::vector<double>& probabilities);

// The operator's information board: users report selection statistics, and
// queries return the congestion pmf built from everyone else's reports.
// Updates are applied one user at a time; queries are pure.
class StatsBoard {
public:
    StatsBoard(int users, int networks, int slots);

    void report(int user, SelectionStats stats);
    const SelectionStats& stats(int user) const { return stats_[static_cast<size_t>(user)]; }

    // pmf of the congestion level produced by users other than `user`, with
    // levels 0..users-1 at every (network, slot).
    CongestionPmf query(int user) const;

    // Single-point variant of the same query.
    std::vector<double> query_point(int user, int network, int slot) const;

    int users() const { return static_cast<int>(stats_.size()); }
    int networks() const { return networks_; }
    int slots() const { return slots_; }

private:
    int networks_;
    int slots_;
    std::vector<SelectionStats> stats_;
};

} // namespace netsel
