#include "netsel/congestion_stats.hpp"

namespace netsel {

SelectionStats selection_stats(const NetworkSystem& system, const TypeSpace& types,
                               const std::vector<Route>& strategy) {
    system.check_type_space(types);
    if (strategy.size() != types.patterns.size())
        throw input_error("selection_stats: strategy must map every type");
    SelectionStats stats(system.networks(), system.slots());
    for (size_t k = 0; k < strategy.size(); ++k) {
        for (const RoutePoint& p : strategy[k])
            stats.at(p.network, p.slot) += types.priors[k];
    }
    return stats;
}

std::vector<double> poisson_binomial(const std::vector<double>& probabilities) {
    std::vector<double> pmf(probabilities.size() + 1, 0.0);
    pmf[0] = 1.0;
    size_t used = 0;
    for (double p : probabilities) {
        ++used;
        for (size_t q = used; q > 0; --q)
            pmf[q] = pmf[q] * (1.0 - p) + pmf[q - 1] * p;
        pmf[0] *= 1.0 - p;
    }
    return pmf;
}

std::vector<double> poisson_binomial_subset_reference(const std::vector<double>& probabilities) {
    const size_t k = probabilities.size();
    if (k > 25) throw cap_error("subset reference limited to 25 trials");
    std::vector<double> pmf(k + 1, 0.0);
    for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
        double prob = 1.0;
        int successes = 0;
        for (size_t j = 0; j < k; ++j) {
            if ((mask >> j) & 1u) {
                prob *= probabilities[j];
                ++successes;
            } else {
                prob *= 1.0 - probabilities[j];
            }
        }
        pmf[static_cast<size_t>(successes)] += prob;
    }
    return pmf;
}

StatsBoard::StatsBoard(int users, int networks, int slots)
    : networks_(networks), slots_(slots),
      stats_(static_cast<size_t>(users), SelectionStats(networks, slots)) {}

void StatsBoard::report(int user, SelectionStats stats) {
    if (user < 0 || user >= users()) throw input_error("report: unknown user");
    if (stats.networks() != networks_ || stats.slots() != slots_)
        throw input_error("report: stats shape mismatch");
    stats_[static_cast<size_t>(user)] = std::move(stats);
}

CongestionPmf StatsBoard::query(int user) const {
    if (user < 0 || user >= users()) throw input_error("query: unknown user");
    CongestionPmf pmf(networks_, slots_, users());
    std::vector<double> others;
    others.reserve(static_cast<size_t>(users()) - 1);
    for (int n = 0; n < networks_; ++n) {
        for (int t = 0; t < slots_; ++t) {
            others.clear();
            for (int j = 0; j < users(); ++j) {
                if (j == user) continue;
                others.push_back(stats_[static_cast<size_t>(j)].at(n, t));
            }
            std::vector<double> dist = poisson_binomial(others);
            double* out = pmf.at(n, t);
            for (int q = 0; q < users(); ++q) out[q] = dist[static_cast<size_t>(q)];
        }
    }
    return pmf;
}

std::vector<double> StatsBoard::query_point(int user, int network, int slot) const {
    if (user < 0 || user >= users()) throw input_error("query_point: unknown user");
    std::vector<double> others;
    for (int j = 0; j < users(); ++j) {
        if (j == user) continue;
        others.push_back(stats_[static_cast<size_t>(j)].at(network, slot));
    }
    return poisson_binomial(others);
}

} // namespace netsel
