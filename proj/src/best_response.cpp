#include "netsel/best_response.hpp"

#include <limits>

namespace netsel {

NodeGains::NodeGains(const NetworkSystem& system, const CongestionPmf& pmf)
    : slots_(system.slots()),
      gain_(static_cast<size_t>(system.networks()) * system.slots(), 0.0) {
    for (int n = 0; n < system.networks(); ++n) {
        const double mu = system.capacity(n);
        for (int t = 0; t < slots_; ++t) {
            const double* dist = pmf.at(n, t);
            double g = 0.0;
            for (int q = 0; q < pmf.levels(); ++q) g += (mu / (q + 1)) * dist[q];
            gain_[static_cast<size_t>(n) * slots_ + t] = g;
        }
    }
}

double expected_route_value(const NetworkSystem& system, const Route& route,
                            const NodeGains& gains) {
    double value = 0.0;
    for (size_t q = 0; q < route.size(); ++q) {
        if (q > 0) value -= system.switch_cost(route[q - 1].network, route[q].network);
        value += gains.at(route[q].network, route[q].slot);
    }
    return value;
}

NetworkTimeGraph NetworkTimeGraph::build(const NetworkSystem& system, int user,
                                         const MobilityPattern& pattern,
                                         const NodeGains& gains) {
    system.check_user(user);
    system.check_pattern(pattern);
    NetworkTimeGraph graph;
    for (int t = 0; t < system.slots(); ++t) {
        for (int n = 0; n < system.networks(); ++n) {
            if (!system.is_available(user, pattern[static_cast<size_t>(t)], t, n)) continue;
            graph.nodes.push_back({n, t, gains.at(n, t)});
        }
    }
    for (const Node& from : graph.nodes) {
        for (int next = 0; next < system.networks(); ++next) {
            int arrive = from.slot + system.switch_time(from.network, next) + 1;
            if (arrive >= system.slots()) continue;
            if (system.is_available(user, pattern[static_cast<size_t>(arrive)], arrive, next))
                ++graph.edge_count;
        }
    }
    return graph;
}

BestResponse best_response(const NetworkSystem& system, int user,
                           const MobilityPattern& pattern, const NodeGains& gains,
                           const Route* incumbent) {
    system.check_user(user);
    system.check_pattern(pattern);
    const int networks = system.networks();
    const int slots = system.slots();
    const double unreached = -std::numeric_limits<double>::infinity();

    // dist[n * slots + t]: best value of a route prefix ending at (n, t),
    // folded exactly as expected_route_value does. On value ties the
    // lexicographically smaller prefix wins, which makes the reconstructed
    // optimum the lexicographically smallest one overall.
    std::vector<double> dist(static_cast<size_t>(networks) * slots, unreached);
    std::vector<Route> prefix(static_cast<size_t>(networks) * slots);
    auto idx = [slots](int n, int t) { return static_cast<size_t>(n) * slots + t; };

    for (int n = 0; n < networks; ++n) {
        if (!system.is_available(user, pattern[0], 0, n)) continue;
        dist[idx(n, 0)] = gains.at(n, 0);
        prefix[idx(n, 0)] = {{n, 0}};
    }
    for (int t = 0; t < slots; ++t) {
        for (int n = 0; n < networks; ++n) {
            const size_t from = idx(n, t);
            if (dist[from] == unreached) continue;
            for (int next = 0; next < networks; ++next) {
                int arrive = t + system.switch_time(n, next) + 1;
                if (arrive >= slots) continue;
                if (!system.is_available(user, pattern[static_cast<size_t>(arrive)], arrive, next))
                    continue;
                const size_t to = idx(next, arrive);
                double candidate = (dist[from] - system.switch_cost(n, next)) + gains.at(next, arrive);
                if (candidate > dist[to]) {
                    dist[to] = candidate;
                    prefix[to] = prefix[from];
                    prefix[to].push_back({next, arrive});
                } else if (candidate == dist[to]) {
                    Route alt = prefix[from];
                    alt.push_back({next, arrive});
                    if (route_less(alt, prefix[to])) prefix[to] = std::move(alt);
                }
            }
        }
    }

    BestResponse best;
    bool found = false;
    for (int n = 0; n < networks; ++n) {
        const size_t end = idx(n, slots - 1);
        if (dist[end] == unreached) continue;
        if (!found || dist[end] > best.value ||
            (dist[end] == best.value && route_less(prefix[end], best.route))) {
            best.value = dist[end];
            best.route = prefix[end];
            found = true;
        }
    }
    if (!found) throw input_error("no feasible route reaches the last slot");
    if (incumbent != nullptr && !incumbent->empty()) {
        double value = expected_route_value(system, *incumbent, gains);
        if (value == best.value) best.route = *incumbent;
    }
    return best;
}

} // namespace netsel
