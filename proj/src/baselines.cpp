#include "netsel/baselines.hpp"

#include <algorithm>

namespace netsel {

namespace {

// reach[n * T + t]: a feasible suffix from point (n, t) ends on the last slot.
std::vector<char> reachability(const NetworkSystem& system, int user,
                               const MobilityPattern& pattern) {
    const int slots = system.slots();
    const int networks = system.networks();
    std::vector<char> reach(static_cast<size_t>(networks) * slots, 0);
    for (int n = 0; n < networks; ++n) reach[static_cast<size_t>(n) * slots + slots - 1] = 1;
    for (int t = slots - 2; t >= 0; --t) {
        for (int n = 0; n < networks; ++n) {
            for (int next = 0; next < networks; ++next) {
                int arrive = t + system.switch_time(n, next) + 1;
                if (arrive >= slots) continue;
                if (!system.is_available(user, pattern[static_cast<size_t>(arrive)], arrive, next))
                    continue;
                if (reach[static_cast<size_t>(next) * slots + arrive]) {
                    reach[static_cast<size_t>(n) * slots + t] = 1;
                    break;
                }
            }
        }
    }
    return reach;
}

struct GreedyState {
    const NetworkSystem& system;
    int user;
    const MobilityPattern& pattern;
    std::vector<char> reach;

    GreedyState(const NetworkSystem& s, int u, const MobilityPattern& p)
        : system(s), user(u), pattern(p), reach(reachability(s, u, p)) {}

    bool viable(int from_network, int from_slot, int target, int& arrive) const {
        arrive = from_slot + system.switch_time(from_network, target) + 1;
        if (arrive >= system.slots()) return false;
        if (!system.is_available(user, pattern[static_cast<size_t>(arrive)], arrive, target))
            return false;
        return reach[static_cast<size_t>(target) * system.slots() + arrive] != 0;
    }

    bool viable_start(int network) const {
        if (!system.is_available(user, pattern[0], 0, network)) return false;
        return reach[static_cast<size_t>(network) * system.slots()] != 0;
    }

    // Best reachable Wi-Fi target from (n, t): highest capacity, then lowest
    // index. Returns -1 when there is none.
    int best_wifi_target(int from_network, int from_slot, int& arrive) const {
        int best = -1;
        int best_arrive = 0;
        for (int m = 2; m < system.networks(); ++m) {
            int a;
            if (!viable(from_network, from_slot, m, a)) continue;
            if (best == -1 || system.capacity(m) > system.capacity(best)) {
                best = m;
                best_arrive = a;
            }
        }
        arrive = best_arrive;
        return best;
    }

    int best_wifi_start() const {
        int best = -1;
        for (int m = 2; m < system.networks(); ++m) {
            if (!viable_start(m)) continue;
            if (best == -1 || system.capacity(m) > system.capacity(best)) best = m;
        }
        return best;
    }
};

} // namespace

Route cellular_only(const NetworkSystem& system, int user, const MobilityPattern& pattern,
                    bool* used_idle_fallback) {
    system.check_user(user);
    system.check_pattern(pattern);
    GreedyState state(system, user, pattern);
    Route route;
    bool fallback = false;
    if (state.viable_start(kCellularNetwork)) {
        route.push_back({kCellularNetwork, 0});
    } else {
        route.push_back({kIdleNetwork, 0});
        fallback = true;
    }
    while (route.back().slot < system.slots() - 1) {
        const RoutePoint cur = route.back();
        int arrive;
        if (state.viable(cur.network, cur.slot, kCellularNetwork, arrive)) {
            route.push_back({kCellularNetwork, arrive});
        } else {
            bool ok = state.viable(cur.network, cur.slot, kIdleNetwork, arrive);
            if (!ok) throw input_error("cellular_only: stuck before the last slot");
            route.push_back({kIdleNetwork, arrive});
            fallback = true;
        }
    }
    if (used_idle_fallback != nullptr) *used_idle_fallback = fallback;
    return route;
}

namespace {

bool is_wifi(int network) { return network >= 2; }

// Shared greedy skeleton for OTSO and Wiffler. They differ only in what to do
// at a decision point with no reachable Wi-Fi: OTSO always prefers cellular;
// Wiffler may prefer idle. Preferences degrade to whatever remains viable.
template <typename NonWifiPreference>
Route greedy_offload(const NetworkSystem& system, int user, const MobilityPattern& pattern,
                     const NonWifiPreference& prefer_idle_at) {
    system.check_user(user);
    system.check_pattern(pattern);
    GreedyState state(system, user, pattern);
    Route route;

    int start_wifi = state.best_wifi_start();
    if (start_wifi != -1) {
        route.push_back({start_wifi, 0});
    } else {
        int first = prefer_idle_at(0) ? kIdleNetwork : kCellularNetwork;
        int second = first == kIdleNetwork ? kCellularNetwork : kIdleNetwork;
        if (state.viable_start(first)) route.push_back({first, 0});
        else if (state.viable_start(second)) route.push_back({second, 0});
        else throw input_error("offloading baseline: no viable start");
    }

    while (route.back().slot < system.slots() - 1) {
        const RoutePoint cur = route.back();
        int arrive;
        if (is_wifi(cur.network) && state.viable(cur.network, cur.slot, cur.network, arrive)) {
            route.push_back({cur.network, arrive}); // keep the current Wi-Fi
            continue;
        }
        int wifi = state.best_wifi_target(cur.network, cur.slot, arrive);
        if (wifi != -1) {
            route.push_back({wifi, arrive});
            continue;
        }
        int first = prefer_idle_at(cur.slot + 1) ? kIdleNetwork : kCellularNetwork;
        int second = first == kIdleNetwork ? kCellularNetwork : kIdleNetwork;
        if (state.viable(cur.network, cur.slot, first, arrive)) {
            route.push_back({first, arrive});
        } else if (state.viable(cur.network, cur.slot, second, arrive)) {
            route.push_back({second, arrive});
        } else if (state.viable(cur.network, cur.slot, cur.network, arrive)) {
            route.push_back({cur.network, arrive});
        } else {
            throw input_error("offloading baseline: stuck before the last slot");
        }
    }
    return route;
}

} // namespace

Route otso(const NetworkSystem& system, int user, const MobilityPattern& pattern) {
    return greedy_offload(system, user, pattern, [](int) { return false; });
}

Route wiffler(const NetworkSystem& system, int user, const MobilityPattern& pattern,
              double p_wifi, double conservativeness, double remaining_size) {
    if (conservativeness <= 0.0 || remaining_size <= 0.0)
        throw input_error("wiffler: conservativeness and remaining size must be positive");
    const double threshold = conservativeness * remaining_size;
    const int slots = system.slots();
    return greedy_offload(system, user, pattern, [&](int next_slot) {
        // Expected Wi-Fi transfer over the remaining slots as a fraction of
        // the horizon's Wi-Fi potential; wait idle while it covers the
        // remaining work.
        double zeta = p_wifi * static_cast<double>(slots - next_slot) / slots;
        return zeta >= threshold;
    });
}

} // namespace netsel
