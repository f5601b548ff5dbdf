#include "netsel/model.hpp"

#include <algorithm>

namespace netsel {

bool route_less(const Route& a, const Route& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

int route_switch_count(const Route& route) {
    int switches = 0;
    for (size_t q = 1; q < route.size(); ++q) {
        if (route[q].network != route[q - 1].network) ++switches;
    }
    return switches;
}

NetworkSystem::NetworkSystem(int real_network_count, std::vector<double> capacity,
                             std::vector<double> switch_cost, std::vector<int> switch_time,
                             int location_count, int slot_count, int user_count)
    : real_network_count_(real_network_count),
      capacity_(std::move(capacity)),
      switch_cost_(std::move(switch_cost)),
      switch_time_(std::move(switch_time)),
      location_count_(location_count),
      slot_count_(slot_count),
      user_count_(user_count) {
    if (real_network_count_ < 1) throw config_error("need at least one real network");
    if (location_count_ < 1 || slot_count_ < 1 || user_count_ < 1)
        throw config_error("locations, slots and users must be positive");
    const int m = networks();
    if (m > 63) throw config_error("at most 63 networks supported");
    if (capacity_.size() != static_cast<size_t>(m))
        throw config_error("capacity must have one entry per network (idle included)");
    if (switch_cost_.size() != static_cast<size_t>(m * m) ||
        switch_time_.size() != static_cast<size_t>(m * m))
        throw config_error("switch cost/time must be (N+1)x(N+1)");
    if (capacity_[0] != 0.0) throw config_error("idle network capacity must be zero");
    for (double mu : capacity_)
        if (mu < 0.0) throw config_error("capacities must be nonnegative");
    for (int n = 0; n < m; ++n) {
        if (switch_cost(n, n) != 0.0 || switch_time(n, n) != 0)
            throw config_error("switch cost and time must be zero on the diagonal");
    }
    for (size_t k = 0; k < switch_cost_.size(); ++k) {
        if (switch_cost_[k] < 0.0) throw config_error("switch costs must be nonnegative");
        if (switch_time_[k] < 0) throw config_error("switch times must be nonnegative");
    }
    // Idle triangle inequalities over real networks, for genuine two-hop
    // switches (n != n', n' != n''). The cost inequality is checked
    // non-strictly so that a zero switching cost remains a valid parameter.
    for (int n = 1; n < m; ++n) {
        for (int n1 = 1; n1 < m; ++n1) {
            if (n1 == n) continue;
            for (int n2 = 1; n2 < m; ++n2) {
                if (n2 == n1) continue;
                if (switch_time(n, n1) + switch_time(n1, n2) <
                    switch_time(n, 0) + switch_time(0, n2))
                    throw config_error("idle switching-time triangle inequality violated");
                if (switch_cost(n, n1) + switch_cost(n1, n2) <
                    switch_cost(n, 0) + switch_cost(0, n2))
                    throw config_error("idle switching-cost triangle inequality violated");
            }
        }
    }
    availability_.assign(static_cast<size_t>(user_count_) * location_count_ * slot_count_,
                         uint64_t{1}); // idle always available
}

size_t NetworkSystem::avail_index(int user, int location, int slot) const {
    return (static_cast<size_t>(user) * location_count_ + location) * slot_count_ + slot;
}

void NetworkSystem::set_available(int user, int location, int slot, int network) {
    if (user < 0 || user >= user_count_ || location < 0 || location >= location_count_ ||
        slot < 0 || slot >= slot_count_ || network < 0 || network >= networks())
        throw input_error("set_available: index out of range");
    availability_[avail_index(user, location, slot)] |= uint64_t{1} << network;
}

std::vector<int> NetworkSystem::available_set(int user, int location, int slot) const {
    std::vector<int> out;
    uint64_t mask = availability_[avail_index(user, location, slot)];
    for (int n = 0; n < networks(); ++n)
        if ((mask >> n) & 1u) out.push_back(n);
    return out;
}

void NetworkSystem::check_user(int user) const {
    if (user < 0 || user >= user_count_) throw input_error("unknown user " + std::to_string(user));
}

void NetworkSystem::check_slot(int slot) const {
    if (slot < 0 || slot >= slot_count_) throw input_error("slot " + std::to_string(slot) + " out of range");
}

void NetworkSystem::check_pattern(const MobilityPattern& pattern) const {
    if (pattern.size() != static_cast<size_t>(slot_count_))
        throw input_error("mobility pattern must have one location per slot");
    for (int loc : pattern)
        if (loc < 0 || loc >= location_count_) throw input_error("mobility pattern location out of range");
}

void NetworkSystem::check_type_space(const TypeSpace& types) const {
    if (types.patterns.empty()) throw input_error("type space must be nonempty");
    if (types.priors.size() != types.patterns.size())
        throw input_error("type space priors must match patterns");
    double total = 0.0;
    for (double p : types.priors) {
        if (p < 0.0) throw input_error("type priors must be nonnegative");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-12) throw input_error("type priors must sum to 1");
    for (const auto& pattern : types.patterns) {
        check_pattern(pattern);
        if (pattern[0] != types.patterns[0][0])
            throw input_error("all patterns of a user must share the initial location");
    }
}

std::vector<int> available_networks(const NetworkSystem& system, int user,
                                    const MobilityPattern& pattern, int slot) {
    system.check_user(user);
    system.check_slot(slot);
    system.check_pattern(pattern);
    return system.available_set(user, pattern[static_cast<size_t>(slot)], slot);
}

std::string to_string(RouteVerdict verdict) {
    switch (verdict) {
        case RouteVerdict::Ok: return "ok";
        case RouteVerdict::ViolatedCausality: return "violated causality";
        case RouteVerdict::ViolatedEligibility: return "violated eligibility";
        case RouteVerdict::ViolatedSwitchingTime: return "violated switching time";
    }
    return "?";
}

RouteVerdict validate_route(const NetworkSystem& system, int user,
                            const MobilityPattern& pattern, const Route& route) {
    system.check_user(user);
    system.check_pattern(pattern);
    if (route.empty() || route.front().slot != 0) return RouteVerdict::ViolatedCausality;
    for (size_t q = 0; q < route.size(); ++q) {
        if (route[q].slot >= system.slots()) return RouteVerdict::ViolatedCausality;
        if (q > 0 && route[q].slot <= route[q - 1].slot) return RouteVerdict::ViolatedCausality;
        if (route[q].network < 0 || route[q].network >= system.networks())
            return RouteVerdict::ViolatedEligibility;
    }
    for (const RoutePoint& p : route) {
        if (!system.is_available(user, pattern[static_cast<size_t>(p.slot)], p.slot, p.network))
            return RouteVerdict::ViolatedEligibility;
    }
    for (size_t q = 0; q + 1 < route.size(); ++q) {
        int gap = route[q + 1].slot - route[q].slot;
        if (gap != system.switch_time(route[q].network, route[q + 1].network) + 1)
            return RouteVerdict::ViolatedSwitchingTime;
    }
    return RouteVerdict::Ok;
}

namespace {

template <typename Emit>
void walk_routes(const NetworkSystem& system, int user, const MobilityPattern& pattern,
                 Route& prefix, const Emit& emit) {
    const RoutePoint last = prefix.back();
    if (last.slot == system.slots() - 1) {
        emit(prefix);
        return;
    }
    for (int next = 0; next < system.networks(); ++next) {
        int arrive = last.slot + system.switch_time(last.network, next) + 1;
        if (arrive >= system.slots()) continue;
        if (!system.is_available(user, pattern[static_cast<size_t>(arrive)], arrive, next)) continue;
        prefix.push_back({next, arrive});
        walk_routes(system, user, pattern, prefix, emit);
        prefix.pop_back();
    }
}

template <typename Emit>
void for_each_route(const NetworkSystem& system, int user, const MobilityPattern& pattern,
                    const Emit& emit) {
    system.check_user(user);
    system.check_pattern(pattern);
    Route prefix;
    for (int first = 0; first < system.networks(); ++first) {
        if (!system.is_available(user, pattern[0], 0, first)) continue;
        prefix.assign(1, {first, 0});
        walk_routes(system, user, pattern, prefix, emit);
    }
}

} // namespace

std::vector<Route> enumerate_routes(const NetworkSystem& system, int user,
                                    const MobilityPattern& pattern, long cap) {
    std::vector<Route> routes;
    for_each_route(system, user, pattern, [&](const Route& r) {
        if (static_cast<long>(routes.size()) >= cap)
            throw cap_error("feasible route count exceeds cap " + std::to_string(cap));
        routes.push_back(r);
    });
    // The DFS tries networks in ascending order at every depth, so routes come
    // out sorted already; keep the guarantee explicit.
    std::sort(routes.begin(), routes.end(), route_less);
    return routes;
}

long count_routes(const NetworkSystem& system, int user,
                  const MobilityPattern& pattern, long cap) {
    long count = 0;
    try {
        for_each_route(system, user, pattern, [&](const Route&) {
            if (count > cap) throw cap_error("saturated");
            ++count;
        });
    } catch (const cap_error&) {
        return cap + 1;
    }
    return count;
}

} // namespace netsel
