#include "netsel/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace netsel {

namespace {

long checked_product(const std::vector<size_t>& sizes, long cap) {
    long product = 1;
    for (size_t s : sizes) {
        if (s == 0) return 0;
        if (product > cap / static_cast<long>(s) + 1) return cap + 1;
        product *= static_cast<long>(s);
        if (product > cap) return cap + 1;
    }
    return product;
}

} // namespace

SocialOptimum brute_social_optimum(const NetworkSystem& system,
                                   const std::vector<MobilityPattern>& patterns,
                                   long cap) {
    if (patterns.size() != static_cast<size_t>(system.users()))
        throw input_error("brute_social_optimum: one pattern per user required");
    std::vector<std::vector<Route>> routes;
    std::vector<size_t> sizes;
    for (int i = 0; i < system.users(); ++i) {
        routes.push_back(enumerate_routes(system, i, patterns[static_cast<size_t>(i)], cap));
        sizes.push_back(routes.back().size());
    }
    if (checked_product(sizes, cap) > cap)
        throw cap_error("joint route space exceeds cap " + std::to_string(cap));

    // Odometer in lexicographic profile order (last user fastest); accepting
    // only strict improvements keeps the lexicographically smallest maximizer.
    const size_t users = routes.size();
    std::vector<size_t> index(users, 0);
    ActionProfile profile(users);
    SocialOptimum best;
    bool first = true;
    for (;;) {
        for (size_t i = 0; i < users; ++i) profile[i] = routes[i][index[i]];
        double welfare = social_welfare(system, profile);
        if (first || welfare > best.welfare) {
            best.profile = profile;
            best.welfare = welfare;
            first = false;
        }
        size_t i = users;
        while (i > 0) {
            --i;
            if (++index[i] < sizes[i]) break;
            index[i] = 0;
            if (i == 0) return best;
        }
        if (users == 0) return best;
    }
}

namespace {

long total_excess(const CongestionField& field) {
    long excess = 0;
    for (int n = 0; n < field.networks(); ++n)
        for (int t = 0; t < field.slots(); ++t)
            if (field.at(n, t) > 1) excess += field.at(n, t) - 1;
    return excess;
}

// Drop route points [a, b] and bridge the gap with idle points. Returns
// nullopt when the idle bridge does not fit the switching times.
std::optional<Route> drop_and_idle(const NetworkSystem& system, const Route& route,
                                   size_t a, size_t b) {
    const int last_slot = system.slots() - 1;
    Route out(route.begin(), route.begin() + static_cast<long>(a));
    int idle_from, idle_to;
    if (out.empty()) {
        idle_from = 0;
    } else {
        idle_from = out.back().slot + system.switch_time(out.back().network, kIdleNetwork) + 1;
    }
    if (b + 1 < route.size()) {
        const RoutePoint next = route[b + 1];
        idle_to = next.slot - system.switch_time(kIdleNetwork, next.network) - 1;
    } else {
        idle_to = last_slot;
    }
    if (idle_from > idle_to) {
        // No room for any idle point: only valid when nothing remains on
        // either side to connect (cannot happen: dropping [a,b] with both
        // sides empty covers the whole route, where idle_from=0 <= last_slot).
        return std::nullopt;
    }
    if (idle_to > last_slot) return std::nullopt;
    for (int t = idle_from; t <= idle_to; ++t) out.push_back({kIdleNetwork, t});
    out.insert(out.end(), route.begin() + static_cast<long>(b + 1), route.end());
    return out;
}

} // namespace

ActionProfile lemma1_normalize(const NetworkSystem& system,
                               const std::vector<MobilityPattern>& patterns,
                               const ActionProfile& profile) {
    check_profile(system, patterns, profile);
    ActionProfile current = profile;
    double welfare = social_welfare(system, current);

    long budget = 8;
    for (const Route& r : current) budget += 2 * static_cast<long>(r.size());

    for (long step = 0; step < budget; ++step) {
        CongestionField field = congestion(system, current);
        const long excess = total_excess(field);
        if (excess == 0) return current;

        struct Candidate {
            double welfare;
            long excess;
            int user;
            Route route;
        };
        std::optional<Candidate> accepted;

        for (int user = 0; user < system.users(); ++user) {
            const Route& route = current[static_cast<size_t>(user)];
            for (size_t q = 0; q < route.size(); ++q) {
                if (field.at(route[q].network, route[q].slot) < 2) continue;
                const int net = route[q].network;

                // Stretch of consecutive congested same-network points around
                // q, and the full same-network run around q.
                size_t sa = q, sb = q, ra = q, rb = q;
                auto adjacent = [&](size_t lo, size_t hi) {
                    return route[hi].slot - route[lo].slot == 1 && route[hi].network == net &&
                           route[lo].network == net;
                };
                while (ra > 0 && adjacent(ra - 1, ra)) --ra;
                while (rb + 1 < route.size() && adjacent(rb, rb + 1)) ++rb;
                while (sa > ra && adjacent(sa - 1, sa) &&
                       field.at(net, route[sa - 1].slot) >= 2)
                    --sa;
                while (sb < rb && adjacent(sb, sb + 1) &&
                       field.at(net, route[sb + 1].slot) >= 2)
                    ++sb;

                const std::pair<size_t, size_t> drops[] = {
                    {q, q},                          // the shared point alone
                    {sa, sb},                        // the congested stretch
                    {ra, rb},                        // the whole run
                    {0, route.size() - 1},           // the whole route
                };
                for (const auto& [a, b] : drops) {
                    std::optional<Route> reroute = drop_and_idle(system, route, a, b);
                    if (!reroute) continue;
                    if (validate_route(system, user, patterns[static_cast<size_t>(user)],
                                       *reroute) != RouteVerdict::Ok)
                        continue;
                    ActionProfile trial = current;
                    trial[static_cast<size_t>(user)] = *reroute;
                    CongestionField trial_field = congestion(system, trial);
                    long trial_excess = total_excess(trial_field);
                    if (trial_excess >= excess) continue;
                    double trial_welfare = social_welfare(system, trial);
                    if (trial_welfare < welfare - 1e-12 * (1.0 + std::abs(welfare))) continue;
                    if (!accepted || trial_welfare > accepted->welfare ||
                        (trial_welfare == accepted->welfare && trial_excess < accepted->excess)) {
                        accepted = Candidate{trial_welfare, trial_excess, user, *reroute};
                    }
                }
            }
        }

        if (!accepted)
            throw input_error("lemma1_normalize: no welfare-preserving reroute found");
        current[static_cast<size_t>(accepted->user)] = accepted->route;
        welfare = accepted->welfare;
    }
    throw input_error("lemma1_normalize: reroute budget exhausted");
}

std::optional<BneViolation> certify_bne(const NetworkSystem& system,
                                        const std::vector<TypeSpace>& type_spaces,
                                        const StrategyProfile& strategies,
                                        double epsilon, long cap) {
    check_strategy_profile(system, type_spaces, strategies);
    const int users = system.users();

    for (int i = 0; i < users; ++i) {
        const TypeSpace& types = type_spaces[static_cast<size_t>(i)];
        std::vector<std::vector<Route>> options;
        std::vector<size_t> sizes;
        for (const MobilityPattern& pattern : types.patterns) {
            options.push_back(enumerate_routes(system, i, pattern, cap));
            sizes.push_back(options.back().size());
        }
        if (checked_product(sizes, cap) > cap)
            throw cap_error("deviation space of user " + std::to_string(i) +
                            " exceeds cap " + std::to_string(cap));

        // Conditional value of each (type, candidate route) against the
        // opponents' strategies, so every full deviation is a cheap sum.
        std::vector<TypeSpace> other_types;
        std::vector<size_t> other_index;
        for (int j = 0; j < users; ++j) {
            if (j == i) continue;
            other_types.push_back(type_spaces[static_cast<size_t>(j)]);
            other_index.push_back(static_cast<size_t>(j));
        }
        std::vector<std::vector<double>> value(options.size());
        for (size_t k = 0; k < options.size(); ++k) {
            value[k].resize(options[k].size());
            for (size_t r = 0; r < options[k].size(); ++r) {
                // Expected utility conditional on user i's type k and route r.
                double v = 0.0;
                std::vector<int> idx(other_types.size(), 0);
                for (;;) {
                    double prob = 1.0;
                    ActionProfile actions(static_cast<size_t>(users));
                    actions[static_cast<size_t>(i)] = options[k][r];
                    for (size_t o = 0; o < other_types.size(); ++o) {
                        prob *= other_types[o].priors[static_cast<size_t>(idx[o])];
                        actions[other_index[o]] =
                            strategies[other_index[o]][static_cast<size_t>(idx[o])];
                    }
                    if (prob > 0.0) v += prob * utility(system, actions, i);
                    size_t o = 0;
                    while (o < other_types.size()) {
                        if (++idx[o] < other_types[o].size()) break;
                        idx[o] = 0;
                        ++o;
                    }
                    if (o == other_types.size()) break;
                }
                value[k][r] = v;
            }
        }

        double incumbent = 0.0;
        for (size_t k = 0; k < options.size(); ++k) {
            const Route& chosen = strategies[static_cast<size_t>(i)][k];
            auto it = std::find(options[k].begin(), options[k].end(), chosen);
            if (it == options[k].end())
                throw input_error("certify_bne: strategy route not in the feasible set");
            incumbent += types.priors[k] * value[k][static_cast<size_t>(it - options[k].begin())];
        }

        // Every alternative full strategy, in lexicographic order.
        std::vector<size_t> pick(options.size(), 0);
        for (;;) {
            double candidate = 0.0;
            for (size_t k = 0; k < options.size(); ++k)
                candidate += types.priors[k] * value[k][pick[k]];
            if (candidate > incumbent + epsilon) {
                BneViolation violation;
                violation.user = i;
                for (size_t k = 0; k < options.size(); ++k)
                    violation.deviation.push_back(options[k][pick[k]]);
                violation.improvement = candidate - incumbent;
                return violation;
            }
            size_t k = options.size();
            bool done = true;
            while (k > 0) {
                --k;
                if (++pick[k] < options[k].size()) {
                    done = false;
                    break;
                }
                pick[k] = 0;
            }
            if (done) break;
        }
    }
    return std::nullopt;
}

} // namespace netsel
