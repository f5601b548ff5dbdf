#include "netsel/game.hpp"

namespace netsel {

long CongestionField::total() const {
    long sum = 0;
    for (int c : counts_) sum += c;
    return sum;
}

CongestionField congestion(const NetworkSystem& system, const ActionProfile& profile) {
    CongestionField field(system.networks(), system.slots());
    for (const Route& route : profile)
        for (const RoutePoint& p : route) ++field.at(p.network, p.slot);
    return field;
}

double utility(const NetworkSystem& system, const ActionProfile& profile,
               const CongestionField& field, int user) {
    const Route& route = profile[static_cast<size_t>(user)];
    double value = 0.0;
    for (const RoutePoint& p : route)
        value += system.capacity(p.network) / field.at(p.network, p.slot);
    for (size_t q = 0; q + 1 < route.size(); ++q)
        value -= system.switch_cost(route[q].network, route[q + 1].network);
    return value;
}

double utility(const NetworkSystem& system, const ActionProfile& profile, int user) {
    return utility(system, profile, congestion(system, profile), user);
}

double social_welfare(const NetworkSystem& system, const ActionProfile& profile) {
    CongestionField field = congestion(system, profile);
    double total = 0.0;
    for (int i = 0; i < static_cast<int>(profile.size()); ++i)
        total += utility(system, profile, field, i);
    return total;
}

double potential(const NetworkSystem& system, const ActionProfile& profile) {
    CongestionField field = congestion(system, profile);
    double value = 0.0;
    for (int n = 0; n < field.networks(); ++n) {
        for (int t = 0; t < field.slots(); ++t) {
            const double mu = system.capacity(n);
            for (int q = 1; q <= field.at(n, t); ++q) value += mu / q;
        }
    }
    for (const Route& route : profile)
        for (size_t q = 0; q + 1 < route.size(); ++q)
            value -= system.switch_cost(route[q].network, route[q + 1].network);
    return value;
}

void check_profile(const NetworkSystem& system,
                   const std::vector<MobilityPattern>& patterns,
                   const ActionProfile& profile) {
    if (profile.size() != static_cast<size_t>(system.users()) ||
        patterns.size() != profile.size())
        throw input_error("profile must hold one route and pattern per user");
    for (int i = 0; i < system.users(); ++i) {
        RouteVerdict v = validate_route(system, i, patterns[static_cast<size_t>(i)],
                                        profile[static_cast<size_t>(i)]);
        if (v != RouteVerdict::Ok)
            throw input_error("route of user " + std::to_string(i) + ": " + to_string(v));
    }
}

void check_strategy_profile(const NetworkSystem& system,
                            const std::vector<TypeSpace>& type_spaces,
                            const StrategyProfile& strategies) {
    if (strategies.size() != static_cast<size_t>(system.users()) ||
        type_spaces.size() != strategies.size())
        throw input_error("strategy profile must cover every user");
    for (int i = 0; i < system.users(); ++i) {
        const TypeSpace& types = type_spaces[static_cast<size_t>(i)];
        system.check_type_space(types);
        if (strategies[static_cast<size_t>(i)].size() != types.patterns.size())
            throw input_error("strategy of user " + std::to_string(i) +
                              " must map every type");
        for (int k = 0; k < types.size(); ++k) {
            RouteVerdict v = validate_route(system, i, types.patterns[static_cast<size_t>(k)],
                                            strategies[static_cast<size_t>(i)][static_cast<size_t>(k)]);
            if (v != RouteVerdict::Ok)
                throw input_error("strategy of user " + std::to_string(i) + ", type " +
                                  std::to_string(k) + ": " + to_string(v));
        }
    }
}

long joint_type_count(const std::vector<TypeSpace>& type_spaces, long cap) {
    long count = 1;
    for (const TypeSpace& types : type_spaces) {
        count *= types.size();
        if (count > cap) return cap + 1;
    }
    return count;
}

namespace {

// Visit every joint type profile with its product-prior weight.
template <typename Visit>
void for_each_joint_type(const std::vector<TypeSpace>& type_spaces, const Visit& visit) {
    const size_t users = type_spaces.size();
    std::vector<int> index(users, 0);
    for (;;) {
        double prob = 1.0;
        for (size_t i = 0; i < users; ++i)
            prob *= type_spaces[i].priors[static_cast<size_t>(index[i])];
        visit(index, prob);
        size_t i = 0;
        while (i < users) {
            if (++index[i] < type_spaces[i].size()) break;
            index[i] = 0;
            ++i;
        }
        if (i == users) return;
    }
}

void check_joint_cap(const std::vector<TypeSpace>& type_spaces, long cap) {
    if (joint_type_count(type_spaces, cap) > cap)
        throw cap_error("joint type space exceeds cap " + std::to_string(cap));
}

} // namespace

double expected_utility(const NetworkSystem& system,
                        const std::vector<TypeSpace>& type_spaces,
                        const StrategyProfile& strategies, int user, long cap) {
    system.check_user(user);
    check_joint_cap(type_spaces, cap);
    double value = 0.0;
    ActionProfile actions(strategies.size());
    for_each_joint_type(type_spaces, [&](const std::vector<int>& index, double prob) {
        if (prob == 0.0) return;
        for (size_t i = 0; i < strategies.size(); ++i)
            actions[i] = strategies[i][static_cast<size_t>(index[i])];
        value += utility(system, actions, user) * prob;
    });
    return value;
}

double bayesian_potential(const NetworkSystem& system,
                          const std::vector<TypeSpace>& type_spaces,
                          const StrategyProfile& strategies, long cap) {
    check_joint_cap(type_spaces, cap);
    double value = 0.0;
    ActionProfile actions(strategies.size());
    for_each_joint_type(type_spaces, [&](const std::vector<int>& index, double prob) {
        if (prob == 0.0) return;
        for (size_t i = 0; i < strategies.size(); ++i)
            actions[i] = strategies[i][static_cast<size_t>(index[i])];
        value += potential(system, actions) * prob;
    });
    return value;
}

} // namespace netsel
