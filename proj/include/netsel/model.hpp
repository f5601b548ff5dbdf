#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "netsel/errors.hpp"

namespace netsel {

// Network ids: 0 is the always-available idle network with zero capacity,
// 1 is the cellular network, 2..N are Wi-Fi networks.
// Users, locations and slots are 0-based indices.
constexpr int kIdleNetwork = 0;
constexpr int kCellularNetwork = 1;

struct RoutePoint {
    int network = 0;
    int slot = 0;
    auto operator<=>(const RoutePoint&) const = default;
};

// A network-time route: the user's action. Points are (network, slot) pairs,
// strictly increasing in slot, with consecutive points spaced by the
// switching time plus one. Slots skipped between points are mid-switch.
using Route = std::vector<RoutePoint>;

// Lexicographic route order used for all deterministic tie-breaking.
bool route_less(const Route& a, const Route& b);

int route_switch_count(const Route& route);

// A user's location per slot (length T).
using MobilityPattern = std::vector<int>;

// The set of possible mobility patterns of one user with prior probabilities.
struct TypeSpace {
    std::vector<MobilityPattern> patterns;
    std::vector<double> priors;

    int size() const { return static_cast<int>(patterns.size()); }
};

class NetworkSystem {
public:
    // capacity has N+1 entries (index 0 is idle), switch_cost/switch_time are
    // (N+1)x(N+1) row-major. Throws config_error when the parameters violate
    // the model invariants (zero idle capacity, zero diagonals, idle triangle
    // inequalities for every real n -> n' -> n'' with n != n' and n' != n'').
    NetworkSystem(int real_network_count, std::vector<double> capacity,
                  std::vector<double> switch_cost, std::vector<int> switch_time,
                  int location_count, int slot_count, int user_count);

    int real_networks() const { return real_network_count_; }
    int networks() const { return real_network_count_ + 1; } // including idle
    int locations() const { return location_count_; }
    int slots() const { return slot_count_; }
    int users() const { return user_count_; }

    double capacity(int network) const { return capacity_[static_cast<size_t>(network)]; }
    double switch_cost(int from, int to) const {
        return switch_cost_[static_cast<size_t>(from * networks() + to)];
    }
    int switch_time(int from, int to) const {
        return switch_time_[static_cast<size_t>(from * networks() + to)];
    }

    // Availability map M[user, location, slot]. The idle network is forced in.
    void set_available(int user, int location, int slot, int network);
    bool is_available(int user, int location, int slot, int network) const {
        return (availability_[avail_index(user, location, slot)] >> network) & 1u;
    }
    std::vector<int> available_set(int user, int location, int slot) const;

    void check_user(int user) const;
    void check_slot(int slot) const;
    void check_pattern(const MobilityPattern& pattern) const;
    void check_type_space(const TypeSpace& types) const;

private:
    size_t avail_index(int user, int location, int slot) const;

    int real_network_count_;
    std::vector<double> capacity_;
    std::vector<double> switch_cost_;
    std::vector<int> switch_time_;
    int location_count_;
    int slot_count_;
    int user_count_;
    std::vector<uint64_t> availability_;
};

// N[i,t]: networks available to the user at the location his pattern puts him
// in at `slot`. Always contains the idle network.
std::vector<int> available_networks(const NetworkSystem& system, int user,
                                    const MobilityPattern& pattern, int slot);

enum class RouteVerdict {
    Ok,
    ViolatedCausality,    // does not start at slot 0, or slots not increasing
    ViolatedEligibility,  // a point uses a network unavailable to the user there
    ViolatedSwitchingTime // consecutive points not spaced switch_time + 1
};

std::string to_string(RouteVerdict verdict);

RouteVerdict validate_route(const NetworkSystem& system, int user,
                            const MobilityPattern& pattern, const Route& route);

// All feasible routes of the user under `pattern` whose final point lands on
// the last slot, in lexicographic order. Throws cap_error when more than
// `cap` routes exist.
constexpr long kDefaultRouteCap = 10'000'000;
std::vector<Route> enumerate_routes(const NetworkSystem& system, int user,
                                    const MobilityPattern& pattern,
                                    long cap = kDefaultRouteCap);

// Number of feasible routes without materializing them (same cap semantics,
// but saturates at cap + 1 instead of throwing).
long count_routes(const NetworkSystem& system, int user,
                  const MobilityPattern& pattern, long cap = kDefaultRouteCap);

} // namespace netsel
