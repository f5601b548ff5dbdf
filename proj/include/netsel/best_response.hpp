#pragma once

#include <vector>

#include "netsel/congestion_stats.hpp"
#include "netsel/model.hpp"

namespace netsel {

// Expected throughput of each point under the congestion pmf:
// sum over q of capacity/(q+1) * pmf[q].
class NodeGains {
public:
    NodeGains(const NetworkSystem& system, const CongestionPmf& pmf);

    double at(int network, int slot) const {
        return gain_[static_cast<size_t>(network) * slots_ + slot];
    }

private:
    int slots_;
    std::vector<double> gain_;
};

// Eq.-16 value of a route: gains of its points minus its switching costs,
// folded in route order. best_response accumulates path values with the same
// fold, so equal routes produce bit-identical values.
double expected_route_value(const NetworkSystem& system, const Route& route,
                            const NodeGains& gains);

struct BestResponse {
    Route route;
    double value = 0.0;
};

// Time-expanded graph over the user's eligible (network, slot) points; edges
// follow the switching-time rule and carry the switching cost, nodes carry
// the expected-throughput gain. Acyclic by construction (edges increase the
// slot), so the longest path comes from one relaxation sweep in slot order.
struct NetworkTimeGraph {
    struct Node {
        int network;
        int slot;
        double gain;
    };
    std::vector<Node> nodes;
    long edge_count = 0;

    static NetworkTimeGraph build(const NetworkSystem& system, int user,
                                  const MobilityPattern& pattern, const NodeGains& gains);
};

// Maximizes the Eq.-16 value over the feasible routes that end on the last
// slot. Ties prefer the incumbent when it attains the maximum, otherwise the
// lexicographically smallest route. Throws input_error when no feasible
// route reaches the last slot (cannot happen while idle is available
// everywhere).
BestResponse best_response(const NetworkSystem& system, int user,
                           const MobilityPattern& pattern, const NodeGains& gains,
                           const Route* incumbent = nullptr);

} // namespace netsel
