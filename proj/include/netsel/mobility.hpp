#pragma once

#include <vector>

#include "netsel/model.hpp"
#include "netsel/rng.hpp"

namespace netsel {

// Row-stochastic location transition matrix, row-major L x L.
class TransitionMatrix {
public:
    TransitionMatrix(int locations, std::vector<double> prob);

    int locations() const { return locations_; }
    double at(int from, int to) const {
        return prob_[static_cast<size_t>(from) * locations_ + to];
    }

    // Grid walk: stay with p_stay, otherwise move to one of the 4-neighbors
    // with equal probability (edge cells split over fewer neighbors).
    static TransitionMatrix grid(int rows, int cols, double p_stay);
    // Line walk: stay with p_stay, otherwise move to an adjacent cell with
    // equal probability.
    static TransitionMatrix line(int length, double p_stay);

private:
    int locations_;
    std::vector<double> prob_;
};

// Markov-chain location sample of length slots from the given start.
MobilityPattern generate_mobility(const TransitionMatrix& transition, int start,
                                  int slots, Rng& rng);

// Two-type space of high/low mobility on a line: the high-mobility pattern
// (prior p_high) moves with probability 0.9, the low-mobility one with
// probability 0.1; both share a common start.
TypeSpace generate_random_types(double p_high, int line_length, int slots, int start,
                                Rng& rng);

} // namespace netsel
