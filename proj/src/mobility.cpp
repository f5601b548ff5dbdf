#include "netsel/mobility.hpp"

#include <cmath>

namespace netsel {

TransitionMatrix::TransitionMatrix(int locations, std::vector<double> prob)
    : locations_(locations), prob_(std::move(prob)) {
    if (locations_ < 1) throw input_error("transition matrix needs at least one location");
    if (prob_.size() != static_cast<size_t>(locations_) * locations_)
        throw input_error("transition matrix must be L x L");
    for (int l = 0; l < locations_; ++l) {
        double row = 0.0;
        for (int m = 0; m < locations_; ++m) {
            double p = at(l, m);
            if (p < 0.0) throw input_error("transition probabilities must be nonnegative");
            row += p;
        }
        if (std::abs(row - 1.0) > 1e-9)
            throw input_error("transition matrix rows must sum to 1");
    }
}

TransitionMatrix TransitionMatrix::grid(int rows, int cols, double p_stay) {
    const int L = rows * cols;
    std::vector<double> prob(static_cast<size_t>(L) * L, 0.0);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const int l = r * cols + c;
            std::vector<int> neighbors;
            if (r > 0) neighbors.push_back(l - cols);
            if (r + 1 < rows) neighbors.push_back(l + cols);
            if (c > 0) neighbors.push_back(l - 1);
            if (c + 1 < cols) neighbors.push_back(l + 1);
            if (neighbors.empty()) {
                prob[static_cast<size_t>(l) * L + l] = 1.0;
                continue;
            }
            prob[static_cast<size_t>(l) * L + l] = p_stay;
            for (int m : neighbors)
                prob[static_cast<size_t>(l) * L + m] =
                    (1.0 - p_stay) / static_cast<double>(neighbors.size());
        }
    }
    return TransitionMatrix(L, std::move(prob));
}

TransitionMatrix TransitionMatrix::line(int length, double p_stay) {
    return grid(1, length, p_stay);
}

MobilityPattern generate_mobility(const TransitionMatrix& transition, int start,
                                  int slots, Rng& rng) {
    if (start < 0 || start >= transition.locations())
        throw input_error("generate_mobility: start location out of range");
    if (slots < 1) throw input_error("generate_mobility: need at least one slot");
    MobilityPattern pattern;
    pattern.reserve(static_cast<size_t>(slots));
    int loc = start;
    pattern.push_back(loc);
    for (int t = 1; t < slots; ++t) {
        double u = rng.uniform01();
        double acc = 0.0;
        int next = transition.locations() - 1;
        for (int m = 0; m < transition.locations(); ++m) {
            acc += transition.at(loc, m);
            if (u < acc) {
                next = m;
                break;
            }
        }
        loc = next;
        pattern.push_back(loc);
    }
    return pattern;
}

TypeSpace generate_random_types(double p_high, int line_length, int slots, int start,
                                Rng& rng) {
    if (p_high < 0.0 || p_high > 1.0) throw input_error("p_high must be in [0, 1]");
    TransitionMatrix high = TransitionMatrix::line(line_length, 0.1);
    TransitionMatrix low = TransitionMatrix::line(line_length, 0.9);
    TypeSpace types;
    types.patterns.push_back(generate_mobility(high, start, slots, rng));
    types.patterns.push_back(generate_mobility(low, start, slots, rng));
    types.priors = {p_high, 1.0 - p_high};
    return types;
}

} // namespace netsel
