#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netsel/errors.hpp"

namespace netsel {

enum class Scheme { Dns, Otso, CellularOnly, Wiffler };
enum class MobilityRegime { Deterministic, RandomTwoType };

std::string to_string(Scheme scheme);
Scheme scheme_from_string(const std::string& name);
std::string to_string(MobilityRegime regime);

// Everything needed to reproduce one experiment: topology, capacities,
// penalties, mobility regime, scheme list and run bookkeeping.
struct ScenarioConfig {
    std::string name = "custom";
    MobilityRegime mobility = MobilityRegime::Deterministic;
    int grid_rows = 4;
    int grid_cols = 4;     // deterministic regime: L = rows * cols
    int line_length = 5;   // random regime: locations on a line
    int slots = 12;        // T
    double slot_seconds = 10.0;
    int users = 30;        // I
    double cell_mean = 300.0;
    double cell_std = 5.0;
    double wifi_mean = 54.0;
    double wifi_std = 5.0;
    double capacity_floor = 0.1; // Mbps; sampled capacities are clamped here
    double p_wifi = 0.5;
    double c_switch = 400.0; // real-to-real cost; idle legs cost half
    int delta = 1;           // off-diagonal switching time, slots
    double p_stay = 0.6;     // deterministic regime
    double p_high = 0.5;     // random regime
    std::vector<Scheme> schemes = {Scheme::Dns, Scheme::Otso, Scheme::CellularOnly};
    int runs = 500;
    uint64_t seed = 1;
    int tau_max = 20;
    double epsilon = 1e-9;
    int workers = 1;
    double wiffler_theta = 1.0;
    double wiffler_k = 0.5;

    int locations() const {
        return mobility == MobilityRegime::Deterministic ? grid_rows * grid_cols
                                                         : line_length;
    }
    void validate() const;
};

// Built-in presets: "deterministic-grid" (4x4 grid, T=12, I=30, 300/54 Mbps,
// p_wifi 0.5, c_switch 400) and "random-line" (5-location line, T=6, I=8,
// 100/50 Mbps, p_wifi 0.9, c_switch 10, two-type mobility).
ScenarioConfig preset(const std::string& name);
std::vector<std::string> preset_names();

// key = value text, '#' comments. Unknown keys are input errors.
ScenarioConfig parse_scenario(const std::string& text);
ScenarioConfig load_scenario(const std::string& path_or_preset);
std::string scenario_to_text(const ScenarioConfig& config);

} // namespace netsel
