#pragma once

#include "netsel/model.hpp"

namespace netsel {

// Stay on the cellular network for the whole horizon; slots where cellular is
// unavailable fall back to idle (flagged via used_idle_fallback when given).
Route cellular_only(const NetworkSystem& system, int user, const MobilityPattern& pattern,
                    bool* used_idle_fallback = nullptr);

// On-the-spot offloading: greedily take a Wi-Fi network whenever one is
// available at the slot the move would land on (highest capacity first, then
// lowest index), otherwise cellular, otherwise idle. Never initiates a
// switch that cannot complete within the horizon and never reads switching
// costs.
Route otso(const NetworkSystem& system, int user, const MobilityPattern& pattern);

// Prediction-based offloading: on Wi-Fi like OTSO; off Wi-Fi it waits idle as
// long as the estimated remaining Wi-Fi transfer (fraction of the horizon's
// Wi-Fi potential, p_wifi * remaining/T) is at least conservativeness *
// remaining_size, else it uses cellular.
Route wiffler(const NetworkSystem& system, int user, const MobilityPattern& pattern,
              double p_wifi, double conservativeness = 1.0, double remaining_size = 0.5);

} // namespace netsel
