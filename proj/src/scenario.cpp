#include "netsel/scenario.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace netsel {

std::string to_string(Scheme scheme) {
    switch (scheme) {
        case Scheme::Dns: return "dns";
        case Scheme::Otso: return "otso";
        case Scheme::CellularOnly: return "cellular";
        case Scheme::Wiffler: return "wiffler";
    }
    return "?";
}

Scheme scheme_from_string(const std::string& name) {
    if (name == "dns") return Scheme::Dns;
    if (name == "otso") return Scheme::Otso;
    if (name == "cellular" || name == "cellular-only") return Scheme::CellularOnly;
    if (name == "wiffler") return Scheme::Wiffler;
    throw input_error("unknown scheme '" + name + "'");
}

std::string to_string(MobilityRegime regime) {
    return regime == MobilityRegime::Deterministic ? "deterministic" : "random-two-type";
}

void ScenarioConfig::validate() const {
    auto probability = [](double p, const char* what) {
        if (p < 0.0 || p > 1.0) throw config_error(std::string(what) + " must be in [0, 1]");
    };
    probability(p_wifi, "p_wifi");
    probability(p_stay, "p_stay");
    probability(p_high, "p_high");
    if (slots < 1) throw config_error("slots must be positive");
    if (users < 1) throw config_error("users must be positive");
    if (locations() < 1) throw config_error("location count must be positive");
    if (cell_std < 0.0 || wifi_std < 0.0) throw config_error("stddevs must be nonnegative");
    if (cell_mean < 0.0 || wifi_mean < 0.0) throw config_error("capacity means must be nonnegative");
    if (c_switch < 0.0) throw config_error("c_switch must be nonnegative");
    if (delta < 0) throw config_error("delta must be nonnegative");
    if (runs < 1) throw config_error("runs must be at least 1");
    if (tau_max < 1) throw config_error("tau_max must be at least 1");
    if (workers < 1) throw config_error("workers must be at least 1");
    if (schemes.empty()) throw config_error("at least one scheme required");
    if (wiffler_theta <= 0.0 || wiffler_k <= 0.0)
        throw config_error("wiffler parameters must be positive");
}

ScenarioConfig preset(const std::string& name) {
    ScenarioConfig config;
    if (name == "deterministic-grid") {
        config.name = name;
        return config;
    }
    if (name == "random-line") {
        config.name = name;
        config.mobility = MobilityRegime::RandomTwoType;
        config.line_length = 5;
        config.slots = 6;
        config.users = 8;
        config.cell_mean = 100.0;
        config.wifi_mean = 50.0;
        config.p_wifi = 0.9;
        config.c_switch = 10.0;
        return config;
    }
    throw input_error("unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() { return {"deterministic-grid", "random-line"}; }

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    size_t b = s.find_last_not_of(" \t\r");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& value, const std::string& key) {
    try {
        size_t used = 0;
        double v = std::stod(value, &used);
        if (used != value.size()) throw input_error("");
        return v;
    } catch (...) {
        throw input_error("bad numeric value for '" + key + "': " + value);
    }
}

long parse_long(const std::string& value, const std::string& key) {
    try {
        size_t used = 0;
        long v = std::stol(value, &used);
        if (used != value.size()) throw input_error("");
        return v;
    } catch (...) {
        throw input_error("bad integer value for '" + key + "': " + value);
    }
}

} // namespace

ScenarioConfig parse_scenario(const std::string& text) {
    ScenarioConfig config;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos) throw input_error("scenario line without '=': " + line);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "preset") { ScenarioConfig base = preset(value);
            base.name = config.name == "custom" ? value : config.name; config = base; }
        else if (key == "name") config.name = value;
        else if (key == "mobility") {
            if (value == "deterministic") config.mobility = MobilityRegime::Deterministic;
            else if (value == "random-two-type") config.mobility = MobilityRegime::RandomTwoType;
            else throw input_error("unknown mobility regime '" + value + "'");
        }
        else if (key == "grid_rows") config.grid_rows = static_cast<int>(parse_long(value, key));
        else if (key == "grid_cols") config.grid_cols = static_cast<int>(parse_long(value, key));
        else if (key == "line_length") config.line_length = static_cast<int>(parse_long(value, key));
        else if (key == "T" || key == "slots") config.slots = static_cast<int>(parse_long(value, key));
        else if (key == "slot_seconds") config.slot_seconds = parse_double(value, key);
        else if (key == "I" || key == "users") config.users = static_cast<int>(parse_long(value, key));
        else if (key == "cell_mean") config.cell_mean = parse_double(value, key);
        else if (key == "cell_std") config.cell_std = parse_double(value, key);
        else if (key == "wifi_mean") config.wifi_mean = parse_double(value, key);
        else if (key == "wifi_std") config.wifi_std = parse_double(value, key);
        else if (key == "capacity_floor") config.capacity_floor = parse_double(value, key);
        else if (key == "p_wifi") config.p_wifi = parse_double(value, key);
        else if (key == "c_switch") config.c_switch = parse_double(value, key);
        else if (key == "delta") config.delta = static_cast<int>(parse_long(value, key));
        else if (key == "p_stay") config.p_stay = parse_double(value, key);
        else if (key == "p_high") config.p_high = parse_double(value, key);
        else if (key == "runs") config.runs = static_cast<int>(parse_long(value, key));
        else if (key == "seed") config.seed = static_cast<uint64_t>(parse_long(value, key));
        else if (key == "tau_max") config.tau_max = static_cast<int>(parse_long(value, key));
        else if (key == "epsilon") config.epsilon = parse_double(value, key);
        else if (key == "workers") config.workers = static_cast<int>(parse_long(value, key));
        else if (key == "wiffler_theta") config.wiffler_theta = parse_double(value, key);
        else if (key == "wiffler_k") config.wiffler_k = parse_double(value, key);
        else if (key == "schemes") {
            config.schemes.clear();
            std::istringstream items(value);
            std::string item;
            while (std::getline(items, item, ',')) {
                item = trim(item);
                if (!item.empty()) config.schemes.push_back(scheme_from_string(item));
            }
        }
        else throw input_error("unknown scenario key '" + key + "'");
    }
    config.validate();
    return config;
}

ScenarioConfig load_scenario(const std::string& path_or_preset) {
    for (const std::string& name : preset_names())
        if (path_or_preset == name) return preset(name);
    std::ifstream in(path_or_preset);
    if (!in) throw input_error("cannot open scenario file '" + path_or_preset + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

std::string scenario_to_text(const ScenarioConfig& config) {
    std::ostringstream out;
    auto num = [](double v) {
        char buf[64];
        auto res = std::to_chars(buf, buf + sizeof(buf), v);
        return std::string(buf, res.ptr);
    };
    out << "name = " << config.name << "\n";
    out << "mobility = " << to_string(config.mobility) << "\n";
    if (config.mobility == MobilityRegime::Deterministic) {
        out << "grid_rows = " << config.grid_rows << "\n";
        out << "grid_cols = " << config.grid_cols << "\n";
        out << "p_stay = " << num(config.p_stay) << "\n";
    } else {
        out << "line_length = " << config.line_length << "\n";
        out << "p_high = " << num(config.p_high) << "\n";
    }
    out << "slots = " << config.slots << "\n";
    out << "slot_seconds = " << num(config.slot_seconds) << "\n";
    out << "users = " << config.users << "\n";
    out << "cell_mean = " << num(config.cell_mean) << "\n";
    out << "cell_std = " << num(config.cell_std) << "\n";
    out << "wifi_mean = " << num(config.wifi_mean) << "\n";
    out << "wifi_std = " << num(config.wifi_std) << "\n";
    out << "capacity_floor = " << num(config.capacity_floor) << "\n";
    out << "p_wifi = " << num(config.p_wifi) << "\n";
    out << "c_switch = " << num(config.c_switch) << "\n";
    out << "delta = " << config.delta << "\n";
    out << "schemes = ";
    for (size_t i = 0; i < config.schemes.size(); ++i)
        out << (i ? "," : "") << to_string(config.schemes[i]);
    out << "\n";
    out << "runs = " << config.runs << "\n";
    out << "seed = " << config.seed << "\n";
    out << "tau_max = " << config.tau_max << "\n";
    out << "epsilon = " << num(config.epsilon) << "\n";
    out << "workers = " << config.workers << "\n";
    out << "wiffler_theta = " << num(config.wiffler_theta) << "\n";
    out << "wiffler_k = " << num(config.wiffler_k) << "\n";
    return out.str();
}

} // namespace netsel
