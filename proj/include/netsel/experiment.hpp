#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "netsel/dns.hpp"
#include "netsel/game.hpp"
#include "netsel/model.hpp"
#include "netsel/rng.hpp"
#include "netsel/scenario.hpp"

namespace netsel {

// Jain's fairness index (sum u)^2 / (I * sum u^2); exactly 1 for identical
// values. All-zero input is an error.
double jain_index(const std::vector<double>& values);

// Streaming mean / standard error reducer.
class RunningStat {
public:
    void add(double x);
    long count() const { return count_; }
    double mean() const { return mean_; }
    double variance() const; // sample variance (n - 1)
    double stddev() const;
    double standard_error() const;

private:
    long count_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

struct SampledSystem {
    NetworkSystem system;
    std::vector<int> wifi_network_of_location; // -1 where no AP
};

// Draw one concrete network system for the scenario: Wi-Fi presence per
// location is Bernoulli(p_wifi), capacities are normal draws clamped at the
// floor, switching times are `delta` off the diagonal, and costs follow the
// halved-idle rule (real-real c_switch, idle legs c_switch / 2).
SampledSystem sample_system(const ScenarioConfig& config, Rng& rng);

// Mobility for one run: per-user type spaces (singleton in the deterministic
// regime, high/low two-type in the random regime).
std::vector<TypeSpace> sample_type_spaces(const ScenarioConfig& config, Rng& rng);

struct RunResult {
    int run = 0;
    Scheme scheme = Scheme::Dns;
    uint64_t run_seed = 0;
    std::vector<double> utilities; // expected utilities in the random regime
    std::vector<double> switches;  // expected switch counts in the random regime
    double jain = 0.0;
    bool converged = true; // baselines: trivially true
    int passes = 0;
    double br_updates_mean = 0.0;
    double mean_utility() const;
    double mean_switches() const;
};

// Evaluate one scheme against sampled mobility: builds the strategy profile
// (DNS via the planning engine, baselines per type) and scores it — realized
// utilities in the deterministic regime, exact expected utilities otherwise.
RunResult evaluate_scheme(const ScenarioConfig& config, Scheme scheme,
                          const NetworkSystem& system,
                          const std::vector<TypeSpace>& type_spaces);

// All runs and schemes of the scenario, ordered by (run, scheme list
// position) regardless of worker count. Fully determined by (config, seed).
std::vector<RunResult> run_experiment(const ScenarioConfig& config);

// A one-parameter sweep: the scenario re-run with `param` set to each value.
struct SweepCell {
    double value = 0.0;
    Scheme scheme = Scheme::Dns;
    RunningStat utility;
    RunningStat switches;
    RunningStat jain;
    RunningStat br_updates;
    long converged_runs = 0;
    long runs = 0;
};

struct SweepResult {
    std::string param;
    std::vector<double> values;
    std::vector<std::vector<RunResult>> results; // per value
    std::vector<SweepCell> cells;                // per (value, scheme)
};

ScenarioConfig with_param(const ScenarioConfig& config, const std::string& param, double value);
SweepResult run_sweep(const ScenarioConfig& config, const std::string& param,
                      const std::vector<double>& values);

// Writers. CSV columns are fixed; numbers use shortest round-trip formatting
// so equal seeds give byte-identical files.
std::string format_double(double v);
void write_runs_csv(std::ostream& out, const ScenarioConfig& config,
                    const std::vector<RunResult>& results);
void write_runs_jsonl(std::ostream& out, const ScenarioConfig& config,
                      const std::vector<RunResult>& results);
void write_sweep_aggregate_csv(std::ostream& out, const SweepResult& sweep);

} // namespace netsel
