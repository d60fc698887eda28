#ifndef GNLINK_RUNNER_HPP
#define GNLINK_RUNNER_HPP

#include <optional>
#include <string>
#include <vector>

#include "gnlink/config.hpp"
#include "gnlink/constellation.hpp"
#include "gnlink/gmi.hpp"
#include "gnlink/link_budget.hpp"
#include "gnlink/rates.hpp"

// Scenario orchestration: simulate / optimize / rate-sweep / validate, with
// CSV (and optional SVG) report emission.

namespace gnlink {

/// Per-band modulation resolved from the config: the constellation, its bit
/// count and kurtosis, and a GMI lookup table.
struct BandFormats {
    std::vector<Constellation> per_band;  // indexed by Band
    std::vector<int> bits_per_channel;
    std::vector<double> kurtosis_per_channel;
    std::vector<GmiTable> tables;                 // per band
    std::vector<const GmiTable*> table_per_channel;
};

BandFormats resolve_formats(const SimulationConfig& config, const ChannelPlan& plan,
                            bool build_tables);

struct ChannelRow {
    int index;
    double freq_thz;
    double wavelength_nm;
    std::string band;
    double launch_dbm;
    double snr_db;
    double gmi_bits;
    double ngmi;
    double rate;
    double throughput_gbps;
};

struct SimReport {
    std::vector<ChannelRow> rows;
    RateAssignment assignment;
    double total_throughput_bps = 0.0;
    double gmi_bound_bps = 0.0;
    std::array<double, 3> band_throughput_bps = {0.0, 0.0, 0.0};
    std::string scenario;
};

/// Launch powers from the config ([power] section) in dBm.
std::vector<double> launch_from_config(const SimulationConfig& config, const ChannelPlan& plan);

SimReport run_simulate(const SimulationConfig& config,
                       const std::optional<std::vector<double>>& powers_dbm = std::nullopt,
                       bool write_outputs = true);

struct OptimizeReport {
    std::vector<double> optimum_dbm;
    double pso_objective_bps = 0.0;
    double refined_objective_bps = 0.0;
    SimReport simulation;
};

OptimizeReport run_optimize(const SimulationConfig& config, bool write_outputs = true);

struct RateSweepRow {
    int k;
    double throughput_bps;
};

struct RateSweepReport {
    std::vector<RateSweepRow> rows;
    double gmi_bound_bps = 0.0;
};

RateSweepReport run_rate_sweep(const SimulationConfig& config, const std::vector<int>& k_list,
                               bool write_outputs = true);

struct ValidationCheck {
    std::string name;
    bool passed;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

ValidationReport run_validate(const SimulationConfig& config, bool write_outputs = true);

/// Echo the resolved config next to the outputs for reproducibility.
void write_config_echo(const SimulationConfig& config);

} // namespace gnlink

#endif
