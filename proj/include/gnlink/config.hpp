#ifndef GNLINK_CONFIG_HPP
#define GNLINK_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gnlink/channel_plan.hpp"
#include "gnlink/link.hpp"
#include "gnlink/optimizer.hpp"

namespace gnlink {

/// Per-band modulation directive: a named square format, a shaping request,
/// or a constellation file.
struct ModulationChoice {
    enum class Kind { Qpsk, Qam16, Qam64, Shaped16, Shaped64, File } kind = Kind::Shaped64;
    std::string file;

    std::string to_string() const;
    static ModulationChoice parse(const std::string& text, const std::string& key);
};

struct SimulationConfig {
    // [plan]
    int channels_s = 164;
    int channels_c = 100;
    int channels_l = 100;
    double gap_s_c_nm = 10.0;
    double gap_c_l_nm = 5.0;
    double symbol_rate_gbd = 50.0;
    double center_wavelength_nm = 1540.0;
    double band_s_nm[2] = {1455.0, 1530.0};
    double band_c_nm[2] = {1530.0, 1578.0};
    double band_l_nm[2] = {1578.0, 1630.0};

    // [fiber]
    double attenuation_db_km = 0.16;
    double attenuation_bar_db_km = -1.0;  // -1: default to attenuation
    double dispersion_ps_nm_km = 18.0;
    double dispersion_slope_ps_nm2_km = 0.067;
    double gamma_w_km = 1.2;
    double raman_slope_w_km_thz = 0.028;
    double span_length_km = 70.0;
    double ref_wavelength_nm = 1540.0;
    double rk4_step_m = 50.0;
    std::vector<double> attenuation_table_db_km;  // optional per-channel

    // [amplifier]
    double nf_s_db = 7.0;
    double nf_c_db = 4.0;
    double nf_l_db = 6.0;
    std::string equalization = "ideal";  // ideal | partial
    double compensation = 0.5;
    int reset_period = 5;
    std::string compensation_reference = "span";  // span | cumulative
    std::string ase_gain_floor = "loss";          // loss | none
    int ase_polarizations = 2;

    // [link]
    int spans = 100;

    // [power]
    std::string power_mode = "flat";  // flat | file
    double flat_dbm = 0.0;
    std::string power_file;

    // [modulation]
    ModulationChoice mod_s = {ModulationChoice::Kind::Shaped16, ""};
    ModulationChoice mod_c = {ModulationChoice::Kind::Shaped64, ""};
    ModulationChoice mod_l = {ModulationChoice::Kind::Shaped64, ""};
    double shaping_snr_16_db = 7.0;
    double shaping_snr_64_db = 11.0;
    int shaping_iters = 250;
    std::uint64_t shaping_seed = 7;
    double format_correction = 5.0 / 6.0;

    // [nli]
    std::string epsilon = "auto";  // auto | numeric

    // [optimizer]
    int swarm = 50;
    int iterations = 200;
    double inertia = 0.7;
    double cognitive = 1.5;
    double social = 1.5;
    std::uint64_t optimizer_seed = 1;
    double offset_min = -6.0, offset_max = 6.0;
    double tilt_min = -6.0, tilt_max = 6.0;
    double channel_min = -9.0, channel_max = 9.0;
    double gradient_step_db = 0.1;
    double gradient_tol_tbps = 1e-3;
    int gradient_max_iters = 100;

    // [rates]
    int k_rates = 6;
    std::vector<int> sweep = {1, 2, 3, 4, 5, 6, 7, 8};

    // [oracle]
    std::size_t oracle_n_mc = 1000000;
    std::uint64_t oracle_seed = 42;
    double oracle_tolerance_db = 0.5;

    // [output]
    std::string output_directory = "out";
    bool write_profile = false;
    bool render_plots = false;

    // Derived builders.
    PlanRequest plan_request() const;
    ChannelPlan build_plan() const { return build_channel_plan(plan_request()); }
    LinkSpec build_link(std::size_t n_channels) const;
    double epsilon_override() const;  // -1 for auto

    /// Apply the --seed override to every seeded stage.
    void override_seeds(std::uint64_t seed);

    /// Serialize every resolved key back to the sectioned format.
    std::string echo() const;
};

/// Parse and validate; defaults fill missing keys, unknown keys are rejected
/// with file/line context.
SimulationConfig load_config(const std::string& path);

/// Parse from text (same semantics), `origin` names the source in errors.
SimulationConfig parse_config(const std::string& text, const std::string& origin);

} // namespace gnlink

#endif
