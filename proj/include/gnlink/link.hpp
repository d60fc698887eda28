#ifndef GNLINK_LINK_HPP
#define GNLINK_LINK_HPP

#include <array>
#include <cmath>
#include <vector>

#include "gnlink/channel_plan.hpp"
#include "gnlink/error.hpp"

namespace gnlink {

struct FiberSpec {
    double attenuation_np_m = 0.0;       // power convention, P(z) = P(0) e^{-alpha z}
    double attenuation_bar_np_m = 0.0;   // effective alpha-bar for the closed form
    double dispersion_d = 0.0;           // s/m^2
    double dispersion_slope_s = 0.0;     // s/m^3
    double gamma = 0.0;                  // 1/(W m)
    double raman_slope_cr = 0.0;         // 1/(W m Hz), triangular gain slope
    double span_length_m = 0.0;
    double ref_wavelength_m = 0.0;       // where D and S are quoted
    double rk4_step_m = 50.0;
    // Optional per-channel attenuation, aligned to the plan by index; empty
    // means the scalar attenuation applies to every channel.
    std::vector<double> per_channel_attenuation_np_m;

    double alpha_for(std::size_t channel) const {
        if (per_channel_attenuation_np_m.empty()) return attenuation_np_m;
        return per_channel_attenuation_np_m.at(channel);
    }

    void validate(std::size_t n_channels) const;
};

enum class EqualizationMode { Ideal, Partial };

/// How much accumulated ISRS tilt the partial equalizer measures: the
/// current span's own transfer, or the cumulative deviation from launch.
enum class CompensationReference { Span, Cumulative };

/// ASE gain reference: None uses the equalized per-channel gain as-is;
/// SpanLoss floors it at the loss-recovery gain of a flat first stage.
enum class AseGainFloor { None, SpanLoss };

struct AmplifierSpec {
    std::array<double, 3> noise_figure_db = {7.0, 4.0, 6.0};  // S, C, L
    EqualizationMode equalization = EqualizationMode::Ideal;
    double compensation_fraction = 0.5;
    int reset_period = 5;
    CompensationReference compensation_reference = CompensationReference::Span;
    AseGainFloor ase_gain_floor = AseGainFloor::SpanLoss;
    int ase_polarizations = 2;

    double noise_figure_db_for(Band b) const {
        return noise_figure_db[static_cast<int>(b)];
    }

    void validate() const;
};

struct LinkSpec {
    int n_spans = 100;
    FiberSpec fiber;
    AmplifierSpec amplifier;

    void validate(std::size_t n_channels) const;
};

/// Per-channel launch power in W, aligned to the plan by index.
using PowerVector = std::vector<double>;

inline void validate_power_vector(const PowerVector& p, std::size_t n_channels,
                                  const char* what) {
    if (p.size() != n_channels)
        throw ConfigError(std::string(what) + ": power vector length mismatch");
    for (double w : p)
        if (!(w > 0.0) || !std::isfinite(w))
            throw ConfigError(std::string(what) + ": powers must be finite and > 0");
}

} // namespace gnlink

#endif
