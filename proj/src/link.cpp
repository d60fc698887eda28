#include "gnlink/link.hpp"

namespace gnlink {

void FiberSpec::validate(std::size_t n_channels) const {
    if (!(attenuation_np_m > 0.0)) throw ConfigError("fiber.attenuation must be > 0");
    if (!(attenuation_bar_np_m > 0.0)) throw ConfigError("fiber.attenuation_bar must be > 0");
    if (!(gamma > 0.0)) throw ConfigError("fiber.gamma must be > 0");
    if (raman_slope_cr < 0.0) throw ConfigError("fiber.raman_slope must be >= 0");
    if (!(span_length_m > 0.0)) throw ConfigError("fiber.span_length must be > 0");
    if (!(ref_wavelength_m > 0.0)) throw ConfigError("fiber.ref_wavelength must be > 0");
    if (!(rk4_step_m > 0.0)) throw ConfigError("fiber.rk4_step must be > 0");
    if (!per_channel_attenuation_np_m.empty()) {
        if (per_channel_attenuation_np_m.size() != n_channels)
            throw ConfigError("fiber.attenuation_table length must match the channel count");
        for (double a : per_channel_attenuation_np_m)
            if (!(a > 0.0)) throw ConfigError("fiber.attenuation_table entries must be > 0");
    }
}

void AmplifierSpec::validate() const {
    for (double nf : noise_figure_db)
        if (!(nf > 0.0)) throw ConfigError("amplifier noise figures must be > 0 dB");
    if (compensation_fraction < 0.0 || compensation_fraction > 1.0)
        throw ConfigError("amplifier.compensation must be in [0, 1]");
    if (reset_period < 1) throw ConfigError("amplifier.reset_period must be >= 1");
    if (ase_polarizations < 1 || ase_polarizations > 2)
        throw ConfigError("amplifier.ase_polarizations must be 1 or 2");
}

void LinkSpec::validate(std::size_t n_channels) const {
    if (n_spans < 1) throw ConfigError("link.spans must be >= 1");
    fiber.validate(n_channels);
    amplifier.validate();
}

} // namespace gnlink
