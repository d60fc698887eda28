#ifndef GNLINK_UNITS_HPP
#define GNLINK_UNITS_HPP

#include <cmath>

#include "gnlink/error.hpp"

// Unit conversions between engineering units (dBm, dB/km, ps/nm/km, nm, THz)
// and the strict SI units (W, Np/m, s/m^2, m, Hz) used internally.

namespace gnlink {

namespace constants {
inline constexpr double speed_of_light = 299792458.0;   // m/s
inline constexpr double planck = 6.62607015e-34;        // J s
inline constexpr double pi = 3.141592653589793238462643383279502884;
} // namespace constants

inline double dbm_to_watt(double p_dbm) {
    return 1e-3 * std::pow(10.0, p_dbm / 10.0);
}

inline double watt_to_dbm(double p_watt) {
    if (!(p_watt > 0.0)) throw ConfigError("watt_to_dbm: power must be > 0");
    return 10.0 * std::log10(p_watt / 1e-3);
}

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double lin) {
    if (!(lin > 0.0)) throw ConfigError("linear_to_db: value must be > 0");
    return 10.0 * std::log10(lin);
}

inline double wavelength_to_frequency(double lambda_m) {
    if (!(lambda_m > 0.0)) throw ConfigError("wavelength_to_frequency: wavelength must be > 0");
    return constants::speed_of_light / lambda_m;
}

inline double frequency_to_wavelength(double f_hz) {
    if (!(f_hz > 0.0)) throw ConfigError("frequency_to_wavelength: frequency must be > 0");
    return constants::speed_of_light / f_hz;
}

/// dB/km (power) -> Np/m, P(z) = P(0) e^{-alpha z} convention.
inline double db_per_km_to_np_per_m(double db_km) {
    return db_km * std::log(10.0) / 10.0 / 1e3;
}

inline double np_per_m_to_db_per_km(double np_m) {
    return np_m * 10.0 / std::log(10.0) * 1e3;
}

/// ps/(nm km) -> s/m^2
inline double dispersion_to_si(double d_ps_nm_km) { return d_ps_nm_km * 1e-6; }

/// ps/(nm^2 km) -> s/m^3
inline double dispersion_slope_to_si(double s_ps_nm2_km) { return s_ps_nm2_km * 1e3; }

/// 1/(W km) -> 1/(W m)
inline double gamma_to_si(double g_w_km) { return g_w_km * 1e-3; }

/// 1/(W km THz) -> 1/(W m Hz)
inline double raman_slope_to_si(double cr_w_km_thz) { return cr_w_km_thz / (1e3 * 1e12); }

} // namespace gnlink

#endif
