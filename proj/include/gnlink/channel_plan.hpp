#ifndef GNLINK_CHANNEL_PLAN_HPP
#define GNLINK_CHANNEL_PLAN_HPP

#include <array>
#include <string>
#include <vector>

namespace gnlink {

enum class Band { S = 0, C = 1, L = 2 };

const char* band_name(Band b);
Band band_from_name(const std::string& name);

struct Channel {
    int index = 0;
    double abs_frequency_hz = 0.0;
    double offset_frequency_hz = 0.0;  // abs - grid center
    double bandwidth_hz = 0.0;         // = symbol rate (Nyquist)
    Band band = Band::C;
    std::string modulation_id;
};

/// Wavelength window per band, used as a capacity check when building a plan.
struct BandEdges {
    // [band][0] = min wavelength (m), [band][1] = max wavelength (m)
    std::array<std::array<double, 2>, 3> wavelength_m;

    static BandEdges defaults();
};

struct PlanRequest {
    std::array<int, 3> channels_per_band = {164, 100, 100};  // S, C, L
    double gap_s_c_m = 10e-9;  // wavelength gap between S and C
    double gap_c_l_m = 5e-9;   // wavelength gap between C and L
    double symbol_rate_hz = 50e9;
    double center_wavelength_m = 1540e-9;
    BandEdges edges = BandEdges::defaults();
};

class ChannelPlan {
public:
    ChannelPlan() = default;
    ChannelPlan(std::vector<Channel> channels, double center_frequency_hz);

    const std::vector<Channel>& channels() const { return channels_; }
    const Channel& at(std::size_t i) const { return channels_[i]; }
    std::size_t size() const { return channels_.size(); }
    double center_frequency_hz() const { return center_frequency_hz_; }

    std::vector<double> offsets_hz() const;
    std::vector<double> abs_frequencies_hz() const;
    std::vector<double> bandwidths_hz() const;

    /// Occupied width from the low edge of the first slot to the high edge
    /// of the last, gaps included.
    double total_width_hz() const;

private:
    std::vector<Channel> channels_;
    double center_frequency_hz_ = 0.0;
};

/// Build a contiguous fixed-grid plan: slots of one symbol rate per band,
/// gap-sized holes between bands, centered so the mean of the extreme
/// channel frequencies equals the center wavelength's frequency.
ChannelPlan build_channel_plan(const PlanRequest& request);

struct DispersionCoefficients {
    double beta2;  // s^2/m
    double beta3;  // s^3/m
};

/// D (s/m^2), S (s/m^3), reference wavelength (m) -> (beta2, beta3).
DispersionCoefficients dispersion_coefficients(double dispersion_d, double slope_s,
                                               double ref_wavelength);

} // namespace gnlink

#endif
