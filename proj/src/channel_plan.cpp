#include "gnlink/channel_plan.hpp"

#include <cmath>

#include "gnlink/error.hpp"
#include "gnlink/units.hpp"

namespace gnlink {

const char* band_name(Band b) {
    switch (b) {
        case Band::S: return "S";
        case Band::C: return "C";
        case Band::L: return "L";
    }
    return "?";
}

Band band_from_name(const std::string& name) {
    if (name == "S" || name == "s") return Band::S;
    if (name == "C" || name == "c") return Band::C;
    if (name == "L" || name == "l") return Band::L;
    throw ConfigError("unknown band name: " + name);
}

BandEdges BandEdges::defaults() {
    BandEdges e;
    e.wavelength_m[static_cast<int>(Band::S)] = {1455e-9, 1530e-9};
    e.wavelength_m[static_cast<int>(Band::C)] = {1530e-9, 1578e-9};
    e.wavelength_m[static_cast<int>(Band::L)] = {1578e-9, 1630e-9};
    return e;
}

ChannelPlan::ChannelPlan(std::vector<Channel> channels, double center_frequency_hz)
    : channels_(std::move(channels)), center_frequency_hz_(center_frequency_hz) {
    for (std::size_t i = 1; i < channels_.size(); ++i) {
        const Channel& a = channels_[i - 1];
        const Channel& b = channels_[i];
        if (!(b.abs_frequency_hz > a.abs_frequency_hz))
            throw ConfigError("channel plan frequencies must be strictly ascending");
        double min_spacing = 0.5 * (a.bandwidth_hz + b.bandwidth_hz);
        if (b.abs_frequency_hz - a.abs_frequency_hz < min_spacing * (1.0 - 1e-9))
            throw ConfigError("adjacent channel spectra overlap at index " + std::to_string(i));
    }
}

std::vector<double> ChannelPlan::offsets_hz() const {
    std::vector<double> v(channels_.size());
    for (std::size_t i = 0; i < channels_.size(); ++i) v[i] = channels_[i].offset_frequency_hz;
    return v;
}

std::vector<double> ChannelPlan::abs_frequencies_hz() const {
    std::vector<double> v(channels_.size());
    for (std::size_t i = 0; i < channels_.size(); ++i) v[i] = channels_[i].abs_frequency_hz;
    return v;
}

std::vector<double> ChannelPlan::bandwidths_hz() const {
    std::vector<double> v(channels_.size());
    for (std::size_t i = 0; i < channels_.size(); ++i) v[i] = channels_[i].bandwidth_hz;
    return v;
}

double ChannelPlan::total_width_hz() const {
    if (channels_.empty()) return 0.0;
    const Channel& lo = channels_.front();
    const Channel& hi = channels_.back();
    return (hi.abs_frequency_hz + 0.5 * hi.bandwidth_hz) -
           (lo.abs_frequency_hz - 0.5 * lo.bandwidth_hz);
}

ChannelPlan build_channel_plan(const PlanRequest& request) {
    const double rate = request.symbol_rate_hz;
    if (!(rate > 0.0)) throw ConfigError("plan.symbol_rate must be > 0");
    if (!(request.center_wavelength_m > 0.0))
        throw ConfigError("plan.center_wavelength must be > 0");
    int total = 0;
    for (int n : request.channels_per_band) {
        if (n < 0) throw ConfigError("plan channel counts must be >= 0");
        total += n;
    }
    if (total == 0) throw ConfigError("plan has no channels");

    const double f_center = wavelength_to_frequency(request.center_wavelength_m);
    // Gap widths converted nm -> Hz at the grid center wavelength.
    const double hz_per_m = constants::speed_of_light /
                            (request.center_wavelength_m * request.center_wavelength_m);
    const double gap_sc_hz = request.gap_s_c_m * hz_per_m;
    const double gap_cl_hz = request.gap_c_l_m * hz_per_m;
    if (gap_sc_hz < 0.0 || gap_cl_hz < 0.0) throw ConfigError("band gaps must be >= 0");

    const int n_s = request.channels_per_band[static_cast<int>(Band::S)];
    const int n_c = request.channels_per_band[static_cast<int>(Band::C)];
    const int n_l = request.channels_per_band[static_cast<int>(Band::L)];

    double width = total * rate;
    if (n_l > 0 && (n_c > 0 || n_s > 0)) width += gap_cl_hz;
    if (n_s > 0 && (n_c > 0 || n_l > 0)) width += gap_sc_hz;

    // Ascending frequency: L band first, then C, then S.
    std::vector<Channel> channels;
    channels.reserve(total);
    double cursor = f_center - width / 2.0;
    int index = 0;
    struct BandBlock { Band band; int count; };
    const BandBlock blocks[3] = {{Band::L, n_l}, {Band::C, n_c}, {Band::S, n_s}};
    for (int bi = 0; bi < 3; ++bi) {
        const BandBlock& blk = blocks[bi];
        for (int i = 0; i < blk.count; ++i) {
            Channel ch;
            ch.index = index++;
            ch.abs_frequency_hz = cursor + (i + 0.5) * rate;
            ch.offset_frequency_hz = ch.abs_frequency_hz - f_center;
            ch.bandwidth_hz = rate;
            ch.band = blk.band;
            channels.push_back(ch);
        }
        cursor += blk.count * rate;
        if (blk.band == Band::L && blk.count > 0 && (n_c > 0 || n_s > 0)) cursor += gap_cl_hz;
        if (blk.band == Band::C && blk.count > 0 && n_s > 0) cursor += gap_sc_hz;
    }

    // Capacity check against the band edge table.
    for (const Channel& ch : channels) {
        const auto& win = request.edges.wavelength_m[static_cast<int>(ch.band)];
        double lambda = frequency_to_wavelength(ch.abs_frequency_hz);
        if (lambda < win[0] || lambda > win[1]) {
            throw ConfigError(std::string("channel ") + std::to_string(ch.index) + " at " +
                              std::to_string(lambda * 1e9) + " nm does not fit inside the " +
                              band_name(ch.band) + "-band edges [" +
                              std::to_string(win[0] * 1e9) + ", " +
                              std::to_string(win[1] * 1e9) + "] nm");
        }
    }

    return ChannelPlan(std::move(channels), f_center);
}

DispersionCoefficients dispersion_coefficients(double dispersion_d, double slope_s,
                                               double ref_wavelength) {
    if (!(ref_wavelength > 0.0)) throw ConfigError("ref_wavelength must be > 0");
    const double lam2_2pic =
        ref_wavelength * ref_wavelength / (2.0 * constants::pi * constants::speed_of_light);
    DispersionCoefficients out;
    out.beta2 = -dispersion_d * lam2_2pic;
    out.beta3 = lam2_2pic * lam2_2pic * (slope_s + 2.0 * dispersion_d / ref_wavelength);
    return out;
}

} // namespace gnlink
