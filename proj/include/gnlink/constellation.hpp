#ifndef GNLINK_CONSTELLATION_HPP
#define GNLINK_CONSTELLATION_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace gnlink {

/// Complex point set with bit labels, normalized to unit average energy.
class Constellation {
public:
    Constellation() = default;
    Constellation(std::vector<std::complex<double>> points, std::vector<std::uint32_t> labels);

    const std::vector<std::complex<double>>& points() const { return points_; }
    const std::vector<std::uint32_t>& labels() const { return labels_; }
    int bits_per_symbol() const { return bits_; }
    std::size_t size() const { return points_.size(); }

    double mu2() const;
    double mu4() const;

    /// Replace the point set (same labels), renormalizing to mu2 = 1.
    void set_points(std::vector<std::complex<double>> points);

    /// Gray-labeled square QAM, m even (2 -> QPSK, 4 -> 16QAM, 6 -> 64QAM).
    static Constellation gray_qam(int m);

    /// Plain-text format, one point per line: "re im b_{m-1}...b_0".
    static Constellation load(const std::string& path);
    void save(const std::string& path) const;

private:
    void normalize();
    void validate() const;

    std::vector<std::complex<double>> points_;
    std::vector<std::uint32_t> labels_;
    int bits_ = 0;
};

/// mu4 / mu2^2 - 2 under uniform point probabilities.
double excess_kurtosis(const Constellation& c);

} // namespace gnlink

#endif
