#include "gnlink/constellation.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "gnlink/error.hpp"

namespace gnlink {

namespace {

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

int log2_exact(std::size_t n) {
    int m = 0;
    while ((std::size_t{1} << m) < n) ++m;
    return m;
}

} // namespace

Constellation::Constellation(std::vector<std::complex<double>> points,
                             std::vector<std::uint32_t> labels)
    : points_(std::move(points)), labels_(std::move(labels)) {
    validate();
    bits_ = log2_exact(points_.size());
    normalize();
}

void Constellation::validate() const {
    if (!is_power_of_two(points_.size()))
        throw ConfigError("constellation size must be a power of two");
    if (labels_.size() != points_.size())
        throw ConfigError("constellation label count must match the point count");
    const std::size_t m = points_.size();
    std::vector<bool> seen(m, false);
    for (std::uint32_t label : labels_) {
        if (label >= m) throw ConfigError("constellation label out of range");
        if (seen[label]) throw ConfigError("constellation labels must be a bijection");
        seen[label] = true;
    }
}

void Constellation::normalize() {
    double e = 0.0;
    for (const auto& p : points_) e += std::norm(p);
    e /= static_cast<double>(points_.size());
    if (!(e > 0.0)) throw ConfigError("constellation has zero average energy");
    double s = 1.0 / std::sqrt(e);
    for (auto& p : points_) p *= s;
}

double Constellation::mu2() const {
    double e = 0.0;
    for (const auto& p : points_) e += std::norm(p);
    return e / static_cast<double>(points_.size());
}

double Constellation::mu4() const {
    double e = 0.0;
    for (const auto& p : points_) {
        double n = std::norm(p);
        e += n * n;
    }
    return e / static_cast<double>(points_.size());
}

void Constellation::set_points(std::vector<std::complex<double>> points) {
    if (points.size() != points_.size())
        throw ConfigError("set_points: point count must not change");
    points_ = std::move(points);
    normalize();
}

Constellation Constellation::gray_qam(int m) {
    if (m < 2 || m % 2 != 0 || m > 10)
        throw ConfigError("gray_qam: bits per symbol must be even and in [2, 10]");
    const int half = m / 2;
    const int levels = 1 << half;

    // Per-axis Gray code: level index -> bits.
    std::vector<std::uint32_t> gray(levels);
    for (int i = 0; i < levels; ++i) gray[i] = static_cast<std::uint32_t>(i ^ (i >> 1));

    std::vector<std::complex<double>> pts;
    std::vector<std::uint32_t> labels;
    pts.reserve(std::size_t{1} << m);
    labels.reserve(std::size_t{1} << m);
    for (int li = 0; li < levels; ++li) {
        for (int lq = 0; lq < levels; ++lq) {
            double re = 2.0 * li - (levels - 1);
            double im = 2.0 * lq - (levels - 1);
            pts.emplace_back(re, im);
            labels.push_back((gray[li] << half) | gray[lq]);
        }
    }
    return Constellation(std::move(pts), std::move(labels));
}

Constellation Constellation::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open constellation file: " + path);
    std::vector<std::complex<double>> pts;
    std::vector<std::uint32_t> labels;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        double re, im;
        std::string bits;
        if (!(ss >> re >> im >> bits))
            throw ConfigError(path + ":" + std::to_string(lineno) +
                              ": expected 're im bits'");
        std::uint32_t label = 0;
        for (char ch : bits) {
            if (ch != '0' && ch != '1')
                throw ConfigError(path + ":" + std::to_string(lineno) + ": bad bit label");
            label = (label << 1) | static_cast<std::uint32_t>(ch - '0');
        }
        pts.emplace_back(re, im);
        labels.push_back(label);
    }
    return Constellation(std::move(pts), std::move(labels));
}

void Constellation::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write constellation file: " + path);
    out.precision(17);
    for (std::size_t i = 0; i < points_.size(); ++i) {
        out << points_[i].real() << ' ' << points_[i].imag() << ' ';
        for (int b = bits_ - 1; b >= 0; --b) out << ((labels_[i] >> b) & 1u);
        out << '\n';
    }
}

double excess_kurtosis(const Constellation& c) {
    double m2 = c.mu2();
    return c.mu4() / (m2 * m2) - 2.0;
}

} // namespace gnlink
