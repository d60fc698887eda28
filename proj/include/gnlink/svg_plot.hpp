#ifndef GNLINK_SVG_PLOT_HPP
#define GNLINK_SVG_PLOT_HPP

#include <string>
#include <vector>

namespace gnlink {

/// Minimal static vector-graphic scatter/line chart, one series per call to
/// add_series, written as a standalone .svg file.
class SvgPlot {
public:
    SvgPlot(std::string title, std::string x_label, std::string y_label);

    void add_series(const std::string& name, const std::vector<double>& x,
                    const std::vector<double>& y);

    void save(const std::string& path) const;

private:
    struct Series {
        std::string name;
        std::vector<double> x, y;
    };
    std::string title_, x_label_, y_label_;
    std::vector<Series> series_;
};

} // namespace gnlink

#endif
