#include "gnlink/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "gnlink/error.hpp"

namespace gnlink {

namespace {
const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
}

SvgPlot::SvgPlot(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

void SvgPlot::add_series(const std::string& name, const std::vector<double>& x,
                         const std::vector<double>& y) {
    if (x.size() != y.size()) throw ConfigError("SvgPlot: series length mismatch");
    series_.push_back({name, x, y});
}

void SvgPlot::save(const std::string& path) const {
    const double width = 720, height = 440;
    const double ml = 70, mr = 20, mt = 40, mb = 55;
    const double pw = width - ml - mr, ph = height - mt - mb;

    double xmin = std::numeric_limits<double>::max(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series_) {
        for (double v : s.x) { xmin = std::min(xmin, v); xmax = std::max(xmax, v); }
        for (double v : s.y) { ymin = std::min(ymin, v); ymax = std::max(ymax, v); }
    }
    if (series_.empty() || !(xmax > xmin)) { xmin = 0; xmax = 1; }
    if (!(ymax > ymin)) { ymin -= 0.5; ymax += 0.5; }
    double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return mt + ph - (y - ymin) / (ymax - ymin) * ph; };

    std::ostringstream o;
    o.precision(6);
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"16\" "
         "font-family=\"sans-serif\">" << title_ << "</text>\n";

    // Axes with 6 ticks each.
    o << "<g stroke=\"#444\" stroke-width=\"1\" font-size=\"11\" font-family=\"sans-serif\">\n";
    o << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw << "\" y2=\""
      << mt + ph << "\"/>\n";
    o << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << mt + ph
      << "\"/>\n";
    for (int t = 0; t <= 5; ++t) {
        double xv = xmin + (xmax - xmin) * t / 5.0;
        double yv = ymin + (ymax - ymin) * t / 5.0;
        o << "<line x1=\"" << px(xv) << "\" y1=\"" << mt + ph << "\" x2=\"" << px(xv)
          << "\" y2=\"" << mt + ph + 4 << "\"/>\n";
        o << "<text x=\"" << px(xv) << "\" y=\"" << mt + ph + 17
          << "\" text-anchor=\"middle\" stroke=\"none\" fill=\"#222\">" << std::round(xv * 100) / 100
          << "</text>\n";
        o << "<line x1=\"" << ml - 4 << "\" y1=\"" << py(yv) << "\" x2=\"" << ml << "\" y2=\""
          << py(yv) << "\"/>\n";
        o << "<text x=\"" << ml - 8 << "\" y=\"" << py(yv) + 4
          << "\" text-anchor=\"end\" stroke=\"none\" fill=\"#222\">" << std::round(yv * 100) / 100
          << "</text>\n";
    }
    o << "</g>\n";
    o << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 12
      << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">" << x_label_
      << "</text>\n";
    o << "<text x=\"16\" y=\"" << mt + ph / 2
      << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\" transform=\"rotate(-90 16 "
      << mt + ph / 2 << ")\">" << y_label_ << "</text>\n";

    for (std::size_t si = 0; si < series_.size(); ++si) {
        const auto& s = series_[si];
        const char* color = kColors[si % 6];
        o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i)
            o << px(s.x[i]) << "," << py(s.y[i]) << " ";
        o << "\"/>\n";
        o << "<text x=\"" << ml + pw - 6 << "\" y=\"" << mt + 16 + 16 * si
          << "\" text-anchor=\"end\" font-size=\"12\" font-family=\"sans-serif\" fill=\"" << color
          << "\">" << s.name << "</text>\n";
    }
    o << "</svg>\n";

    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write plot: " + path);
    out << o.str();
}

} // namespace gnlink
