#include "topofilt/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

namespace topofilt {

namespace {

constexpr double kSize = 480.0;
constexpr double kMargin = 48.0;
constexpr double kBandHeight = 28.0;  // strip at the top for permanent intervals

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

struct Extent {
    double lo = 0.0, hi = 1.0;
};

Extent finite_extent(const Diagram& d0, const Diagram* d1) {
    std::vector<double> vals;
    auto collect = [&](const Diagram& d) {
        for (const Interval& iv : d.intervals) {
            if (iv.trivial()) continue;
            if (iv.birth().finite()) vals.push_back(iv.birth().value());
            if (iv.death().finite()) vals.push_back(iv.death().value());
        }
    };
    collect(d0);
    if (d1) collect(*d1);
    Extent e;
    if (!vals.empty()) {
        e.lo = *std::min_element(vals.begin(), vals.end());
        e.hi = *std::max_element(vals.begin(), vals.end());
    }
    if (e.hi <= e.lo) e.hi = e.lo + 1.0;
    const double pad = 0.05 * (e.hi - e.lo);
    e.lo -= pad;
    e.hi += pad;
    return e;
}

}  // namespace

std::string diagram_svg(const Diagram& d0, const Diagram* d1) {
    const Extent ext = finite_extent(d0, d1);
    const double plot_lo = kMargin;
    const double plot_hi = kSize - kMargin;
    const double band_top = plot_lo;
    const double axis_top = plot_lo + kBandHeight;  // finite region starts below the band

    auto x_of = [&](double v) {
        return plot_lo + (v - ext.lo) / (ext.hi - ext.lo) * (plot_hi - plot_lo);
    };
    auto y_of = [&](double v) {
        return plot_hi - (v - ext.lo) / (ext.hi - ext.lo) * (plot_hi - axis_top);
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" "
           "viewBox=\"0 0 480 480\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"480\" height=\"480\" fill=\"white\"/>\n";
    // infinity band
    out << "<rect x=\"" << num(plot_lo) << "\" y=\"" << num(band_top) << "\" width=\""
        << num(plot_hi - plot_lo) << "\" height=\"" << num(kBandHeight)
        << "\" fill=\"#f0f0f0\"/>\n";
    out << "<text x=\"" << num(plot_lo - 40.0) << "\" y=\"" << num(band_top + kBandHeight - 8.0)
        << "\" font-size=\"12\" fill=\"#555555\">inf</text>\n";
    // frame and diagonal
    out << "<rect x=\"" << num(plot_lo) << "\" y=\"" << num(band_top) << "\" width=\""
        << num(plot_hi - plot_lo) << "\" height=\"" << num(plot_hi - band_top)
        << "\" fill=\"none\" stroke=\"#333333\"/>\n";
    out << "<line x1=\"" << num(x_of(ext.lo)) << "\" y1=\"" << num(y_of(ext.lo)) << "\" x2=\""
        << num(x_of(ext.hi)) << "\" y2=\"" << num(y_of(ext.hi))
        << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>\n";
    // axis labels
    out << "<text x=\"" << num(plot_lo) << "\" y=\"" << num(plot_hi + 16.0)
        << "\" font-size=\"12\" fill=\"#555555\">" << num(ext.lo) << "</text>\n";
    out << "<text x=\"" << num(plot_hi - 30.0) << "\" y=\"" << num(plot_hi + 16.0)
        << "\" font-size=\"12\" fill=\"#555555\">" << num(ext.hi) << "</text>\n";

    auto plot = [&](const Diagram& d, bool squares) {
        const char* color = squares ? "#d62728" : "#1f77b4";
        for (const Interval& iv : d.intervals) {
            if (iv.trivial()) continue;
            const double bx = iv.birth().finite() ? iv.birth().value() : ext.lo;
            const double x = x_of(bx);
            const double y = iv.death().finite() ? y_of(iv.death().value())
                                                 : band_top + kBandHeight / 2.0;
            if (squares) {
                out << "<rect x=\"" << num(x - 3.5) << "\" y=\"" << num(y - 3.5)
                    << "\" width=\"7\" height=\"7\" fill=\"" << color << "\"/>\n";
            } else {
                out << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y)
                    << "\" r=\"4\" fill=\"" << color << "\"/>\n";
            }
        }
    };
    plot(d0, false);
    if (d1) plot(*d1, true);

    out << "</svg>\n";
    return out.str();
}

}  // namespace topofilt
