#include "apts/svg.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace apts {

namespace {

constexpr double kPanelWidth = 720.0;
constexpr double kPanelHeight = 120.0;
constexpr double kMarginX = 48.0;
constexpr double kMarginY = 16.0;
constexpr double kPanelGap = 18.0;

std::string num(double v) {
    std::ostringstream os;
    os.precision(8);
    os << v;
    return os.str();
}

} // namespace

void write_svg(const MultiSeries& series, const Segmentation& seg, std::ostream& out) {
    const std::size_t n = series.n_x();
    const std::size_t points = series.points();
    const double total_w = kPanelWidth + 2.0 * kMarginX;
    const double total_h = kMarginY * 2.0 + static_cast<double>(n) * kPanelHeight +
                           (n > 0 ? static_cast<double>(n - 1) * kPanelGap : 0.0);

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(total_w)
        << "\" height=\"" << num(total_h) << "\" viewBox=\"0 0 " << num(total_w) << ' '
        << num(total_h) << "\">\n";

    for (std::size_t c = 0; c < n; ++c) {
        const auto& ch = series.channels[c];
        const auto [lo_it, hi_it] = std::minmax_element(ch.begin(), ch.end());
        double lo = *lo_it, hi = *hi_it;
        if (hi == lo) {
            lo -= 1.0;
            hi += 1.0;
        }
        const double top = kMarginY + static_cast<double>(c) * (kPanelHeight + kPanelGap);
        auto x_of = [&](double t) {
            return kMarginX + kPanelWidth * t / static_cast<double>(points - 1);
        };
        auto y_of = [&](double v) { return top + kPanelHeight * (hi - v) / (hi - lo); };

        out << "<g>\n";
        out << "<rect x=\"" << num(kMarginX) << "\" y=\"" << num(top) << "\" width=\""
            << num(kPanelWidth) << "\" height=\"" << num(kPanelHeight)
            << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
        out << "<polyline fill=\"none\" stroke=\"#1f4fa0\" stroke-width=\"1\" points=\"";
        for (std::size_t t = 0; t < points; ++t) {
            if (t) out << ' ';
            out << num(x_of(static_cast<double>(t))) << ',' << num(y_of(ch[t]));
        }
        out << "\"/>\n";
        for (int tau : seg.breakpoints) {
            const double x = x_of(static_cast<double>(tau));
            out << "<line class=\"breakpoint\" x1=\"" << num(x) << "\" y1=\"" << num(top)
                << "\" x2=\"" << num(x) << "\" y2=\"" << num(top + kPanelHeight)
                << "\" stroke=\"#c02020\" stroke-dasharray=\"4 3\"/>\n";
        }
        out << "</g>\n";
    }
    out << "</svg>\n";
}

void write_svg_file(const MultiSeries& series, const Segmentation& seg, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw FormatMismatch("cannot write '" + path + "'");
    }
    write_svg(series, seg, out);
}

} // namespace apts
