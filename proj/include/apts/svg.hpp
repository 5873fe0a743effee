#pragma once

#include <iosfwd>
#include <string>

#include "apts/series.hpp"

namespace apts {

/// One stacked panel per channel with the series polyline and a dashed
/// vertical marker per breakpoint (class "breakpoint"), SVG 1.1.
void write_svg(const MultiSeries& series, const Segmentation& seg, std::ostream& out);

void write_svg_file(const MultiSeries& series, const Segmentation& seg, const std::string& path);

} // namespace apts
