#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "apts/series.hpp"

namespace apts {

enum class FileFormat { csv, tsv, ucr };

FileFormat parse_format(const std::string& name);

/// csv/tsv: one column per channel, one row per time index, optional header
/// row. ucr: one series per row, a leading class label column that is
/// dropped, selected rows stacked as channels (empty selection means all
/// rows). Throws ParseError with a line number, FormatMismatch, or the
/// validate_series errors.
MultiSeries load_series(const std::string& path, FileFormat format,
                        const std::vector<std::size_t>& ucr_rows = {});

MultiSeries load_series_stream(std::istream& in, FileFormat format,
                               const std::vector<std::size_t>& ucr_rows = {});

/// Writes one row per time index with channels as delimited columns, at
/// full round-trip precision (17 significant digits).
void save_series_csv(const MultiSeries& series, const std::string& path, char delimiter = ',');
void save_series_stream(const MultiSeries& series, std::ostream& out, char delimiter = ',');

} // namespace apts
