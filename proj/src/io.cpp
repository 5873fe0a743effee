#include "apts/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace apts {

FileFormat parse_format(const std::string& name) {
    if (name == "csv") return FileFormat::csv;
    if (name == "tsv") return FileFormat::tsv;
    if (name == "ucr") return FileFormat::ucr;
    throw FormatMismatch("unknown format '" + name + "' (expected csv, tsv or ucr)");
}

namespace {

std::vector<std::string> split_fields(const std::string& line, char delim) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == delim) {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

bool parse_double(const std::string& field, double& value) {
    const char* b = field.data();
    const char* e = b + field.size();
    while (b < e && std::isspace(static_cast<unsigned char>(*b))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(e[-1]))) --e;
    if (b == e) return false;
    const auto res = std::from_chars(b, e, value);
    return res.ec == std::errc{} && res.ptr == e;
}

bool blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

MultiSeries load_columns(std::istream& in, char delim) {
    std::vector<std::vector<double>> channels;
    std::string line;
    long line_no = 0;
    bool saw_data = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line)) continue;
        const auto fields = split_fields(line, delim);
        std::vector<double> row(fields.size());
        bool numeric = true;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (!parse_double(fields[i], row[i])) {
                numeric = false;
                break;
            }
        }
        if (!numeric) {
            if (!saw_data) continue; // header row
            throw ParseError("non-numeric field", line_no);
        }
        if (!saw_data) {
            channels.assign(row.size(), {});
            saw_data = true;
        } else if (row.size() != channels.size()) {
            throw ParseError("expected " + std::to_string(channels.size()) + " columns, got " +
                                 std::to_string(row.size()),
                             line_no);
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            channels[i].push_back(row[i]);
        }
    }
    if (!saw_data) {
        throw ParseError("no numeric data rows", line_no == 0 ? 1 : line_no);
    }
    return validate_series(std::move(channels));
}

MultiSeries load_ucr(std::istream& in, const std::vector<std::size_t>& rows) {
    std::vector<std::vector<double>> all_rows;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line)) continue;
        const char delim = line.find('\t') != std::string::npos ? '\t' : ',';
        const auto fields = split_fields(line, delim);
        if (fields.size() < 2) {
            throw ParseError("ucr row needs a label and at least one value", line_no);
        }
        std::vector<double> values;
        values.reserve(fields.size() - 1);
        for (std::size_t i = 1; i < fields.size(); ++i) { // field 0 is the class label
            double v;
            if (!parse_double(fields[i], v)) {
                throw ParseError("non-numeric field", line_no);
            }
            values.push_back(v);
        }
        all_rows.push_back(std::move(values));
    }
    if (all_rows.empty()) {
        throw ParseError("no data rows", 1);
    }
    std::vector<std::vector<double>> picked;
    if (rows.empty()) {
        picked = std::move(all_rows);
    } else {
        for (std::size_t r : rows) {
            if (r >= all_rows.size()) {
                throw FormatMismatch("row " + std::to_string(r) + " out of range (file has " +
                                     std::to_string(all_rows.size()) + " rows)");
            }
            picked.push_back(all_rows[r]);
        }
    }
    return validate_series(std::move(picked));
}

} // namespace

MultiSeries load_series_stream(std::istream& in, FileFormat format,
                               const std::vector<std::size_t>& ucr_rows) {
    switch (format) {
        case FileFormat::csv: return load_columns(in, ',');
        case FileFormat::tsv: return load_columns(in, '\t');
        case FileFormat::ucr: return load_ucr(in, ucr_rows);
    }
    throw FormatMismatch("unreachable format");
}

MultiSeries load_series(const std::string& path, FileFormat format,
                        const std::vector<std::size_t>& ucr_rows) {
    std::ifstream in(path);
    if (!in) {
        throw FormatMismatch("cannot open '" + path + "'");
    }
    return load_series_stream(in, format, ucr_rows);
}

void save_series_stream(const MultiSeries& series, std::ostream& out, char delimiter) {
    std::ostringstream line;
    line.precision(17);
    for (std::size_t t = 0; t < series.points(); ++t) {
        line.str({});
        for (std::size_t c = 0; c < series.n_x(); ++c) {
            if (c) line << delimiter;
            line << series.channels[c][t];
        }
        out << line.str() << '\n';
    }
}

void save_series_csv(const MultiSeries& series, const std::string& path, char delimiter) {
    std::ofstream out(path);
    if (!out) {
        throw FormatMismatch("cannot write '" + path + "'");
    }
    save_series_stream(series, out, delimiter);
}

} // namespace apts
