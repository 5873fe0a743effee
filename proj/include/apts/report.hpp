#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "apts/series.hpp"

namespace apts {

/// Machine-readable run summary, one "key: value" line per entry.
/// The config echo carries everything needed to reproduce the run.
struct RunReport {
    std::string algo;   ///< apts | bu | ggs
    std::string source; ///< gen:example1 | gen:example2 | gen:noisy | file:<path>

    std::size_t n_x = 0;
    std::size_t series_horizon = 0; ///< T

    /// Hyperparameters and run options, serialized in insertion-stable order.
    std::vector<std::pair<std::string, std::string>> config;

    std::vector<int> breakpoints;
    std::vector<double> epsilons; ///< per channel, apts only
    double seconds = 0.0;
    double seconds_min = 0.0;    ///< only set when benchmarking
    double seconds_median = 0.0; ///< only set when benchmarking
    int repeats = 1;

    void write(std::ostream& out) const;
    std::string to_string() const;

    std::string config_value(const std::string& key, const std::string& fallback = "") const;
};

/// Parses a serialized report back; unknown keys land in config.
RunReport parse_report(std::istream& in);
RunReport parse_report_string(const std::string& text);

} // namespace apts
