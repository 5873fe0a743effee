#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apts/io.hpp"
#include "apts/pipeline.hpp"
#include "apts/report.hpp"

namespace apts {

/// Everything a single CLI invocation needs; the flag surface maps 1:1.
struct RunOptions {
    std::string input_path; ///< empty means a generator is used
    FileFormat format = FileFormat::csv;
    std::vector<std::size_t> ucr_rows;

    std::string gen = "example1"; ///< example1 | example2 | noisy
    std::string noisy_base = "example1";
    std::size_t channels = 100; ///< replica count for gen noisy
    double sigma = 0.2;
    std::uint64_t seed = 1;

    std::string algo = "apts"; ///< apts | bu | ggs
    int k = -1;                ///< BU/GGS breakpoint count; -1 derives it from an APTS run
    double lambda = 0.1;
    AptsConfig cfg;

    unsigned threads = 0; ///< 0 means all cores
    bool bench = false;
    int repeat = 10;
};

struct RunOutcome {
    RunReport report;
    MultiSeries series;
    Segmentation segmentation;
    std::optional<AptsResult> apts_result; ///< present when algo == apts
};

/// Loads or generates the input, executes the selected algorithm (timed),
/// and assembles the report. With bench set, the solve is repeated `repeat`
/// times and min/median seconds are added. BU/GGS with k < 0 first run APTS
/// and reuse its breakpoint count, as in the reference comparison protocol.
RunOutcome run(const RunOptions& opts);

/// Rebuilds options from a report's config echo (generator-based sources
/// reproduce exactly; file sources reproduce through the recorded path).
RunOptions options_from_report(const RunReport& report);

} // namespace apts
