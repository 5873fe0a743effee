#pragma once

#include <functional>
#include <vector>

#include "apts/series.hpp"

namespace apts {

struct TimingStats {
    double min_seconds = 0.0;
    double median_seconds = 0.0;
    int repeats = 0;
};

/// Runs `fn` `repeat` times and reports min and median wall-clock seconds.
TimingStats time_repeated(const std::function<void()>& fn, int repeat);

/// One scaling-table row: solve seconds per algorithm at a channel count.
struct ScalingRow {
    std::size_t n_x = 0;
    std::size_t series_horizon = 0;
    int k_used = 0; ///< breakpoint count handed to BU/GGS (from the APTS run)
    double apts_seconds = 0.0;
    double bu_seconds = 0.0;
    double ggs_seconds = 0.0;
};

/// Times APTS, BU and GGS on the first n_x channels of `base` for each
/// requested count, keeping T fixed. APTS runs first; BU and GGS are then
/// given its breakpoint count, mirroring the comparison protocol of the
/// reference experiments. Timings are minima over `repeat` runs.
std::vector<ScalingRow> bench_scaling(const MultiSeries& base,
                                      const std::vector<std::size_t>& channel_counts,
                                      const AptsConfig& cfg, double lambda, unsigned threads,
                                      int repeat = 3);

} // namespace apts
