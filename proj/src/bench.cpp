#include "apts/bench.hpp"

#include <algorithm>
#include <chrono>

#include "apts/baselines.hpp"
#include "apts/pipeline.hpp"

namespace apts {

TimingStats time_repeated(const std::function<void()>& fn, int repeat) {
    repeat = std::max(1, repeat);
    std::vector<double> times;
    times.reserve(static_cast<std::size_t>(repeat));
    for (int r = 0; r < repeat; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        times.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    std::sort(times.begin(), times.end());
    TimingStats st;
    st.repeats = repeat;
    st.min_seconds = times.front();
    st.median_seconds = times[times.size() / 2];
    return st;
}

std::vector<ScalingRow> bench_scaling(const MultiSeries& base,
                                      const std::vector<std::size_t>& channel_counts,
                                      const AptsConfig& cfg, double lambda, unsigned threads,
                                      int repeat) {
    std::vector<ScalingRow> rows;
    for (std::size_t count : channel_counts) {
        if (count < 1 || count > base.n_x()) {
            throw ConfigError("channel count " + std::to_string(count) +
                              " outside the base series (n_x = " + std::to_string(base.n_x()) + ")");
        }
        MultiSeries subset;
        subset.channels.assign(base.channels.begin(),
                               base.channels.begin() + static_cast<std::ptrdiff_t>(count));

        ScalingRow row;
        row.n_x = count;
        row.series_horizon = subset.horizon();

        AptsResult apts_result = apts(subset, cfg, threads);
        row.k_used = std::max<int>(1, static_cast<int>(apts_result.breakpoints.breakpoints.size()));

        row.apts_seconds = time_repeated([&] { apts(subset, cfg, threads); }, repeat).min_seconds;
        row.bu_seconds =
            time_repeated([&] { bu_segment(subset, row.k_used); }, repeat).min_seconds;
        row.ggs_seconds =
            time_repeated([&] { ggs_segment(subset, row.k_used, lambda); }, repeat).min_seconds;
        rows.push_back(row);
    }
    return rows;
}

} // namespace apts
