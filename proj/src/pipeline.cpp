#include "apts/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "apts/merge.hpp"
#include "apts/normalize.hpp"
#include "apts/trade.hpp"

namespace apts {

std::vector<std::int8_t> reverse_index_map(std::span<const std::int8_t> signal) {
    return {signal.rbegin(), signal.rend()};
}

namespace {

struct ChannelOutcome {
    SwitchSignal forward;
    SwitchSignal reverse; ///< on the reversed axis
    double epsilon = 0.0;
    bool degenerate = false;
    int forward_iterations = 0;
    int reverse_iterations = 0;
};

// Optional plateau filter -> trade, at a fixed cost level.
SwitchSignal traded_on_normalized(const NormalizedChannel& norm, double gamma_plat, double eps) {
    if (gamma_plat > 0.0) {
        auto [reduced, mask] = plateau_filter(norm, gamma_plat);
        if (reduced.size() < 2) {
            SwitchSignal flat;
            flat.values.assign(norm.values.size(), -1);
            flat.epsilon_used = eps;
            return flat;
        }
        SwitchSignal on_reduced = trade(reduced, eps);
        SwitchSignal full;
        full.values = plateau_reinsert(on_reduced.values, mask, norm.values.size());
        full.epsilon_used = eps;
        full.switch_count = count_switches(full.values);
        return full;
    }
    return trade(norm.values, eps);
}

ChannelOutcome process_channel(const std::vector<double>& raw, const AptsConfig& cfg) {
    ChannelOutcome out;

    // Forward: epsilon iteration on the (possibly reduced) normalized channel.
    const NormalizedChannel norm = normalize_channel(raw);
    if (cfg.gamma_plat > 0.0) {
        auto [reduced, mask] = plateau_filter(norm, cfg.gamma_plat);
        if (reduced.size() < 2) {
            out.forward.values.assign(raw.size(), -1);
            out.degenerate = true;
        } else {
            ChannelSearchResult res = channel_search(reduced, cfg);
            out.forward.values = plateau_reinsert(res.signal.values, mask, raw.size());
            out.forward.epsilon_used = res.signal.epsilon_used;
            out.forward.switch_count = count_switches(out.forward.values);
            out.degenerate = res.degenerate;
            out.forward_iterations = res.iterations;
        }
    } else {
        ChannelSearchResult res = channel_search(norm.values, cfg);
        out.forward = std::move(res.signal);
        out.degenerate = res.degenerate;
        out.forward_iterations = res.iterations;
    }
    out.epsilon = out.forward.epsilon_used;

    // Reverse: trade the normalized reversed series once with the frozen
    // epsilon. The positivity offset is order-invariant, so reversing the
    // forward normalization gives bit-identical values to normalizing the
    // reversed raw series. Constant channels stay all-cash both ways.
    const auto [lo, hi] = std::minmax_element(norm.values.begin(), norm.values.end());
    if (*lo == *hi) {
        out.reverse.values.assign(raw.size(), -1);
        out.reverse.epsilon_used = out.epsilon;
    } else {
        NormalizedChannel reversed;
        reversed.offset = norm.offset;
        reversed.values.assign(norm.values.rbegin(), norm.values.rend());
        out.reverse = traded_on_normalized(reversed, cfg.gamma_plat, out.epsilon);
    }
    return out;
}

} // namespace

AptsResult apts(const MultiSeries& series, const AptsConfig& cfg, unsigned threads) {
    const auto t_start = std::chrono::steady_clock::now();

    if (series.n_x() == 0 || series.points() < 2) {
        throw EmptyInput("apts needs at least one channel with two points");
    }
    cfg.validate(series.n_x());

    const std::size_t n_x = series.n_x();
    const int T = static_cast<int>(series.horizon());

    std::vector<ChannelOutcome> outcomes(n_x);
    unsigned workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n_x)));

    if (workers == 1) {
        for (std::size_t i = 0; i < n_x; ++i) {
            outcomes[i] = process_channel(series.channels[i], cfg);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n_x) return;
                try {
                    outcomes[i] = process_channel(series.channels[i], cfg);
                } catch (...) {
                    std::scoped_lock lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }

    AptsResult result;
    result.epsilons.reserve(n_x);
    result.forward_signals.reserve(n_x);

    std::vector<SwitchSignal> reverse_native(n_x);
    bool all_degenerate = true;
    for (std::size_t i = 0; i < n_x; ++i) {
        result.forward_signals.push_back(std::move(outcomes[i].forward));
        reverse_native[i] = std::move(outcomes[i].reverse);
        result.epsilons.push_back(outcomes[i].epsilon);
        result.degenerate.push_back(outcomes[i].degenerate ? 1 : 0);
        result.forward_iterations.push_back(outcomes[i].forward_iterations);
        result.reverse_epsilon_iterations += outcomes[i].reverse_iterations;
        all_degenerate = all_degenerate && outcomes[i].degenerate;
    }
    result.all_channels_degenerate = all_degenerate;

    const std::vector<double> weights = cfg.resolved_weights(n_x);

    result.forward_trace = consensus(result.forward_signals, weights);
    result.forward = crossings(result.forward_trace, SegSource::forward);

    // Reverse consensus runs on the reversed axis with its own alignment;
    // breakpoints map back via tau -> T - tau.
    ConsensusTrace reverse_trace_native = consensus(reverse_native, weights);
    Segmentation reverse_native_seg = crossings(reverse_trace_native, SegSource::reverse);
    result.reverse.series_length = T;
    result.reverse.source = SegSource::reverse;
    for (auto it = reverse_native_seg.breakpoints.rbegin(); it != reverse_native_seg.breakpoints.rend(); ++it) {
        result.reverse.breakpoints.push_back(T - *it);
    }

    result.breakpoints = merge(result.forward, result.reverse, cfg.resolved_gamma_close(series.horizon()), cfg.k_max);

    // Forward-indexed copies of the reverse-pass intermediates for reporting.
    result.reverse_signals.reserve(n_x);
    for (auto& sig : reverse_native) {
        SwitchSignal mapped;
        mapped.values = reverse_index_map(sig.values);
        mapped.epsilon_used = sig.epsilon_used;
        mapped.switch_count = count_switches(mapped.values);
        result.reverse_signals.push_back(std::move(mapped));
    }
    result.reverse_trace.p = std::move(reverse_trace_native.p);
    result.reverse_trace.q.assign(reverse_trace_native.q.rbegin(), reverse_trace_native.q.rend());

    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return result;
}

} // namespace apts
