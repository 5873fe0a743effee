#include "apts/consensus.hpp"

#include <cmath>

namespace apts {

namespace {

// Weighted sums that should be exact zeros can pick up rounding dust when the
// uniform weight 1/n_x is not representable; anything this small counts as 0.
constexpr double kZeroTol = 1e-12;

void check_same_length(std::span<const SwitchSignal> signals) {
    if (signals.empty()) {
        throw EmptyInput("consensus needs at least one channel signal");
    }
    const std::size_t len = signals.front().values.size();
    for (const auto& s : signals) {
        if (s.values.size() != len) {
            throw LengthMismatch("switch signals differ in length");
        }
    }
}

} // namespace

std::vector<std::int8_t> align_signs(std::span<const SwitchSignal> signals) {
    check_same_length(signals);
    std::vector<std::int8_t> p(signals.size(), +1);
    const auto& ref = signals.front().values;
    for (std::size_t i = 1; i < signals.size(); ++i) {
        long dot = 0;
        const auto& b = signals[i].values;
        for (std::size_t t = 0; t < ref.size(); ++t) {
            dot += static_cast<long>(ref[t]) * static_cast<long>(b[t]);
        }
        p[i] = (dot >= 0) ? std::int8_t{+1} : std::int8_t{-1};
    }
    return p;
}

ConsensusTrace consensus(std::span<const SwitchSignal> signals, std::span<const double> weights) {
    check_same_length(signals);
    if (weights.size() != signals.size()) {
        throw WeightMismatch("weight count does not match channel count");
    }
    ConsensusTrace trace;
    trace.p = align_signs(signals);
    const std::size_t len = signals.front().values.size();
    trace.q.assign(len, 0.0);
    for (std::size_t i = 0; i < signals.size(); ++i) {
        const double factor = weights[i] * static_cast<double>(trace.p[i]);
        const auto& b = signals[i].values;
        for (std::size_t t = 0; t < len; ++t) {
            trace.q[t] += factor * static_cast<double>(b[t]);
        }
    }
    return trace;
}

Segmentation crossings(const ConsensusTrace& trace, SegSource source) {
    Segmentation seg;
    seg.series_length = trace.q.empty() ? 0 : static_cast<int>(trace.q.size()) - 1;
    seg.source = source;
    if (trace.q.empty()) return seg;

    auto sign_of = [](double q, std::int8_t held) -> std::int8_t {
        if (q > kZeroTol) return +1;
        if (q < -kZeroTol) return -1;
        return held; // zero-hold
    };

    std::int8_t s = sign_of(trace.q[0], -1);
    for (std::size_t t = 1; t < trace.q.size(); ++t) {
        const std::int8_t s_next = sign_of(trace.q[t], s);
        if (s_next != s && t >= 2) {
            seg.breakpoints.push_back(static_cast<int>(t) - 1);
        }
        s = s_next;
    }
    return seg;
}

} // namespace apts
