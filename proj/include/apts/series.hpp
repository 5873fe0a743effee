#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "apts/errors.hpp"

namespace apts {

/// Ordered multivariate series: n_x channels of T+1 points each.
/// Indices are pure ordinals; any timestamps in input files stay outside the math.
/// Immutable after construction by convention; safe to share across workers.
struct MultiSeries {
    std::vector<std::vector<double>> channels;

    std::size_t n_x() const { return channels.size(); }
    std::size_t points() const { return channels.empty() ? 0 : channels.front().size(); }
    /// T, the last ordinal index.
    std::size_t horizon() const { return points() == 0 ? 0 : points() - 1; }
};

/// Validates raw channel data and moves it into a MultiSeries.
/// Throws EmptyInput, RaggedChannels or NonFinite; never mutates on failure paths
/// other than by having taken ownership of `raw`.
MultiSeries validate_series(std::vector<std::vector<double>> raw);

/// Per-channel optimal binary position sequence over {-1,+1}.
/// values[0] is always -1 (trading starts in cash).
struct SwitchSignal {
    std::vector<std::int8_t> values;
    double epsilon_used = 0.0;
    int switch_count = 0;
};

/// Number of t with values[t+1] != values[t].
int count_switches(std::span<const std::int8_t> values);

enum class SegSource { forward, reverse, merged };

/// Strictly increasing breakpoint list over a series of length T+1,
/// with 0 < tau_1 < ... < tau_K < T.
struct Segmentation {
    std::vector<int> breakpoints;
    int series_length = 0; ///< T
    SegSource source = SegSource::forward;

    /// Throws ConfigError if the strict ordering / range invariant is violated.
    void validate() const;
};

/// APTS hyperparameters. Defaults are the single set used throughout the
/// reference experiments: eps_min 0.01, eps_max 1, gamma_mult 2,
/// gamma_close max(0.01*T, 2), gamma_plat 0, k_max 10, uniform weights.
struct AptsConfig {
    double eps_min = 0.01;
    double eps_max = 1.0;
    double gamma_mult = 2.0;
    /// Unset means the data-dependent default max(0.01*T, 2).
    std::optional<double> gamma_close;
    double gamma_plat = 0.0;
    int k_max = 10;
    /// Unset means uniform 1/n_x.
    std::optional<std::vector<double>> weights;

    /// Throws ConfigError / WeightMismatch on invalid settings.
    /// Rejects eps_min <= 0, eps_min >= eps_max, gamma_mult <= 1,
    /// negative gamma_close/gamma_plat, k_max < 1, and weight vectors that are
    /// out of [0,1] or do not sum to 1 within 1e-9 (count checked when n_x given).
    void validate(std::size_t n_x = 0) const;

    double resolved_gamma_close(std::size_t series_horizon) const;
    std::vector<double> resolved_weights(std::size_t n_x) const;
};

} // namespace apts
