#include "apts/series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace apts {

MultiSeries validate_series(std::vector<std::vector<double>> raw) {
    if (raw.empty()) {
        throw EmptyInput("series has no channels");
    }
    const std::size_t len = raw.front().size();
    if (len < 2) {
        throw EmptyInput("series needs at least 2 points per channel");
    }
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i].size() != len) {
            throw RaggedChannels("channel " + std::to_string(i) + " has " +
                                 std::to_string(raw[i].size()) + " points, expected " +
                                 std::to_string(len));
        }
        for (double v : raw[i]) {
            if (!std::isfinite(v)) {
                throw NonFinite("channel " + std::to_string(i) + " contains a non-finite value");
            }
        }
    }
    MultiSeries out;
    out.channels = std::move(raw);
    return out;
}

int count_switches(std::span<const std::int8_t> values) {
    int n = 0;
    for (std::size_t t = 0; t + 1 < values.size(); ++t) {
        if (values[t + 1] != values[t]) ++n;
    }
    return n;
}

void Segmentation::validate() const {
    int prev = 0;
    for (int tau : breakpoints) {
        if (tau <= prev || tau >= series_length) {
            throw ConfigError("breakpoints must satisfy 0 < tau_1 < ... < tau_K < T");
        }
        prev = tau;
    }
}

void AptsConfig::validate(std::size_t n_x) const {
    if (eps_min <= 0.0 || eps_min >= eps_max) {
        throw ConfigError("require 0 < eps_min < eps_max");
    }
    if (gamma_mult <= 1.0) {
        throw ConfigError("gamma_mult must exceed 1");
    }
    if (gamma_close.has_value() && *gamma_close < 0.0) {
        throw ConfigError("gamma_close must be nonnegative");
    }
    if (gamma_plat < 0.0) {
        throw ConfigError("gamma_plat must be nonnegative");
    }
    if (k_max < 1) {
        throw ConfigError("k_max must be at least 1");
    }
    if (weights.has_value()) {
        if (n_x != 0 && weights->size() != n_x) {
            throw WeightMismatch("weight count " + std::to_string(weights->size()) +
                                 " does not match channel count " + std::to_string(n_x));
        }
        double sum = 0.0;
        for (double w : *weights) {
            if (!(w >= 0.0 && w <= 1.0)) {
                throw ConfigError("each weight must lie in [0,1]");
            }
            sum += w;
        }
        if (std::abs(sum - 1.0) > 1e-9) {
            throw ConfigError("weights must sum to 1 within 1e-9");
        }
    }
}

double AptsConfig::resolved_gamma_close(std::size_t series_horizon) const {
    if (gamma_close.has_value()) return *gamma_close;
    return std::max(0.01 * static_cast<double>(series_horizon), 2.0);
}

std::vector<double> AptsConfig::resolved_weights(std::size_t n_x) const {
    if (weights.has_value()) {
        if (weights->size() != n_x) {
            throw WeightMismatch("weight count does not match channel count");
        }
        return *weights;
    }
    return std::vector<double>(n_x, 1.0 / static_cast<double>(n_x));
}

} // namespace apts
