#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "apts/errors.hpp"

namespace apts {

/// Channel after the positivity shift x~(t) = x(t) + offset with
/// offset = |min_t x(t)| + 1, so every value is >= 1 and the raw channel
/// is recoverable as values[t] - offset.
struct NormalizedChannel {
    std::vector<double> values;
    double offset = 0.0;
};

NormalizedChannel normalize_channel(std::span<const double> raw);

/// Index bookkeeping for the gamma_plat plateau pre-filter.
/// kept_indices is strictly increasing into 0..T and always contains 0;
/// reduced_length == kept_indices.size().
struct PlateauMask {
    std::vector<std::size_t> kept_indices;
    std::size_t full_length = 0;

    std::size_t reduced_length() const { return kept_indices.size(); }
};

/// Keeps index 0 and every later index whose absolute difference to the
/// previous *kept* value exceeds gamma_plat. Long shallow ramps therefore
/// collapse like flat plateaus instead of leaking through step by step.
std::pair<std::vector<double>, PlateauMask>
plateau_filter(const NormalizedChannel& norm, double gamma_plat);

/// Expands a signal computed on the reduced series back to full length:
/// kept indices keep their computed value, removed indices carry the value
/// of the nearest preceding kept index. The signal is binary, so the label
/// in force when a plateau began is the right label for the plateau.
std::vector<std::int8_t> plateau_reinsert(std::span<const std::int8_t> reduced_signal,
                                          const PlateauMask& mask,
                                          std::size_t full_length);

} // namespace apts
