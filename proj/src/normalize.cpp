#include "apts/normalize.hpp"

#include <algorithm>
#include <cmath>

namespace apts {

NormalizedChannel normalize_channel(std::span<const double> raw) {
    if (raw.empty()) {
        throw EmptyInput("cannot normalize an empty channel");
    }
    const double lo = *std::min_element(raw.begin(), raw.end());
    if (!std::isfinite(lo)) {
        throw NonFinite("channel contains a non-finite value");
    }
    NormalizedChannel out;
    out.offset = std::abs(lo) + 1.0;
    out.values.reserve(raw.size());
    for (double v : raw) {
        out.values.push_back(v + out.offset);
    }
    return out;
}

std::pair<std::vector<double>, PlateauMask>
plateau_filter(const NormalizedChannel& norm, double gamma_plat) {
    if (gamma_plat < 0.0) {
        throw ConfigError("gamma_plat must be nonnegative");
    }
    std::vector<double> reduced;
    PlateauMask mask;
    mask.full_length = norm.values.size();

    reduced.push_back(norm.values.front());
    mask.kept_indices.push_back(0);
    double last_kept = norm.values.front();
    for (std::size_t t = 1; t < norm.values.size(); ++t) {
        if (std::abs(norm.values[t] - last_kept) > gamma_plat) {
            reduced.push_back(norm.values[t]);
            mask.kept_indices.push_back(t);
            last_kept = norm.values[t];
        }
    }
    return {std::move(reduced), std::move(mask)};
}

std::vector<std::int8_t> plateau_reinsert(std::span<const std::int8_t> reduced_signal,
                                          const PlateauMask& mask,
                                          std::size_t full_length) {
    if (reduced_signal.size() != mask.reduced_length() || full_length != mask.full_length) {
        throw LengthMismatch("reduced signal does not match plateau mask");
    }
    std::vector<std::int8_t> full(full_length, -1);
    std::size_t k = 0;
    std::int8_t carry = reduced_signal.empty() ? std::int8_t{-1} : reduced_signal[0];
    for (std::size_t t = 0; t < full_length; ++t) {
        if (k < mask.kept_indices.size() && mask.kept_indices[k] == t) {
            carry = reduced_signal[k];
            ++k;
        }
        full[t] = carry;
    }
    return full;
}

} // namespace apts
