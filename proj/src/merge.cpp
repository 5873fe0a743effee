#include "apts/merge.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace apts {

namespace {

// Rounds a half-integer average toward the smaller (forward-side) index.
int round_half_down(double x) {
    return static_cast<int>(std::ceil(x - 0.5));
}

} // namespace

Segmentation merge(const Segmentation& fwd, const Segmentation& rev, double gamma_close,
                   int k_max) {
    if (fwd.series_length != rev.series_length) {
        throw LengthMismatch("forward and reverse segmentations cover different series lengths");
    }

    std::vector<int> out;
    out.reserve(fwd.breakpoints.size() + rev.breakpoints.size());

    std::size_t i = 0, j = 0;
    while (i < fwd.breakpoints.size() && j < rev.breakpoints.size()) {
        const int f = fwd.breakpoints[i];
        const int r = rev.breakpoints[j];
        if (std::abs(f - r) < gamma_close) {
            out.push_back(round_half_down(0.5 * (static_cast<double>(f) + static_cast<double>(r))));
            ++i;
            ++j;
        } else if (f < r) {
            out.push_back(f);
            ++i;
        } else {
            out.push_back(r);
            ++j;
        }
    }
    out.insert(out.end(), fwd.breakpoints.begin() + static_cast<std::ptrdiff_t>(i), fwd.breakpoints.end());
    out.insert(out.end(), rev.breakpoints.begin() + static_cast<std::ptrdiff_t>(j), rev.breakpoints.end());

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());

    while (static_cast<int>(out.size()) > k_max) {
        std::size_t drop = 1;
        int best_gap = out[1] - out[0];
        for (std::size_t k = 2; k < out.size(); ++k) {
            const int gap = out[k] - out[k - 1];
            if (gap <= best_gap) { // ties remove the later breakpoint first
                best_gap = gap;
                drop = k;
            }
        }
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(drop));
    }

    Segmentation merged;
    merged.breakpoints = std::move(out);
    merged.series_length = fwd.series_length;
    merged.source = SegSource::merged;
    return merged;
}

} // namespace apts
