#pragma once

#include "apts/series.hpp"

namespace apts {

/// Fuses forward and reverse breakpoint lists.
///
/// A single left-to-right two-pointer sweep pairs each forward breakpoint
/// with at most one reverse breakpoint at strict distance < gamma_close and
/// replaces the pair by its average, rounded to the nearest integer with
/// halves toward the smaller index. Unpaired breakpoints from both lists are
/// kept and exact duplicates collapse. While more than k_max breakpoints
/// remain, the one with the smallest gap to its predecessor is removed
/// (ties drop the later breakpoint first); the first breakpoint's distance
/// to index 0 never counts.
Segmentation merge(const Segmentation& fwd, const Segmentation& rev, double gamma_close,
                   int k_max);

} // namespace apts
