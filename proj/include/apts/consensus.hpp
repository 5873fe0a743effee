#pragma once

#include <span>
#include <vector>

#include "apts/series.hpp"

namespace apts {

/// Weighted, sign-aligned average of the per-channel switch signals together
/// with the alignment factors. q(t) lies in [-1, 1]; p[0] == +1.
struct ConsensusTrace {
    std::vector<double> q;
    std::vector<std::int8_t> p;
};

/// Sign alignment against channel 1: p_1 = +1 and for i >= 2 the factor
/// maximizing sum_t |b_1(t) + p_i b_i(t)|, which reduces to the sign of the
/// dot product of the two signals. Ties resolve to +1. Mirrored channels
/// (b_i = -b_1) therefore contribute with flipped sign instead of cancelling.
std::vector<std::int8_t> align_signs(std::span<const SwitchSignal> signals);

/// q(t) = sum_i eta_i p_i b_i(t). Throws WeightMismatch when the weight count
/// differs from the channel count.
ConsensusTrace consensus(std::span<const SwitchSignal> signals, std::span<const double> weights);

/// Breakpoints from the zero crossings of q. The recorded index is the one
/// *before* the sign flip — the time the position change executes, which on a
/// single channel is the sampled local extremum. q(t) == 0 inherits the
/// previous sign (zero-hold), with sign(q(0)) == -1 when q(0) == 0.
/// Output indices lie in [1, T-1], so the Segmentation invariant holds by
/// construction; an empty breakpoint list is valid.
Segmentation crossings(const ConsensusTrace& trace, SegSource source = SegSource::forward);

} // namespace apts
