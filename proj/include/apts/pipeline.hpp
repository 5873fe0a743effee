#pragma once

#include <vector>

#include "apts/consensus.hpp"
#include "apts/series.hpp"

namespace apts {

/// Elementwise index reversal t -> T - t of a switch sequence.
std::vector<std::int8_t> reverse_index_map(std::span<const std::int8_t> signal);

/// Everything a run produces: the merged segmentation plus per-channel and
/// per-direction intermediates for upstream tasks and reporting. Reverse-pass
/// signals and trace are stored in forward indexing.
struct AptsResult {
    Segmentation breakpoints; ///< merged result, K <= k_max
    Segmentation forward;
    Segmentation reverse; ///< reverse-pass breakpoints mapped to forward indexing

    std::vector<SwitchSignal> forward_signals;
    std::vector<SwitchSignal> reverse_signals; ///< forward-indexed via reverse_index_map
    ConsensusTrace forward_trace;
    ConsensusTrace reverse_trace; ///< forward-indexed

    std::vector<double> epsilons;          ///< frozen per-channel cost level
    std::vector<char> degenerate;          ///< per-channel degeneracy flags
    bool all_channels_degenerate = false;  ///< every channel constant/degenerate
    std::vector<int> forward_iterations;   ///< epsilon iterations per channel
    int reverse_epsilon_iterations = 0;    ///< structurally zero: reverse pass reuses eps

    double seconds = 0.0; ///< wall-clock solve time
};

/// Full segmentation run: per channel normalize, optionally plateau-filter,
/// epsilon-search trade; consensus over channels; the same on the reversed raw
/// series with the forward-frozen epsilon per channel (zero epsilon
/// iterations); reverse breakpoints mapped back to forward indexing; merge.
///
/// Channels are processed by up to `threads` workers (0 means all cores);
/// results are deposited in per-channel slots, so output is bit-identical
/// regardless of thread count.
AptsResult apts(const MultiSeries& series, const AptsConfig& cfg, unsigned threads = 0);

} // namespace apts
