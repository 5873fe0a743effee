#pragma once

#include <span>
#include <vector>

#include "apts/linalg.hpp"
#include "apts/series.hpp"

namespace apts {

/// Summed squared residuals of per-channel simple linear regressions on an
/// ordinal abscissa. Windows must hold at least 2 points each.
double affine_fit_sse(std::span<const std::span<const double>> windows);

/// Bottom-up piecewise-affine segmentation: starting from single-point
/// segments, repeatedly merges the adjacent pair whose merged segment has the
/// smallest total affine-fit SSE over all channels (ties merge the leftmost
/// pair) until k_target breakpoints remain.
Segmentation bu_segment(const MultiSeries& series, int k_target);

/// Per-segment Gaussian fit at the final breakpoints.
struct GgsSegmentStats {
    std::vector<double> mean;
    SquareMatrix covariance; ///< empirical S, before regularization
    int length = 0;
};

struct GgsResult {
    Segmentation segmentation;
    double objective = 0.0;
    double lambda = 0.0;
    int k_target = 0;
    std::vector<GgsSegmentStats> segments;
};

/// Covariance-regularized Gaussian log-likelihood of a breakpoint list:
/// sum over segments of -len/2 * logdet(S + lambda*I/len)
///                      - lambda * Tr((S + lambda*I/len)^{-1}).
/// Breakpoints partition 0..T into [tau_{k-1}, tau_k - 1] with sentinels 0 and T+1.
double ggs_objective(const MultiSeries& series, std::span<const int> breakpoints, double lambda);

/// Greedy Gaussian segmentation: for K = 1..k_target insert the breakpoint
/// maximizing the objective, then sweep-adjust each breakpoint within its
/// neighbor interval (left to right, repeated until a full sweep moves
/// nothing). The objective never decreases during adjustment sweeps.
GgsResult ggs_segment_full(const MultiSeries& series, int k_target, double lambda);

Segmentation ggs_segment(const MultiSeries& series, int k_target, double lambda);

} // namespace apts
