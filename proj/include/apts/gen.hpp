#pragma once

#include <cstdint>

#include "apts/series.hpp"

namespace apts {

/// 100-point single channel of affine pieces, linearly interpolated between
/// the vertices (0,0), (16,12.8970), (33,-3.4), (49,19.1939), (50,19.3939),
/// (66,3.2), (83,26.2970), (99,19.8).
MultiSeries gen_example1();

/// 100-point single channel of three half-circles
/// x(t) = sqrt(max(0, R^2 - (t - c)^2)) with R = 16.5 and centers 16.5, 49.5, 82.5.
MultiSeries gen_example2();

/// n_x noisy copies of a single-channel base: channel i = base + sigma * g_i
/// with independent Gaussian draws from a seeded generator (Marsaglia polar
/// method over mt19937_64, so replicas are bit-identical across runs and
/// platforms). Channels consume the stream in order.
MultiSeries gen_noisy_replicas(const MultiSeries& base, std::size_t n_x, double sigma,
                               std::uint64_t seed);

} // namespace apts
