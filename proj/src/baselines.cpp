#include "apts/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace apts {

namespace {

// Centered sums for a window [a, b] of one channel on the ordinal abscissa,
// from prefix sums. SSE of the least-squares affine fit follows in closed form.
struct ChannelPrefix {
    std::vector<double> y;  ///< y[t+1]  = sum values[0..t]
    std::vector<double> ty; ///< ty[t+1] = sum t * values[t]
    std::vector<double> yy; ///< yy[t+1] = sum values[t]^2

    explicit ChannelPrefix(const std::vector<double>& v) {
        y.assign(v.size() + 1, 0.0);
        ty.assign(v.size() + 1, 0.0);
        yy.assign(v.size() + 1, 0.0);
        for (std::size_t t = 0; t < v.size(); ++t) {
            y[t + 1] = y[t] + v[t];
            ty[t + 1] = ty[t] + static_cast<double>(t) * v[t];
            yy[t + 1] = yy[t] + v[t] * v[t];
        }
    }

    double sse(std::size_t a, std::size_t b) const {
        const double n = static_cast<double>(b - a + 1);
        if (b - a + 1 < 2) return 0.0;
        const double sy = y[b + 1] - y[a];
        const double sty = ty[b + 1] - ty[a];
        const double syy = yy[b + 1] - yy[a];
        const double da = static_cast<double>(a), db = static_cast<double>(b);
        const double st = 0.5 * (da + db) * n;
        // sum of t^2 over [a, b] via m(m+1)(2m+1)/6
        auto sq = [](double m) { return m * (m + 1.0) * (2.0 * m + 1.0) / 6.0; };
        const double stt = sq(db) - sq(da - 1.0);
        const double ctt = stt - st * st / n;
        const double cty = sty - st * sy / n;
        const double cyy = syy - sy * sy / n;
        const double sse = cyy - (ctt > 0.0 ? cty * cty / ctt : 0.0);
        return std::max(0.0, sse);
    }
};

} // namespace

double affine_fit_sse(std::span<const std::span<const double>> windows) {
    double total = 0.0;
    for (const auto& w : windows) {
        if (w.size() < 2) {
            throw TooShort("affine fit needs at least 2 points per window");
        }
        const double n = static_cast<double>(w.size());
        double sy = 0.0, sty = 0.0, syy = 0.0;
        for (std::size_t t = 0; t < w.size(); ++t) {
            sy += w[t];
            sty += static_cast<double>(t) * w[t];
            syy += w[t] * w[t];
        }
        const double m = n - 1.0;
        const double st = 0.5 * m * n;
        const double stt = m * (m + 1.0) * (2.0 * m + 1.0) / 6.0;
        const double ctt = stt - st * st / n;
        const double cty = sty - st * sy / n;
        const double cyy = syy - sy * sy / n;
        total += std::max(0.0, cyy - (ctt > 0.0 ? cty * cty / ctt : 0.0));
    }
    return total;
}

Segmentation bu_segment(const MultiSeries& series, int k_target) {
    if (k_target < 0) {
        throw ConfigError("k_target must be nonnegative");
    }
    const std::size_t points = series.points();
    if (points < 2 * static_cast<std::size_t>(k_target + 1)) {
        throw TooShort("series too short for the requested breakpoint count");
    }

    std::vector<ChannelPrefix> prefixes;
    prefixes.reserve(series.n_x());
    for (const auto& ch : series.channels) prefixes.emplace_back(ch);

    auto merged_cost = [&](std::size_t a, std::size_t b) {
        double c = 0.0;
        for (const auto& p : prefixes) c += p.sse(a, b);
        return c;
    };

    // Finest approximation: one segment per point, tracked by start index.
    std::vector<std::size_t> starts(points);
    for (std::size_t i = 0; i < points; ++i) starts[i] = i;

    auto seg_end = [&](std::size_t k) {
        return (k + 1 < starts.size()) ? starts[k + 1] - 1 : points - 1;
    };

    // cost[k] = SSE of merging segment k with segment k+1
    std::vector<double> cost(points - 1);
    for (std::size_t k = 0; k + 1 < starts.size(); ++k) {
        cost[k] = merged_cost(starts[k], seg_end(k + 1));
    }

    while (static_cast<int>(starts.size()) - 1 > k_target) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < cost.size(); ++k) {
            if (cost[k] < cost[best]) best = k; // ties keep the leftmost pair
        }
        starts.erase(starts.begin() + static_cast<std::ptrdiff_t>(best) + 1);
        cost.erase(cost.begin() + static_cast<std::ptrdiff_t>(best));
        if (best < cost.size()) {
            cost[best] = merged_cost(starts[best], seg_end(best + 1));
        }
        if (best > 0) {
            cost[best - 1] = merged_cost(starts[best - 1], seg_end(best));
        }
    }

    Segmentation seg;
    seg.series_length = static_cast<int>(series.horizon());
    seg.source = SegSource::forward;
    seg.breakpoints.assign(starts.begin() + 1, starts.end());
    return seg;
}

namespace {

// Segment first and second moments, from cumulative sums when the footprint
// is acceptable and recomputed per query otherwise.
class SegmentMoments {
public:
    explicit SegmentMoments(const MultiSeries& series) : series_(series), n_(series.n_x()) {
        const std::size_t points = series.points();
        const std::size_t cum_doubles = (points + 1) * n_ * n_;
        use_cumulative_ = cum_doubles <= (1u << 25); // ~256 MB of doubles
        cum1_.assign((points + 1) * n_, 0.0);
        for (std::size_t t = 0; t < points; ++t) {
            for (std::size_t c = 0; c < n_; ++c) {
                cum1_[(t + 1) * n_ + c] = cum1_[t * n_ + c] + series.channels[c][t];
            }
        }
        if (use_cumulative_) {
            cum2_.assign((points + 1) * n_ * n_, 0.0);
            for (std::size_t t = 0; t < points; ++t) {
                const std::size_t prev = t * n_ * n_, cur = (t + 1) * n_ * n_;
                for (std::size_t i = 0; i < n_; ++i) {
                    const double xi = series.channels[i][t];
                    for (std::size_t j = 0; j <= i; ++j) {
                        cum2_[cur + i * n_ + j] = cum2_[prev + i * n_ + j] + xi * series.channels[j][t];
                    }
                }
            }
        }
    }

    /// Regularized segment matrix S + lambda*I/len for points [a, b).
    SquareMatrix regularized(std::size_t a, std::size_t b, double lambda) const {
        SquareMatrix m(n_);
        regularized_into(a, b, lambda, m);
        return m;
    }

    void regularized_into(std::size_t a, std::size_t b, double lambda, SquareMatrix& m) const {
        const double len = static_cast<double>(b - a);
        if (use_cumulative_) {
            const std::size_t lo = a * n_ * n_, hi = b * n_ * n_;
            for (std::size_t i = 0; i < n_; ++i) {
                const double mi = (cum1_[b * n_ + i] - cum1_[a * n_ + i]) / len;
                for (std::size_t j = 0; j <= i; ++j) {
                    const double mj = (cum1_[b * n_ + j] - cum1_[a * n_ + j]) / len;
                    const double second = (cum2_[hi + i * n_ + j] - cum2_[lo + i * n_ + j]) / len;
                    const double v = second - mi * mj;
                    m.at(i, j) = v;
                    m.at(j, i) = v;
                }
            }
        } else {
            std::fill(m.a.begin(), m.a.end(), 0.0);
            std::vector<double> mu(n_, 0.0);
            for (std::size_t t = a; t < b; ++t) {
                for (std::size_t i = 0; i < n_; ++i) mu[i] += series_.channels[i][t];
            }
            for (auto& v : mu) v /= len;
            for (std::size_t t = a; t < b; ++t) {
                for (std::size_t i = 0; i < n_; ++i) {
                    const double di = series_.channels[i][t] - mu[i];
                    for (std::size_t j = 0; j <= i; ++j) {
                        m.at(i, j) += di * (series_.channels[j][t] - mu[j]);
                    }
                }
            }
            for (std::size_t i = 0; i < n_; ++i) {
                for (std::size_t j = 0; j < i; ++j) {
                    m.at(i, j) /= len;
                    m.at(j, i) = m.at(i, j);
                }
                m.at(i, i) /= len;
            }
        }
        for (std::size_t i = 0; i < n_; ++i) {
            m.at(i, i) += lambda / len;
        }
    }

    std::vector<double> mean(std::size_t a, std::size_t b) const {
        const double len = static_cast<double>(b - a);
        std::vector<double> mu(n_, 0.0);
        for (std::size_t i = 0; i < n_; ++i) {
            mu[i] = (cum1_[b * n_ + i] - cum1_[a * n_ + i]) / len;
        }
        return mu;
    }

private:
    const MultiSeries& series_;
    std::size_t n_;
    bool use_cumulative_ = true;
    std::vector<double> cum1_;
    std::vector<double> cum2_;
};

// Reused buffers for the objective evaluations inside the greedy loops.
struct SpdWork {
    SquareMatrix m;
    SquareMatrix factor;
    std::vector<double> col;

    explicit SpdWork(std::size_t n) : m(n), factor(n), col(n) {}
};

double segment_objective(const SegmentMoments& mom, std::size_t a, std::size_t b, double lambda,
                         SpdWork& work) {
    const double len = static_cast<double>(b - a);
    mom.regularized_into(a, b, lambda, work.m);
    const SpdStats st = spd_stats_into(work.m, work.factor, work.col);
    return -0.5 * len * st.logdet - lambda * st.inverse_trace;
}

std::vector<std::size_t> boundaries_of(std::span<const int> breakpoints, std::size_t points) {
    std::vector<std::size_t> bounds;
    bounds.reserve(breakpoints.size() + 2);
    bounds.push_back(0);
    for (int tau : breakpoints) {
        if (tau < 1 || static_cast<std::size_t>(tau) >= points ||
            static_cast<std::size_t>(tau) <= bounds.back()) {
            throw ConfigError("breakpoints must be strictly increasing within 1..T");
        }
        bounds.push_back(static_cast<std::size_t>(tau));
    }
    bounds.push_back(points);
    return bounds;
}

} // namespace

double ggs_objective(const MultiSeries& series, std::span<const int> breakpoints, double lambda) {
    if (!(lambda > 0.0)) {
        throw ConfigError("lambda must be positive");
    }
    const SegmentMoments mom(series);
    SpdWork work(series.n_x());
    const auto bounds = boundaries_of(breakpoints, series.points());
    double obj = 0.0;
    for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
        obj += segment_objective(mom, bounds[k], bounds[k + 1], lambda, work);
    }
    return obj;
}

GgsResult ggs_segment_full(const MultiSeries& series, int k_target, double lambda) {
    if (!(lambda > 0.0)) {
        throw ConfigError("lambda must be positive");
    }
    if (k_target < 1) {
        throw ConfigError("ggs needs k_target >= 1");
    }
    const std::size_t points = series.points();
    const std::size_t T = series.horizon();
    if (static_cast<std::size_t>(k_target) > T - 1) {
        throw TooShort("series too short for the requested breakpoint count");
    }

    const SegmentMoments mom(series);
    SpdWork work(series.n_x());
    std::vector<std::size_t> bps; // strictly increasing, in [1, T-1]

    auto pair_value = [&](std::size_t lo, std::size_t p, std::size_t hi) {
        return segment_objective(mom, lo, p, lambda, work) +
               segment_objective(mom, p, hi, lambda, work);
    };

    while (bps.size() < static_cast<std::size_t>(k_target)) {
        // Insertion: best single new breakpoint over all segments and positions.
        double best_total = -std::numeric_limits<double>::infinity();
        std::size_t best_pos = 0;
        bool found = false;
        for (std::size_t k = 0; k <= bps.size(); ++k) {
            const std::size_t lo = (k == 0) ? 0 : bps[k - 1];
            const std::size_t hi = (k < bps.size()) ? bps[k] : points;
            const std::size_t p_max = std::min(hi - 1, T - 1);
            const double base = segment_objective(mom, lo, hi, lambda, work);
            for (std::size_t p = lo + 1; p <= p_max; ++p) {
                const double gain = pair_value(lo, p, hi) - base;
                if (!found || gain > best_total) {
                    best_total = gain;
                    best_pos = p;
                    found = true;
                }
            }
        }
        if (!found) {
            throw TooShort("no admissible breakpoint position left");
        }
        bps.insert(std::upper_bound(bps.begin(), bps.end(), best_pos), best_pos);

        // Adjustment sweeps: move each breakpoint to the best position within
        // its neighbor interval; strict improvement only, so sweeps terminate.
        bool moved = true;
        while (moved) {
            moved = false;
            for (std::size_t k = 0; k < bps.size(); ++k) {
                const std::size_t lo = (k == 0) ? 0 : bps[k - 1];
                const std::size_t hi = (k + 1 < bps.size()) ? bps[k + 1] : points;
                const std::size_t p_max = std::min(hi - 1, T - 1);
                std::size_t best_p = bps[k];
                double best_v = pair_value(lo, bps[k], hi);
                for (std::size_t p = lo + 1; p <= p_max; ++p) {
                    if (p == bps[k]) continue;
                    const double v = pair_value(lo, p, hi);
                    if (v > best_v) {
                        best_v = v;
                        best_p = p;
                    }
                }
                if (best_p != bps[k]) {
                    bps[k] = best_p;
                    moved = true;
                }
            }
        }
    }

    GgsResult res;
    res.lambda = lambda;
    res.k_target = k_target;
    res.segmentation.series_length = static_cast<int>(T);
    res.segmentation.source = SegSource::forward;
    res.segmentation.breakpoints.assign(bps.begin(), bps.end());
    res.segmentation.validate();

    const auto bounds = boundaries_of(res.segmentation.breakpoints, points);
    for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
        const std::size_t a = bounds[k], b = bounds[k + 1];
        GgsSegmentStats st;
        st.length = static_cast<int>(b - a);
        st.mean = mom.mean(a, b);
        st.covariance = mom.regularized(a, b, 0.0); // zero shift: empirical S itself
        res.segments.push_back(std::move(st));
        res.objective += segment_objective(mom, a, b, lambda, work);
    }
    return res;
}

Segmentation ggs_segment(const MultiSeries& series, int k_target, double lambda) {
    return ggs_segment_full(series, k_target, lambda).segmentation;
}

} // namespace apts
