#include "apts/gen.hpp"

#include <cmath>
#include <random>
#include <utility>

namespace apts {

MultiSeries gen_example1() {
    static constexpr std::pair<int, double> kVertices[] = {
        {0, 0.0},   {16, 12.8970}, {33, -3.4},   {49, 19.1939},
        {50, 19.3939}, {66, 3.2},  {83, 26.2970}, {99, 19.8},
    };
    std::vector<double> v(100, 0.0);
    for (std::size_t k = 0; k + 1 < std::size(kVertices); ++k) {
        const auto [t0, y0] = kVertices[k];
        const auto [t1, y1] = kVertices[k + 1];
        const double slope = (y1 - y0) / static_cast<double>(t1 - t0);
        for (int t = t0; t <= t1; ++t) {
            v[static_cast<std::size_t>(t)] = y0 + slope * static_cast<double>(t - t0);
        }
    }
    MultiSeries s;
    s.channels.push_back(std::move(v));
    return s;
}

MultiSeries gen_example2() {
    constexpr double kRadius = 16.5;
    constexpr double kCenters[] = {16.5, 49.5, 82.5};
    std::vector<double> v(100, 0.0);
    for (int t = 0; t < 100; ++t) {
        const double c = kCenters[t <= 33 ? 0 : (t <= 66 ? 1 : 2)];
        const double d = static_cast<double>(t) - c;
        v[static_cast<std::size_t>(t)] = std::sqrt(std::max(0.0, kRadius * kRadius - d * d));
    }
    MultiSeries s;
    s.channels.push_back(std::move(v));
    return s;
}

namespace {

/// Standard normal draws via the Marsaglia polar method. mt19937_64 plus this
/// transform is fully specified, unlike std::normal_distribution.
class PolarGaussian {
public:
    explicit PolarGaussian(std::uint64_t seed) : rng_(seed) {}

    double operator()() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

private:
    double uniform01() {
        return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    }

    std::mt19937_64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace

MultiSeries gen_noisy_replicas(const MultiSeries& base, std::size_t n_x, double sigma,
                               std::uint64_t seed) {
    if (base.n_x() != 1) {
        throw ConfigError("noisy replicas need a single-channel base");
    }
    if (n_x < 1) {
        throw ConfigError("need at least one replica");
    }
    if (sigma < 0.0) {
        throw ConfigError("sigma must be nonnegative");
    }
    PolarGaussian gauss(seed);
    const auto& b = base.channels.front();
    MultiSeries out;
    out.channels.reserve(n_x);
    for (std::size_t i = 0; i < n_x; ++i) {
        std::vector<double> ch(b.size());
        for (std::size_t t = 0; t < b.size(); ++t) {
            ch[t] = b[t] + sigma * gauss();
        }
        out.channels.push_back(std::move(ch));
    }
    return out;
}

} // namespace apts
