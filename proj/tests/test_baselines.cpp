#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "apts/baselines.hpp"
#include "apts/gen.hpp"
#include "oracles.hpp"

using namespace apts;

namespace {

double sse_of(std::vector<std::vector<double>> windows) {
    std::vector<std::span<const double>> spans;
    spans.reserve(windows.size());
    for (const auto& w : windows) spans.emplace_back(w);
    return affine_fit_sse(spans);
}

} // namespace

TEST_CASE("affine fit is exact on collinear points") {
    CHECK(sse_of({{1, 2, 3}}) == doctest::Approx(0.0));
    CHECK(sse_of({{5, 5, 5, 5}}) == doctest::Approx(0.0));
}

TEST_CASE("affine fit residual of a tent") {
    CHECK(sse_of({{0, 1, 0}}) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("two points always interpolate") {
    CHECK(sse_of({{3.7, -1.2}}) == doctest::Approx(0.0));
}

TEST_CASE("affine fit sums channels and rejects singletons") {
    CHECK(sse_of({{0, 1, 0}, {0, 1, 0}}) == doctest::Approx(4.0 / 3.0));
    CHECK_THROWS_AS(sse_of({{1.0}}), TooShort);
}

TEST_CASE("bottom-up finds a perfect two-piece split") {
    MultiSeries s;
    s.channels = {{0, 0, 0, 5, 5, 5}};
    CHECK(bu_segment(s, 1).breakpoints == std::vector<int>{3});
}

TEST_CASE("bottom-up with zero breakpoints returns the whole series") {
    MultiSeries s;
    s.channels = {{1, 9, 2, 8, 3}};
    CHECK(bu_segment(s, 0).breakpoints.empty());
}

TEST_CASE("bottom-up rejects series too short for the target") {
    MultiSeries s;
    s.channels = {{1, 2, 3, 4}};
    CHECK_THROWS_AS(bu_segment(s, 2), TooShort);
}

TEST_CASE("bottom-up recovers the affine benchmark vertices") {
    const Segmentation seg = bu_segment(gen_example1(), 5);
    const std::vector<int> expected{17, 33, 50, 66, 83};
    REQUIRE(seg.breakpoints.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(std::abs(seg.breakpoints[i] - expected[i]) <= 2);
    }
}

TEST_CASE("bottom-up total SSE grows as segments merge") {
    std::mt19937_64 rng(5);
    MultiSeries s;
    s.channels.push_back(oracle::random_walk(rng, 64));
    s.channels.push_back(oracle::random_walk(rng, 64));

    auto total_sse = [&](const Segmentation& seg) {
        std::vector<int> bounds{0};
        for (int tau : seg.breakpoints) bounds.push_back(tau);
        bounds.push_back(static_cast<int>(s.points()));
        double total = 0.0;
        for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
            std::vector<std::span<const double>> windows;
            for (const auto& ch : s.channels) {
                windows.emplace_back(ch.data() + bounds[k],
                                     static_cast<std::size_t>(bounds[k + 1] - bounds[k]));
            }
            total += affine_fit_sse(windows);
        }
        return total;
    };

    double prev = -1.0;
    for (int k = 12; k >= 0; --k) {
        const double sse = total_sse(bu_segment(s, k));
        if (prev >= 0.0) CHECK(sse >= prev - 1e-9);
        prev = sse;
    }
}

TEST_CASE("cholesky logdet and inverse trace on known matrices") {
    SquareMatrix eye(3);
    for (int i = 0; i < 3; ++i) eye.at(i, i) = 1.0;
    CHECK(logdet_spd(eye) == doctest::Approx(0.0));
    CHECK(inverse_trace_spd(eye) == doctest::Approx(3.0));

    SquareMatrix d(2);
    d.at(0, 0) = 2.0;
    d.at(1, 1) = 2.0;
    CHECK(logdet_spd(d) == doctest::Approx(2.0 * std::log(2.0)));
    CHECK(inverse_trace_spd(d) == doctest::Approx(1.0));
}

TEST_CASE("cholesky kernel matches naive oracles on random SPD matrices") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 50; ++iter) {
        const SquareMatrix m = oracle::random_spd(rng, 4);
        const double det = oracle::cofactor_det(m);
        REQUIRE(det > 0.0);
        CHECK(logdet_spd(m) == doctest::Approx(std::log(det)).epsilon(1e-9));
        CHECK(inverse_trace_spd(m) ==
              doctest::Approx(oracle::gauss_jordan_inverse_trace(m)).epsilon(1e-9));
    }
}

TEST_CASE("cholesky rejects non-positive-definite input") {
    SquareMatrix m(2);
    m.at(0, 0) = 1.0;
    m.at(0, 1) = m.at(1, 0) = 2.0;
    m.at(1, 1) = 1.0; // eigenvalues 3 and -1
    CHECK_THROWS_AS(cholesky_lower(m), NotPositiveDefinite);
}

TEST_CASE("ggs finds a clean mean shift") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> noise(-0.05, 0.05);
    MultiSeries s;
    std::vector<double> ch(100);
    for (int t = 0; t < 100; ++t) ch[static_cast<std::size_t>(t)] = (t < 50 ? 0.0 : 10.0) + noise(rng);
    s.channels.push_back(std::move(ch));

    const Segmentation seg = ggs_segment(s, 1, 0.1);
    REQUIRE(seg.breakpoints.size() == 1);
    CHECK(std::abs(seg.breakpoints[0] - 50) <= 1);

    // greedy at k=1 must equal the exhaustive single-breakpoint argmax
    int best_tau = 1;
    double best = -1e300;
    for (int tau = 1; tau <= 98; ++tau) {
        const std::vector<int> bp{tau};
        const double obj = ggs_objective(s, bp, 0.1);
        if (obj > best) {
            best = obj;
            best_tau = tau;
        }
    }
    CHECK(seg.breakpoints[0] == best_tau);
}

TEST_CASE("greedy k=1 equals the exhaustive argmax on random multivariate series") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> nch(1, 4);
    std::uniform_int_distribution<int> npts(10, 60);
    for (int iter = 0; iter < 15; ++iter) {
        MultiSeries s;
        const int n = nch(rng);
        const int pts = npts(rng);
        for (int c = 0; c < n; ++c) {
            s.channels.push_back(oracle::random_walk(rng, static_cast<std::size_t>(pts)));
        }
        const Segmentation seg = ggs_segment(s, 1, 0.1);

        int best_tau = 1;
        double best = -1e300;
        for (int tau = 1; tau <= pts - 2; ++tau) {
            const std::vector<int> bp{tau};
            const double obj = ggs_objective(s, bp, 0.1);
            if (obj > best) {
                best = obj;
                best_tau = tau;
            }
        }
        REQUIRE(seg.breakpoints.size() == 1);
        CHECK(seg.breakpoints[0] == best_tau);
    }
}

TEST_CASE("ggs objective is monotone in the breakpoint budget on benchmark data") {
    const MultiSeries s = gen_example1();
    double prev = -1e300;
    for (int k = 1; k <= 6; ++k) {
        const GgsResult res = ggs_segment_full(s, k, 0.1);
        CHECK(res.objective >= prev - 1e-9);
        prev = res.objective;
        CHECK(res.segmentation.breakpoints.size() == static_cast<std::size_t>(k));
    }
}

TEST_CASE("ggs model segments partition the series and regularized covariances are SPD") {
    const MultiSeries s = gen_example2();
    const GgsResult res = ggs_segment_full(s, 4, 0.1);
    int covered = 0;
    for (const auto& st : res.segments) {
        covered += st.length;
        SquareMatrix reg = st.covariance;
        for (std::size_t i = 0; i < reg.n; ++i) {
            reg.at(i, i) += res.lambda / st.length;
        }
        CHECK_NOTHROW(cholesky_lower(reg));
    }
    CHECK(covered == static_cast<int>(s.points()));
}

TEST_CASE("ggs validates its hyperparameters") {
    const MultiSeries s = gen_example1();
    CHECK_THROWS_AS(ggs_segment(s, 1, 0.0), ConfigError);
    CHECK_THROWS_AS(ggs_segment(s, 0, 0.1), ConfigError);
    MultiSeries tiny;
    tiny.channels = {{1.0, 2.0}};
    CHECK_THROWS_AS(ggs_segment(tiny, 1, 0.1), TooShort);
}
