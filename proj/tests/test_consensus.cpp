#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "apts/consensus.hpp"

using namespace apts;

namespace {

SwitchSignal sig(std::vector<std::int8_t> values) {
    SwitchSignal s;
    s.switch_count = count_switches(values);
    s.values = std::move(values);
    return s;
}

SwitchSignal negated(const SwitchSignal& s) {
    SwitchSignal out = s;
    for (auto& v : out.values) v = static_cast<std::int8_t>(-v);
    return out;
}

std::vector<double> uniform_weights(std::size_t n) {
    return std::vector<double>(n, 1.0 / static_cast<double>(n));
}

} // namespace

TEST_CASE("align_signs flips a mirrored channel") {
    const std::vector<SwitchSignal> signals{sig({-1, +1, +1, -1}), sig({+1, -1, -1, +1})};
    CHECK(align_signs(signals) == std::vector<std::int8_t>{+1, -1});
}

TEST_CASE("align_signs keeps an identical channel") {
    const std::vector<SwitchSignal> signals{sig({-1, +1, +1}), sig({-1, +1, +1})};
    CHECK(align_signs(signals) == std::vector<std::int8_t>{+1, +1});
}

TEST_CASE("align_signs on a single channel") {
    const std::vector<SwitchSignal> signals{sig({-1, +1})};
    CHECK(align_signs(signals) == std::vector<std::int8_t>{+1});
}

TEST_CASE("align_signs resolves exact ties to +1") {
    // dot product zero: half agree, half disagree
    const std::vector<SwitchSignal> signals{sig({-1, +1, -1, +1}), sig({-1, -1, +1, +1})};
    CHECK(align_signs(signals) == std::vector<std::int8_t>{+1, +1});
}

TEST_CASE("consensus of a single channel is the channel") {
    const std::vector<SwitchSignal> signals{sig({-1, +1, +1})};
    const ConsensusTrace t = consensus(signals, uniform_weights(1));
    CHECK(t.q == std::vector<double>{-1, +1, +1});
}

TEST_CASE("consensus of two mirrored channels equals channel 1") {
    const SwitchSignal a = sig({-1, +1, +1, -1, +1});
    const std::vector<SwitchSignal> signals{a, negated(a)};
    const ConsensusTrace t = consensus(signals, uniform_weights(2));
    REQUIRE(t.p == std::vector<std::int8_t>{+1, -1});
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        CHECK(t.q[i] == doctest::Approx(static_cast<double>(a.values[i])));
    }
}

TEST_CASE("consensus aligns an exactly mirrored third channel") {
    // channel 3 mirrors channel 1, so the alignment flips it before averaging
    const std::vector<SwitchSignal> signals{sig({-1, -1}), sig({-1, +1}), sig({+1, +1})};
    const ConsensusTrace t = consensus(signals, uniform_weights(3));
    CHECK(t.p == std::vector<std::int8_t>{+1, +1, -1});
    CHECK(t.q[0] == doctest::Approx(-1.0));
    CHECK(t.q[1] == doctest::Approx(-1.0 / 3.0));
}

TEST_CASE("consensus rejects mismatched weights") {
    const std::vector<SwitchSignal> signals{sig({-1, +1}), sig({-1, -1})};
    const std::vector<double> w{1.0};
    CHECK_THROWS_AS(consensus(signals, w), WeightMismatch);
}

TEST_CASE("crossings record the index before each sign flip") {
    ConsensusTrace t;
    t.q = {-1, +1, +1, -1};
    const Segmentation seg = crossings(t);
    CHECK(seg.breakpoints == std::vector<int>{2});
    CHECK(seg.series_length == 3);
}

TEST_CASE("crossings on a constant trace are empty") {
    ConsensusTrace t;
    t.q = {-1, -1, -1};
    CHECK(crossings(t).breakpoints.empty());
}

TEST_CASE("crossings hold the previous sign through exact zeros") {
    ConsensusTrace t;
    t.q = {-1, 0, +1};
    CHECK(crossings(t).breakpoints == std::vector<int>{1});

    t.q = {-1, 0, 0, -1};
    CHECK(crossings(t).breakpoints.empty());

    // zero at the start counts as negative
    t.q = {0, -1, +1};
    CHECK(crossings(t).breakpoints == std::vector<int>{1});
}

TEST_CASE("crossings drop the initial cash-to-stock flip") {
    ConsensusTrace t;
    t.q = {-1, +1, +1, +1};
    CHECK(crossings(t).breakpoints.empty());
}

TEST_CASE("crossings on a full trading signal mark the extrema") {
    // positions of a rise-fall-rise series with extrema at 3 and 6
    ConsensusTrace t;
    t.q = {-1, +1, +1, +1, -1, -1, -1, +1, +1, +1};
    CHECK(crossings(t).breakpoints == std::vector<int>{3, 6});
}

namespace {

std::vector<SwitchSignal> random_signals(std::mt19937_64& rng, std::size_t n, std::size_t points) {
    std::uniform_int_distribution<int> flip(0, 1);
    std::vector<SwitchSignal> out;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::int8_t> v(points);
        v[0] = -1;
        for (std::size_t t = 1; t < points; ++t) {
            v[t] = flip(rng) ? std::int8_t{+1} : std::int8_t{-1};
        }
        out.push_back(sig(std::move(v)));
    }
    return out;
}

} // namespace

TEST_CASE("appending channelwise negations leaves the crossings unchanged") {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 60; ++iter) {
        // odd point count keeps alignment dot products away from zero;
        // power-of-two channel counts keep the weighted sums exact
        const auto base = random_signals(rng, iter % 2 ? 1 : 2, 21);
        std::vector<SwitchSignal> doubled = base;
        for (const auto& s : base) doubled.push_back(negated(s));

        const auto tau_base = crossings(consensus(base, uniform_weights(base.size())));
        const auto tau_doubled = crossings(consensus(doubled, uniform_weights(doubled.size())));
        CHECK(tau_base.breakpoints == tau_doubled.breakpoints);
    }
}

TEST_CASE("permuting channels 2..n does not change the consensus") {
    std::mt19937_64 rng(37);
    for (int iter = 0; iter < 60; ++iter) {
        auto signals = random_signals(rng, 4, 25);
        const ConsensusTrace before = consensus(signals, uniform_weights(4));
        const auto tau_before = crossings(before);

        std::shuffle(signals.begin() + 1, signals.end(), rng);
        const ConsensusTrace after = consensus(signals, uniform_weights(4));
        CHECK(before.q == after.q);
        CHECK(tau_before.breakpoints == crossings(after).breakpoints);
    }
}

TEST_CASE("consensus stays within [-1, 1] and crossings stay sorted") {
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 60; ++iter) {
        const auto signals = random_signals(rng, 3, 30);
        const ConsensusTrace t = consensus(signals, uniform_weights(3));
        for (double q : t.q) CHECK(std::abs(q) <= 1.0 + 1e-12);
        const Segmentation seg = crossings(t);
        CHECK_NOTHROW(seg.validate());
    }
}
