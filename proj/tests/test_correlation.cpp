#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qsteer/correlation.hpp"
#include "qsteer/xstate.hpp"
#include "test_support.hpp"

using namespace qsteer;
using namespace qsteer_test;

namespace {

// Naive enumeration of the same spherical grid the library oracle scans;
// kept quadratic on purpose as an independent cross-check.
double naive_grid_max(const CorrelationTensor& t, int n_steps) {
    const double pi = std::numbers::pi;
    std::vector<BlochVector> points;
    points.reserve(static_cast<size_t>(n_steps) * n_steps);
    for (int i = 0; i < n_steps; ++i) {
        const double theta = pi * i / (n_steps - 1);
        const double st = std::max(0.0, std::sin(theta));
        const double ct = std::cos(theta);
        for (int j = 0; j < n_steps; ++j) {
            const double phi = 2.0 * pi * j / n_steps;
            points.push_back(BlochVector{st * std::cos(phi), st * std::sin(phi), ct});
        }
    }
    double best = -1e300;
    for (const auto& m : points)
        for (const auto& n : points) best = std::max(best, correlation_value(t, m, n));
    return best;
}

} // namespace

TEST_CASE("tensor of the Werner family is diag(p, -p, p)") {
    auto g = make_rng(51);
    for (int rep = 0; rep < 50; ++rep) {
        const double p = uniform(g, -1.0 / 3.0, 1.0);
        const auto t = correlation_tensor(xstate_to_density(werner(WernerParam{p})));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const double expect = i != j ? 0.0 : (i == 1 ? -p : p);
                CHECK(std::abs(t(i, j) - expect) < 1e-15);
            }
    }
}

TEST_CASE("tensor of the maximally mixed state vanishes") {
    const auto t = correlation_tensor(DensityMatrix::maximally_mixed());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(t(i, j) == 0.0);
}

TEST_CASE("tensor of the Gisin family is diag(2abx, 2abx, 1-2x)") {
    // for a = 0.2: 2ab = 4*sqrt(6)/25 = 0.3919183588...
    const double a = 0.2;
    const double c = 2.0 * a * std::sqrt(1.0 - a * a);
    CHECK(c == doctest::Approx(4.0 * std::sqrt(6.0) / 25.0).epsilon(1e-15));
    CHECK(c == doctest::Approx(0.3919184).epsilon(1e-6));

    auto g = make_rng(52);
    for (int rep = 0; rep < 50; ++rep) {
        const double x = uniform(g, 1e-6, 1.0 - 1e-6);
        const auto t = correlation_tensor(xstate_to_density(gisin(GisinParam::with_a(x, Complex{a, 0.0}))));
        CHECK(std::abs(t(0, 0) - c * x) < 1e-12);
        CHECK(std::abs(t(1, 1) - c * x) < 1e-12);
        CHECK(std::abs(t(2, 2) - (1.0 - 2.0 * x)) < 1e-12);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j) CHECK(std::abs(t(i, j)) < 1e-15);
    }
}

TEST_CASE("imaginary parts cancel for Hermitian input and flag broken input") {
    auto g = make_rng(53);
    for (int rep = 0; rep < 200; ++rep) {
        double max_imag = 1.0;
        correlation_tensor(random_hermitian_unit_trace(g), &max_imag);
        CHECK(max_imag < 1e-12);
    }

    auto rho = DensityMatrix::maximally_mixed();
    rho.at(0, 3) = Complex{0.0, 0.1}; // conjugate partner missing
    CHECK_THROWS_AS(correlation_tensor(rho), std::invalid_argument);
}

TEST_CASE("correlation_value") {
    const BlochVector ex{1, 0, 0}, ey{0, 1, 0}, ez{0, 0, 1};
    CHECK(correlation_value(CorrelationTensor::diagonal(1, -1, 1), ez, ez) == 1.0);

    const double p = 0.63;
    const BlochVector ney{0, -1, 0};
    CHECK(correlation_value(CorrelationTensor::diagonal(p, -p, p), ey, ney) ==
          doctest::Approx(p).epsilon(1e-15));

    auto g = make_rng(54);
    const auto t = random_tensor(g);
    CHECK(correlation_value(t, ex, ey) == t(0, 1));

    CHECK_THROWS_AS(correlation_value(t, BlochVector{1, 1, 0}, ez), std::domain_error);
    CHECK_THROWS_AS(correlation_value(t, ez, BlochVector{0, 0, 0.999}), std::domain_error);
}

TEST_CASE("max_correlation on closed-form tensors") {
    SUBCASE("werner p = 0.8") {
        const auto m = max_correlation(CorrelationTensor::diagonal(0.8, -0.8, 0.8));
        CHECK(m.value == doctest::Approx(0.8).epsilon(1e-13));
    }
    SUBCASE("negative p maximum is |p|") {
        const auto m = max_correlation(CorrelationTensor::diagonal(-0.3, 0.3, -0.3));
        CHECK(m.value == doctest::Approx(0.3).epsilon(1e-13));
    }
    SUBCASE("zero tensor") {
        const auto m = max_correlation(CorrelationTensor{});
        CHECK(m.value == 0.0);
        CHECK(m.m_star.norm() == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(m.n_star.norm() == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("gisin piecewise maximum with its two crossovers") {
        const double c = 4.0 * std::sqrt(6.0) / 25.0;
        for (double x = 0.01; x < 1.0; x += 0.0097) {
            const auto m = max_correlation(
                CorrelationTensor::diagonal(c * x, c * x, 1.0 - 2.0 * x));
            CHECK(m.value == doctest::Approx(std::max(std::abs(1.0 - 2.0 * x), c * x))
                                 .epsilon(1e-12));
        }
        CHECK(1.0 / (2.0 + c) == doctest::Approx(0.4180745).epsilon(1e-6));
        CHECK(1.0 / (2.0 - c) == doctest::Approx(0.6218589).epsilon(1e-6));
    }
}

TEST_CASE("certificate vectors attain the returned value") {
    auto g = make_rng(55);
    for (int rep = 0; rep < 100; ++rep) {
        const auto t = random_tensor(g);
        const auto m = max_correlation(t);
        CHECK(std::abs(m.m_star.norm() - 1.0) < 1e-12);
        CHECK(std::abs(m.n_star.norm() - 1.0) < 1e-12);
        CHECK(m.value >= 0.0);
        CHECK(std::abs(correlation_value(t, m.m_star, m.n_star) - m.value) < 1e-12);
    }
}

TEST_CASE("spectral norm is transpose invariant") {
    auto g = make_rng(56);
    for (int rep = 0; rep < 100; ++rep) {
        const auto t = random_tensor(g);
        CHECK(std::abs(max_correlation(t).value - max_correlation(t.transposed()).value) < 1e-12);
    }
}

TEST_CASE("grid oracle equals a naive enumeration of the same grid") {
    auto g = make_rng(57);
    for (int rep = 0; rep < 5; ++rep) {
        const auto t = random_tensor(g);
        CHECK(std::abs(grid_max_oracle(t, 12) - naive_grid_max(t, 12)) < 1e-12);
    }
}

TEST_CASE("grid oracle on known tensors") {
    CHECK(grid_max_oracle(CorrelationTensor::diagonal(1, -1, 1), 64) ==
          doctest::Approx(1.0).epsilon(2e-3));
    CHECK(grid_max_oracle(CorrelationTensor{}, 64) == 0.0);
    CHECK_THROWS_AS(grid_max_oracle(CorrelationTensor{}, 7), std::invalid_argument);
}

TEST_CASE("grid oracle brackets the spectral norm") {
    auto g = make_rng(58);
    for (int rep = 0; rep < 25; ++rep) {
        const auto t = random_tensor(g);
        const double sigma = max_correlation(t).value;
        const double oracle = grid_max_oracle(t, 128);
        CHECK(oracle <= sigma + 1e-12);
        CHECK(sigma - oracle <= 5e-3);
    }
}

TEST_CASE("zero pattern predicate") {
    auto g = make_rng(59);
    for (int rep = 0; rep < 1000; ++rep) {
        const auto t = correlation_tensor(xstate_to_density(random_xstate(g)));
        CHECK(xstate_zero_pattern(t, Tolerance{1e-12}));
    }

    CorrelationTensor t;
    t.at(0, 2) = 0.1;
    CHECK_FALSE(xstate_zero_pattern(t));

    CHECK(xstate_zero_pattern(correlation_tensor(xstate_to_density(werner(WernerParam{0.7})))));
    CHECK(xstate_zero_pattern(
        correlation_tensor(xstate_to_density(gisin(GisinParam::with_a(0.3, Complex{0.2, 0.0}))))));
}
