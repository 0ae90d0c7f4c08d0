#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sincdens/sinc_smoother.hpp"
#include "oracles.hpp"

using namespace sincdens;

namespace {

constexpr double kPi = std::numbers::pi;

MixtureDensity std_normal() {
    return MixtureDensity::univariate(Family::gaussian, {1.0}, {0.0}, 1.0);
}

SmootherConfig config_for(const MixtureDensity& d, double R) {
    return SmootherConfig::for_density(d, R);
}

}  // namespace

TEST_CASE("sinc kernel values") {
    CHECK(sinc_kernel({0.0}, 2.0) == doctest::Approx(2.0 / kPi).epsilon(1e-12));
    const double R = 2.0;
    const double u = kPi / (2.0 * R);
    CHECK(sinc_kernel({u}, R) == doctest::Approx(2.0 * R / (kPi * kPi)).epsilon(1e-12));
    // series branch continuous across the switch point
    CHECK(sinc_kernel({1.0000001e-4}, 1.0) ==
          doctest::Approx(sinc_kernel({0.9999999e-4}, 1.0)).epsilon(1e-10));
}

TEST_CASE("sinc kernel integrates to one") {
    // panel per half-period keeps the oscillatory quadrature honest
    const double R = 2.0;
    const double panel = kPi / R;
    double value = 0.0;
    for (int k = -200; k < 200; ++k) {
        value += oracles::integrate([&](double u) { return sinc_kernel({u}, R); },
                                    k * panel, (k + 1) * panel, 1e-11);
    }
    CHECK(value == doctest::Approx(1.0).epsilon(2e-2));
}

TEST_CASE("gaussian_J") {
    // frozen from an independent high-precision quadrature of int_0^1 exp(-s^2/2) ds
    CHECK(gaussian_J(0.0, 0.0, 1.0, 1.0) == doctest::Approx(0.855624391892149).epsilon(1e-12));
    CHECK(gaussian_J(0.0, 0.0, 1.0, 10.0) ==
          doctest::Approx(std::sqrt(kPi / 2.0)).epsilon(1e-10));
    CHECK(gaussian_J(3.2, -1.0, 0.5, 0.0) == 0.0);
    // cross-check against the test-local Simpson oracle at generic arguments
    const double direct = oracles::integrate(
        [](double s) { return std::exp(-0.5 * 0.49 * s * s) * std::cos(s * 1.3); }, 0.0, 2.5,
        1e-13);
    CHECK(gaussian_J(1.5, 0.2, 0.7, 2.5) == doctest::Approx(direct).epsilon(1e-11));
}

TEST_CASE("smooth_at closed form") {
    const auto d = std_normal();
    SmootherConfig cfg = config_for(d, 2.0);
    // frozen oracle: (1/pi) int_0^2 exp(-s^2/2) ds
    CHECK(smooth_at(d, cfg, {0.0}) == doctest::Approx(0.380790301363752).epsilon(1e-10));
    cfg.R = 10.0;
    CHECK(smooth_at(d, cfg, {0.0}) ==
          doctest::Approx(1.0 / std::sqrt(2.0 * kPi)).epsilon(1e-9));
}

TEST_CASE("cosine-gaussian integral identity") {
    // int cos(R(y-x)) phi((x-mu)/sigma)/sigma dx = cos(R(y-mu)) exp(-sigma^2 R^2/2)
    const double sigma = 1.0, R = 1.0, mu = 0.4, y = mu;
    const double direct = oracles::integrate(
        [&](double x) {
            return std::cos(R * (y - x)) *
                   std::exp(-0.5 * std::pow((x - mu) / sigma, 2)) /
                   (sigma * std::sqrt(2.0 * kPi));
        },
        mu - 14.0, mu + 14.0, 1e-13);
    CHECK(direct == doctest::Approx(std::exp(-0.5)).epsilon(1e-10));
}

TEST_CASE("I(R) identity") {
    for (double R : {0.0, 0.5, 1.0, 2.0, 4.0}) {
        const double value = oracles::integrate(
            [&](double x) {
                return std::cos(R * x) * std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi);
            },
            -12.0, 12.0, 1e-13);
        CHECK(value == doctest::Approx(std::exp(-0.5 * R * R)).epsilon(1e-9));
    }
}

TEST_CASE("closed form and spectral paths agree") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> loc(-2.0, 2.0), point(-5.0, 5.0);
    for (int rep = 0; rep < 3; ++rep) {
        const auto d = MixtureDensity::univariate(Family::gaussian, {0.4, 0.6},
                                                  {loc(rng), loc(rng)}, 0.6 + 0.2 * rep);
        for (double R : {1.0, 2.0, 5.0}) {
            SmootherConfig cfg = config_for(d, R);
            for (int p = 0; p < 20; ++p) {
                const double x = point(rng);
                const double closed = smooth_at(d, cfg, {x}, SmoothPath::closed_form);
                const double spectral = smooth_at(d, cfg, {x}, SmoothPath::spectral);
                CHECK(std::abs(closed - spectral) <= 1e-8);
            }
        }
    }
}

TEST_CASE("spectral path works for every family") {
    for (auto family : {Family::cauchy, Family::laplace}) {
        const auto d = MixtureDensity::univariate(family, {1.0}, {0.0}, 1.0);
        SmootherConfig cfg = config_for(d, 30.0);
        // f_R -> f as R grows
        CHECK(smooth_at(d, cfg, {0.3}) == doctest::Approx(d.pdf1(0.3)).epsilon(1e-2));
    }
}

TEST_CASE("sup error against the normal-mixture envelope") {
    const auto d = std_normal();
    SmootherConfig cfg = config_for(d, 3.0);
    cfg.grid = GridSpec(-10.0, 10.0, 0.005);
    const double err = sup_error_empirical(d, cfg);
    CHECK(err <= std::exp(-4.5) / (3.0 * kPi));
    CHECK(err >= 0.5 * std::exp(-4.5) / (3.0 * kPi));  // bound is nearly tight at x=0
    cfg.R = 20.0;
    CHECK(sup_error_empirical(d, cfg) <= 1e-12);
}

TEST_CASE("sup error nonincreasing in R") {
    const auto d = MixtureDensity::univariate(Family::gaussian, {0.5, 0.5}, {-1.0, 1.0}, 0.8);
    double prev = std::numeric_limits<double>::infinity();
    for (double R : {1.0, 2.0, 4.0, 8.0}) {
        SmootherConfig cfg = config_for(d, R);
        const double err = sup_error_empirical(d, cfg);
        CHECK(err <= prev + 1e-12);
        prev = err;
    }
}

TEST_CASE("openmp sweep matches the serial reference bit for bit") {
    const auto d = MixtureDensity::univariate(Family::gaussian, {0.3, 0.7}, {-0.5, 1.0}, 0.7);
    SmootherConfig cfg = config_for(d, 2.0);
    cfg.grid = GridSpec(-4.0, 4.0, 0.01);
    CHECK(sup_error_empirical(d, cfg) == sup_error_empirical_serial(d, cfg));
    CHECK(smooth_on_grid(d, cfg) == smooth_on_grid_serial(d, cfg));
}

TEST_CASE("gaussian tail bound from the closed-form derivation") {
    // int_R^inf exp(-sigma^2 s^2/2) ds < exp(-sigma^2 R^2/2) / (sigma^2 R)
    for (double sigma : {0.5, 1.0, 2.0}) {
        for (double R : {0.5, 1.0, 2.0, 4.0, 8.0}) {
            const double lhs =
                std::sqrt(kPi / 2.0) / sigma * std::erfc(sigma * R / std::numbers::sqrt2);
            const double rhs = std::exp(-0.5 * sigma * sigma * R * R) / (sigma * sigma * R);
            CHECK(lhs < rhs);
        }
    }
}

TEST_CASE("weak statistic") {
    const auto f = std_normal();
    const auto f0 = MixtureDensity::univariate(Family::gaussian, {1.0}, {0.5}, 1.0);
    SmootherConfig cfg = config_for(f, 2.0);
    cfg.grid = GridSpec(-8.0, 8.0, 0.01);

    CHECK(weak_statistic(f, f, cfg) <= 1e-12);
    CHECK(weak_statistic(f, f0, cfg) == weak_statistic(f0, f, cfg));

    // triangle bound through the smoothed sup norms
    const auto fs = smooth_on_grid(f, cfg);
    const auto f0s = smooth_on_grid(f0, cfg);
    double supf = 0.0, supf0 = 0.0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        supf = std::max(supf, std::abs(fs[i]));
        supf0 = std::max(supf0, std::abs(f0s[i]));
    }
    const double stat = weak_statistic(f, f0, cfg);
    CHECK(stat <= (kPi / cfg.R) * (supf + supf0) + 1e-12);

    // direct oscillatory quadrature of the defining integral at grid points
    for (double x : {-1.0, -0.5, 0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0, -2.0}) {
        auto g = [&](double y) {
            const double u = cfg.R * (y - x);
            const double sinc = std::abs(u) < 1e-8 ? 1.0 : std::sin(u) / u;
            return sinc * (f.pdf1(y) - f0.pdf1(y));
        };
        const double direct = oracles::integrate(g, -14.0, 14.5, 1e-10);
        const double via_smoother =
            (kPi / cfg.R) * (smooth_at(f, cfg, {x}) - smooth_at(f0, cfg, {x}));
        CHECK(std::abs(direct - via_smoother) <= 1e-6);
        CHECK(std::abs(direct) <= stat + 1e-6);
    }
}

TEST_CASE("input validation") {
    const auto d = std_normal();
    SmootherConfig cfg = config_for(d, 2.0);
    CHECK_THROWS_AS(sinc_kernel({std::nan("")}, 1.0), input_error);
    CHECK_THROWS_AS(gaussian_J(0.0, 0.0, -1.0, 1.0), input_error);
    CHECK_THROWS_AS(smooth_at(d, cfg, {0.0, 0.0}), input_error);
    SmootherConfig bad = cfg;
    bad.R = -1.0;
    CHECK_THROWS_AS(sup_error_empirical(d, bad), input_error);
    const auto laplace = MixtureDensity::univariate(Family::laplace, {1.0}, {0.0}, 1.0);
    CHECK_THROWS_AS(smooth_at(laplace, cfg, {0.0}, SmoothPath::closed_form), unsupported_error);
}
