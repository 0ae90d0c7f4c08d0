#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sincdens/densities.hpp"
#include "oracles.hpp"

using namespace sincdens;

namespace {

MixtureDensity std_normal() {
    return MixtureDensity::univariate(Family::gaussian, {1.0}, {0.0}, 1.0);
}

MixtureDensity two_bump() {
    return MixtureDensity::univariate(Family::gaussian, {0.5, 0.5}, {-1.0, 1.0}, 0.5);
}

}  // namespace

TEST_CASE("pdf values") {
    CHECK(std_normal().pdf1(0.0) == doctest::Approx(0.3989422804014327).epsilon(1e-9));
    // component-sum oracle: 0.5*phi(2)/0.5 + 0.5*phi(-2)/0.5 = phi(2)*2*0.5/0.5
    const double phi2 = std::exp(-2.0) / std::sqrt(2.0 * std::numbers::pi);
    CHECK(two_bump().pdf1(0.0) == doctest::Approx(2.0 * 0.5 * phi2 / 0.5).epsilon(1e-12));
    CHECK(two_bump().pdf1(0.0) == doctest::Approx(0.1079819).epsilon(1e-6));
}

TEST_CASE("cdf limits and monotonicity") {
    for (auto family : {Family::gaussian, Family::cauchy, Family::laplace}) {
        const auto d = MixtureDensity::univariate(family, {0.3, 0.7}, {-2.0, 1.5}, 0.8);
        CHECK(d.cdf(1e9) == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(d.cdf(-1e9) == doctest::Approx(0.0).epsilon(1e-9));
        double prev = 0.0;
        for (double x = -20.0; x <= 20.0; x += 0.1) {
            const double c = d.cdf(x);
            CHECK(c >= prev - 1e-15);
            prev = c;
        }
    }
}

TEST_CASE("pdf integrates to one") {
    for (auto family : {Family::gaussian, Family::cauchy, Family::laplace}) {
        const auto d = MixtureDensity::univariate(family, {0.25, 0.75}, {-1.0, 2.0}, 1.2);
        // Cauchy tails are fat; integrate the cdf difference instead of quadrature
        const double mass = d.cdf(1e7) - d.cdf(-1e7);
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
        if (family != Family::cauchy) {
            const double quad =
                oracles::integrate([&](double x) { return d.pdf1(x); }, -60.0, 60.0, 1e-10);
            CHECK(quad == doctest::Approx(1.0).epsilon(1e-6));
        }
    }
}

TEST_CASE("construction validation") {
    CHECK_THROWS_AS(MixtureDensity::univariate(Family::gaussian, {0.6, 0.6}, {0.0, 1.0}, 1.0),
                    input_error);
    CHECK_THROWS_AS(MixtureDensity::univariate(Family::gaussian, {1.0}, {0.0}, -1.0), input_error);
    CHECK_THROWS_AS(MixtureDensity::univariate(Family::gaussian, {}, {}, 1.0), input_error);
    CHECK_THROWS_AS(MixtureDensity(Family::gaussian, {0.5, 0.5}, {{0.0}, {0.0, 1.0}}, 1.0),
                    input_error);
    CHECK_THROWS_AS(std_normal().pdf1(std::nan("")), input_error);
}

TEST_CASE("fourier envelope plug-ins") {
    SmoothnessClass ss{SmoothnessClass::Tag::supersmooth, 2.0, 1.0, 1.0, 0.5, 1.0, 2.0};
    CHECK(fourier_envelope(ss, {0.0}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(fourier_envelope(ss, {2.0}) == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
    SmoothnessClass os{SmoothnessClass::Tag::ordinary_smooth, 2.0, 1.0, 1.0, 0.5, 1.0, 2.0};
    CHECK(fourier_envelope(os, {3.0}) == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("classification per family") {
    const auto g = classify_smoothness(
        MixtureDensity::univariate(Family::gaussian, {1.0}, {0.0}, 0.7));
    CHECK(g.tag == SmoothnessClass::Tag::supersmooth);
    CHECK(g.order == 2.0);
    CHECK(g.scale == 0.7);

    const auto c = classify_smoothness(
        MixtureDensity::univariate(Family::cauchy, {1.0}, {0.0}, 1.0));
    CHECK(c.tag == SmoothnessClass::Tag::supersmooth);
    CHECK(c.order == 1.0);

    const auto l = classify_smoothness(
        MixtureDensity::univariate(Family::laplace, {1.0}, {0.0}, 2.0));
    CHECK(l.tag == SmoothnessClass::Tag::ordinary_smooth);
    CHECK(l.order == 2.0);
    CHECK(l.scale == 2.0);
}

TEST_CASE("envelope dominates characteristic magnitude") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> loc(-3.0, 3.0);
    for (auto family : {Family::gaussian, Family::cauchy, Family::laplace}) {
        for (int rep = 0; rep < 5; ++rep) {
            const auto d = MixtureDensity::univariate(
                family, {0.2, 0.3, 0.5}, {loc(rng), loc(rng), loc(rng)}, 0.5 + 0.1 * rep);
            const auto cls = classify_smoothness(d);
            for (double logt = -1.0; logt <= 2.0; logt += 0.05) {
                const double t = std::pow(10.0, logt);
                for (double sign : {-1.0, 1.0}) {
                    CHECK(d.characteristic_magnitude({sign * t}) <=
                          fourier_envelope(cls, {sign * t}) + 1e-12);
                }
            }
        }
    }
}

TEST_CASE("sampling") {
    const auto d = std_normal();
    CHECK(d.sample(0, 42).empty());
    CHECK(d.sample1d(100, 42) == d.sample1d(100, 42));

    const std::size_t n = 100000;
    const auto xs = d.sample1d(n, 2024);
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(n);
    CHECK(std::abs(mean) < 4.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("sample histogram converges to the pdf") {
    const auto d = two_bump();
    const std::size_t n = 100000;
    const auto xs = d.sample1d(n, 99);
    const int bins = 200;
    const double lo = -4.0, hi = 4.0, width = (hi - lo) / bins;
    std::vector<double> counts(bins, 0.0);
    double inside = 0.0;
    for (double x : xs) {
        if (x < lo || x >= hi) continue;
        counts[static_cast<std::size_t>((x - lo) / width)] += 1.0;
        inside += 1.0;
    }
    double l1 = 1.0 - inside / static_cast<double>(n);  // out-of-range mass
    for (int b = 0; b < bins; ++b) {
        const double center = lo + (b + 0.5) * width;
        l1 += std::abs(counts[b] / static_cast<double>(n) - d.pdf1(center) * width);
    }
    CHECK(l1 <= 0.05);
}

TEST_CASE("multivariate pdf and characteristic function") {
    const MixtureDensity d(Family::gaussian, {0.5, 0.5}, {{0.0, 0.0}, {1.0, -1.0}}, 1.0);
    CHECK(d.dimension() == 2);
    // product structure at the first component's center
    const double phi0 = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    const double phi1 = std::exp(-0.5) / std::sqrt(2.0 * std::numbers::pi);
    CHECK(d.pdf({0.0, 0.0}) ==
          doctest::Approx(0.5 * phi0 * phi0 + 0.5 * phi1 * phi1).epsilon(1e-12));
    CHECK(d.characteristic_magnitude({0.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-12));
}
