#include "sincdens/densities.hpp"

#include <cmath>
#include <numbers>

#include "sincdens/rng.hpp"

namespace sincdens {

namespace {

constexpr double kPi = std::numbers::pi;

// Standard (scale 1, location 0) kernels per family.

double kernel_pdf(Family f, double u) {
    switch (f) {
        case Family::gaussian:
            return std::exp(-0.5 * u * u) / std::sqrt(2.0 * kPi);
        case Family::cauchy:
            return 1.0 / (kPi * (1.0 + u * u));
        case Family::laplace:
            return 0.5 * std::exp(-std::abs(u));
    }
    return 0.0;
}

double kernel_cdf(Family f, double u) {
    switch (f) {
        case Family::gaussian:
            return 0.5 * std::erfc(-u / std::numbers::sqrt2);
        case Family::cauchy:
            return 0.5 + std::atan(u) / kPi;
        case Family::laplace:
            return u < 0 ? 0.5 * std::exp(u) : 1.0 - 0.5 * std::exp(-u);
    }
    return 0.0;
}

double kernel_cf_impl(Family f, double t) {
    switch (f) {
        case Family::gaussian:
            return std::exp(-0.5 * t * t);
        case Family::cauchy:
            return std::exp(-std::abs(t));
        case Family::laplace:
            return 1.0 / (1.0 + t * t);
    }
    return 0.0;
}

double kernel_draw(Family f, std::mt19937_64& rng) {
    switch (f) {
        case Family::gaussian: {
            std::normal_distribution<double> d(0.0, 1.0);
            return d(rng);
        }
        case Family::cauchy: {
            std::cauchy_distribution<double> d(0.0, 1.0);
            return d(rng);
        }
        case Family::laplace: {
            std::exponential_distribution<double> e(1.0);
            std::uniform_real_distribution<double> u(0.0, 1.0);
            const double mag = e(rng);
            return u(rng) < 0.5 ? -mag : mag;
        }
    }
    return 0.0;
}

void check_finite(const std::vector<double>& x) {
    for (double v : x) {
        if (!std::isfinite(v)) throw input_error("non-finite input point");
    }
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::gaussian: return "gaussian";
        case Family::cauchy: return "cauchy";
        case Family::laplace: return "laplace";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "gaussian" || name == "normal") return Family::gaussian;
    if (name == "cauchy") return Family::cauchy;
    if (name == "laplace") return Family::laplace;
    throw input_error("unknown density family: " + name);
}

MixtureDensity::MixtureDensity(Family family, std::vector<double> weights,
                               std::vector<std::vector<double>> locations, double scale)
    : family_(family),
      weights_(std::move(weights)),
      locations_(std::move(locations)),
      scale_(scale) {
    if (weights_.empty()) throw input_error("mixture: at least one component required");
    if (weights_.size() != locations_.size())
        throw input_error("mixture: weights/locations size mismatch");
    if (!(scale_ > 0) || !std::isfinite(scale_))
        throw input_error("mixture: scale must be positive and finite");
    double sum = 0.0;
    for (double w : weights_) {
        if (!(w >= 0) || !std::isfinite(w)) throw input_error("mixture: weights must be >= 0");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw input_error("mixture: weights must sum to 1");
    dimension_ = locations_.front().size();
    if (dimension_ == 0) throw input_error("mixture: dimension must be >= 1");
    for (const auto& mu : locations_) {
        if (mu.size() != dimension_) throw input_error("mixture: inconsistent location dimension");
        check_finite(mu);
    }
}

MixtureDensity MixtureDensity::univariate(Family family, std::vector<double> weights,
                                          std::vector<double> locations, double scale) {
    std::vector<std::vector<double>> locs;
    locs.reserve(locations.size());
    for (double mu : locations) locs.push_back({mu});
    return MixtureDensity(family, std::move(weights), std::move(locs), scale);
}

double MixtureDensity::pdf(const std::vector<double>& x) const {
    if (x.size() != dimension_) throw input_error("pdf: dimension mismatch");
    check_finite(x);
    double total = 0.0;
    for (std::size_t j = 0; j < weights_.size(); ++j) {
        double comp = 1.0;
        for (std::size_t a = 0; a < dimension_; ++a) {
            comp *= kernel_pdf(family_, (x[a] - locations_[j][a]) / scale_) / scale_;
        }
        total += weights_[j] * comp;
    }
    return total;
}

double MixtureDensity::pdf1(double x) const { return pdf(std::vector<double>{x}); }

double MixtureDensity::cdf(double x) const {
    if (dimension_ != 1) throw unsupported_error("cdf: only defined for d = 1");
    if (!std::isfinite(x)) throw input_error("cdf: non-finite input");
    double total = 0.0;
    for (std::size_t j = 0; j < weights_.size(); ++j) {
        total += weights_[j] * kernel_cdf(family_, (x - locations_[j][0]) / scale_);
    }
    return total;
}

std::optional<double> MixtureDensity::cdf_checked(const std::vector<double>& x) const {
    if (dimension_ != 1) return std::nullopt;
    if (x.size() != 1) throw input_error("cdf: dimension mismatch");
    return cdf(x[0]);
}

double MixtureDensity::kernel_cf(double t) const { return kernel_cf_impl(family_, t); }

std::complex<double> MixtureDensity::characteristic_function(const std::vector<double>& t) const {
    if (t.size() != dimension_) throw input_error("characteristic_function: dimension mismatch");
    check_finite(t);
    double envelope = 1.0;
    for (double tj : t) envelope *= kernel_cf_impl(family_, scale_ * tj);
    std::complex<double> phase_sum{0.0, 0.0};
    for (std::size_t j = 0; j < weights_.size(); ++j) {
        double dot = 0.0;
        for (std::size_t a = 0; a < dimension_; ++a) dot += t[a] * locations_[j][a];
        phase_sum += weights_[j] * std::polar(1.0, dot);
    }
    return envelope * phase_sum;
}

double MixtureDensity::characteristic_magnitude(const std::vector<double>& t) const {
    return std::abs(characteristic_function(t));
}

std::vector<std::vector<double>> MixtureDensity::sample(std::size_t n, std::uint64_t seed) const {
    auto rng = make_stream(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<std::vector<double>> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        // component by inverse cdf on the cumulative weights
        const double u = unif(rng);
        std::size_t j = 0;
        double acc = weights_[0];
        while (u > acc && j + 1 < weights_.size()) acc += weights_[++j];
        std::vector<double> x(dimension_);
        for (std::size_t a = 0; a < dimension_; ++a) {
            x[a] = locations_[j][a] + scale_ * kernel_draw(family_, rng);
        }
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<double> MixtureDensity::sample1d(std::size_t n, std::uint64_t seed) const {
    if (dimension_ != 1) throw unsupported_error("sample1d: density is not one-dimensional");
    auto pts = sample(n, seed);
    std::vector<double> out(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) out[i] = pts[i][0];
    return out;
}

double fourier_envelope(const SmoothnessClass& cls, const std::vector<double>& t) {
    check_finite(t);
    if (cls.tag == SmoothnessClass::Tag::supersmooth) {
        double s = 0.0;
        for (double tj : t) s += std::pow(std::abs(tj), cls.order);
        return cls.C * std::exp(-cls.C1 * std::pow(cls.scale, cls.scale_power) * s);
    }
    double prod = 1.0;
    for (double tj : t) {
        prod *= 1.0 / (1.0 + cls.scale * cls.scale * std::pow(std::abs(tj), cls.order));
    }
    return cls.c * prod;
}

SmoothnessClass classify_smoothness(const MixtureDensity& density) {
    SmoothnessClass cls;
    cls.scale = density.scale();
    switch (density.family()) {
        case Family::gaussian:
            cls.tag = SmoothnessClass::Tag::supersmooth;
            cls.order = 2.0;
            cls.C = 1.0;
            cls.C1 = 0.5;
            cls.scale_power = 2.0;
            break;
        case Family::cauchy:
            // exact decay exp(-scale*|t|): first power of the scale
            cls.tag = SmoothnessClass::Tag::supersmooth;
            cls.order = 1.0;
            cls.C = 1.0;
            cls.C1 = 1.0;
            cls.scale_power = 1.0;
            break;
        case Family::laplace:
            cls.tag = SmoothnessClass::Tag::ordinary_smooth;
            cls.order = 2.0;
            cls.c = 1.0;
            break;
    }
    return cls;
}

}  // namespace sincdens
