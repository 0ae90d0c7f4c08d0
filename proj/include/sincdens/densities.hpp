#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sincdens/errors.hpp"

namespace sincdens {

enum class Family { gaussian, cauchy, laplace };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// Finite location mixture with a common scale: f(x) = sum_j w_j prod_a K((x_a - mu_{j,a}) / s) / s,
// where K is the standard kernel of the family. Immutable after construction.
class MixtureDensity {
public:
    MixtureDensity(Family family, std::vector<double> weights,
                   std::vector<std::vector<double>> locations, double scale);

    // d = 1 convenience constructor.
    static MixtureDensity univariate(Family family, std::vector<double> weights,
                                     std::vector<double> locations, double scale);

    double pdf(const std::vector<double>& x) const;
    double pdf1(double x) const;        // d = 1
    double cdf(double x) const;         // d = 1 only
    std::optional<double> cdf_checked(const std::vector<double>& x) const;

    // Characteristic function; product kernels make it separable per axis.
    std::complex<double> characteristic_function(const std::vector<double>& t) const;
    double characteristic_magnitude(const std::vector<double>& t) const;

    // Standard-kernel characteristic function of this family (real, even, in [0,1]).
    double kernel_cf(double t) const;

    std::vector<std::vector<double>> sample(std::size_t n, std::uint64_t seed) const;
    std::vector<double> sample1d(std::size_t n, std::uint64_t seed) const;

    Family family() const { return family_; }
    std::size_t dimension() const { return dimension_; }
    std::size_t components() const { return weights_.size(); }
    const std::vector<double>& weights() const { return weights_; }
    const std::vector<std::vector<double>>& locations() const { return locations_; }
    double scale() const { return scale_; }

private:
    Family family_;
    std::vector<double> weights_;
    std::vector<std::vector<double>> locations_;
    double scale_;
    std::size_t dimension_;
};

// Definition-style Fourier envelope. Supersmooth stores the exact exponent
// form C * exp(-C1 * scale^scale_power * sum |t_j|^order): Gaussian mixtures
// have scale_power 2, Cauchy mixtures decay as exp(-scale*|t|) so the exact
// envelope carries scale_power 1 (the order-1 supersmooth class).
struct SmoothnessClass {
    enum class Tag { supersmooth, ordinary_smooth };
    Tag tag;
    double order;   // alpha or beta
    double scale;   // sigma
    double C = 1.0;
    double C1 = 0.5;
    double c = 1.0;
    double scale_power = 2.0;
};

double fourier_envelope(const SmoothnessClass& cls, const std::vector<double>& t);

SmoothnessClass classify_smoothness(const MixtureDensity& density);

}  // namespace sincdens
