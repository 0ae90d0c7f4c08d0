#pragma once

#include <vector>

#include "sincdens/densities.hpp"
#include "sincdens/grid.hpp"
#include "sincdens/quadrature.hpp"

namespace sincdens {

// Settings for the truncated-Fourier smoother f_R.
struct SmootherConfig {
    double R;
    std::size_t dimension = 1;
    QuadratureOptions quadrature{};
    GridSpec grid{-10.0, 10.0, 0.005};

    void validate() const {
        if (!(R > 0)) throw input_error("smoother: R must be > 0");
        if (dimension == 0) throw input_error("smoother: dimension must be >= 1");
        if (!(quadrature.abs_tol > 0)) throw input_error("smoother: tolerance must be > 0");
        grid.validate();
    }

    // Default sup-norm grid for a given density, per its location spread and scale.
    static SmootherConfig for_density(const MixtureDensity& density, double R);
};

// (1/pi^d) prod_j sin(R u_j)/u_j; removable singularity evaluated by series
// when |R u_j| < 1e-4.
double sinc_kernel(const std::vector<double>& u, double R);

// J(y; mu, sigma, R) = int_0^R exp(-sigma^2 s^2 / 2) cos(s (y - mu)) ds.
double gaussian_J(double y, double mu, double sigma, double R,
                  const QuadratureOptions& opts = {});

enum class SmoothPath { automatic, closed_form, spectral };

// f_R(x). Closed form is the Gaussian-mixture route via J; the spectral route
// integrates the truncated inverse Fourier transform of the mixture
// characteristic function and works for every family.
double smooth_at(const MixtureDensity& density, const SmootherConfig& config,
                 const std::vector<double>& x, SmoothPath path = SmoothPath::automatic);

// Grid sweeps. The OpenMP versions fill per-point buffers in index order and
// reduce serially, so results are bit-identical to the serial references.
std::vector<double> smooth_on_grid(const MixtureDensity& density, const SmootherConfig& config,
                                   SmoothPath path = SmoothPath::automatic);
std::vector<double> smooth_on_grid_serial(const MixtureDensity& density,
                                          const SmootherConfig& config,
                                          SmoothPath path = SmoothPath::automatic);

// max over grid points of |f_R(x) - f(x)|.
double sup_error_empirical(const MixtureDensity& density, const SmootherConfig& config);
double sup_error_empirical_serial(const MixtureDensity& density, const SmootherConfig& config);

// sup_x |int g_{x,R}(y) (f(y) - f0(y)) dy| with g_{x,R} the normalized sinc
// product; computed through the identity (pi/R)^d * sup |f_R - f_{0,R}|.
double weak_statistic(const MixtureDensity& f, const MixtureDensity& f0,
                      const SmootherConfig& config);

}  // namespace sincdens
