#pragma once

#include <Eigen/Dense>
#include <span>
#include <utility>
#include <vector>

#include "weyl/geometry.hpp"
#include "weyl/spectral.hpp"

namespace weyl {

/// K_t(x,y) = sum_k e^{-t tau_k^2} e_k(x) e_k(y) (weighted normalization).
double heat_kernel(const SpectralData& data, double t, std::size_t x, std::size_t y);

Eigen::MatrixXd heat_kernel_matrix(const SpectralData& data, double t);

/// sum_k e^{-t tau_k^2} over an explicit frequency list.
double heat_trace(std::span<const double> frequencies, double t);

/// Heat trace of the exact rectangle spectrum with the enumeration cutoff
/// chosen so the dropped Gaussian tail is below 1e-12.
double rectangle_heat_trace(double a, double b, BoundaryCondition bc, double t);

/// Certified constants for |K_t(x,y)| <= C t^{-n/2} exp(-c1 d(x,y)^2 / t) on a
/// finite sample; c1 is pushed as high as the sample allows subject to
/// C <= C_cap (golden-section on the concave score), so violations = 0 by
/// construction.
struct GaussianFit {
    double C = 0.0;
    double c1 = 0.0;
    double t_min = 0.0;
    double t_max = 0.0;
    long samples = 0;
    long violations = 0;
};

GaussianFit fit_gaussian_bound(const SpectralData& data, const Grid& grid,
                               std::span<const double> t_grid,
                               std::span<const std::pair<std::size_t, std::size_t>> pairs,
                               double C_cap = 5.0);

/// max over the node sample of |K_t| e^{t/2} per t; requires spectrum >= 1.
struct LongTimeReport {
    std::vector<double> t;
    std::vector<double> max_scaled;
    bool nonincreasing_beyond_2 = false;
};

LongTimeReport check_long_time(const SpectralData& data,
                               std::span<const std::pair<std::size_t, std::size_t>> pairs,
                               std::span<const double> t_grid);

/// (1/l!) int_0^inf t^l e^{-t tau^2} dt by the composite panel quadrature used
/// for the kernel route (geometric panels on (0,1], linear panels to t=45;
/// the dropped tail is below 45^l e^{-45} since tau >= 1).
double riesz_time_integral(double tau, int ell);

/// Negative-power kernels by two routes: the spectral sum tau^{-2-2l} and the
/// quadrature of the heat integral. Requires the shifted spectrum >= 1.
struct RieszResult {
    Eigen::MatrixXd spectral;
    Eigen::MatrixXd quadrature;
    double max_abs_diff = 0.0;
    double max_rel_diff = 0.0;
};

RieszResult riesz_kernel(const SpectralData& data, int ell);

}  // namespace weyl
