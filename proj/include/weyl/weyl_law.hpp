#pragma once

#include <limits>
#include <span>
#include <vector>

#include "weyl/geometry.hpp"

namespace weyl {

/// Leading and boundary coefficients of the counting asymptotics
///   N(lambda) ~ c0 lambda^n + c1 lambda^{n-1},
/// c0 = (2pi)^-n omega_n |M|, c1 = -/+ (1/4)(2pi)^{1-n} omega_{n-1} |bd M|
/// (minus Dirichlet, plus Neumann).
struct WeylCoefficients {
    double c0 = 0.0;
    double c1 = 0.0;
    int n = 2;
    double omega_n = 0.0;
    double omega_n1 = 0.0;
    bool robin_caveat = false;  // Robin reported with the Neumann sign
};

/// Volume of the unit ball in R^n.
double unit_ball_volume(int n);

WeylCoefficients weyl_coefficients(const DomainSpec& domain, BoundaryCondition bc,
                                   int n = 2);

struct RemainderCurve {
    std::vector<double> lambda;
    std::vector<double> counts;   // N(lambda)
    std::vector<double> r1;       // N - c0 lambda^n
    std::vector<double> r2;       // r1 - c1 lambda^{n-1}
    std::vector<double> r1_norm;  // r1 / lambda^{n-1}
    std::vector<double> r2_norm;
    WeylCoefficients coeffs;
};

RemainderCurve remainder_curve(std::span<const double> frequencies,
                               const WeylCoefficients& coeffs,
                               std::span<const double> lambda_grid,
                               double validity_ceiling =
                                   std::numeric_limits<double>::infinity());

/// Least-squares slope of log(block-averaged |R|) against log(lambda).
/// Blocks are half-octave (geometric ratio sqrt 2); the window must contain
/// at least 4 of them. Remainders oscillate through zero, so the fit runs on
/// block averages rather than raw samples.
struct ExponentFit {
    double exponent = 0.0;
    double rms_residual = 0.0;
    int blocks = 0;
};

ExponentFit fit_remainder_exponent(std::span<const double> lambda,
                                   std::span<const double> remainder, double lo,
                                   double hi);

/// #{tau_k in [lambda, lambda+eps]} (closed interval).
long short_interval_count(std::span<const double> frequencies, double lambda, double eps);

}  // namespace weyl
