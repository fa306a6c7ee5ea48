#pragma once

#include <functional>
#include <span>
#include <vector>

namespace weyl {

// Fixed smooth building blocks. step_down is the standard C^inf step built
// from f(u) = exp(-1/u): 1 for u <= 0, 0 for u >= 1.
double smooth_step_down(double u);

/// Even bump: 1 on [-1/2,1/2], supported in (-1,1).
double rho_bump(double t);

/// Nonnegative bump exp(1 - 1/(1-s^2)) on (-1,1), peak 1 at 0.
double chi_bump(double s);
double chi_bump_deriv(double s);

/// Littlewood-Paley bump supported in (1/2,2) with exact telescoping
/// sum_l beta(2^-l s) = 1 for s > 0.
double beta_bump(double s);

/// beta~(s) = beta(|s|)/s, supported on |s| in (1/2,2).
double beta_tilde(double s);

/// Sharp spectral window 1_{[-lambda,lambda]} evaluated at tau >= 0.
inline double sharp_indicator(double lambda, double tau) { return tau <= lambda ? 1.0 : 0.0; }

struct MollifierSpec {
    double eps = 1.0;    // in (0, 1]
    int gl_points = 12;  // Gauss points per oscillation-resolving panel
};

/// Smoothed indicator: (1/pi) int rho(eps t) (sin(lambda t)/t) cos(t tau) dt.
/// Oscillatory-quadrature route.
double smoothed_indicator_osc(const MollifierSpec& spec, double lambda, double tau);

/// Same object via the convolution of the sharp indicator with the kernel
/// whose Fourier transform is rho(eps .).
double smoothed_indicator_conv(const MollifierSpec& spec, double lambda, double tau);

/// Cross-checked evaluation; throws AccuracyError if the two routes differ by
/// more than 1e-6.
double smoothed_indicator(const MollifierSpec& spec, double lambda, double tau);

/// d/dtau of the smoothed indicator, by the differentiated integral (not
/// finite differences).
double smoothed_indicator_deriv(const MollifierSpec& spec, double lambda, double tau);

struct WindowSpec {
    double eps = 1.0;
};

/// chi(eps^-1 (lambda - tau)); vanishes for |lambda - tau| >= eps.
double window(const WindowSpec& spec, double lambda, double tau);
double window_deriv(const WindowSpec& spec, double lambda, double tau);

/// Cosine-transform representation (1/pi) int eps chihat(eps t) e^{it lambda}
/// cos(t tau) dt, evaluated by quadrature. For tau >= 1 this must reproduce
/// window() since the reflected bump vanishes; used as a cross-check oracle.
double window_transform(const WindowSpec& spec, double lambda, double tau);

/// Envelope constants for the rapid-decay bounds of the smoothed indicator:
/// C_diff certifies |1_lambda - ~1_lambda| <= C (1 + |lambda-tau|/eps)^-N,
/// C_d1/C_d2 the analogous derivative bounds with the eps^-j scaling.
struct DecayFit {
    double C_diff = 0.0;
    double C_d1 = 0.0;
    double C_d2 = 0.0;
    std::vector<double> offsets;  // |lambda - tau| / eps of the sampled grid
    std::vector<double> diffs;    // measured |1 - ~1| at those offsets
};

DecayFit check_indicator_decay(
    const MollifierSpec& spec, double lambda, int N, std::span<const double> tau_grid,
    const std::function<double(double, double)>& approx = nullptr);

struct DyadicDecomposition {
    double eps = 1.0;
    int ell0 = 0;  // largest integer with 2^ell0 <= eps

    explicit DyadicDecomposition(double eps_in);
};

/// beta0(s) = sum_{l <= ell0} beta(2^-l |s|); supported in (-2^{ell0+1}, 2^{ell0+1}).
double beta0(const DyadicDecomposition& decomp, double s);

/// Values beta(2^-l s) for l = -L..L (s > 0); callers telescope them.
std::vector<double> dyadic_partition(double s, int L);

/// Dyadic band I^sign_{l,nu}; left_endpoint is tau^sign_{l,nu}.
struct DyadicBand {
    double lo = 0.0;
    double hi = 0.0;
    double left_endpoint = 0.0;
};
DyadicBand dyadic_band(double lambda, int ell, int nu, int sign);

struct LpSymbolValues {
    double m0 = 0.0;
    double m_pm = 0.0;
    double r_ell = 0.0;
};

/// Difference-quotient symbols of the frequency decomposition at one point.
/// Preconditions: lambda/2 <= tau <= 10 lambda and lambda_j <= 10 lambda.
LpSymbolValues lp_symbols(const DyadicDecomposition& decomp, const MollifierSpec& mol,
                          double lambda, double lambda_j, double tau, int ell, int sign);

/// Certified constants for the symbol bounds
///   |m^pm| + 2^l |d_tau m^pm| <= C_m 2^-l lambda^-1 (1+nu)^-N,
///   |R_l|  +      |d_tau R_l| <= C_R 2^-l lambda^-1,
/// maximized over a tau sweep of the band and a set of lambda_j offsets.
struct LpCertification {
    double C_m = 0.0;
    double C_R = 0.0;
    long samples = 0;
};

LpCertification certify_lp_bounds(const DyadicDecomposition& decomp,
                                  const MollifierSpec& mol, double lambda, int ell,
                                  int nu, int sign, int N, int tau_points);

}  // namespace weyl
