#include "weyl/multipliers.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

#include "weyl/errors.hpp"
#include "weyl/quadrature.hpp"

namespace weyl {

namespace {
inline double f_exp(double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; }
}

double smooth_step_down(double u) {
    if (u <= 0.0) return 1.0;
    if (u >= 1.0) return 0.0;
    const double a = f_exp(1.0 - u), b = f_exp(u);
    return a / (a + b);
}

double rho_bump(double t) {
    t = std::abs(t);
    if (t <= 0.5) return 1.0;
    if (t >= 1.0) return 0.0;
    return smooth_step_down((t - 0.5) * 2.0);
}

double chi_bump(double s) {
    if (std::abs(s) >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - s * s));
}

double chi_bump_deriv(double s) {
    if (std::abs(s) >= 1.0) return 0.0;
    const double d = 1.0 - s * s;
    return chi_bump(s) * (-2.0 * s / (d * d));
}

double beta_bump(double s) {
    if (s <= 0.5 || s >= 2.0) return 0.0;
    if (s <= 1.0) return 1.0 - smooth_step_down(2.0 * s - 1.0);  // rise on (1/2, 1]
    return smooth_step_down(s - 1.0);                            // fall on (1, 2)
}

double beta_tilde(double s) {
    if (s == 0.0) return 0.0;
    return beta_bump(std::abs(s)) / s;
}

namespace {

// sin(lambda t)/t, stable at t = 0
inline double sinc_scaled(double lambda, double t) {
    const double x = lambda * t;
    if (std::abs(x) < 1e-4) return lambda * (1.0 - x * x / 6.0);
    return std::sin(x) / t;
}

// integrate f over [0, b] with Gauss panels of width pi / freq
double oscillatory_integral(const std::function<double(double)>& f, double b,
                            double freq, int gl_points) {
    const int panels = std::max(4, static_cast<int>(std::ceil(b * freq / std::numbers::pi)));
    return gl_composite(f, 0.0, b, panels, gl_points);
}

void require_mollifier_args(const MollifierSpec& spec, double lambda, double tau) {
    if (!(spec.eps > 0.0) || spec.eps > 1.0)
        throw InvalidInput("mollifier needs eps in (0, 1]");
    if (!(lambda >= 1.0)) throw InvalidInput("mollifier needs lambda >= 1");
    if (!(tau >= 0.0)) throw InvalidInput("mollifier needs tau >= 0");
}

}  // namespace

double smoothed_indicator_osc(const MollifierSpec& spec, double lambda, double tau) {
    require_mollifier_args(spec, lambda, tau);
    const double eps = spec.eps;
    auto f = [&](double t) { return rho_bump(eps * t) * sinc_scaled(lambda, t) * std::cos(tau * t); };
    const double val =
        oscillatory_integral(f, 1.0 / eps, lambda + tau + 1.0, spec.gl_points);
    return 2.0 / std::numbers::pi * val;
}

namespace {

// G(u) = int_{-inf}^{u} K_1, K_1 the kernel with Fourier transform rho;
// G(u) = 1/2 + (1/pi) int_0^1 rho(v) sin(uv)/v dv.
double kernel_cdf(double u, int gl_points) {
    auto f = [&](double v) { return rho_bump(v) * sinc_scaled(u, v); };
    const double val = oscillatory_integral(f, 1.0, std::abs(u) + 1.0, gl_points);
    return 0.5 + val / std::numbers::pi;
}

}  // namespace

double smoothed_indicator_conv(const MollifierSpec& spec, double lambda, double tau) {
    require_mollifier_args(spec, lambda, tau);
    const double up = (tau + lambda) / spec.eps;
    const double dn = (tau - lambda) / spec.eps;
    return kernel_cdf(up, spec.gl_points) - kernel_cdf(dn, spec.gl_points);
}

double smoothed_indicator(const MollifierSpec& spec, double lambda, double tau) {
    const double a = smoothed_indicator_osc(spec, lambda, tau);
    const double b = smoothed_indicator_conv(spec, lambda, tau);
    if (std::abs(a - b) > 1e-6)
        throw AccuracyError("smoothed-indicator routes disagree beyond 1e-6");
    return a;
}

double smoothed_indicator_deriv(const MollifierSpec& spec, double lambda, double tau) {
    require_mollifier_args(spec, lambda, tau);
    const double eps = spec.eps;
    auto f = [&](double t) {
        return rho_bump(eps * t) * std::sin(lambda * t) * std::sin(tau * t);
    };
    const double val =
        oscillatory_integral(f, 1.0 / eps, lambda + tau + 1.0, spec.gl_points);
    return -2.0 / std::numbers::pi * val;
}

double window(const WindowSpec& spec, double lambda, double tau) {
    if (!(spec.eps > 0.0) || spec.eps > 1.0) throw InvalidInput("window needs eps in (0, 1]");
    return chi_bump((lambda - tau) / spec.eps);
}

double window_deriv(const WindowSpec& spec, double lambda, double tau) {
    if (!(spec.eps > 0.0) || spec.eps > 1.0) throw InvalidInput("window needs eps in (0, 1]");
    return -chi_bump_deriv((lambda - tau) / spec.eps) / spec.eps;
}

namespace {

// chihat on a uniform grid with Catmull-Rom interpolation; chihat(xi) =
// 2 int_0^1 chi(s) cos(s xi) ds, even and rapidly decaying.
class ChiHatTable {
  public:
    static constexpr double kMax = 600.0;
    static constexpr double kStep = 0.004;

    double operator()(double xi) const {
        xi = std::abs(xi);
        if (xi >= kMax) return 0.0;
        const double g = xi / kStep;
        const long i = static_cast<long>(g);
        const double t = g - i;
        auto at = [&](long k) {
            k = std::clamp<long>(k, 0, static_cast<long>(values_.size()) - 1);
            return values_[k];
        };
        const double p0 = at(i - 1), p1 = at(i), p2 = at(i + 1), p3 = at(i + 2);
        return p1 + 0.5 * t * (p2 - p0 + t * (2 * p0 - 5 * p1 + 4 * p2 - p3 +
                                              t * (3 * (p1 - p2) + p3 - p0)));
    }

    static const ChiHatTable& instance() {
        static ChiHatTable table;
        return table;
    }

  private:
    ChiHatTable() {
        const std::size_t n = static_cast<std::size_t>(kMax / kStep) + 3;
        values_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double xi = i * kStep;
            auto f = [&](double s) { return chi_bump(s) * std::cos(s * xi); };
            values_[i] = 2.0 * oscillatory_integral(f, 1.0, xi + 1.0, 12);
        }
    }

    std::vector<double> values_;
};

}  // namespace

double window_transform(const WindowSpec& spec, double lambda, double tau) {
    if (!(spec.eps > 0.0) || spec.eps > 1.0) throw InvalidInput("window needs eps in (0, 1]");
    const auto& chihat = ChiHatTable::instance();
    const double eps = spec.eps;
    auto f = [&](double t) {
        return eps * chihat(eps * t) * std::cos(t * lambda) * std::cos(t * tau);
    };
    const double tmax = ChiHatTable::kMax / eps;
    const double val = oscillatory_integral(f, tmax, lambda + tau + 1.0, 12);
    return 2.0 / std::numbers::pi * val;
}

DecayFit check_indicator_decay(const MollifierSpec& spec, double lambda, int N,
                               std::span<const double> tau_grid,
                               const std::function<double(double, double)>& approx) {
    if (N < 1) throw InvalidInput("decay check needs N >= 1");
    std::function<double(double, double)> tilde = approx;
    if (!tilde)
        tilde = [&spec](double l, double t) { return smoothed_indicator(spec, l, t); };
    const double eps = spec.eps;
    const double dstep = eps / 10.0;

    DecayFit fit;
    for (double tau : tau_grid) {
        const double u = 1.0 + std::abs(lambda - tau) / eps;
        const double growth = std::pow(u, N);
        const double diff = std::abs(sharp_indicator(lambda, tau) - tilde(lambda, tau));
        fit.C_diff = std::max(fit.C_diff, diff * growth);
        fit.offsets.push_back(std::abs(lambda - tau) / eps);
        fit.diffs.push_back(diff);

        const double vm = tilde(lambda, tau - dstep);
        const double v0 = tilde(lambda, tau);
        const double vp = tilde(lambda, tau + dstep);
        const double d1 = (vp - vm) / (2.0 * dstep);
        const double d2 = (vp - 2.0 * v0 + vm) / (dstep * dstep);
        fit.C_d1 = std::max(fit.C_d1, std::abs(d1) * eps * growth);
        fit.C_d2 = std::max(fit.C_d2, std::abs(d2) * eps * eps * growth);
    }
    if (!std::isfinite(fit.C_diff) || !std::isfinite(fit.C_d1) || !std::isfinite(fit.C_d2))
        throw FitFailure("decay constants did not come out finite");
    return fit;
}

DyadicDecomposition::DyadicDecomposition(double eps_in) : eps(eps_in) {
    if (!(eps > 0.0) || eps > 1.0) throw InvalidInput("dyadic decomposition needs eps in (0, 1]");
    ell0 = static_cast<int>(std::floor(std::log2(eps) + 1e-12));
    if (std::pow(2.0, ell0 + 1) <= eps) ++ell0;  // guard rounding at powers of two
}

double beta0(const DyadicDecomposition& decomp, double s) {
    s = std::abs(s);
    if (s == 0.0) return 1.0;  // continuous completion of the truncated sum
    const int base = static_cast<int>(std::floor(std::log2(s)));
    double sum = 0.0;
    for (int ell = base - 1; ell <= base + 1; ++ell) {
        if (ell > decomp.ell0) continue;
        sum += beta_bump(std::ldexp(s, -ell));
    }
    return sum;
}

std::vector<double> dyadic_partition(double s, int L) {
    if (!(s > 0.0)) throw InvalidInput("dyadic_partition needs s > 0");
    std::vector<double> out;
    out.reserve(2 * L + 1);
    for (int ell = -L; ell <= L; ++ell) out.push_back(beta_bump(std::ldexp(s, -ell)));
    return out;
}

DyadicBand dyadic_band(double lambda, int ell, int nu, int sign) {
    const double step = std::ldexp(1.0, ell);
    DyadicBand band;
    if (sign < 0) {
        band.lo = lambda - (nu + 1) * step;
        band.hi = lambda - nu * step;
        band.left_endpoint = band.lo;
    } else {
        band.lo = lambda + nu * step;
        band.hi = lambda + (nu + 1) * step;
        band.left_endpoint = band.lo;
    }
    return band;
}

namespace {

void require_lp_regime(double lambda, double lambda_j, double tau) {
    if (!(tau >= 0.5 * lambda && tau <= 10.0 * lambda))
        throw RangeError("lp symbols need lambda/2 <= tau <= 10 lambda");
    if (!(lambda_j <= 10.0 * lambda))
        throw RangeError("lp symbols need lambda_j <= 10 lambda");
}

}  // namespace

LpSymbolValues lp_symbols(const DyadicDecomposition& decomp, const MollifierSpec& mol,
                          double lambda, double lambda_j, double tau, int ell, int sign) {
    require_lp_regime(lambda, lambda_j, tau);
    LpSymbolValues out;
    const double gap = lambda_j - tau;
    const double denom = lambda_j + tau;

    double quotient;
    if (std::abs(gap) <= 1e-8 * std::max(lambda_j, 1.0)) {
        quotient = smoothed_indicator_deriv(mol, lambda, tau);  // removable point
    } else {
        quotient = (smoothed_indicator(mol, lambda, lambda_j) -
                    smoothed_indicator(mol, lambda, tau)) / gap;
    }
    out.m0 = quotient * beta0(decomp, gap) / denom;

    const double bt = beta_tilde(std::ldexp(gap, -ell));
    if (bt == 0.0) return out;  // off the dyadic shell both symbols vanish exactly
    out.r_ell = std::ldexp(bt, -ell) / denom;
    const double ind = smoothed_indicator(mol, lambda, lambda_j);
    out.m_pm = out.r_ell * (sign < 0 ? ind - 1.0 : ind);
    return out;
}

LpCertification certify_lp_bounds(const DyadicDecomposition& decomp,
                                  const MollifierSpec& mol, double lambda, int ell,
                                  int nu, int sign, int N, int tau_points) {
    const DyadicBand band = dyadic_band(lambda, ell, nu, sign);
    const double lo = std::max(band.lo, 0.5 * lambda);
    const double hi = std::min(band.hi, 10.0 * lambda);
    if (!(hi > lo)) throw RangeError("band does not meet the certification regime");

    const double step = std::ldexp(1.0, ell);
    const double dstep = std::min(mol.eps, step) / 10.0;
    const double rhs_m = std::ldexp(1.0, -ell) / lambda / std::pow(1.0 + nu, N);
    const double rhs_r = std::ldexp(1.0, -ell) / lambda;

    // lambda_j offsets inside the shell where beta~ is active, both sides
    const double offs[] = {-1.4, -1.0, -0.6, 0.6, 1.0, 1.4};

    // m^pm(lj, t) = R(lj, t) * (ind(lj) - c), so one smoothed-indicator
    // evaluation per (tau, offset) covers the value and both differences.
    auto r_of = [&](double lj, double t) {
        return std::ldexp(beta_tilde(std::ldexp(lj - t, -ell)), -ell) / (lj + t);
    };
    LpCertification cert;
    for (int i = 0; i < tau_points; ++i) {
        const double tau = lo + (hi - lo) * (i + 0.5) / tau_points;
        for (double o : offs) {
            const double lj = tau + o * step;
            if (lj < 1.0 || lj > 10.0 * lambda) continue;
            const double ind = smoothed_indicator(mol, lambda, lj);
            const double factor = sign < 0 ? ind - 1.0 : ind;
            const double tm = std::max(tau - dstep, lo), tp = std::min(tau + dstep, hi);
            const double r0 = r_of(lj, tau), rm = r_of(lj, tm), rp = r_of(lj, tp);
            const double dr = (rp - rm) / (tp - tm);
            cert.C_m = std::max(cert.C_m,
                                (std::abs(r0 * factor) + step * std::abs(dr * factor)) / rhs_m);
            cert.C_R = std::max(cert.C_R, (std::abs(r0) + std::abs(dr)) / rhs_r);
            ++cert.samples;
        }
    }
    return cert;
}

}  // namespace weyl
