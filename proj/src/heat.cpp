#include "weyl/heat.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "weyl/errors.hpp"
#include "weyl/parallel.hpp"
#include "weyl/quadrature.hpp"

namespace weyl {

double heat_kernel(const SpectralData& data, double t, std::size_t x, std::size_t y) {
    if (!(t > 0.0)) throw InvalidInput("heat kernel needs t > 0");
    double sum = 0.0;
    for (std::size_t k = 0; k < data.size(); ++k) {
        const double tau = data.frequencies[k];
        const double w = std::exp(-t * tau * tau);
        if (w == 0.0) continue;
        // multiply the eigenfunction values first so K_t(x,y) == K_t(y,x) bitwise
        sum += w * (data.eigenvectors(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(k)) *
                    data.eigenvectors(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(k)));
    }
    return sum;
}

Eigen::MatrixXd heat_kernel_matrix(const SpectralData& data, double t) {
    if (!(t > 0.0)) throw InvalidInput("heat kernel needs t > 0");
    Eigen::VectorXd w(data.size());
    for (std::size_t k = 0; k < data.size(); ++k) {
        const double tau = data.frequencies[k];
        w[static_cast<Eigen::Index>(k)] = std::exp(-t * tau * tau);
    }
    return data.eigenvectors * w.asDiagonal() * data.eigenvectors.transpose();
}

double heat_trace(std::span<const double> frequencies, double t) {
    if (!(t > 0.0)) throw InvalidInput("heat trace needs t > 0");
    // ascending frequencies: sum smallest terms first
    double sum = 0.0;
    for (std::size_t i = frequencies.size(); i-- > 0;) {
        const double tau = frequencies[i];
        sum += std::exp(-t * tau * tau);
    }
    return sum;
}

double rectangle_heat_trace(double a, double b, BoundaryCondition bc, double t) {
    if (!(t > 0.0)) throw InvalidInput("heat trace needs t > 0");
    // modal density ~ 2 c0 s, so a cutoff with t L^2 ~ 37 + log(1 + c0/t)
    // leaves a tail under 1e-12
    const double c0 = a * b / (4.0 * std::numbers::pi);
    const double L2 = (37.0 + std::log1p(c0 / t)) / t;
    const double cutoff = std::sqrt(L2) + std::numbers::pi;
    const ExactSpectrum spec = exact_rectangle_spectrum(a, b, bc, cutoff);
    return heat_trace(spec.frequencies, t);
}

GaussianFit fit_gaussian_bound(const SpectralData& data, const Grid& grid,
                               std::span<const double> t_grid,
                               std::span<const std::pair<std::size_t, std::size_t>> pairs,
                               double C_cap) {
    for (double t : t_grid)
        if (!(t > 0.0) || t > 1.0) throw InvalidInput("gaussian fit needs the t grid in (0, 1]");
    if (pairs.empty() || t_grid.empty()) throw InvalidInput("gaussian fit needs samples");

    const int n = grid.domain.dim;
    struct Sample { double log_m; double q; };
    std::vector<Sample> samples(pairs.size() * t_grid.size(),
                                Sample{-std::numeric_limits<double>::infinity(), 0.0});
    parallel_for(pairs.size(), [&](std::size_t pi) {
        const auto [x, y] = pairs[pi];
        const double d = distance(grid.node(x), grid.node(y));
        for (std::size_t ti = 0; ti < t_grid.size(); ++ti) {
            const double t = t_grid[ti];
            const double m = std::abs(heat_kernel(data, t, x, y)) * std::pow(t, 0.5 * n);
            samples[pi * t_grid.size() + ti] = {m > 0.0 ? std::log(m) : -1e300, d * d / t};
        }
    });

    const double log_cap = std::log(C_cap);
    auto log_C = [&](double c1) {
        double best = -1e300;
        for (const Sample& s : samples) best = std::max(best, s.log_m + c1 * s.q);
        return best;
    };
    if (log_C(0.0) > log_cap)
        throw FitFailure("no positive rate is certifiable under the prefactor cap");

    // concave score: c1 minus a steep penalty once C(c1) exceeds the cap
    auto score = [&](double c1) { return c1 - 1e3 * std::max(0.0, log_C(c1) - log_cap); };
    double lo = 0.0, hi = 2.0;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = score(x1), f2 = score(x2);
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + gr * (hi - lo); f2 = score(x2);
        } else {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - gr * (hi - lo); f1 = score(x1);
        }
    }
    double c1 = 0.5 * (lo + hi);
    while (c1 > 1e-12 && log_C(c1) > log_cap) c1 *= 0.995;
    if (!(c1 > 0.0)) throw FitFailure("certified rate collapsed to zero");

    GaussianFit fit;
    fit.c1 = c1;
    fit.C = std::exp(log_C(c1));
    fit.t_min = *std::min_element(t_grid.begin(), t_grid.end());
    fit.t_max = *std::max_element(t_grid.begin(), t_grid.end());
    fit.samples = static_cast<long>(samples.size());
    fit.violations = 0;
    for (const Sample& s : samples)
        if (s.log_m > std::log(fit.C) - fit.c1 * s.q + 1e-12) ++fit.violations;
    return fit;
}

LongTimeReport check_long_time(const SpectralData& data,
                               std::span<const std::pair<std::size_t, std::size_t>> pairs,
                               std::span<const double> t_grid) {
    if (data.frequencies.empty() || data.frequencies.front() < 1.0 - 1e-6)
        throw InvalidInput("long-time check needs the shifted spectrum >= 1");
    for (double t : t_grid)
        if (!(t > 1.0) || t > 20.0) throw InvalidInput("long-time check expects t in (1, 20]");

    LongTimeReport rep;
    for (double t : t_grid) {
        double worst = 0.0;
        for (const auto& [x, y] : pairs)
            worst = std::max(worst, std::abs(heat_kernel(data, t, x, y)));
        rep.t.push_back(t);
        rep.max_scaled.push_back(worst * std::exp(0.5 * t));
    }
    rep.nonincreasing_beyond_2 = true;
    for (std::size_t i = 1; i < rep.t.size(); ++i) {
        if (rep.t[i - 1] < 2.0) continue;
        if (rep.max_scaled[i] > rep.max_scaled[i - 1] * (1.0 + 1e-9) + 1e-300)
            rep.nonincreasing_beyond_2 = false;
    }
    return rep;
}

namespace {

// shared panel layout for the heat-time integral: geometric on (0,1], unit
// panels on (1, 45]; tau >= 1 makes the dropped tail < 45^l e^{-45}.
template <class F>
double heat_time_panels(F&& f) {
    double sum = 0.0;
    double hi = 1.0;
    for (int j = 0; j < 44; ++j) {
        const double lo = hi * 0.5;
        sum += gl_panel(f, lo, hi, 16);
        hi = lo;
    }
    for (int j = 0; j < 44; ++j) sum += gl_panel(f, 1.0 + j, 2.0 + j, 16);
    return sum;
}

double factorial(int n) {
    double v = 1.0;
    for (int i = 2; i <= n; ++i) v *= i;
    return v;
}

}  // namespace

double riesz_time_integral(double tau, int ell) {
    const double t2 = tau * tau;
    auto f = [&](double t) { return std::pow(t, ell) * std::exp(-t * t2); };
    double sum = heat_time_panels(f);
    if (ell == 0) sum += -std::expm1(-std::ldexp(1.0, -44) * t2) / t2;  // head below 2^-44
    return sum / factorial(ell);
}

RieszResult riesz_kernel(const SpectralData& data, int ell) {
    if (ell < 0) throw InvalidInput("riesz kernel needs ell >= 0");
    if (data.frequencies.empty() || data.frequencies.front() < 1.0 - 1e-6)
        throw InvalidInput("riesz kernel needs the shifted spectrum >= 1");

    const std::size_t n = data.size();
    Eigen::VectorXd s_spec(n), s_quad(n);
    parallel_for(n, [&](std::size_t k) {
        const double tau = data.frequencies[k];
        s_spec[static_cast<Eigen::Index>(k)] = std::pow(tau, -2.0 - 2.0 * ell);
        s_quad[static_cast<Eigen::Index>(k)] = riesz_time_integral(tau, ell);
    });

    RieszResult out;
    out.spectral = data.eigenvectors * s_spec.asDiagonal() * data.eigenvectors.transpose();
    out.quadrature = data.eigenvectors * s_quad.asDiagonal() * data.eigenvectors.transpose();
    out.max_abs_diff = (out.spectral - out.quadrature).cwiseAbs().maxCoeff();
    const double scale = out.spectral.cwiseAbs().maxCoeff();
    out.max_rel_diff = scale > 0.0 ? out.max_abs_diff / scale : out.max_abs_diff;
    if (out.max_rel_diff > 1e-6)
        throw AccuracyError("riesz kernel routes disagree beyond 1e-6 relative");
    return out;
}

}  // namespace weyl
