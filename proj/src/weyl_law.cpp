#include "weyl/weyl_law.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "weyl/errors.hpp"
#include "weyl/spectral.hpp"

namespace weyl {

double unit_ball_volume(int n) {
    return std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

WeylCoefficients weyl_coefficients(const DomainSpec& domain, BoundaryCondition bc, int n) {
    if (n < 2) throw InvalidInput("weyl_coefficients needs n >= 2");
    WeylCoefficients w;
    w.n = n;
    w.omega_n = unit_ball_volume(n);
    w.omega_n1 = unit_ball_volume(n - 1);
    w.c0 = std::pow(2.0 * std::numbers::pi, -n) * w.omega_n * domain.area;
    const double mag =
        0.25 * std::pow(2.0 * std::numbers::pi, 1.0 - n) * w.omega_n1 * domain.perimeter;
    switch (bc.kind) {
        case BcKind::Dirichlet: w.c1 = -mag; break;
        case BcKind::Neumann: w.c1 = +mag; break;
        case BcKind::Robin:
            // Robin eigenvalues sit between Dirichlet and Neumann; report the
            // Neumann-side value and flag it.
            w.c1 = +mag;
            w.robin_caveat = true;
            break;
    }
    return w;
}

RemainderCurve remainder_curve(std::span<const double> frequencies,
                               const WeylCoefficients& coeffs,
                               std::span<const double> lambda_grid,
                               double validity_ceiling) {
    RemainderCurve curve;
    curve.coeffs = coeffs;
    curve.lambda.reserve(lambda_grid.size());
    for (double lam : lambda_grid) {
        if (lam > validity_ceiling)
            throw RangeError("lambda " + std::to_string(lam) +
                             " beyond the spectrum's validity ceiling " +
                             std::to_string(validity_ceiling));
        const double count = static_cast<double>(counting_function(frequencies, lam));
        const double r1 = count - coeffs.c0 * std::pow(lam, coeffs.n);
        const double r2 = r1 - coeffs.c1 * std::pow(lam, coeffs.n - 1);
        const double denom = std::pow(lam, coeffs.n - 1);
        curve.lambda.push_back(lam);
        curve.counts.push_back(count);
        curve.r1.push_back(r1);
        curve.r2.push_back(r2);
        curve.r1_norm.push_back(r1 / denom);
        curve.r2_norm.push_back(r2 / denom);
    }
    return curve;
}

ExponentFit fit_remainder_exponent(std::span<const double> lambda,
                                   std::span<const double> remainder, double lo,
                                   double hi) {
    if (!(lo > 0.0) || !(hi > lo)) throw InvalidInput("bad exponent-fit window");
    const int blocks = static_cast<int>(std::floor(std::log2(hi / lo) * 2.0 + 1e-9));
    if (blocks < 4)
        throw InvalidInput("exponent-fit window must span at least 4 half-octave blocks");

    std::vector<double> xs, ys;
    const double ratio = std::sqrt(2.0);
    double b0 = lo;
    for (int b = 0; b < blocks; ++b) {
        const double b1 = (b + 1 == blocks) ? hi : b0 * ratio;
        double sum = 0.0;
        long cnt = 0;
        for (std::size_t i = 0; i < lambda.size(); ++i) {
            if (lambda[i] >= b0 && lambda[i] < b1) {
                sum += std::abs(remainder[i]);
                ++cnt;
            }
        }
        if (cnt > 0 && sum > 0.0) {
            xs.push_back(std::log(std::sqrt(b0 * b1)));
            ys.push_back(std::log(sum / cnt));
        }
        b0 = b1;
    }
    if (xs.size() < 4)
        throw InvalidInput("exponent fit needs data in at least 4 blocks of the window");

    // least squares y = a + s x
    const double nn = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double slope = (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / nn;
    double rss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double e = ys[i] - (intercept + slope * xs[i]);
        rss += e * e;
    }
    ExponentFit fit;
    fit.exponent = slope;
    fit.rms_residual = std::sqrt(rss / nn);
    fit.blocks = static_cast<int>(xs.size());
    return fit;
}

long short_interval_count(std::span<const double> frequencies, double lambda, double eps) {
    if (!(eps >= 0.0)) throw InvalidInput("short_interval_count needs eps >= 0");
    const auto lo = std::lower_bound(frequencies.begin(), frequencies.end(), lambda);
    const auto hi = std::upper_bound(frequencies.begin(), frequencies.end(), lambda + eps);
    return static_cast<long>(hi - lo);
}

}  // namespace weyl
