#include "weyl/spectral.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

#include "weyl/errors.hpp"
#include "weyl/report.hpp"

namespace weyl {

Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& m) {
    const lapack_int n = static_cast<lapack_int>(m.rows());
    Eigen::MatrixXd work = m;
    Eigen::VectorXd values(n);
    const lapack_int info =
        LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'L', n, work.data(), n, values.data());
    if (info != 0) throw SolverError("dsyevd (values) failed, info=" + std::to_string(info));
    return values;
}

void symmetric_eigendecompose(const Eigen::MatrixXd& m, Eigen::VectorXd& values,
                              Eigen::MatrixXd& vectors) {
    const lapack_int n = static_cast<lapack_int>(m.rows());
    vectors = m;
    values.resize(n);
    const lapack_int info =
        LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, vectors.data(), n, values.data());
    if (info != 0) throw SolverError("dsyevd failed, info=" + std::to_string(info));
    // fix sign: largest-magnitude entry of each column positive
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index imax = 0;
        vectors.col(k).cwiseAbs().maxCoeff(&imax);
        if (vectors(imax, k) < 0.0) vectors.col(k) = -vectors.col(k);
    }
}

SpectralData eigendecompose(const AssembledOperator& op, std::size_t dense_limit) {
    const std::size_t n = op.size();
    if (n > dense_limit)
        throw CapacityError("matrix size " + std::to_string(n) +
                            " exceeds the dense-solver limit " + std::to_string(dense_limit));
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
    symmetric_eigendecompose(op.matrix, values, vectors);

    SpectralData data;
    data.weight = op.grid.quadrature_weight;
    data.shift = op.shift;
    data.validity_ceiling = op.grid.lambda_max > 0.0
                                ? op.grid.lambda_max / 4.0
                                : std::numeric_limits<double>::infinity();
    data.source = (op.kind == OperatorKind::Free ? "free" : "schrodinger");
    data.frequencies.resize(n);
    for (std::size_t k = 0; k < n; ++k)
        data.frequencies[k] = std::sqrt(std::max(0.0, values[static_cast<Eigen::Index>(k)]));
    // weighted normalization: LAPACK returns l2-orthonormal columns q; e = q/h
    data.eigenvectors = vectors / std::sqrt(data.weight);
    return data;
}

ExactSpectrum exact_rectangle_spectrum(double a, double b, BoundaryCondition bc,
                                       double cutoff) {
    if (!(cutoff > 0.0)) throw InvalidInput("spectrum cutoff must be positive");
    if (bc.kind == BcKind::Robin)
        throw UnsupportedDomain("no closed-form rectangle spectrum under Robin conditions");
    const int lo = bc.kind == BcKind::Dirichlet ? 1 : 0;
    const double pi = std::numbers::pi;

    ExactSpectrum out;
    out.provenance = SpectrumProvenance::RectangleLattice;
    out.cutoff = cutoff;
    out.bc = bc;
    for (int m = lo;; ++m) {
        const double base = pi * pi * m * m / (a * a);
        if (m > 0 && base > cutoff * cutoff) break;
        for (int k = lo;; ++k) {
            const double mu2 = base + pi * pi * k * k / (b * b);
            if (mu2 > cutoff * cutoff) break;
            out.frequencies.push_back(std::sqrt(mu2));
        }
        if (m == 0 && pi * pi / (a * a) > cutoff * cutoff) break;  // Neumann row guard
    }
    std::sort(out.frequencies.begin(), out.frequencies.end());
    return out;
}

namespace {

double bessel_j(int nu, double x) { return std::cyl_bessel_j(double(nu), x); }

double bessel_j_deriv(int nu, double x) {
    if (nu == 0) return -bessel_j(1, x);
    return 0.5 * (bessel_j(nu - 1, x) - bessel_j(nu + 1, x));
}

// Bisection to ~1e-12 on [lo, hi] where f changes sign.
template <class F>
double bisect(F&& f, double lo, double hi) {
    double flo = f(lo);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((flo < 0.0) == (fm < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if (hi - lo < 1e-13 * std::max(1.0, hi)) break;
    }
    return 0.5 * (lo + hi);
}

// All positive zeros of J_nu' below cutoff (nu >= 0), bracketed between
// consecutive zeros of J_nu (one extremum per gap, first one in (nu, j_{nu,1})).
std::vector<double> bessel_deriv_zeros(int nu, double cutoff,
                                       const std::vector<double>& jz_ext) {
    std::vector<double> out;
    auto fd = [nu](double x) { return bessel_j_deriv(nu, x); };
    if (nu >= 1 && !jz_ext.empty()) {
        const double lo = std::max<double>(nu, 1e-8);
        if (fd(lo) * fd(jz_ext[0] - 1e-10) < 0.0) out.push_back(bisect(fd, lo, jz_ext[0] - 1e-10));
    }
    for (std::size_t i = 0; i + 1 < jz_ext.size(); ++i) {
        const double lo = jz_ext[i] + 1e-10, hi = jz_ext[i + 1] - 1e-10;
        if (fd(lo) * fd(hi) < 0.0) out.push_back(bisect(fd, lo, hi));
        if (!out.empty() && out.back() > cutoff) break;
    }
    while (!out.empty() && out.back() > cutoff) out.pop_back();
    return out;
}

}  // namespace

std::vector<double> bessel_zeros(int nu, double cutoff) {
    // Zeros of order nu are bracketed by interlacing with the previous order,
    // j_{nu,k} in (j_{nu-1,k}, j_{nu-1,k+1}); a sign scan then completes the
    // top end of each order (consecutive zeros are more than 3.1 apart, so a
    // step of 1.2 cannot hide a pair). Each order is computed once per
    // horizon and cached with everything below cutoff + 8.
    static thread_local double cached_horizon = -1.0;
    static thread_local std::vector<std::vector<double>> cache;
    if (cutoff + 8.0 > cached_horizon) {
        cache.clear();
        cached_horizon = cutoff + 8.0;
    }
    const double up = cached_horizon;
    while (static_cast<int>(cache.size()) <= nu) {
        const int order = static_cast<int>(cache.size());
        auto f = [order](double x) { return bessel_j(order, x); };
        std::vector<double> zs;
        if (order >= 1) {
            const auto& lower = cache[order - 1];
            for (std::size_t k = 0; k + 1 < lower.size(); ++k) {
                const double lo = lower[k], hi = lower[k + 1];
                if (hi > up + 1e-9) break;
                if (f(lo + 1e-10) * f(hi - 1e-10) >= 0.0) continue;
                zs.push_back(bisect(f, lo + 1e-10, hi - 1e-10));
            }
        }
        double scan_from = zs.empty() ? std::max(0.25, static_cast<double>(order)) : zs.back();
        double prev = scan_from + 1e-9, fprev = f(prev);
        for (double x = prev + 1.2; prev < up; x += 1.2) {
            const double fx = f(x);
            if (fprev * fx < 0.0) zs.push_back(bisect(f, prev, x));
            prev = x;
            fprev = fx;
        }
        cache.push_back(std::move(zs));
    }
    std::vector<double> out;
    for (double z : cache[nu]) {
        if (z > cutoff) break;
        out.push_back(z);
    }
    return out;
}

ExactSpectrum exact_disk_spectrum(double R, BoundaryCondition bc, double cutoff) {
    if (!(R > 0.0)) throw InvalidInput("disk radius must be positive");
    if (!(cutoff > 0.0)) throw InvalidInput("spectrum cutoff must be positive");
    if (bc.kind == BcKind::Robin)
        throw UnsupportedDomain("disk oracle supports Dirichlet and Neumann only");

    ExactSpectrum out;
    out.provenance = SpectrumProvenance::DiskBessel;
    out.cutoff = cutoff;
    out.bc = bc;
    const double xmax = cutoff * R;

    if (bc.kind == BcKind::Neumann) out.frequencies.push_back(0.0);  // constant mode
    // j_{nu,1} and j'_{nu,1} both exceed nu, so orders beyond xmax are empty.
    for (int nu = 0; nu <= static_cast<int>(xmax) + 1; ++nu) {
        std::vector<double> xs;
        if (bc.kind == BcKind::Dirichlet) {
            xs = bessel_zeros(nu, xmax);
        } else {
            // brackets need J_nu zeros a little past the cutoff
            const auto jz = bessel_zeros(nu, xmax + std::numbers::pi + 4.0);
            xs = bessel_deriv_zeros(nu, xmax, jz);
        }
        const int mult = nu == 0 ? 1 : 2;
        for (double x : xs)
            for (int m = 0; m < mult; ++m) out.frequencies.push_back(x / R);
    }
    std::sort(out.frequencies.begin(), out.frequencies.end());
    return out;
}

long counting_function(std::span<const double> frequencies, double lambda) {
    return static_cast<long>(
        std::upper_bound(frequencies.begin(), frequencies.end(), lambda) -
        frequencies.begin());
}

double spectral_function(const SpectralData& data, std::size_t node, double lambda) {
    const long count = counting_function(data.frequencies, lambda);
    double sum = 0.0;
    for (long k = 0; k < count; ++k) {
        const double v = data.eigenvectors(static_cast<Eigen::Index>(node), k);
        sum += v * v;
    }
    return sum;
}

void export_spectrum_csv(std::span<const double> frequencies,
                         const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot open '" + path.string() + "'");
    out << "index,frequency,multiplicity_flag\n";
    for (std::size_t i = 0; i < frequencies.size(); ++i) {
        const double f = frequencies[i];
        const double tol = 1e-9 * std::max(1.0, std::abs(f));
        const bool rep = (i > 0 && std::abs(frequencies[i - 1] - f) <= tol) ||
                         (i + 1 < frequencies.size() && std::abs(frequencies[i + 1] - f) <= tol);
        out << i << ',' << format_g17(f) << ',' << (rep ? 1 : 0) << '\n';
    }
}

}  // namespace weyl
