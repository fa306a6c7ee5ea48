#include "weyl/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "weyl/duhamel.hpp"
#include "weyl/errors.hpp"
#include "weyl/heat.hpp"
#include "weyl/multipliers.hpp"
#include "weyl/operators.hpp"
#include "weyl/potential.hpp"
#include "weyl/quadrature.hpp"
#include "weyl/spectral.hpp"
#include "weyl/weyl_law.hpp"

namespace weyl {

namespace {

std::string fmt(const char* pattern, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
    return v;
}

std::vector<double> logspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    return v;
}

PotentialSpec coulomb_center() {
    PotentialSpec V;
    V.terms.push_back(PotentialTerm::inverse_power({0.5, 0.5}, 1.0, 1.0));
    return V;
}

// brute-force rectangle mode count, independent of the enumeration path
long brute_force_square_count(double lambda) {
    const double r2 = lambda * lambda / (std::numbers::pi * std::numbers::pi);
    long count = 0;
    for (int m = 1; static_cast<double>(m) * m < r2; ++m)
        for (int k = 1; m * m + k * k <= r2 + 1e-12; ++k)
            if (m * m + k * k <= r2 * (1.0 + 1e-15)) ++count;
    return count;
}

CriterionResult c1_counting() {
    CriterionResult r{1, "exact counting oracle vs brute force", true, 0, {}};
    const ExactSpectrum sq = exact_rectangle_spectrum(1, 1, BoundaryCondition::dirichlet(), 65);
    const long n20 = counting_function(sq.frequencies, 20.0);
    r.details.push_back(fmt("N(20) = %ld (want 26)", n20));
    if (n20 != 26) r.pass = false;

    std::mt19937_64 rng(20240901);
    std::uniform_real_distribution<double> dist(1e-6, 60.0);
    int mismatches = 0;
    for (int i = 0; i < 100; ++i) {
        const double lam = dist(rng);
        if (counting_function(sq.frequencies, lam) != brute_force_square_count(lam))
            ++mismatches;
    }
    r.details.push_back(fmt("random-lambda mismatches: %d / 100", mismatches));
    if (mismatches != 0) r.pass = false;
    return r;
}

struct WeylFits {
    ExponentFit sq_r1, sq_r2, dk_r1, dk_r2;
};

WeylFits weyl_exponent_fits() {
    WeylFits f;
    {
        const ExactSpectrum sq =
            exact_rectangle_spectrum(1, 1, BoundaryCondition::dirichlet(), 405);
        const auto grid = linspace(50.0, 400.0, 1401);
        const auto curve = remainder_curve(
            sq.frequencies, weyl_coefficients(make_rectangle(1, 1), BoundaryCondition::dirichlet()),
            grid);
        f.sq_r1 = fit_remainder_exponent(curve.lambda, curve.r1, 50, 400);
        f.sq_r2 = fit_remainder_exponent(curve.lambda, curve.r2, 50, 400);
    }
    {
        const ExactSpectrum dk = exact_disk_spectrum(1.0, BoundaryCondition::dirichlet(), 121);
        const auto grid = linspace(20.0, 120.0, 1001);
        const auto curve = remainder_curve(
            dk.frequencies, weyl_coefficients(make_disk(1.0), BoundaryCondition::dirichlet()),
            grid);
        f.dk_r1 = fit_remainder_exponent(curve.lambda, curve.r1, 20, 120);
        f.dk_r2 = fit_remainder_exponent(curve.lambda, curve.r2, 20, 120);
    }
    return f;
}

CriterionResult c2_one_term(const WeylFits& f) {
    CriterionResult r{2, "one-term remainder exponent (square + disk)", true, 0, {}};
    r.details.push_back(fmt("square |R1| exponent over [50,400]: %.4f (want [0.85,1.1])",
                            f.sq_r1.exponent));
    r.details.push_back(fmt("disk   |R1| exponent over [20,120]: %.4f (want [0.85,1.1])",
                            f.dk_r1.exponent));
    if (!(f.sq_r1.exponent >= 0.85 && f.sq_r1.exponent <= 1.1)) r.pass = false;
    if (!(f.dk_r1.exponent >= 0.85 && f.dk_r1.exponent <= 1.1)) r.pass = false;
    return r;
}

CriterionResult c3_two_term(const WeylFits& f) {
    CriterionResult r{3, "two-term remainder exponent below one-term", true, 0, {}};
    r.details.push_back(fmt("square |R2| exponent: %.4f (want < 0.9 and < %.4f)",
                            f.sq_r2.exponent, f.sq_r1.exponent));
    r.details.push_back(fmt("disk   |R2| exponent: %.4f (want < 0.9 and < %.4f)",
                            f.dk_r2.exponent, f.dk_r1.exponent));
    if (!(f.sq_r2.exponent < 0.9 && f.sq_r2.exponent < f.sq_r1.exponent)) r.pass = false;
    if (!(f.dk_r2.exponent < 0.9 && f.dk_r2.exponent < f.dk_r1.exponent)) r.pass = false;
    return r;
}

CriterionResult c4_schrodinger_weyl() {
    CriterionResult r{4, "free-vs-Schrodinger counting difference (64x64)", true, 0, {}};
    const Grid grid = build_grid(make_rectangle(1, 1), 1.0 / 64);
    const auto bc = BoundaryCondition::dirichlet();
    const AssembledOperator h0 = assemble_laplacian(grid, bc);
    const AssembledOperator hv = assemble_schrodinger(grid, bc, coulomb_center());

    const Eigen::VectorXd mu0 = symmetric_eigenvalues(h0.matrix);
    const Eigen::VectorXd muv = symmetric_eigenvalues(hv.matrix);
    std::vector<double> f0(mu0.size()), fv(muv.size());
    for (Eigen::Index i = 0; i < mu0.size(); ++i) f0[i] = std::sqrt(std::max(0.0, mu0[i]));
    for (Eigen::Index i = 0; i < muv.size(); ++i) fv[i] = std::sqrt(std::max(0.0, muv[i]));

    const double ceiling = grid.lambda_max / 4.0;
    std::vector<double> lams, diffs;
    double c_fit = 0.0;
    for (double lam = 10.0; lam <= ceiling; lam += 0.25) {
        const double d = std::abs(static_cast<double>(counting_function(fv, lam)) -
                                  static_cast<double>(counting_function(f0, lam)));
        lams.push_back(lam);
        diffs.push_back(d);
        c_fit = std::max(c_fit, d / lam);
    }
    r.details.push_back(fmt("fitted C in |N_V - N_0| <= C*lambda: %.4f over lambda in [10,%.2f]",
                            c_fit, ceiling));
    double expo = 0.0;
    bool fit_ok = true;
    try {
        expo = fit_remainder_exponent(lams, diffs, 10.0, ceiling).exponent;
    } catch (const InvalidInput&) {
        fit_ok = false;  // difference vanishes on most blocks
    }
    if (fit_ok)
        r.details.push_back(fmt("difference growth exponent: %.4f (want <= 1.1)", expo));
    else
        r.details.push_back("difference too sparse for a fit; treated as exponent 0");
    if (fit_ok && !(expo <= 1.1)) r.pass = false;
    return r;
}

CriterionResult c5_duhamel_identity() {
    CriterionResult r{5, "wave-kernel perturbation identity (12x12)", true, 0, {}};
    const Grid grid = build_grid(make_rectangle(1, 1), 1.0 / 13);
    const auto bc = BoundaryCondition::dirichlet();

    const OperatorPair singular = make_operator_pair(grid, bc, coulomb_center());
    const double vnorm = singular.v_diag.cwiseAbs().maxCoeff();
    for (double t : {0.1, 0.5, 1.0, 2.0}) {
        const double res = duhamel_identity_residual(singular, t) / std::max(1.0, vnorm);
        r.details.push_back(fmt("singular V, t=%.1f: relative residual %.3e (want <= 1e-8)", t, res));
        if (!(res <= 1e-8)) r.pass = false;
    }
    const OperatorPair trivial = make_operator_pair(grid, bc, PotentialSpec{});
    for (double t : {0.1, 0.5, 1.0, 2.0}) {
        const double res = duhamel_identity_residual(trivial, t);
        if (res != 0.0) {
            r.pass = false;
            r.details.push_back(fmt("V=0, t=%.1f: residual %.3e (want exactly 0)", t, res));
        }
    }
    if (r.pass) r.details.push_back("V=0 residual exactly zero at all four times");
    return r;
}

CriterionResult c6_trace_sums() {
    CriterionResult r{6, "trace perturbation sums vs direct traces (20x20)", true, 0, {}};
    const Grid grid = build_grid(make_rectangle(1, 1), 1.0 / 21);
    const OperatorPair pair =
        make_operator_pair(grid, BoundaryCondition::dirichlet(), coulomb_center());

    const double eps = 0.5;
    double worst_window = 0.0, worst_indicator = 0.0;
    for (double lam : {6.0, 8.0, 10.0, 12.0, 14.0}) {
        const WindowSpec win{eps};
        const auto t1 = trace_perturbation_sum(
            pair, [&](double f) { return window(win, lam, f); },
            [&](double f) { return window_deriv(win, lam, f); });
        worst_window = std::max(worst_window, t1.residual);

        const MollifierSpec mol{eps};
        const auto t2 = trace_perturbation_sum(
            pair, [&](double f) { return smoothed_indicator(mol, lam, f); },
            [&](double f) { return smoothed_indicator_deriv(mol, lam, f); });
        worst_indicator = std::max(worst_indicator, t2.residual);
    }
    r.details.push_back(fmt("worst window residual over 5 lambdas: %.3e (want <= 1e-8)", worst_window));
    r.details.push_back(fmt("worst smoothed-indicator residual:    %.3e (want <= 1e-8)", worst_indicator));
    if (!(worst_window <= 1e-8 && worst_indicator <= 1e-8)) r.pass = false;

    const CaseReport rep = case_report(pair, 12.0, eps);
    r.details.push_back(fmt("case blocks reconcile: short %.3e, long %.3e (want <= 1e-10)",
                            rep.short_reconciliation, rep.long_reconciliation));
    if (!(rep.short_reconciliation <= 1e-10 && rep.long_reconciliation <= 1e-10)) r.pass = false;
    return r;
}

CriterionResult c7_heat_trace() {
    CriterionResult r{7, "heat trace vs theta oracle and leading asymptote", true, 0, {}};
    const auto bc = BoundaryCondition::dirichlet();
    const double tr = rectangle_heat_trace(1, 1, bc, 0.01);
    const double pred = 1.0 / (4.0 * std::numbers::pi * 0.01) -
                        4.0 / (8.0 * std::sqrt(std::numbers::pi * 0.01));
    r.details.push_back(fmt("trace(0.01) = %.6f (want 5.3868 +- 0.001)", tr));
    r.details.push_back(fmt("observed - two-term = %.6f (want [0.24, 0.26])", tr - pred));
    if (!(std::abs(tr - 5.3868) <= 0.001)) r.pass = false;
    if (!(tr - pred >= 0.24 && tr - pred <= 0.26)) r.pass = false;

    const double tr5 = rectangle_heat_trace(1, 1, bc, 0.005);
    const double lead = 4.0 * std::numbers::pi * 0.005 * tr5;
    r.details.push_back(fmt("4*pi*t*trace at t=0.005 = %.6f (want within 2%% of 1)", lead));
    if (!(std::abs(lead - 1.0) <= 0.02)) {
        r.pass = false;
        // Poisson summation: 4*pi*t*trace = 1 - 2*sqrt(pi t) + pi t exactly, so
        // the boundary term alone is 23.5% of the leading term at t = 0.005 and
        // this clause cannot pass for any t >= 3.2e-5.
        const double corrected =
            4.0 * std::numbers::pi * 0.005 *
            (tr5 + 4.0 / (8.0 * std::sqrt(std::numbers::pi * 0.005)));
        r.details.push_back(fmt("  (unattainable as stated: exact value 1 - 2*sqrt(pi*t) + pi*t = %.6f;",
                                1.0 - 2.0 * std::sqrt(std::numbers::pi * 0.005) +
                                    std::numbers::pi * 0.005));
        r.details.push_back(fmt("   boundary-corrected ratio = %.6f, which IS within 2%%)", corrected));
    }
    return r;
}

std::vector<std::pair<std::size_t, std::size_t>> sample_pairs(const Grid& grid,
                                                              std::size_t diag,
                                                              std::size_t random,
                                                              std::size_t far,
                                                              unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(diag + random + far);
    for (std::size_t i = 0; i < diag; ++i) {
        const std::size_t x = pick(rng);
        pairs.emplace_back(x, x);
    }
    for (std::size_t i = 0; i < random; ++i) pairs.emplace_back(pick(rng), pick(rng));
    for (std::size_t i = 0; i < far; ++i)
        pairs.emplace_back(i % grid.size(), grid.size() - 1 - (i % grid.size()));
    return pairs;
}

CriterionResult c8_gaussian_bound() {
    CriterionResult r{8, "Gaussian heat bound certificates (32x32)", true, 0, {}};
    const Grid grid = build_grid(make_rectangle(1, 1), 1.0 / 32);
    const auto bc = BoundaryCondition::dirichlet();
    const auto t_grid = logspace(0.01, 1.0, 8);
    const auto pairs = sample_pairs(grid, 350, 800, 100, 71);

    AssembledOperator free_op = assemble_laplacian(grid, bc);
    AssembledOperator sing_op = assemble_schrodinger(grid, bc, coulomb_center());
    normalize_shift(free_op);
    normalize_shift(sing_op);
    const SpectralData free_data = eigendecompose(free_op);
    const SpectralData sing_data = eigendecompose(sing_op);

    for (const auto& [name, data] :
         {std::pair<const char*, const SpectralData*>{"free", &free_data},
          std::pair<const char*, const SpectralData*>{"singular-V", &sing_data}}) {
        try {
            const GaussianFit fit = fit_gaussian_bound(*data, grid, t_grid, pairs);
            r.details.push_back(fmt("%s: C=%.4f c1=%.4f samples=%ld violations=%ld", name,
                                    fit.C, fit.c1, fit.samples, fit.violations));
            if (!(fit.c1 > 0.0) || fit.violations != 0 || fit.samples < 10000) r.pass = false;
        } catch (const FitFailure& e) {
            r.pass = false;
            r.details.push_back(fmt("%s: fit failure: %s", name, e.what()));
        }
    }

    const auto long_pairs = sample_pairs(grid, 60, 120, 20, 72);
    const auto long_t = linspace(2.0, 20.0, 10);
    for (const auto& [name, data] :
         {std::pair<const char*, const SpectralData*>{"free", &free_data},
          std::pair<const char*, const SpectralData*>{"singular-V", &sing_data}}) {
        const LongTimeReport rep = check_long_time(*data, long_pairs, long_t);
        r.details.push_back(fmt("%s: long-time max |K|e^{t/2} at t=2: %.3e, nonincreasing: %s",
                                name, rep.max_scaled.front(),
                                rep.nonincreasing_beyond_2 ? "yes" : "NO"));
        if (!rep.nonincreasing_beyond_2) r.pass = false;
    }
    return r;
}

CriterionResult c9_riesz() {
    CriterionResult r{9, "negative-power kernels: two routes + direct solve", true, 0, {}};
    const Grid grid = build_grid(make_rectangle(1, 1), 1.0 / 13);
    AssembledOperator op = assemble_schrodinger(grid, BoundaryCondition::dirichlet(),
                                                coulomb_center());
    normalize_shift(op);
    const SpectralData data = eigendecompose(op);

    for (int ell : {0, 1, 2}) {
        try {
            const RieszResult res = riesz_kernel(data, ell);
            r.details.push_back(fmt("ell=%d: route disagreement %.3e relative (want <= 1e-6)",
                                    ell, res.max_rel_diff));
            if (!(res.max_rel_diff <= 1e-6)) r.pass = false;
            if (ell == 0) {
                const Eigen::MatrixXd direct =
                    op.matrix.llt().solve(Eigen::MatrixXd::Identity(op.matrix.rows(),
                                                                    op.matrix.cols())) /
                    grid.quadrature_weight;
                const double rel = (res.spectral - direct).cwiseAbs().maxCoeff() /
                                   direct.cwiseAbs().maxCoeff();
                r.details.push_back(fmt("ell=0 vs direct linear solve: %.3e relative (want <= 1e-8)", rel));
                if (!(rel <= 1e-8)) r.pass = false;
            }
        } catch (const AccuracyError& e) {
            r.pass = false;
            r.details.push_back(fmt("ell=%d: %s", ell, e.what()));
        }
    }
    return r;
}

CriterionResult c10_mollifier() {
    CriterionResult r{10, "mollified indicator: routes, decay doubling, eigenfunction sweep",
                      true, 0, {}};
    // route agreement on seeded random triples
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> lam_d(2.0, 60.0), eps_d(0.05, 1.0), tau_d(0.0, 70.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const MollifierSpec spec{eps_d(rng)};
        const double lam = lam_d(rng), tau = tau_d(rng);
        worst = std::max(worst, std::abs(smoothed_indicator_osc(spec, lam, tau) -
                                         smoothed_indicator_conv(spec, lam, tau)));
    }
    r.details.push_back(fmt("route disagreement on 10^3 random triples: %.3e (want <= 1e-6)", worst));
    if (!(worst <= 1e-6)) r.pass = false;

    // decay doubling at the offsets pinned by the module invariant
    const MollifierSpec spec{0.1};
    const double lam = 50.0;
    auto diff_at = [&](double k) {
        const double tau = lam + k * spec.eps;
        return std::abs(sharp_indicator(lam, tau) - smoothed_indicator(spec, lam, tau));
    };
    bool doubling_ok = true;
    for (double k : {2.0, 4.0, 8.0}) {
        const double factor = diff_at(k) / diff_at(2.0 * k);
        r.details.push_back(fmt("doubling factor at k=%g: %.2f (want >= 8)", k, factor));
        if (!(factor >= 8.0)) doubling_ok = false;
    }
    if (!doubling_ok) {
        r.pass = false;
        // Structural for every admissible bump: at 2..16 kernel widths from the
        // jump the error is kernel-core/sidelobe mass, not yet rapid decay
        // (a perfect (1+u)^-4 envelope would still give (5/3)^4 = 7.7 at k=2).
        r.details.push_back(fmt("  (unattainable at k in {2,4,8}; asymptotic factors: k=16: %.1f, k=32: %.1f)",
                                diff_at(16) / diff_at(32), diff_at(32) / diff_at(64)));
    }

    // eigenfunction-bound sweep on the 32x32 free operator
    const Grid grid = build_grid(make_rectangle(1, 1), 1.0 / 32);
    AssembledOperator op = assemble_laplacian(grid, BoundaryCondition::dirichlet());
    const SpectralData data = eigendecompose(op);
    const double ceiling = grid.lambda_max / 4.0;
    double sup_ratio = 0.0;
    std::vector<double> running(grid.size(), 0.0);
    std::size_t next_mode = 0;
    for (double l = 10.0; l <= ceiling; l += 0.25) {
        while (next_mode < data.size() && data.frequencies[next_mode] <= l) {
            for (std::size_t x = 0; x < grid.size(); ++x) {
                const double v = data.eigenvectors(static_cast<Eigen::Index>(x),
                                                   static_cast<Eigen::Index>(next_mode));
                running[x] += v * v;
            }
            ++next_mode;
        }
        const double sup = *std::max_element(running.begin(), running.end());
        sup_ratio = std::max(sup_ratio, sup / (l * l));
    }
    r.details.push_back(fmt("sup_x spectral_function / lambda^2 over [10, %.2f]: %.4f (want <= 1)",
                            ceiling, sup_ratio));
    if (!(sup_ratio <= 1.0)) r.pass = false;
    return r;
}

CriterionResult c11_littlewood_paley() {
    CriterionResult r{11, "dyadic partition, symbol support, certified symbol bounds",
                      true, 0, {}};
    double worst_pu = 0.0;
    for (int i = 0; i <= 600; ++i) {
        const double s = std::pow(10.0, -3.0 + 6.0 * i / 600.0);
        const auto vals = dyadic_partition(s, 14);
        double sum = 0.0;
        for (double v : vals) sum += v;
        worst_pu = std::max(worst_pu, std::abs(sum - 1.0));
    }
    r.details.push_back(fmt("partition-of-unity defect over 6 decades: %.3e (want <= 1e-12)", worst_pu));
    if (!(worst_pu <= 1e-12)) r.pass = false;

    const DyadicDecomposition decomp(0.1);
    const MollifierSpec mol{0.1};
    const double lam = 100.0;
    bool support_exact = true;
    for (double off : {0.4, 0.45, 2.1, 3.0, 6.0}) {
        for (int sign : {-1, +1}) {
            const double tau = lam;
            const double lj = tau + sign * off;  // outside (2^{l-1}, 2^{l+1}) for l = 0
            const auto s = lp_symbols(decomp, mol, lam, lj, tau, 0, sign);
            if (s.m_pm != 0.0 || s.r_ell != 0.0) support_exact = false;
        }
    }
    r.details.push_back(fmt("symbol support exactness off the shell: %s",
                            support_exact ? "exact zeros" : "VIOLATED"));
    if (!support_exact) r.pass = false;

    const auto coarse = certify_lp_bounds(decomp, mol, lam, 0, 0, -1, 4, 40);
    const auto fine = certify_lp_bounds(decomp, mol, lam, 0, 0, -1, 4, 80);
    const double drift_m = std::abs(fine.C_m - coarse.C_m) / std::max(fine.C_m, 1e-300);
    const double drift_r = std::abs(fine.C_R - coarse.C_R) / std::max(fine.C_R, 1e-300);
    r.details.push_back(fmt("certified C_m=%.4f C_R=%.4f; refinement drift %.2f%% / %.2f%% (want <= 10%%)",
                            fine.C_m, fine.C_R, 100 * drift_m, 100 * drift_r));
    if (!(std::isfinite(fine.C_m) && std::isfinite(fine.C_R))) r.pass = false;
    if (!(drift_m <= 0.10 && drift_r <= 0.10)) r.pass = false;
    return r;
}

CriterionResult c12_short_interval() {
    CriterionResult r{12, "short-interval counts vs eps*lambda + sqrt(lambda)", true, 0, {}};
    const ExactSpectrum sq = exact_rectangle_spectrum(1, 1, BoundaryCondition::dirichlet(), 205);
    for (double eps : {1.0, 0.5}) {
        double worst = 0.0;
        auto probe = [&](double lam) {
            const double c = static_cast<double>(short_interval_count(sq.frequencies, lam, eps));
            worst = std::max(worst, c / (eps * lam + std::sqrt(lam)));
        };
        for (double lam = 20.0; lam <= 200.0; lam += 0.05) probe(lam);
        for (double f : sq.frequencies)
            if (f >= 20.0 && f <= 200.0) probe(f - 1e-12);
        r.details.push_back(fmt("eps=%.1f: max count/(eps*lambda + sqrt(lambda)) = %.3f (want <= 3)",
                                eps, worst));
        if (!(worst <= 3.0)) r.pass = false;
    }
    return r;
}

}  // namespace

CriterionResult run_criterion(int id) {
    // per-criterion wall-clock budgets, seconds
    static constexpr double kBudget[kCriterionCount + 1] = {0,  1, 10, 10, 300, 10, 30,
                                                            1, 120, 30, 60, 60, 5};
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    switch (id) {
        case 1: r = c1_counting(); break;
        case 2: r = c2_one_term(weyl_exponent_fits()); break;
        case 3: r = c3_two_term(weyl_exponent_fits()); break;
        case 4: r = c4_schrodinger_weyl(); break;
        case 5: r = c5_duhamel_identity(); break;
        case 6: r = c6_trace_sums(); break;
        case 7: r = c7_heat_trace(); break;
        case 8: r = c8_gaussian_bound(); break;
        case 9: r = c9_riesz(); break;
        case 10: r = c10_mollifier(); break;
        case 11: r = c11_littlewood_paley(); break;
        case 12: r = c12_short_interval(); break;
        default: throw InvalidInput("criterion id must be 1..12");
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.seconds >= kBudget[id]) {
        r.pass = false;
        r.details.push_back(fmt("runtime %.2fs exceeded the %.0fs budget", r.seconds, kBudget[id]));
    }
    return r;
}

std::vector<CriterionResult> run_acceptance() {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id));
    return out;
}

}  // namespace weyl
