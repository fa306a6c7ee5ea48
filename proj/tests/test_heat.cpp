#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "weyl/errors.hpp"
#include "weyl/heat.hpp"
#include "weyl/operators.hpp"
#include "weyl/spectral.hpp"

using namespace weyl;

namespace {

PotentialSpec coulomb() {
    PotentialSpec V;
    V.terms.push_back(PotentialTerm::inverse_power({0.5, 0.5}, 1.0, 1.0));
    return V;
}

SpectralData free_dirichlet(double h) {
    const Grid g = build_grid(make_rectangle(1, 1), h);
    return eigendecompose(assemble_laplacian(g, BoundaryCondition::dirichlet()));
}

// independent theta-function oracle for the unit square Dirichlet heat trace
double theta_trace(double t) {
    double s = 0.0;
    for (int m = 1; m < 400; ++m) {
        const double term = std::exp(-t * std::numbers::pi * std::numbers::pi * m * m);
        s += term;
        if (term < 1e-18) break;
    }
    return s * s;
}

}  // namespace

TEST_CASE("kernel symmetry and positivity on the diagonal") {
    const SpectralData data = free_dirichlet(1.0 / 9);
    for (double t : {0.05, 0.3, 2.0}) {
        CHECK(heat_kernel(data, t, 3, 17) == heat_kernel(data, t, 17, 3));
        CHECK(heat_kernel(data, t, 5, 5) > 0.0);
    }
    CHECK_THROWS_AS(heat_kernel(data, 0.0, 1, 2), InvalidInput);
    CHECK_THROWS_AS(heat_kernel(data, -1.0, 1, 2), InvalidInput);
}

TEST_CASE("semigroup property") {
    const Grid g = build_grid(make_rectangle(1, 1), 1.0 / 9);
    const SpectralData data = eigendecompose(assemble_laplacian(g, BoundaryCondition::dirichlet()));
    for (auto [t, s] : {std::pair{0.1, 0.1}, std::pair{0.05, 0.2}}) {
        const Eigen::MatrixXd kt = heat_kernel_matrix(data, t);
        const Eigen::MatrixXd ks = heat_kernel_matrix(data, s);
        const Eigen::MatrixXd kts = heat_kernel_matrix(data, t + s);
        const Eigen::MatrixXd composed = g.quadrature_weight * kt * ks;
        CHECK((composed - kts).cwiseAbs().maxCoeff() <= 1e-8);
    }
}

TEST_CASE("ground mode dominates at large time") {
    const SpectralData data = free_dirichlet(1.0 / 9);
    const double t = 5.0;
    const double tau1 = data.frequencies[0];
    const std::size_t x = 3, y = 11;
    const double lead = std::exp(-t * tau1 * tau1) * data.eigenvectors(x, 0) *
                        data.eigenvectors(y, 0);
    CHECK(heat_kernel(data, t, x, y) / lead == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("trace equals the weighted diagonal sum") {
    const Grid g = build_grid(make_rectangle(1, 1), 1.0 / 9);
    const SpectralData data = eigendecompose(assemble_laplacian(g, BoundaryCondition::dirichlet()));
    for (double t : {0.05, 0.4}) {
        double diag = 0.0;
        for (std::size_t x = 0; x < g.size(); ++x)
            diag += g.quadrature_weight * heat_kernel(data, t, x, x);
        CHECK(std::abs(diag - heat_trace(data.frequencies, t)) <= 1e-10);
    }
}

TEST_CASE("single frequency trace") {
    const std::vector<double> one{2.0};
    CHECK(heat_trace(one, 1.0) == doctest::Approx(std::exp(-4.0)));
}

TEST_CASE("rectangle heat trace against the theta oracle") {
    const auto bc = BoundaryCondition::dirichlet();
    for (double t : {0.02, 0.01, 0.005}) {
        CHECK(rectangle_heat_trace(1, 1, bc, t) ==
              doctest::Approx(theta_trace(t)).epsilon(1e-11));
    }
    const double tr = rectangle_heat_trace(1, 1, bc, 0.01);
    CHECK(std::abs(tr - 5.3868) <= 0.001);
    const double pred = 1.0 / (4.0 * std::numbers::pi * 0.01) -
                        4.0 / (8.0 * std::sqrt(std::numbers::pi * 0.01));
    CHECK(tr - pred == doctest::Approx(0.25).epsilon(0.04));  // the corner constant
}

TEST_CASE("leading asymptote identity 1 - 2 sqrt(pi t) + pi t") {
    // Poisson summation makes this exact up to super-exponentially small terms
    for (double t : {0.01, 0.005}) {
        const double lead = 4.0 * std::numbers::pi * t * rectangle_heat_trace(1, 1, BoundaryCondition::dirichlet(), t);
        const double exact = 1.0 - 2.0 * std::sqrt(std::numbers::pi * t) + std::numbers::pi * t;
        CHECK(lead == doctest::Approx(exact).epsilon(1e-9));
    }
}

TEST_CASE("gaussian bound certificate on the free operator") {
    const Grid g = build_grid(make_rectangle(1, 1), 1.0 / 16);
    const SpectralData data = eigendecompose(assemble_laplacian(g, BoundaryCondition::dirichlet()));
    std::vector<double> ts;
    for (int i = 0; i < 8; ++i) ts.push_back(0.01 * std::pow(100.0, i / 7.0));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < g.size(); i += 3) pairs.emplace_back(i, i);
    for (std::size_t i = 0; i < g.size(); i += 2) pairs.emplace_back(i, g.size() - 1 - i);

    const GaussianFit fit = fit_gaussian_bound(data, g, ts, pairs);
    CHECK(fit.C <= 5.0);
    CHECK(fit.c1 >= 0.125);
    CHECK(fit.violations == 0);
    CHECK(fit.t_min == doctest::Approx(0.01));
    CHECK(fit.t_max == doctest::Approx(1.0));
}

TEST_CASE("gaussian bound certificate exists for the singular potential") {
    const Grid g = build_grid(make_rectangle(1, 1), 1.0 / 16);
    AssembledOperator op = assemble_schrodinger(g, BoundaryCondition::dirichlet(), coulomb());
    normalize_shift(op);
    const SpectralData data = eigendecompose(op);
    std::vector<double> ts;
    for (int i = 0; i < 6; ++i) ts.push_back(0.02 * std::pow(50.0, i / 5.0));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < g.size(); i += 4) pairs.emplace_back(i, (7 * i + 3) % g.size());
    const GaussianFit fit = fit_gaussian_bound(data, g, ts, pairs);
    CHECK(fit.c1 > 0.0);
    CHECK(fit.violations == 0);
}

TEST_CASE("gaussian fit rejects a t grid outside (0,1]") {
    const Grid g = build_grid(make_rectangle(1, 1), 0.25);
    const SpectralData data = eigendecompose(assemble_laplacian(g, BoundaryCondition::dirichlet()));
    const std::vector<double> bad{0.5, 1.5};
    const std::vector<std::pair<std::size_t, std::size_t>> pairs{{0, 0}};
    CHECK_THROWS_AS(fit_gaussian_bound(data, g, bad, pairs), InvalidInput);
}

TEST_CASE("long-time decay check") {
    const Grid g = build_grid(make_rectangle(1, 1), 1.0 / 12);
    AssembledOperator op = assemble_laplacian(g, BoundaryCondition::neumann());
    // unshifted Neumann has a zero mode: refused
    const SpectralData raw = eigendecompose(op);
    std::vector<std::pair<std::size_t, std::size_t>> pairs{{0, 0}, {3, 40}, {10, 100}};
    std::vector<double> ts;
    for (double t = 2.0; t <= 20.0; t += 2.0) ts.push_back(t);
    CHECK_THROWS_AS(check_long_time(raw, pairs, ts), InvalidInput);

    normalize_shift(op);
    const SpectralData shifted = eigendecompose(op);
    const LongTimeReport rep = check_long_time(shifted, pairs, ts);
    CHECK(rep.nonincreasing_beyond_2);
    CHECK(rep.max_scaled.back() <= rep.max_scaled.front());
    // crude bound e^{-t}/h^2 scaled by e^{t/2}
    for (std::size_t i = 0; i < rep.t.size(); ++i)
        CHECK(rep.max_scaled[i] <= std::exp(-0.5 * rep.t[i]) / g.quadrature_weight * (1.0 + 1e-9));
}

TEST_CASE("scalar negative-power integrals") {
    CHECK(riesz_time_integral(2.0, 0) == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(riesz_time_integral(2.0, 1) == doctest::Approx(1.0 / 16.0).epsilon(1e-10));
    CHECK(riesz_time_integral(1.0, 2) == doctest::Approx(1.0).epsilon(1e-10));  // Gamma(3)/2! = 1
}

TEST_CASE("negative-power kernels: routes agree and ell=0 inverts the matrix") {
    const Grid g = build_grid(make_rectangle(1, 1), 1.0 / 9);
    AssembledOperator op = assemble_schrodinger(g, BoundaryCondition::dirichlet(), coulomb());
    normalize_shift(op);
    const SpectralData data = eigendecompose(op);

    for (int ell : {0, 1, 2}) {
        const RieszResult res = riesz_kernel(data, ell);
        CHECK(res.max_rel_diff <= 1e-8);
    }
    const RieszResult r0 = riesz_kernel(data, 0);
    const Eigen::MatrixXd direct =
        op.matrix.llt().solve(Eigen::MatrixXd::Identity(op.matrix.rows(), op.matrix.cols())) /
        g.quadrature_weight;
    const double rel =
        (r0.spectral - direct).cwiseAbs().maxCoeff() / direct.cwiseAbs().maxCoeff();
    CHECK(rel <= 1e-8);
}

TEST_CASE("riesz kernel requires the shifted spectrum") {
    const Grid g = build_grid(make_rectangle(1, 1), 0.2);
    const SpectralData raw = eigendecompose(assemble_laplacian(g, BoundaryCondition::neumann()));
    CHECK_THROWS_AS(riesz_kernel(raw, 0), InvalidInput);
}
