#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "weyl/errors.hpp"
#include "weyl/spectral.hpp"
#include "weyl/weyl_law.hpp"

using namespace weyl;

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
    return v;
}

}  // namespace

TEST_CASE("unit ball volumes") {
    CHECK(unit_ball_volume(1) == doctest::Approx(2.0));
    CHECK(unit_ball_volume(2) == doctest::Approx(std::numbers::pi));
    CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * std::numbers::pi / 3.0));
}

TEST_CASE("counting coefficients for the standard domains") {
    const auto sq_d = weyl_coefficients(make_rectangle(1, 1), BoundaryCondition::dirichlet());
    CHECK(sq_d.c0 == doctest::Approx(1.0 / (4.0 * std::numbers::pi)));
    CHECK(sq_d.c1 == doctest::Approx(-1.0 / std::numbers::pi));

    const auto disk_d = weyl_coefficients(make_disk(1.0), BoundaryCondition::dirichlet());
    CHECK(disk_d.c0 == doctest::Approx(0.25));
    CHECK(disk_d.c1 == doctest::Approx(-0.5));

    const auto sq_n = weyl_coefficients(make_rectangle(1, 1), BoundaryCondition::neumann());
    CHECK(sq_n.c1 == doctest::Approx(+1.0 / std::numbers::pi));
    CHECK_FALSE(sq_n.robin_caveat);

    const auto sq_r = weyl_coefficients(make_rectangle(1, 1), BoundaryCondition::robin(0.4));
    CHECK(sq_r.c1 == doctest::Approx(+1.0 / std::numbers::pi));
    CHECK(sq_r.robin_caveat);
}

TEST_CASE("remainders at lambda = 20 on the exact unit square") {
    const auto sq = exact_rectangle_spectrum(1, 1, BoundaryCondition::dirichlet(), 25.0);
    const auto coeffs = weyl_coefficients(make_rectangle(1, 1), BoundaryCondition::dirichlet());
    const std::vector<double> grid{20.0};
    const auto curve = remainder_curve(sq.frequencies, coeffs, grid);
    const double r1 = 26.0 - 400.0 / (4.0 * std::numbers::pi);
    CHECK(curve.r1[0] == doctest::Approx(r1));             // ~ -5.831
    CHECK(curve.r2[0] == doctest::Approx(r1 + 20.0 / std::numbers::pi));  // ~ 0.535
}

TEST_CASE("empty frequency list gives R1 = -c0 lambda^2") {
    const auto coeffs = weyl_coefficients(make_rectangle(1, 1), BoundaryCondition::dirichlet());
    const std::vector<double> empty;
    const std::vector<double> grid{7.0, 11.0};
    const auto curve = remainder_curve(empty, coeffs, grid);
    CHECK(curve.r1[0] == doctest::Approx(-coeffs.c0 * 49.0));
    CHECK(curve.r1[1] == doctest::Approx(-coeffs.c0 * 121.0));
}

TEST_CASE("R2 - R1 + c1 lambda vanishes identically") {
    const auto sq = exact_rectangle_spectrum(1, 1, BoundaryCondition::dirichlet(), 80.0);
    const auto coeffs = weyl_coefficients(make_rectangle(1, 1), BoundaryCondition::dirichlet());
    const auto grid = linspace(5.0, 75.0, 301);
    const auto curve = remainder_curve(sq.frequencies, coeffs, grid);
    for (std::size_t i = 0; i < curve.lambda.size(); ++i)
        CHECK(std::abs(curve.r2[i] - curve.r1[i] + coeffs.c1 * curve.lambda[i]) <= 1e-12);
}

TEST_CASE("validity ceiling is enforced") {
    const auto coeffs = weyl_coefficients(make_rectangle(1, 1), BoundaryCondition::dirichlet());
    const std::vector<double> freqs{1.0, 2.0};
    const std::vector<double> grid{30.0};
    CHECK_THROWS_AS(remainder_curve(freqs, coeffs, grid, 25.0), RangeError);
}

TEST_CASE("exponent fit recovers a synthetic power law") {
    const auto grid = linspace(20.0, 400.0, 2000);
    std::vector<double> remainder(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) remainder[i] = grid[i];
    const auto fit = fit_remainder_exponent(grid, remainder, 20.0, 400.0);
    CHECK(std::abs(fit.exponent - 1.0) <= 0.01);

    for (std::size_t i = 0; i < grid.size(); ++i) remainder[i] = std::pow(grid[i], 0.5);
    CHECK(std::abs(fit_remainder_exponent(grid, remainder, 20, 400).exponent - 0.5) <= 0.01);

    CHECK_THROWS_AS(fit_remainder_exponent(grid, remainder, 100.0, 150.0), InvalidInput);
}

TEST_CASE("square lattice remainders: R1 order lambda, R2 genuinely below") {
    const auto sq = exact_rectangle_spectrum(1, 1, BoundaryCondition::dirichlet(), 405.0);
    const auto coeffs = weyl_coefficients(make_rectangle(1, 1), BoundaryCondition::dirichlet());
    const auto grid = linspace(50.0, 400.0, 1401);
    const auto curve = remainder_curve(sq.frequencies, coeffs, grid);
    const auto f1 = fit_remainder_exponent(curve.lambda, curve.r1, 50, 400);
    const auto f2 = fit_remainder_exponent(curve.lambda, curve.r2, 50, 400);
    CHECK(f1.exponent >= 0.9);
    CHECK(f1.exponent <= 1.1);
    CHECK(f2.exponent < 0.9);
}

TEST_CASE("disk two-term remainder trend") {
    const auto dk = exact_disk_spectrum(1.0, BoundaryCondition::dirichlet(), 121.0);
    const auto coeffs = weyl_coefficients(make_disk(1.0), BoundaryCondition::dirichlet());
    const auto grid = linspace(20.0, 120.0, 1001);
    const auto curve = remainder_curve(dk.frequencies, coeffs, grid);

    double sup_ratio = 0.0;
    for (std::size_t i = 0; i < curve.lambda.size(); ++i)
        sup_ratio = std::max(sup_ratio, std::abs(curve.r2[i]) / std::pow(curve.lambda[i], 0.9));
    CHECK(std::isfinite(sup_ratio));
    CHECK(sup_ratio < 10.0);

    // |R2|/lambda block averages decrease from the first to the last octave
    auto block_avg = [&](double lo, double hi) {
        double sum = 0.0;
        int n = 0;
        for (std::size_t i = 0; i < curve.lambda.size(); ++i)
            if (curve.lambda[i] >= lo && curve.lambda[i] < hi) {
                sum += std::abs(curve.r2[i]) / curve.lambda[i];
                ++n;
            }
        return sum / n;
    };
    CHECK(block_avg(60.0, 120.0) < block_avg(20.0, 40.0));
}

TEST_CASE("Neumann dominates Dirichlet counting on the same rectangle") {
    const auto d = exact_rectangle_spectrum(1, 1, BoundaryCondition::dirichlet(), 82.0);
    const auto n = exact_rectangle_spectrum(1, 1, BoundaryCondition::neumann(), 82.0);
    for (double lam = 1.0; lam <= 80.0; lam += 0.5)
        CHECK(counting_function(n.frequencies, lam) >= counting_function(d.frequencies, lam));
}

TEST_CASE("short interval counts") {
    const auto sq = exact_rectangle_spectrum(1, 1, BoundaryCondition::dirichlet(), 210.0);
    const double ground = std::numbers::pi * std::sqrt(2.0);
    CHECK(short_interval_count(sq.frequencies, ground - 0.01, 0.02) == 1);

    const std::vector<double> ties{2.0, 3.0, 3.0, 4.0};
    CHECK(short_interval_count(ties, 3.0, 0.0) == 2);  // [lambda, lambda] = multiplicity

    double worst = 0.0;
    for (double lam = 20.0; lam <= 200.0; lam += 0.1) {
        const double c = static_cast<double>(short_interval_count(sq.frequencies, lam, 1.0));
        worst = std::max(worst, c / (lam + std::sqrt(lam)));
    }
    CHECK(worst <= 3.0);
}
