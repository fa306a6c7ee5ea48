#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "weyl/errors.hpp"
#include "weyl/potential.hpp"

using namespace weyl;

namespace {

PotentialSpec coulomb(Point c = {0.5, 0.5}, double alpha = 1.0, double s = 1.0) {
    PotentialSpec V;
    V.terms.push_back(PotentialTerm::inverse_power(c, alpha, s));
    return V;
}

// test-side adaptive Simpson, the independent 1-D oracle for radial integrals
double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                   double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

double simpson(const std::function<double(double)>& f, double a, double b,
               double tol = 1e-10) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    return simpson_rec(f, a, b, fa, fm, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb), tol, 40);
}

}  // namespace

TEST_CASE("pointwise evaluation") {
    PotentialSpec zero;
    zero.terms.push_back(PotentialTerm::zero());
    CHECK(evaluate_potential(zero, {0.3, 0.9}) == 0.0);
    CHECK(zero.is_zero());

    const PotentialSpec V = coulomb({0, 0});
    CHECK(evaluate_potential(V, {3, 4}) == doctest::Approx(0.2));
    CHECK_THROWS_AS(evaluate_potential(V, {0, 0}), SingularPoint);

    PotentialSpec mix = coulomb({0, 0});
    mix.terms.push_back(PotentialTerm::constant(2.0));
    CHECK(evaluate_potential(mix, {3, 4}) == doctest::Approx(2.2));
}

TEST_CASE("inverse power exponent range") {
    CHECK_NOTHROW(PotentialTerm::inverse_power({0, 0}, 1.9, 1.0));
    CHECK_THROWS_AS(PotentialTerm::inverse_power({0, 0}, 2.0, 1.0), InvalidInput);
    CHECK_THROWS_AS(PotentialTerm::inverse_power({0, 0}, 0.0, 1.0), InvalidInput);
}

TEST_CASE("kato kernel values and n=2 identity") {
    CHECK(kato_kernel(1.0, 2) == doctest::Approx(std::log(3.0)));
    CHECK(kato_kernel(1.0, 3) == doctest::Approx(1.0));
    CHECK(kato_kernel(0.5, 4) == doctest::Approx(4.0));
    CHECK_THROWS_AS(kato_kernel(0.0, 2), InvalidInput);
    CHECK_THROWS_AS(kato_kernel(-1.0, 2), InvalidInput);

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> rd(1e-12, 10.0);
    for (int i = 0; i < 1000; ++i) {
        const double r = rd(rng);
        CHECK(kato_kernel(r, 2) == std::log(2.0 + 1.0 / r));
    }
}

TEST_CASE("kato norm of a constant potential matches the radial oracle") {
    PotentialSpec one;
    one.terms.push_back(PotentialTerm::constant(1.0));
    const double delta = 0.1;
    const double oracle =
        2.0 * std::numbers::pi *
        simpson([](double r) { return std::log(2.0 + 1.0 / r) * r; }, 1e-9, delta);
    const double measured = kato_norm(one, make_rectangle(1, 1), delta);
    CHECK(measured == doctest::Approx(oracle).epsilon(0.02));
    CHECK(std::abs(measured - 0.0920) <= 0.002);  // radial value ~0.09195
}

TEST_CASE("kato norm of zero potential") {
    PotentialSpec zero;
    CHECK(kato_norm(zero, make_rectangle(1, 1), 0.2) == 0.0);
}

TEST_CASE("kato norm shrinks with delta (admissibility trend)") {
    const PotentialSpec V = coulomb();
    const DomainSpec dom = make_rectangle(1, 1);
    double prev = 1e300;
    double delta = 0.3;
    for (int i = 0; i < 10; ++i, delta *= 0.7) {
        const double v = kato_norm(V, dom, delta, 4);
        CHECK(v <= prev * (1.0 + 1e-9));  // nondecreasing in delta
        CHECK(v >= 0.0);
        prev = v;
    }
    CHECK(prev < 1.0);  // heading to zero
}

TEST_CASE("kato norm at the center matches the radial oracle for 1/r") {
    // sup attained at the singular center; there the integral is radial:
    // int_0^delta r^{-1} log(2+1/r) r dr * 2 pi
    const double delta = 0.2;
    const double oracle = 2.0 * std::numbers::pi *
                          simpson([](double r) { return std::log(2.0 + 1.0 / r); }, 1e-12, delta);
    const double measured = kato_norm(coulomb(), make_rectangle(1, 1), delta, 4);
    CHECK(measured == doctest::Approx(oracle).epsilon(0.02));
}

TEST_CASE("split of an already bounded potential") {
    PotentialSpec V;
    V.terms.push_back(PotentialTerm::bounded([](Point) { return 3.0; }, 3.0));
    const SplitPotential sp = split_potential(V, make_rectangle(1, 1), 1.0);
    CHECK(sp.clamp >= 3.0);
    CHECK(sp.l1_norm_v1 == doctest::Approx(0.0));
    CHECK(sp.v1({0.25, 0.75}) == 0.0);
    CHECK(sp.v0({0.25, 0.75}) == doctest::Approx(3.0));
}

TEST_CASE("split of the coulomb potential matches the pi/K oracle") {
    const DomainSpec dom = make_rectangle(1, 1);
    const SplitPotential sp = split_potential(coulomb(), dom, 0.5);
    // int over {1/r > K} of (1/r - K) = pi/K once the disk r < 1/K fits inside
    CHECK(sp.clamp == 16.0);
    CHECK(sp.l1_norm_v1 == doctest::Approx(std::numbers::pi / 16.0).epsilon(0.01));
    CHECK(sp.l1_norm_v1 < 0.25);
}

TEST_CASE("split of zero potential") {
    PotentialSpec zero;
    const SplitPotential sp = split_potential(zero, make_rectangle(1, 1), 0.7);
    CHECK(sp.l1_norm_v1 == 0.0);
    CHECK(sp.v0({0.5, 0.25}) == 0.0);
    CHECK(sp.v1({0.5, 0.25}) == 0.0);
}

TEST_CASE("split invariants across eps") {
    const DomainSpec dom = make_rectangle(1, 1);
    const PotentialSpec V = coulomb();
    for (double eps : {1.0, 0.5, 0.25}) {
        const SplitPotential sp = split_potential(V, dom, eps);
        CHECK(sp.l1_norm_v1 < eps * eps);
        // sup |V0| <= K exactly, by construction of the clamp
        for (double x : {0.49, 0.5, 0.51, 0.1})
            CHECK(std::abs(sp.v0({x, 0.48})) <= sp.clamp);
    }
}

TEST_CASE("cell average of smooth terms") {
    PotentialSpec V;
    V.terms.push_back(PotentialTerm::constant(5.0));
    CHECK(cell_average(V, {0.5, 0.5}, 0.125) == doctest::Approx(5.0));

    PotentialSpec lin;
    lin.terms.push_back(PotentialTerm::bounded([](Point p) { return p.x; }, 1.0));
    CHECK(cell_average(lin, {0.25, 0.5}, 0.125) == doctest::Approx(0.25));
}

TEST_CASE("cell average of 1/r over its own cell") {
    // (1/h^2) int over the square cell of 1/r = 4 ln(1+sqrt 2) / h
    const double h = 1.0 / 16;
    const double expected = 4.0 * std::log(1.0 + std::sqrt(2.0)) / h;
    CHECK(cell_average(coulomb(), {0.5, 0.5}, h) == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("potential expression grammar") {
    const std::string text =
        "inverse_power(x0=0.5,y0=0.5,alpha=1.0,strength=1.0) + constant(0.0)";
    const PotentialSpec V = parse_potential(text);
    REQUIRE(V.terms.size() == 2);
    CHECK(V.terms[0].kind == TermKind::InversePower);
    CHECK(V.terms[0].alpha == 1.0);
    CHECK(V.terms[1].kind == TermKind::Constant);

    // canonical emit is a fixed point of parse/emit
    const std::string canon = format_potential(V);
    CHECK(format_potential(parse_potential(canon)) == canon);

    CHECK(parse_potential("zero").terms.size() == 1);
    CHECK_THROWS_AS(parse_potential("frob(1)"), InvalidInput);
    CHECK_THROWS_AS(parse_potential("inverse_power(alpha)"), InvalidInput);
    CHECK_THROWS_AS(parse_potential("constant(abc)"), InvalidInput);
}
