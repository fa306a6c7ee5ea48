#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "weyl/errors.hpp"
#include "weyl/geometry.hpp"

using namespace weyl;

TEST_CASE("domain constructors fill area and perimeter") {
    const DomainSpec sq = make_rectangle(1.0, 1.0);
    CHECK(sq.area == doctest::Approx(1.0));
    CHECK(sq.perimeter == doctest::Approx(4.0));

    const DomainSpec disk = make_disk(1.0);
    CHECK(disk.area == doctest::Approx(std::numbers::pi));
    CHECK(disk.perimeter == doctest::Approx(2.0 * std::numbers::pi));

    const DomainSpec rect = make_rectangle(2.0, 0.5);
    CHECK(rect.area == doctest::Approx(1.0));
    CHECK(rect.perimeter == doctest::Approx(5.0));

    CHECK_THROWS_AS(make_rectangle(-1.0, 1.0), InvalidInput);
    CHECK_THROWS_AS(make_rectangle(1.0, 0.0), InvalidInput);
    CHECK_THROWS_AS(make_disk(-2.0), InvalidInput);
}

TEST_CASE("robin coefficient must be nonnegative") {
    CHECK(BoundaryCondition::robin(0.0).sigma == 0.0);
    CHECK(BoundaryCondition::robin(2.5).sigma == 2.5);
    CHECK_THROWS_AS(BoundaryCondition::robin(-0.1), InvalidInput);
}

TEST_CASE("grid construction on the unit square") {
    const Grid g = build_grid(make_rectangle(1, 1), 0.25);
    CHECK(g.nx == 3);
    CHECK(g.ny == 3);
    CHECK(g.size() == 9);
    CHECK(g.quadrature_weight == doctest::Approx(0.0625));
    CHECK(g.lambda_max == doctest::Approx(2.0 * std::sqrt(2.0) / 0.25));
    for (const Point& p : g.nodes) {
        CHECK(p.x > 0.0);
        CHECK(p.x < 1.0);
        CHECK(p.y > 0.0);
        CHECK(p.y < 1.0);
    }

    const Grid tiny = build_grid(make_rectangle(1, 1), 0.5);
    REQUIRE(tiny.size() == 1);
    CHECK(tiny.nodes[0].x == doctest::Approx(0.5));
    CHECK(tiny.nodes[0].y == doctest::Approx(0.5));
}

TEST_CASE("grid rejects bad inputs") {
    CHECK_THROWS_AS(build_grid(make_disk(1.0), 0.25), UnsupportedDomain);
    CHECK_THROWS_AS(build_grid(make_rectangle(1, 1), 0.3), InvalidInput);
    CHECK_THROWS_AS(build_grid(make_rectangle(1, 1), -0.25), InvalidInput);
    CHECK_THROWS_AS(build_grid(make_rectangle(1, 1), 1.0), InvalidInput);  // no interior
}

TEST_CASE("node count is nx*ny across spacings") {
    for (double h : {1.0 / 3, 1.0 / 7, 1.0 / 12}) {
        const Grid g = build_grid(make_rectangle(1, 1), h);
        CHECK(g.size() == static_cast<std::size_t>(g.nx) * g.ny);
    }
    const Grid rect = build_grid(make_rectangle(2, 1), 0.125);
    CHECK(rect.nx == 15);
    CHECK(rect.ny == 7);
    CHECK(rect.size() == 105);
}

TEST_CASE("distance basics") {
    CHECK(distance({0, 0}, {3, 4}) == doctest::Approx(5.0));
    CHECK(distance({1, 1}, {1, 1}) == 0.0);
    CHECK(distance({0, 0}, {1, 0}) == doctest::Approx(1.0));
}

TEST_CASE("metric axioms on random triples") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    for (int i = 0; i < 10000; ++i) {
        const Point a{coord(rng), coord(rng)};
        const Point b{coord(rng), coord(rng)};
        const Point c{coord(rng), coord(rng)};
        const double ab = distance(a, b), ba = distance(b, a);
        CHECK(ab == ba);
        CHECK(ab >= 0.0);
        // triangle inequality residual
        CHECK(distance(a, c) + distance(c, b) - ab >= -1e-12);
    }
}
