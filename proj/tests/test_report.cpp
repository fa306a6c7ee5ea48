#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <string>

#include "weyl/config.hpp"
#include "weyl/errors.hpp"
#include "weyl/report.hpp"

using namespace weyl;

TEST_CASE("g17 formatting round-trips doubles") {
    for (double v : {1.0, -0.1, 3.141592653589793, 1e-17, 5.3867992368559845, 0.0}) {
        const std::string s = format_g17(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}

TEST_CASE("csv rendering is deterministic with a header row") {
    CsvTable t;
    t.header = {"a", "b"};
    t.columns = {{1.0, 2.0}, {0.5, -0.25}};
    const std::string once = render_csv(t);
    CHECK(once == render_csv(t));
    CHECK(once.substr(0, 4) == "a,b\n");
    CHECK(once.find("1,0.5\n") != std::string::npos);
}

TEST_CASE("svg plots") {
    const Curve single{"pt", {1.0}, {2.0}};
    const std::string svg1 = render_svg({&single, 1}, "x", "y", "one point");
    CHECK(svg1.find("<circle") != std::string::npos);
    CHECK(svg1.find("</svg>") != std::string::npos);

    const Curve a{"first", {0, 1, 2}, {0, 1, 4}};
    const Curve b{"second", {0, 1, 2}, {1, 0, 2}};
    const Curve two[] = {a, b};
    const std::string svg2 = render_svg(two, "x", "y", "two curves");
    CHECK(svg2.find("first") != std::string::npos);
    CHECK(svg2.find("second") != std::string::npos);
    std::size_t polylines = 0;
    for (std::size_t p = svg2.find("<polyline"); p != std::string::npos;
         p = svg2.find("<polyline", p + 1))
        ++polylines;
    CHECK(polylines == 2);

    // byte-identical output for identical input
    CHECK(svg2 == render_svg(two, "x", "y", "two curves"));

    CHECK_THROWS_AS(render_svg({}, "x", "y", "empty"), InvalidInput);
}

TEST_CASE("config round-trip is idempotent") {
    ExperimentConfig cfg;
    cfg.bc = BoundaryCondition::robin(0.25);
    cfg.potential = parse_potential("inverse_power(x0=0.5,y0=0.5,alpha=1.0,strength=1.0)");
    cfg.h = 0.125;
    const std::string once = emit_config(cfg);
    const std::string twice = emit_config(parse_config(once));
    CHECK(once == twice);
}

TEST_CASE("config parsing") {
    const std::string text =
        "domain = rectangle(1,1)\n"
        "bc = dirichlet\n"
        "V = inverse_power(x0=0.5,y0=0.5,alpha=1.0,strength=1.0) + constant(0.0)\n"
        "h = 0.0625\n"
        "eps = 0.5\n"
        "# a comment line\n"
        "lambda_min = 10\n";
    const ExperimentConfig cfg = parse_config(text);
    CHECK(cfg.domain.area == doctest::Approx(1.0));
    CHECK(cfg.h == 0.0625);
    CHECK(cfg.eps == 0.5);
    CHECK(cfg.lambda_min == 10.0);
    CHECK(cfg.potential.terms.size() == 2);

    CHECK_THROWS_AS(parse_config("frobnicate = 1\n"), InvalidInput);
    CHECK_THROWS_AS(parse_config("just some text\n"), InvalidInput);
    CHECK_THROWS_AS(parse_config("h = abc\n"), InvalidInput);
}

TEST_CASE("boundary-condition and domain syntax") {
    CHECK(parse_bc("dirichlet").kind == BcKind::Dirichlet);
    CHECK(parse_bc("NEUMANN").kind == BcKind::Neumann);
    const BoundaryCondition robin = parse_bc("robin:0.5");
    CHECK(robin.kind == BcKind::Robin);
    CHECK(robin.sigma == 0.5);
    CHECK_THROWS_AS(parse_bc("periodic"), InvalidInput);
    CHECK_THROWS_AS(parse_bc("robin:-1"), InvalidInput);

    CHECK(parse_domain("rectangle(2, 0.5)").area == doctest::Approx(1.0));
    CHECK(parse_domain("disk(1)").perimeter == doctest::Approx(6.283185307179586));
    CHECK_THROWS_AS(parse_domain("triangle(1,2,3)"), InvalidInput);

    CHECK(format_bc(robin) == "robin:0.5");
    CHECK(parse_bc(format_bc(robin)).sigma == 0.5);
}
