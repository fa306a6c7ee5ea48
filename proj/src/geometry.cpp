#include "weyl/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "weyl/errors.hpp"

namespace weyl {

DomainSpec make_rectangle(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw InvalidInput("rectangle sides must be positive, got a=" + std::to_string(a) +
                           " b=" + std::to_string(b));
    DomainSpec d;
    d.shape = Shape::Rectangle;
    d.a = a;
    d.b = b;
    d.area = a * b;
    d.perimeter = 2.0 * (a + b);
    return d;
}

DomainSpec make_disk(double radius) {
    if (!(radius > 0.0))
        throw InvalidInput("disk radius must be positive, got R=" + std::to_string(radius));
    DomainSpec d;
    d.shape = Shape::Disk;
    d.radius = radius;
    d.area = std::numbers::pi * radius * radius;
    d.perimeter = 2.0 * std::numbers::pi * radius;
    return d;
}

BoundaryCondition BoundaryCondition::robin(double sigma) {
    if (sigma < 0.0)
        throw InvalidInput("Robin coefficient must be nonnegative, got sigma=" +
                           std::to_string(sigma));
    return {BcKind::Robin, sigma};
}

Grid build_grid(const DomainSpec& domain, double h) {
    if (domain.shape != Shape::Rectangle)
        throw UnsupportedDomain("grids are only built on rectangles");
    if (!(h > 0.0)) throw InvalidInput("grid spacing must be positive");

    auto divides = [h](double len) {
        const double steps = len / h;
        return std::abs(steps - std::round(steps)) <= 1e-9 * steps;
    };
    if (!divides(domain.a) || !divides(domain.b))
        throw InvalidInput("h must divide both side lengths (to 1e-9 relative)");

    Grid g;
    g.domain = domain;
    g.h = h;
    g.nx = static_cast<int>(std::round(domain.a / h)) - 1;
    g.ny = static_cast<int>(std::round(domain.b / h)) - 1;
    if (g.nx < 1 || g.ny < 1)
        throw InvalidInput("grid has no interior nodes at this spacing");
    g.nodes.reserve(static_cast<std::size_t>(g.nx) * g.ny);
    for (int i = 1; i <= g.nx; ++i)
        for (int j = 1; j <= g.ny; ++j) g.nodes.push_back({i * h, j * h});
    g.quadrature_weight = h * h;
    g.lambda_max = 2.0 * std::sqrt(2.0) / h;
    return g;
}

}  // namespace weyl
