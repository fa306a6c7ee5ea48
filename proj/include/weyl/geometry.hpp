#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace weyl {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Euclidean distance; realizes the geodesic distance on flat planar domains.
inline double distance(Point a, Point b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

enum class Shape { Rectangle, Disk };

struct DomainSpec {
    Shape shape = Shape::Rectangle;
    double a = 1.0;      // rectangle side lengths
    double b = 1.0;
    double radius = 1.0; // disk
    int dim = 2;         // formulas keep n generic; numerics fix n = 2
    double area = 1.0;
    double perimeter = 4.0;
};

DomainSpec make_rectangle(double a, double b);
DomainSpec make_disk(double radius);

enum class BcKind { Dirichlet, Neumann, Robin };

struct BoundaryCondition {
    BcKind kind = BcKind::Dirichlet;
    double sigma = 0.0;  // Robin coefficient, >= 0

    static BoundaryCondition dirichlet() { return {BcKind::Dirichlet, 0.0}; }
    static BoundaryCondition neumann() { return {BcKind::Neumann, 0.0}; }
    static BoundaryCondition robin(double sigma);
};

/// Uniform interior lattice on a rectangle. Nodes at (i*h, j*h),
/// 1 <= i <= nx, 1 <= j <= ny; quadrature weight h^2 per node.
struct Grid {
    DomainSpec domain;
    double h = 0.0;
    int nx = 0;
    int ny = 0;
    std::vector<Point> nodes;
    double quadrature_weight = 0.0;

    // Largest frequency representable by the 5-point stencil; counting claims
    // on spectra computed from this grid are restricted to lambda_max/4.
    double lambda_max = 0.0;

    std::size_t size() const { return nodes.size(); }
    std::size_t index(int i, int j) const {  // i, j are 1-based lattice indices
        return static_cast<std::size_t>(i - 1) * ny + (j - 1);
    }
    Point node(std::size_t k) const { return nodes[k]; }
};

Grid build_grid(const DomainSpec& domain, double h);

}  // namespace weyl
