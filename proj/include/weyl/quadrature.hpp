#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "weyl/geometry.hpp"

namespace weyl {

/// Gauss-Legendre rule on [-1,1], cached per point count.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

/// Single n-point Gauss-Legendre panel over [a,b].
double gl_panel(const std::function<double(double)>& f, double a, double b, int n = 16);

/// Equal-width composite Gauss-Legendre over [a,b].
double gl_composite(const std::function<double(double)>& f, double a, double b,
                    int panels, int n = 16);

/// Composite rule with geometric panels accumulating toward `a`; suited to
/// integrands with an integrable singularity at the left endpoint. Covers
/// [a + (b-a)*2^-octaves, b] only — the innermost sliver is skipped and must
/// be handled (or neglected) by the caller.
double gl_geometric(const std::function<double(double)>& f, double a, double b,
                    int octaves = 40, int n = 12);

/// Adaptive 1-D quadrature (bisection on GL panels), absolute tolerance.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth = 30);

/// Integral of |z - p|^{-alpha} over the axis-aligned rectangle
/// [x0,x1] x [y0,y1], exact up to the 1-D Gauss error (alpha < 2).
/// Works for p inside, on the boundary of, or outside the rectangle.
double integral_rpow_rectangle(double x0, double x1, double y0, double y1,
                               Point p, double alpha);

/// Axis-aligned rectangle for the 2-D adaptive integrator.
struct Rect {
    double x0, x1, y0, y1;
    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    double area() const { return width() * height(); }
    bool contains(Point p) const {
        return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
    }
};

/// Optional analytic fallback invoked for deep cells that still contain a
/// hotspot; returns the exact cell integral if the caller knows how.
using SingularCellRule = std::function<std::optional<double>(const Rect&)>;

/// Adaptive 2-D quadrature over a rectangle. `hotspots` are points where the
/// integrand may be singular; cells containing one are always refined, and
/// once small enough are delegated to `rule` (if any) or dropped (their
/// contribution is O(size^{2-alpha}) for the integrable singularities used
/// here).
double integrate_rect2d(const std::function<double(Point)>& f, Rect r,
                        std::span<const Point> hotspots, double abs_tol,
                        const SingularCellRule& rule = nullptr, int max_depth = 22);

}  // namespace weyl
