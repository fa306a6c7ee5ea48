#include "weyl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "weyl/errors.hpp"

namespace weyl {

namespace {

GaussRule compute_rule(int n) {
    // Newton iteration on P_n, nodes seeded by the Chebyshev approximation.
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        // recompute p0 for the converged x to get the weight
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

std::map<int, GaussRule> g_rules;
std::mutex g_rules_mutex;

}  // namespace

const GaussRule& gauss_legendre(int n) {
    std::lock_guard<std::mutex> lock(g_rules_mutex);
    auto it = g_rules.find(n);
    if (it == g_rules.end()) it = g_rules.emplace(n, compute_rule(n)).first;
    return it->second;
}

double gl_panel(const std::function<double(double)>& f, double a, double b, int n) {
    const GaussRule& rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

double gl_composite(const std::function<double(double)>& f, double a, double b,
                    int panels, int n) {
    double sum = 0.0;
    const double w = (b - a) / panels;
    for (int i = 0; i < panels; ++i) sum += gl_panel(f, a + i * w, a + (i + 1) * w, n);
    return sum;
}

double gl_geometric(const std::function<double(double)>& f, double a, double b,
                    int octaves, int n) {
    const double len = b - a;
    double sum = 0.0;
    double hi = 1.0;
    for (int j = 0; j < octaves; ++j) {
        const double lo = hi * 0.5;
        sum += gl_panel(f, a + lo * len, a + hi * len, n);
        hi = lo;
    }
    return sum;
}

namespace {

double adaptive_rec(const std::function<double(double)>& f, double a, double b,
                    double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double left = gl_panel(f, a, m, 10);
    const double right = gl_panel(f, m, b, 10);
    if (depth <= 0 || std::abs(left + right - whole) <= tol) return left + right;
    return adaptive_rec(f, a, m, left, tol * 0.5, depth - 1) +
           adaptive_rec(f, m, b, right, tol * 0.5, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_depth) {
    return adaptive_rec(f, a, b, gl_panel(f, a, b, 10), abs_tol, max_depth);
}

namespace {

// Corner integral F(X,Y) = int_{[0,X]x[0,Y]} r^{-alpha}, X,Y >= 0, alpha < 2.
double rpow_corner(double X, double Y, double alpha) {
    if (X <= 0.0 || Y <= 0.0) return 0.0;
    const double p = 2.0 - alpha;
    const double thc = std::atan2(Y, X);
    auto seg1 = [&](double th) { return std::pow(X / std::cos(th), p); };
    auto seg2 = [&](double th) { return std::pow(Y / std::sin(th), p); };
    const double i1 = gl_panel(seg1, 0.0, thc, 32);
    const double i2 = gl_panel(seg2, thc, 0.5 * std::numbers::pi, 32);
    return (i1 + i2) / p;
}

}  // namespace

double integral_rpow_rectangle(double x0, double x1, double y0, double y1,
                               Point p, double alpha) {
    if (alpha >= 2.0) throw InvalidInput("r^-alpha is not integrable in 2-D for alpha >= 2");
    auto corner = [&](double X, double Y) {
        const double s = (X < 0 ? -1.0 : 1.0) * (Y < 0 ? -1.0 : 1.0);
        return s * rpow_corner(std::abs(X), std::abs(Y), alpha);
    };
    return corner(x1 - p.x, y1 - p.y) - corner(x0 - p.x, y1 - p.y) -
           corner(x1 - p.x, y0 - p.y) + corner(x0 - p.x, y0 - p.y);
}

namespace {

double gl2d(const std::function<double(Point)>& f, const Rect& r, int n) {
    const GaussRule& rule = gauss_legendre(n);
    const double mx = 0.5 * (r.x0 + r.x1), hx = 0.5 * (r.x1 - r.x0);
    const double my = 0.5 * (r.y0 + r.y1), hy = 0.5 * (r.y1 - r.y0);
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            sum += rule.weights[i] * rule.weights[j] *
                   f({mx + hx * rule.nodes[i], my + hy * rule.nodes[j]});
    return hx * hy * sum;
}

bool near_hotspot(const Rect& r, std::span<const Point> hotspots) {
    const double margin = std::max(r.width(), r.height());
    for (const Point& p : hotspots) {
        if (p.x >= r.x0 - margin && p.x <= r.x1 + margin && p.y >= r.y0 - margin &&
            p.y <= r.y1 + margin)
            return true;
    }
    return false;
}

double rect2d_rec(const std::function<double(Point)>& f, const Rect& r,
                  std::span<const Point> hotspots, double tol,
                  const SingularCellRule& rule, int depth) {
    const bool hot = near_hotspot(r, hotspots);
    const double coarse = gl2d(f, r, 4);
    const double mx = 0.5 * (r.x0 + r.x1), my = 0.5 * (r.y0 + r.y1);
    const Rect kids[4] = {{r.x0, mx, r.y0, my},
                          {mx, r.x1, r.y0, my},
                          {r.x0, mx, my, r.y1},
                          {mx, r.x1, my, r.y1}};
    double fine = 0.0;
    for (const Rect& k : kids) fine += gl2d(f, k, 4);

    if (!hot && (std::abs(fine - coarse) <= tol || depth <= 0)) return fine;
    if (hot && depth <= 0) {
        if (rule) {
            if (auto v = rule(r)) return *v;
        }
        return fine;  // integrable singularity: residual cell is O(size^{2-alpha})
    }
    double sum = 0.0;
    for (const Rect& k : kids) sum += rect2d_rec(f, k, hotspots, tol * 0.25, rule, depth - 1);
    return sum;
}

}  // namespace

double integrate_rect2d(const std::function<double(Point)>& f, Rect r,
                        std::span<const Point> hotspots, double abs_tol,
                        const SingularCellRule& rule, int max_depth) {
    return rect2d_rec(f, r, hotspots, abs_tol, rule, max_depth);
}

}  // namespace weyl
