#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "weyl/geometry.hpp"

namespace weyl {

enum class TermKind { Zero, Constant, Bounded, InversePower };

struct PotentialTerm {
    TermKind kind = TermKind::Zero;
    double value = 0.0;                    // Constant
    std::function<double(Point)> fn;       // Bounded
    double sup_bound = 0.0;                // Bounded: certified sup-norm
    Point center{};                        // InversePower singular center
    double alpha = 1.0;                    // InversePower exponent, 0 < alpha < 2
    double strength = 1.0;                 // InversePower strength

    static PotentialTerm zero();
    static PotentialTerm constant(double c);
    static PotentialTerm bounded(std::function<double(Point)> fn, double sup_bound);
    static PotentialTerm inverse_power(Point center, double alpha, double strength);
};

/// Finite sum of admissible terms. Inverse-power exponents are restricted to
/// alpha < 2, which keeps every spec integrable against the n=2 Kato weight.
struct PotentialSpec {
    std::vector<PotentialTerm> terms;

    bool is_zero() const;
    bool has_singular_terms() const;
    std::vector<Point> singular_centers() const;
};

PotentialSpec operator+(PotentialSpec lhs, const PotentialTerm& term);

/// Pointwise evaluation; refuses singular centers (use cell_average there).
double evaluate_potential(const PotentialSpec& spec, Point x);

/// Kato weight W_n: r^{2-n} for n >= 3, log(2 + 1/r) for n = 2.
double kato_kernel(double r, int n);

/// sup_x of int_{d(y,x)<delta, y in M} |V(y)| W_2(d(x,y)) dy, maximized over a
/// candidate grid (singular centers always included). `resolution` sets the
/// candidate grid and the base quadrature density; the value is recomputed at
/// twice the quadrature density and the two must agree to 1% relative.
double kato_norm(const PotentialSpec& spec, const DomainSpec& domain, double delta,
                 int resolution = 8);

/// Bounded/L1-small decomposition V = V0 + V1 with V0 clamped to [-K, K].
struct SplitPotential {
    PotentialSpec original;
    double clamp = 0.0;       // K; sup |V0| <= K exactly
    double epsilon = 0.0;
    double l1_norm_v1 = 0.0;  // measured int |V1|, < epsilon^2

    double v0(Point x) const;
    double v1(Point x) const;
};

/// Picks the smallest power-of-two clamp K with int |V - clamp(V)| < eps^2.
SplitPotential split_potential(const PotentialSpec& spec, const DomainSpec& domain,
                               double eps);

/// Mean of V over the h-cell centred at `center`; singular terms are
/// integrated with the exact corner decomposition rather than sampled.
double cell_average(const PotentialSpec& spec, Point center, double h);

/// Measured int_M max(0, |V| - K) (exposed for tests of the split search).
double l1_excess(const PotentialSpec& spec, const DomainSpec& domain, double K);

// Config-syntax potential expressions, e.g.
//   inverse_power(x0=0.5,y0=0.5,alpha=1.0,strength=1.0) + constant(0.0)
PotentialSpec parse_potential(std::string_view text);
std::string format_potential(const PotentialSpec& spec);

}  // namespace weyl
