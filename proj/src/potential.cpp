#include "weyl/potential.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>

#include "weyl/errors.hpp"
#include "weyl/quadrature.hpp"

namespace weyl {

PotentialTerm PotentialTerm::zero() { return {}; }

PotentialTerm PotentialTerm::constant(double c) {
    PotentialTerm t;
    t.kind = TermKind::Constant;
    t.value = c;
    return t;
}

PotentialTerm PotentialTerm::bounded(std::function<double(Point)> fn, double sup_bound) {
    if (!fn) throw InvalidInput("bounded term needs a function");
    if (!(sup_bound >= 0.0)) throw InvalidInput("bounded term needs a nonnegative sup bound");
    PotentialTerm t;
    t.kind = TermKind::Bounded;
    t.fn = std::move(fn);
    t.sup_bound = sup_bound;
    return t;
}

PotentialTerm PotentialTerm::inverse_power(Point center, double alpha, double strength) {
    if (!(alpha > 0.0) || !(alpha < 2.0))
        throw InvalidInput("inverse-power exponent must satisfy 0 < alpha < 2");
    PotentialTerm t;
    t.kind = TermKind::InversePower;
    t.center = center;
    t.alpha = alpha;
    t.strength = strength;
    return t;
}

bool PotentialSpec::is_zero() const {
    for (const auto& t : terms) {
        switch (t.kind) {
            case TermKind::Zero: break;
            case TermKind::Constant:
                if (t.value != 0.0) return false;
                break;
            default: return false;
        }
    }
    return true;
}

bool PotentialSpec::has_singular_terms() const {
    return std::any_of(terms.begin(), terms.end(), [](const PotentialTerm& t) {
        return t.kind == TermKind::InversePower && t.strength != 0.0;
    });
}

std::vector<Point> PotentialSpec::singular_centers() const {
    std::vector<Point> out;
    for (const auto& t : terms)
        if (t.kind == TermKind::InversePower && t.strength != 0.0) out.push_back(t.center);
    return out;
}

PotentialSpec operator+(PotentialSpec lhs, const PotentialTerm& term) {
    lhs.terms.push_back(term);
    return lhs;
}

double evaluate_potential(const PotentialSpec& spec, Point x) {
    double v = 0.0;
    for (const auto& t : spec.terms) {
        switch (t.kind) {
            case TermKind::Zero: break;
            case TermKind::Constant: v += t.value; break;
            case TermKind::Bounded: v += t.fn(x); break;
            case TermKind::InversePower: {
                const double r = distance(x, t.center);
                if (r == 0.0) throw SingularPoint("potential evaluated at a singular center");
                v += t.strength * std::pow(r, -t.alpha);
                break;
            }
        }
    }
    return v;
}

double kato_kernel(double r, int n) {
    if (!(r > 0.0)) throw InvalidInput("kato_kernel needs r > 0");
    if (n < 2) throw InvalidInput("kato_kernel needs n >= 2");
    if (n == 2) return std::log(2.0 + 1.0 / r);
    return std::pow(r, 2.0 - n);
}

namespace {

// Exit radius of the ray x + r*(cos th, sin th) from the domain.
double domain_exit_radius(const DomainSpec& dom, Point x, double c, double s) {
    if (dom.shape == Shape::Rectangle) {
        double r = std::numeric_limits<double>::infinity();
        if (c > 0) r = std::min(r, (dom.a - x.x) / c);
        if (c < 0) r = std::min(r, -x.x / c);
        if (s > 0) r = std::min(r, (dom.b - x.y) / s);
        if (s < 0) r = std::min(r, -x.y / s);
        return std::max(0.0, r);
    }
    // disk centred at origin
    const double b = x.x * c + x.y * s;
    const double q = x.x * x.x + x.y * x.y - dom.radius * dom.radius;
    const double disc = b * b - q;
    if (disc <= 0.0) return 0.0;
    return std::max(0.0, -b + std::sqrt(disc));
}

// |V| evaluated off singular centers; callers keep quadrature nodes away from
// the exact centers.
double abs_potential(const PotentialSpec& spec, Point y) {
    return std::abs(evaluate_potential(spec, y));
}

// int_0^{r0} strength * r^{1-alpha} * log(2 + 1/r) dr, the analytic innermost
// piece skipped by the geometric radial panels when x sits on a center.
double innermost_kato_piece(double strength, double alpha, double r0) {
    const double p = 2.0 - alpha;
    const double head = std::pow(r0, p) * (1.0 / (p * p) - std::log(r0) / p);
    const double next = 2.0 * std::pow(r0, p + 1.0) / (p + 1.0);  // from log(1+2r)
    return std::abs(strength) * (head + next);
}

// One Kato integral int_{d(y,x)<delta, y in M} |V(y)| W_2 dy by polar
// quadrature about x; other singular centers are carved out into their own
// polar patches.
double kato_integral_at(const PotentialSpec& spec, const DomainSpec& dom, Point x,
                        double delta, int theta_panels, int radial_octaves) {
    const auto centers = spec.singular_centers();

    // patches around centers distinct from x that intrude into the disk
    struct Patch { Point p; double r; };
    std::vector<Patch> patches;
    for (const Point& p : centers) {
        const double d = distance(p, x);
        if (d == 0.0 || d >= delta) continue;
        patches.push_back({p, 0.5 * std::min(d, delta - d)});
    }

    const GaussRule& rule = gauss_legendre(8);
    const double two_pi = 2.0 * std::numbers::pi;

    // angular panel edges: uniform plus the directions of the patch centers
    std::vector<double> edges;
    for (int i = 0; i <= theta_panels; ++i) edges.push_back(two_pi * i / theta_panels);
    for (const auto& pa : patches) {
        double th = std::atan2(pa.p.y - x.y, pa.p.x - x.x);
        if (th < 0) th += two_pi;
        edges.push_back(th);
    }
    std::sort(edges.begin(), edges.end());

    double total = 0.0;
    for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
        const double th0 = edges[e], th1 = edges[e + 1];
        if (th1 - th0 < 1e-14) continue;
        for (int qi = 0; qi < 8; ++qi) {
            const double th = 0.5 * (th0 + th1) + 0.5 * (th1 - th0) * rule.nodes[qi];
            const double wth = 0.5 * (th1 - th0) * rule.weights[qi];
            const double c = std::cos(th), s = std::sin(th);
            double rmax = std::min(delta, domain_exit_radius(dom, x, c, s));
            if (rmax <= 0.0) continue;

            // radial breakpoints: exclude patch chords, i.e. skip
            // [d - rp, d + rp] along rays that pass within rp of a patch center
            std::vector<std::pair<double, double>> holes;
            for (const auto& pa : patches) {
                const double px = pa.p.x - x.x, py = pa.p.y - x.y;
                const double along = px * c + py * s;
                const double perp = std::abs(-px * s + py * c);
                if (perp >= pa.r || along <= 0.0) continue;
                const double half = std::sqrt(pa.r * pa.r - perp * perp);
                holes.emplace_back(std::max(0.0, along - half), std::min(rmax, along + half));
            }
            std::sort(holes.begin(), holes.end());

            auto radial = [&](double lo, double hi) {
                if (hi - lo < 1e-300) return 0.0;
                auto f = [&](double r) {
                    const Point y{x.x + r * c, x.y + r * s};
                    return abs_potential(spec, y) * std::log(2.0 + 1.0 / r) * r;
                };
                if (lo == 0.0) return gl_geometric(f, 0.0, hi, radial_octaves, 8);
                return gl_composite(f, lo, hi, 4, 8);
            };

            double r_cursor = 0.0;
            double acc = 0.0;
            for (const auto& [h0, h1] : holes) {
                if (h0 > r_cursor) acc += radial(r_cursor, std::min(h0, rmax));
                r_cursor = std::max(r_cursor, h1);
                if (r_cursor >= rmax) break;
            }
            if (r_cursor < rmax) acc += radial(r_cursor, rmax);
            total += wth * acc;
        }
    }

    // analytic correction below the innermost geometric panel when x is a center
    for (const auto& t : spec.terms) {
        if (t.kind != TermKind::InversePower || t.strength == 0.0) continue;
        if (distance(t.center, x) != 0.0) continue;
        const double rmin = delta * std::pow(0.5, radial_octaves);
        total += innermost_kato_piece(t.strength, t.alpha, rmin) * 2.0 * std::numbers::pi;
    }

    // polar patches about the carved-out centers
    for (const auto& pa : patches) {
        double patch_total = 0.0;
        const int pt = 16;
        for (int i = 0; i < pt; ++i) {
            const double ph0 = two_pi * i / pt, ph1 = two_pi * (i + 1) / pt;
            for (int qi = 0; qi < 8; ++qi) {
                const double ph = 0.5 * (ph0 + ph1) + 0.5 * (ph1 - ph0) * rule.nodes[qi];
                const double wph = 0.5 * (ph1 - ph0) * rule.weights[qi];
                const double c = std::cos(ph), s = std::sin(ph);
                auto f = [&](double u) {
                    const Point y{pa.p.x + u * c, pa.p.y + u * s};
                    const double rx = distance(y, x);
                    if (rx >= delta || rx == 0.0) return 0.0;
                    if (domain_exit_radius(dom, pa.p, c, s) < u) return 0.0;
                    return abs_potential(spec, y) * std::log(2.0 + 1.0 / rx) * u;
                };
                patch_total += wph * gl_geometric(f, 0.0, pa.r, radial_octaves, 8);
            }
        }
        // sliver below the innermost panel: the patch's own center term
        for (const auto& t : spec.terms) {
            if (t.kind != TermKind::InversePower || t.strength == 0.0) continue;
            if (distance(t.center, pa.p) != 0.0) continue;
            const double rmin = pa.r * std::pow(0.5, radial_octaves);
            const double w_at = std::log(2.0 + 1.0 / distance(pa.p, x));
            patch_total += std::abs(t.strength) * w_at * two_pi *
                           std::pow(rmin, 2.0 - t.alpha) / (2.0 - t.alpha);
        }
        total += patch_total;
    }
    return total;
}

std::vector<Point> kato_candidates(const PotentialSpec& spec, const DomainSpec& dom,
                                   int resolution) {
    std::vector<Point> xs = spec.singular_centers();
    if (dom.shape == Shape::Rectangle) {
        for (int i = 1; i <= resolution; ++i)
            for (int j = 1; j <= resolution; ++j)
                xs.push_back({dom.a * i / (resolution + 1.0), dom.b * j / (resolution + 1.0)});
    } else {
        xs.push_back({0.0, 0.0});
        for (int i = 1; i <= resolution; ++i) {
            const double rr = dom.radius * i / (resolution + 1.0);
            for (int j = 0; j < resolution; ++j) {
                const double th = 2.0 * std::numbers::pi * j / resolution;
                xs.push_back({rr * std::cos(th), rr * std::sin(th)});
            }
        }
    }
    return xs;
}

}  // namespace

double kato_norm(const PotentialSpec& spec, const DomainSpec& domain, double delta,
                 int resolution) {
    if (!(delta > 0.0)) throw InvalidInput("kato_norm needs delta > 0");
    if (spec.is_zero()) return 0.0;
    const auto xs = kato_candidates(spec, domain, resolution);

    double best = 0.0, best_fine = 0.0;
    for (const Point& x : xs) {
        const double coarse = kato_integral_at(spec, domain, x, delta, 16, 25);
        if (coarse > best) {
            best = coarse;
            best_fine = kato_integral_at(spec, domain, x, delta, 32, 30);
        }
    }
    if (best > 0.0 && std::abs(best - best_fine) > 0.01 * std::max(best, best_fine))
        throw AccuracyError("kato_norm quadrature did not converge to 1% under refinement");
    return best_fine;
}

namespace {

Rect domain_bounding_rect(const DomainSpec& dom) {
    if (dom.shape == Shape::Rectangle) return {0.0, dom.a, 0.0, dom.b};
    return {-dom.radius, dom.radius, -dom.radius, dom.radius};
}

bool inside_domain(const DomainSpec& dom, Point y) {
    if (dom.shape == Shape::Rectangle)
        return y.x >= 0.0 && y.x <= dom.a && y.y >= 0.0 && y.y <= dom.b;
    return y.x * y.x + y.y * y.y <= dom.radius * dom.radius;
}

}  // namespace

double l1_excess(const PotentialSpec& spec, const DomainSpec& domain, double K) {
    const auto centers = spec.singular_centers();
    auto f = [&](Point y) {
        if (!inside_domain(domain, y)) return 0.0;
        for (const Point& p : centers)
            if (distance(p, y) == 0.0) return 0.0;  // measure-zero guard
        return std::max(0.0, std::abs(evaluate_potential(spec, y)) - K);
    };
    // Deep cells still containing a singular center: the singular term
    // dominates there, so integrate it exactly and add the smooth rest.
    SingularCellRule rule = [&](const Rect& cell) -> std::optional<double> {
        const PotentialTerm* sing = nullptr;
        for (const auto& t : spec.terms) {
            if (t.kind != TermKind::InversePower || t.strength == 0.0) continue;
            if (cell.contains(t.center)) {
                if (sing) return std::nullopt;  // two centers in one deep cell
                sing = &t;
            }
        }
        if (!sing) return std::nullopt;
        double rest = 0.0;
        for (const auto& t : spec.terms) {
            if (&t == sing) continue;
            switch (t.kind) {
                case TermKind::Zero: break;
                case TermKind::Constant: rest += t.value; break;
                case TermKind::Bounded: rest += t.fn(sing->center); break;
                case TermKind::InversePower:
                    rest += t.strength * std::pow(distance(sing->center, t.center), -t.alpha);
                    break;
            }
        }
        const double sign = sing->strength >= 0.0 ? 1.0 : -1.0;
        const double power = std::abs(sing->strength) *
                             integral_rpow_rectangle(cell.x0, cell.x1, cell.y0, cell.y1,
                                                     sing->center, sing->alpha);
        return power + (sign * rest - K) * cell.area();
    };
    const Rect box = domain_bounding_rect(domain);
    return integrate_rect2d(f, box, centers, 1e-7, rule);
}

SplitPotential split_potential(const PotentialSpec& spec, const DomainSpec& domain,
                               double eps) {
    if (!(eps > 0.0) || eps > 1.0) throw InvalidInput("split needs eps in (0, 1]");
    const double target = eps * eps;
    double K = 1.0;
    for (int step = 0; step <= 64; ++step, K *= 2.0) {
        const double l1 = l1_excess(spec, domain, K);
        // strictly below the target, with a guard so quadrature rounding of an
        // exactly-equal excess cannot slip through
        if (l1 < target * (1.0 - 1e-9)) {
            SplitPotential out;
            out.original = spec;
            out.clamp = K;
            out.epsilon = eps;
            out.l1_norm_v1 = l1;
            return out;
        }
    }
    throw SplitFailure("no clamp K <= 2^64 achieves the L1 bound; potential not L1?");
}

double SplitPotential::v0(Point x) const {
    const double v = evaluate_potential(original, x);
    return std::clamp(v, -clamp, clamp);
}

double SplitPotential::v1(Point x) const {
    const double v = evaluate_potential(original, x);
    return v - std::clamp(v, -clamp, clamp);
}

double cell_average(const PotentialSpec& spec, Point center, double h) {
    const Rect cell{center.x - 0.5 * h, center.x + 0.5 * h, center.y - 0.5 * h,
                    center.y + 0.5 * h};
    double sum = 0.0;
    for (const auto& t : spec.terms) {
        switch (t.kind) {
            case TermKind::Zero: break;
            case TermKind::Constant: sum += t.value * cell.area(); break;
            case TermKind::Bounded: {
                auto f = [&](Point y) { return t.fn(y); };
                sum += integrate_rect2d(f, cell, {}, 1e-12 * std::max(1.0, t.sup_bound), nullptr, 8);
                break;
            }
            case TermKind::InversePower:
                sum += t.strength * integral_rpow_rectangle(cell.x0, cell.x1, cell.y0,
                                                            cell.y1, t.center, t.alpha);
                break;
        }
    }
    return sum / (h * h);
}

// ---- config expression parsing ----

namespace {

std::string strip(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

double parse_number(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InvalidInput(std::string("bad number for ") + what + ": '" + s + "'");
    }
}

PotentialTerm parse_term(const std::string& term) {
    const auto open = term.find('(');
    std::string head = strip(open == std::string::npos ? term : term.substr(0, open));
    std::string args;
    if (open != std::string::npos) {
        const auto close = term.rfind(')');
        if (close == std::string::npos || close < open)
            throw InvalidInput("unbalanced parentheses in potential term: '" + term + "'");
        args = term.substr(open + 1, close - open - 1);
    }
    std::transform(head.begin(), head.end(), head.begin(),
                   [](unsigned char c) { return std::tolower(c); });

    if (head == "zero") return PotentialTerm::zero();
    if (head == "constant") return PotentialTerm::constant(parse_number(strip(args), "constant"));
    if (head == "inverse_power") {
        double x0 = 0.5, y0 = 0.5, alpha = 1.0, strength = 1.0;
        std::stringstream ss(args);
        std::string kv;
        while (std::getline(ss, kv, ',')) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw InvalidInput("inverse_power expects key=value arguments");
            const std::string key = strip(kv.substr(0, eq));
            const std::string val = strip(kv.substr(eq + 1));
            if (key == "x0") x0 = parse_number(val, "x0");
            else if (key == "y0") y0 = parse_number(val, "y0");
            else if (key == "alpha") alpha = parse_number(val, "alpha");
            else if (key == "strength") strength = parse_number(val, "strength");
            else throw InvalidInput("unknown inverse_power argument '" + key + "'");
        }
        return PotentialTerm::inverse_power({x0, y0}, alpha, strength);
    }
    throw InvalidInput("unknown potential term '" + head + "'");
}

}  // namespace

PotentialSpec parse_potential(std::string_view text) {
    PotentialSpec spec;
    std::string src(text);
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= src.size(); ++i) {
        if (i < src.size() && src[i] == '(') ++depth;
        if (i < src.size() && src[i] == ')') --depth;
        const bool split = i == src.size() || (src[i] == '+' && depth == 0);
        if (!split) continue;
        const std::string piece = strip(src.substr(start, i - start));
        if (!piece.empty()) spec.terms.push_back(parse_term(piece));
        start = i + 1;
    }
    if (spec.terms.empty()) spec.terms.push_back(PotentialTerm::zero());
    return spec;
}

std::string format_potential(const PotentialSpec& spec) {
    std::string out;
    auto num = [](double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    for (const auto& t : spec.terms) {
        if (!out.empty()) out += " + ";
        switch (t.kind) {
            case TermKind::Zero: out += "zero"; break;
            case TermKind::Constant: out += "constant(" + num(t.value) + ")"; break;
            case TermKind::Bounded: out += "bounded(<fn>)"; break;
            case TermKind::InversePower:
                out += "inverse_power(x0=" + num(t.center.x) + ",y0=" + num(t.center.y) +
                       ",alpha=" + num(t.alpha) + ",strength=" + num(t.strength) + ")";
                break;
        }
    }
    if (out.empty()) out = "zero";
    return out;
}

}  // namespace weyl
