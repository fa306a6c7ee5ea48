#include "weyl/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "weyl/errors.hpp"

namespace weyl {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot open '" + path.string() + "' for writing");
    out << content;
    if (!out) throw InvalidInput("short write to '" + path.string() + "'");
}

std::string render_csv(const CsvTable& table) {
    std::ostringstream out;
    for (std::size_t c = 0; c < table.header.size(); ++c)
        out << (c ? "," : "") << table.header[c];
    out << '\n';
    const std::size_t rows = table.columns.empty() ? 0 : table.columns.front().size();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < table.columns.size(); ++c)
            out << (c ? "," : "") << format_g17(table.columns[c][r]);
        out << '\n';
    }
    return out.str();
}

namespace {

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// round tick spacing to 1/2/5 * 10^k
double nice_step(double span, int target_ticks) {
    const double raw = span / std::max(1, target_ticks);
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double frac = raw / mag;
    double nice = 10.0;
    if (frac <= 1.0) nice = 1.0;
    else if (frac <= 2.0) nice = 2.0;
    else if (frac <= 5.0) nice = 5.0;
    return nice * mag;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

std::string render_svg(std::span<const Curve> curves, const std::string& xlabel,
                       const std::string& ylabel, const std::string& title) {
    bool any = false;
    for (const auto& c : curves) any = any || !c.x.empty();
    if (!any) throw InvalidInput("nothing to plot");

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& c : curves) {
        for (double v : c.x) { xmin = std::min(xmin, v); xmax = std::max(xmax, v); }
        for (double v : c.y) { ymin = std::min(ymin, v); ymax = std::max(ymax, v); }
    }
    if (xmax == xmin) { xmax += 1.0; xmin -= 1.0; }
    if (ymax == ymin) { ymax += 1.0; ymin -= 1.0; }

    const double W = 800, H = 560, L = 80, R = 24, T = 40, B = 60;
    auto X = [&](double v) { return L + (v - xmin) / (xmax - xmin) * (W - L - R); };
    auto Y = [&](double v) { return H - B - (v - ymin) / (ymax - ymin) * (H - T - B); };
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b"};

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    s << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    if (!title.empty())
        s << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" "
             "font-family=\"monospace\" font-size=\"15\">" << title << "</text>\n";

    // axes
    s << "<line x1=\"" << px(L) << "\" y1=\"" << px(H - B) << "\" x2=\"" << px(W - R)
      << "\" y2=\"" << px(H - B) << "\" stroke=\"black\"/>\n";
    s << "<line x1=\"" << px(L) << "\" y1=\"" << px(T) << "\" x2=\"" << px(L) << "\" y2=\""
      << px(H - B) << "\" stroke=\"black\"/>\n";

    const double xs = nice_step(xmax - xmin, 8), ys = nice_step(ymax - ymin, 8);
    for (double v = std::ceil(xmin / xs) * xs; v <= xmax + 1e-12 * xs; v += xs) {
        s << "<line x1=\"" << px(X(v)) << "\" y1=\"" << px(H - B) << "\" x2=\"" << px(X(v))
          << "\" y2=\"" << px(H - B + 5) << "\" stroke=\"black\"/>\n";
        s << "<text x=\"" << px(X(v)) << "\" y=\"" << px(H - B + 20)
          << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"11\">"
          << tick_label(v) << "</text>\n";
    }
    for (double v = std::ceil(ymin / ys) * ys; v <= ymax + 1e-12 * ys; v += ys) {
        s << "<line x1=\"" << px(L - 5) << "\" y1=\"" << px(Y(v)) << "\" x2=\"" << px(L)
          << "\" y2=\"" << px(Y(v)) << "\" stroke=\"black\"/>\n";
        s << "<text x=\"" << px(L - 8) << "\" y=\"" << px(Y(v) + 4)
          << "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"11\">"
          << tick_label(v) << "</text>\n";
    }
    s << "<text x=\"" << px((L + W - R) / 2) << "\" y=\"" << px(H - 16)
      << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"13\">" << xlabel
      << "</text>\n";
    s << "<text x=\"18\" y=\"" << px((T + H - B) / 2)
      << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"13\" "
         "transform=\"rotate(-90 18 " << px((T + H - B) / 2) << ")\">" << ylabel
      << "</text>\n";

    for (std::size_t ci = 0; ci < curves.size(); ++ci) {
        const auto& c = curves[ci];
        const char* color = colors[ci % 6];
        if (c.x.size() == 1) {
            s << "<circle cx=\"" << px(X(c.x[0])) << "\" cy=\"" << px(Y(c.y[0]))
              << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        } else if (!c.x.empty()) {
            s << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
            for (std::size_t i = 0; i < c.x.size(); ++i)
                s << (i ? " " : "") << px(X(c.x[i])) << ',' << px(Y(c.y[i]));
            s << "\"/>\n";
        }
        s << "<line x1=\"" << px(W - R - 150) << "\" y1=\"" << px(T + 14 + 16.0 * ci)
          << "\" x2=\"" << px(W - R - 126) << "\" y2=\"" << px(T + 14 + 16.0 * ci)
          << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        s << "<text x=\"" << px(W - R - 120) << "\" y=\"" << px(T + 18 + 16.0 * ci)
          << "\" font-family=\"monospace\" font-size=\"12\">" << c.label << "</text>\n";
    }
    s << "</svg>\n";
    return s.str();
}

}  // namespace weyl
