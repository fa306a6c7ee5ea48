#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace weyl {

/// Shortest-roundtrip-stable formatting at 17 significant digits; all CSV and
/// JSON numbers go through this so identical inputs give identical bytes.
std::string format_g17(double v);

void write_text_file(const std::filesystem::path& path, const std::string& content);

/// One CSV table: header row + columns of equal length.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns;
};
std::string render_csv(const CsvTable& table);

struct Curve {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

/// Standalone SVG line plot (polylines, axis ticks, labels, legend).
/// Deterministic byte output for identical input.
std::string render_svg(std::span<const Curve> curves, const std::string& xlabel,
                       const std::string& ylabel, const std::string& title);

}  // namespace weyl
