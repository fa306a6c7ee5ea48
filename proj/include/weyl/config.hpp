#pragma once

#include <filesystem>
#include <string>

#include "weyl/geometry.hpp"
#include "weyl/potential.hpp"

namespace weyl {

/// Plain-text `key = value` experiment configuration. parse/emit round-trips:
/// emit(parse(text)) is idempotent (canonical key order and number format).
struct ExperimentConfig {
    DomainSpec domain = make_rectangle(1.0, 1.0);
    BoundaryCondition bc = BoundaryCondition::dirichlet();
    PotentialSpec potential;          // defaults to zero
    double h = 0.0625;
    double eps = 0.5;
    double lambda_min = 10.0;
    double lambda_max = 40.0;
    double lambda_step = 0.5;
    double t_min = 0.01;
    double t_max = 1.0;
    int t_count = 8;
    unsigned long seed = 1;
    std::string out_dir = "out";
};

ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);
std::string emit_config(const ExperimentConfig& cfg);

/// "dirichlet", "neumann" or "robin:SIGMA"
BoundaryCondition parse_bc(const std::string& text);
std::string format_bc(BoundaryCondition bc);

/// "rectangle(a,b)" or "disk(R)"
DomainSpec parse_domain(const std::string& text);
std::string format_domain(const DomainSpec& d);

}  // namespace weyl
