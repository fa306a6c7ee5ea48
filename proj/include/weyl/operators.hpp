#pragma once

#include <Eigen/Dense>
#include <filesystem>

#include "weyl/geometry.hpp"
#include "weyl/potential.hpp"

namespace weyl {

enum class OperatorKind { Free, Schrodinger };

/// Dense symmetric 5-point discretization of -Laplace (+ V) on a grid.
/// Assembly writes matched off-diagonal pairs from one computation, so the
/// matrix is bitwise symmetric.
struct AssembledOperator {
    Eigen::MatrixXd matrix;
    Grid grid;
    BoundaryCondition bc;
    double shift = 0.0;  // total constant added to the diagonal so far
    OperatorKind kind = OperatorKind::Free;
    PotentialSpec potential;

    std::size_t size() const { return static_cast<std::size_t>(matrix.rows()); }
};

AssembledOperator assemble_laplacian(const Grid& grid, BoundaryCondition bc);

/// H_V = H^0 + diag(cell averages of V).
AssembledOperator assemble_schrodinger(const Grid& grid, BoundaryCondition bc,
                                       const PotentialSpec& V);

/// Diagonal of cell averages used by assemble_schrodinger.
Eigen::VectorXd potential_diagonal(const Grid& grid, const PotentialSpec& V);

/// Smallest eigenvalue (dense symmetric solve, values only).
double smallest_eigenvalue(const AssembledOperator& op);

/// Adds s = max(0, 1 - mu_min) to the diagonal so the spectrum is >= 1.
/// Returns the shift applied. When the operator is one of a free/perturbed
/// pair, apply_shift the same s to the partner instead of renormalizing it.
double normalize_shift(AssembledOperator& op);

void apply_shift(AssembledOperator& op, double s);

// Binary cache: header (N, h, bc code, sigma, shift, kind) + row-major doubles.
void save_operator(const AssembledOperator& op, const std::filesystem::path& path);
AssembledOperator load_operator(const std::filesystem::path& path);

}  // namespace weyl
