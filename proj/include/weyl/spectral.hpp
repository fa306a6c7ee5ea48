#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "weyl/geometry.hpp"
#include "weyl/operators.hpp"

namespace weyl {

/// Eigenvalues of a dense symmetric matrix, ascending (values only).
Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& m);

/// Full dense symmetric eigendecomposition, ascending eigenvalues.
/// Eigenvector signs are normalized (largest-magnitude entry positive) so the
/// output is deterministic for identical input.
void symmetric_eigendecompose(const Eigen::MatrixXd& m, Eigen::VectorXd& values,
                              Eigen::MatrixXd& vectors);

/// Frequencies tau_k = sqrt(eigenvalue) with eigenvectors orthonormal in the
/// weighted inner product <u,v> = h^2 sum u_i v_i (columns are q_k / h).
struct SpectralData {
    std::vector<double> frequencies;
    Eigen::MatrixXd eigenvectors;
    double weight = 0.0;            // h^2
    double shift = 0.0;             // inherited spectrum shift
    std::string source;             // operator descriptor
    double validity_ceiling = 0.0;  // lambda_max/4 for discrete sources

    std::size_t size() const { return frequencies.size(); }
};

SpectralData eigendecompose(const AssembledOperator& op, std::size_t dense_limit = 6400);

enum class SpectrumProvenance { RectangleLattice, DiskBessel };

/// Complete analytic spectrum below a cutoff, with multiplicity.
struct ExactSpectrum {
    std::vector<double> frequencies;
    SpectrumProvenance provenance = SpectrumProvenance::RectangleLattice;
    double cutoff = 0.0;
    BoundaryCondition bc;
};

/// Separation of variables on a rectangle: lambda = pi*sqrt(m^2/a^2 + k^2/b^2),
/// m,k >= 1 for Dirichlet and m,k >= 0 for Neumann.
ExactSpectrum exact_rectangle_spectrum(double a, double b, BoundaryCondition bc,
                                       double cutoff);

/// Disk of radius R: Dirichlet frequencies j_{nu,k}/R (multiplicity 2 for
/// nu >= 1), Neumann uses the zeros of J_nu' plus the zero mode.
ExactSpectrum exact_disk_spectrum(double R, BoundaryCondition bc, double cutoff);

/// Positive zeros of J_nu up to `cutoff`, bracketed by interlacing and
/// bisected to 1e-12.
std::vector<double> bessel_zeros(int nu, double cutoff);

/// Right-continuous count #{k : tau_k <= lambda} on a sorted list.
long counting_function(std::span<const double> frequencies, double lambda);

/// Pointwise spectral function sum_{tau_k <= lambda} |e_k(x)|^2.
double spectral_function(const SpectralData& data, std::size_t node, double lambda);

void export_spectrum_csv(std::span<const double> frequencies,
                         const std::filesystem::path& path);

}  // namespace weyl
