#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "weyl/geometry.hpp"
#include "weyl/operators.hpp"
#include "weyl/spectral.hpp"

namespace weyl {

/// A free/perturbed operator pair on one grid with one common spectrum shift,
/// plus the bilinear data coupling the two eigenbases:
///   overlap   A[j][k] = <e_j^0, e_k>        (weighted; orthogonal)
///   v_overlap B[j][k] = <e_j^0, Vbar e_k>   (weighted)
/// HV - H0 = diag(Vbar) makes B = A diag(tau^2) - diag(lambda^2) A.
struct OperatorPair {
    Grid grid;
    BoundaryCondition bc;
    double shift = 0.0;
    Eigen::VectorXd v_diag;
    SpectralData free;
    SpectralData perturbed;
    Eigen::MatrixXd overlap;
    Eigen::MatrixXd v_overlap;
};

OperatorPair make_operator_pair(const Grid& grid, BoundaryCondition bc,
                                const PotentialSpec& V);

/// cos(t sqrt(H)) as a kernel matrix: sum_k cos(t tau_k) e_k e_k^T.
Eigen::MatrixXd wave_kernel(const SpectralData& data, double t);

/// Divided difference (cos t lj - cos t tk) / (lj^2 - tk^2) with the
/// coincidence limit -t sin(t mu) / (2 mu) once |lj - tk| <= tol * max(lj, 1).
double duhamel_coefficient(double lambda_j, double tau_k, double t, double tol = 1e-8);

/// Max-abs residual of the exact finite-dimensional identity
/// cos tP_V - cos tP^0 = sum_{j,k} coeff * e_j^0 B[j][k] e_k^T.
double duhamel_identity_residual(const OperatorPair& pair, double t);

struct TraceSumResult {
    double double_sum = 0.0;        // sum_{j,k} [(g(lj)-g(tk))/(lj^2-tk^2)] A B
    double direct_difference = 0.0; // Tr g(P_V) - Tr g(P^0); equals double_sum exactly
    double residual = 0.0;
};

TraceSumResult trace_perturbation_sum(const OperatorPair& pair,
                                      const std::function<double(double)>& g,
                                      const std::function<double(double)>& g_deriv);

struct CaseBlock {
    std::string name;
    long index_count = 0;
    double partial_sum = 0.0;
    std::string bound_form;
    double bound_value = 0.0;
    double ratio = 0.0;  // |partial_sum| / bound_value
};

/// Index-set decomposition of the two trace sums: five short-interval cases
/// (window multiplier) and five long-interval cases (smoothed indicator),
/// each against its bound form; blocks reconcile with the full double sum.
struct CaseReport {
    double lambda = 0.0;
    double eps = 0.0;
    std::vector<CaseBlock> short_cases;
    std::vector<CaseBlock> long_cases;
    TraceSumResult short_sum;
    TraceSumResult long_sum;
    double short_reconciliation = 0.0;
    double long_reconciliation = 0.0;
};

CaseReport case_report(const OperatorPair& pair, double lambda, double eps);

}  // namespace weyl
