#include "weyl/duhamel.hpp"

#include <cmath>

#include "weyl/errors.hpp"
#include "weyl/multipliers.hpp"

namespace weyl {

OperatorPair make_operator_pair(const Grid& grid, BoundaryCondition bc,
                                const PotentialSpec& V) {
    AssembledOperator h0 = assemble_laplacian(grid, bc);
    AssembledOperator hv = assemble_schrodinger(grid, bc, V);

    Eigen::VectorXd vals0, valsv;
    Eigen::MatrixXd vecs0, vecsv;
    symmetric_eigendecompose(h0.matrix, vals0, vecs0);
    symmetric_eigendecompose(hv.matrix, valsv, vecsv);

    // one shift for the pair, so HV - H0 stays the potential diagonal
    const double mu_min = std::min(vals0.minCoeff(), valsv.minCoeff());
    const double s = std::max(0.0, 1.0 - mu_min);

    OperatorPair pair;
    pair.grid = grid;
    pair.bc = bc;
    pair.shift = s;
    pair.v_diag = hv.matrix.diagonal() - h0.matrix.diagonal();

    auto fill = [&](SpectralData& data, const Eigen::VectorXd& vals,
                    const Eigen::MatrixXd& vecs, const char* source) {
        data.weight = grid.quadrature_weight;
        data.shift = s;
        data.validity_ceiling = grid.lambda_max / 4.0;
        data.source = source;
        data.frequencies.resize(vals.size());
        for (Eigen::Index k = 0; k < vals.size(); ++k)
            data.frequencies[k] = std::sqrt(std::max(0.0, vals[k] + s));
        data.eigenvectors = vecs / std::sqrt(data.weight);
    };
    fill(pair.free, vals0, vecs0, "free");
    fill(pair.perturbed, valsv, vecsv, "schrodinger");

    // l2-orthonormal bases: A = q0^T qv = w E0^T Ev
    const double w = grid.quadrature_weight;
    pair.overlap = w * pair.free.eigenvectors.transpose() * pair.perturbed.eigenvectors;
    pair.v_overlap = w * pair.free.eigenvectors.transpose() *
                     pair.v_diag.asDiagonal() * pair.perturbed.eigenvectors;
    return pair;
}

Eigen::MatrixXd wave_kernel(const SpectralData& data, double t) {
    Eigen::VectorXd c(data.size());
    for (std::size_t k = 0; k < data.size(); ++k)
        c[static_cast<Eigen::Index>(k)] = std::cos(t * data.frequencies[k]);
    return data.eigenvectors * c.asDiagonal() * data.eigenvectors.transpose();
}

double duhamel_coefficient(double lambda_j, double tau_k, double t, double tol) {
    if (std::abs(lambda_j - tau_k) <= tol * std::max(lambda_j, 1.0)) {
        const double mu = 0.5 * (lambda_j + tau_k);
        if (mu == 0.0) return 0.0;
        return -t * std::sin(t * mu) / (2.0 * mu);
    }
    return (std::cos(t * lambda_j) - std::cos(t * tau_k)) /
           (lambda_j * lambda_j - tau_k * tau_k);
}

double duhamel_identity_residual(const OperatorPair& pair, double t) {
    if (pair.free.weight != pair.perturbed.weight || pair.free.shift != pair.perturbed.shift)
        throw InvalidPair("operator pair must share one grid and one shift");
    const Eigen::Index n = pair.overlap.rows();

    Eigen::MatrixXd coeff(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = 0; k < n; ++k)
            coeff(j, k) = duhamel_coefficient(pair.free.frequencies[j],
                                              pair.perturbed.frequencies[k], t);

    const Eigen::MatrixXd lhs = wave_kernel(pair.perturbed, t) - wave_kernel(pair.free, t);
    const Eigen::MatrixXd rhs = pair.free.eigenvectors *
                                coeff.cwiseProduct(pair.v_overlap) *
                                pair.perturbed.eigenvectors.transpose();
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

TraceSumResult trace_perturbation_sum(const OperatorPair& pair,
                                      const std::function<double(double)>& g,
                                      const std::function<double(double)>& g_deriv) {
    const Eigen::Index n = pair.overlap.rows();
    std::vector<double> g_free(n), g_pert(n);
    for (Eigen::Index j = 0; j < n; ++j) g_free[j] = g(pair.free.frequencies[j]);
    for (Eigen::Index k = 0; k < n; ++k) g_pert[k] = g(pair.perturbed.frequencies[k]);

    TraceSumResult out;
    for (Eigen::Index j = 0; j < n; ++j) {
        const double lj = pair.free.frequencies[j];
        for (Eigen::Index k = 0; k < n; ++k) {
            const double tk = pair.perturbed.frequencies[k];
            double coeff;
            if (std::abs(lj - tk) <= 1e-8 * std::max(lj, 1.0)) {
                const double mu = 0.5 * (lj + tk);
                coeff = mu > 0.0 ? g_deriv(mu) / (2.0 * mu) : 0.0;
            } else {
                coeff = (g_free[j] - g_pert[k]) / (lj * lj - tk * tk);
            }
            out.double_sum += coeff * pair.overlap(j, k) * pair.v_overlap(j, k);
        }
    }
    double tr_pert = 0.0, tr_free = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) tr_pert += g_pert[k];
    for (Eigen::Index j = 0; j < n; ++j) tr_free += g_free[j];
    out.direct_difference = tr_pert - tr_free;
    out.residual = std::abs(out.double_sum - out.direct_difference);
    return out;
}

namespace {

struct BlockAccumulator {
    CaseBlock block;
    void add(double contribution) {
        block.partial_sum += contribution;
        ++block.index_count;
    }
};

// dyadic shell index: |d| in (2^l, 2^{l+1}]
int shell_of(double d) { return static_cast<int>(std::ceil(std::log2(d))) - 1; }

bool in_dyadic_shell(double d, double eps, double lambda) {
    if (d <= eps) return false;
    const int ell = shell_of(d);
    const double twol = std::ldexp(1.0, ell);
    return twol >= eps && twol <= lambda;
}

}  // namespace

CaseReport case_report(const OperatorPair& pair, double lambda, double eps) {
    if (!(eps > 0.0) || eps > 1.0) throw InvalidInput("case report needs eps in (0, 1]");
    if (lambda > pair.free.validity_ceiling)
        throw RangeError("lambda beyond the grid's validity ceiling");

    CaseReport rep;
    rep.lambda = lambda;
    rep.eps = eps;

    const Eigen::Index n = pair.overlap.rows();
    const double sqrt_lam = std::sqrt(lambda);
    const double short_bound = eps * lambda + sqrt_lam;
    const double high_bound = std::sqrt(std::log(std::max(lambda, 1.1)));

    // ---- short-interval sum: window multiplier ----
    {
        const WindowSpec win{eps};
        std::vector<double> g_free(n), g_pert(n);
        for (Eigen::Index j = 0; j < n; ++j) g_free[j] = window(win, lambda, pair.free.frequencies[j]);
        for (Eigen::Index k = 0; k < n; ++k) g_pert[k] = window(win, lambda, pair.perturbed.frequencies[k]);

        BlockAccumulator blocks[6];
        const char* names[6] = {"both-near",      "free-dyadic-shell", "perturbed-dyadic-shell",
                                "perturbed-high", "free-high",         "unassigned"};
        double full = 0.0;
        for (Eigen::Index j = 0; j < n; ++j) {
            const double lj = pair.free.frequencies[j];
            for (Eigen::Index k = 0; k < n; ++k) {
                const double tk = pair.perturbed.frequencies[k];
                double coeff;
                if (std::abs(lj - tk) <= 1e-8 * std::max(lj, 1.0)) {
                    const double mu = 0.5 * (lj + tk);
                    coeff = mu > 0.0 ? window_deriv(win, lambda, mu) / (2.0 * mu) : 0.0;
                } else {
                    coeff = (g_free[j] - g_pert[k]) / (lj * lj - tk * tk);
                }
                const double c = coeff * pair.overlap(j, k) * pair.v_overlap(j, k);
                full += c;

                const double dj = std::abs(lj - lambda), dk = std::abs(tk - lambda);
                int which = 5;
                if (dk <= eps && dj <= eps) which = 0;
                else if (dk <= eps && in_dyadic_shell(dj, eps, lambda)) which = 1;
                else if (dj <= eps && in_dyadic_shell(dk, eps, lambda)) which = 2;
                else if (dj <= eps && tk > 2.0 * lambda) which = 3;
                else if (dk <= eps && lj > 2.0 * lambda) which = 4;
                blocks[which].add(c);
            }
        }
        const WindowSpec win_copy = win;
        rep.short_sum = trace_perturbation_sum(
            pair, [&](double f) { return window(win_copy, lambda, f); },
            [&](double f) { return window_deriv(win_copy, lambda, f); });

        double block_total = 0.0;
        for (int b = 0; b < 6; ++b) {
            blocks[b].block.name = names[b];
            if (b <= 2) {
                blocks[b].block.bound_form = "eps*lambda^(n-1) + C_eps*lambda^(n-3/2)";
                blocks[b].block.bound_value = short_bound;
            } else if (b <= 4) {
                blocks[b].block.bound_form = "lambda^(n-2)*(log lambda)^(1/2)";
                blocks[b].block.bound_value = high_bound;
            } else {
                blocks[b].block.bound_form = "none (multiplier support gap)";
                blocks[b].block.bound_value = 0.0;
            }
            blocks[b].block.ratio = blocks[b].block.bound_value > 0.0
                                        ? std::abs(blocks[b].block.partial_sum) /
                                              blocks[b].block.bound_value
                                        : 0.0;
            block_total += blocks[b].block.partial_sum;
            rep.short_cases.push_back(blocks[b].block);
        }
        rep.short_reconciliation = std::abs(block_total - full);
    }

    // ---- long-interval sum: smoothed indicator ----
    {
        const MollifierSpec mol{eps};
        std::vector<double> g_free(n), g_pert(n);
        for (Eigen::Index j = 0; j < n; ++j)
            g_free[j] = smoothed_indicator(mol, lambda, pair.free.frequencies[j]);
        for (Eigen::Index k = 0; k < n; ++k)
            g_pert[k] = smoothed_indicator(mol, lambda, pair.perturbed.frequencies[k]);

        BlockAccumulator blocks[5];
        const char* names[5] = {"low+low", "medlow+med", "med+low", "all+high",
                                "high+medlow"};
        double full = 0.0;
        for (Eigen::Index j = 0; j < n; ++j) {
            const double lj = pair.free.frequencies[j];
            for (Eigen::Index k = 0; k < n; ++k) {
                const double tk = pair.perturbed.frequencies[k];
                double coeff;
                if (std::abs(lj - tk) <= 1e-8 * std::max(lj, 1.0)) {
                    const double mu = 0.5 * (lj + tk);
                    coeff = mu > 0.0 ? smoothed_indicator_deriv(mol, lambda, mu) / (2.0 * mu)
                                     : 0.0;
                } else {
                    coeff = (g_free[j] - g_pert[k]) / (lj * lj - tk * tk);
                }
                const double c = coeff * pair.overlap(j, k) * pair.v_overlap(j, k);
                full += c;

                int which;
                if (lj < 0.5 * lambda && tk < 0.5 * lambda) which = 0;
                else if (lj <= 10.0 * lambda && tk >= 0.5 * lambda && tk <= 10.0 * lambda) which = 1;
                else if (lj >= 0.5 * lambda && lj <= 10.0 * lambda && tk < 0.5 * lambda) which = 2;
                else if (tk > 10.0 * lambda) which = 3;
                else which = 4;
                blocks[which].add(c);
            }
        }
        rep.long_sum = trace_perturbation_sum(
            pair, [&](double f) { return smoothed_indicator(mol, lambda, f); },
            [&](double f) { return smoothed_indicator_deriv(mol, lambda, f); });

        double block_total = 0.0;
        for (int b = 0; b < 5; ++b) {
            blocks[b].block.name = names[b];
            if (b == 0) {
                blocks[b].block.bound_form = "lambda^(-sigma) (rapid decay, sigma = 2)";
                blocks[b].block.bound_value = 1.0 / (lambda * lambda);
            } else if (b <= 2) {
                blocks[b].block.bound_form = "eps*lambda^(n-1) + C_eps*lambda^(n-3/2)";
                blocks[b].block.bound_value = short_bound;
            } else {
                blocks[b].block.bound_form = "lambda^(n-2)*(log lambda)^(1/2)";
                blocks[b].block.bound_value = high_bound;
            }
            blocks[b].block.ratio =
                std::abs(blocks[b].block.partial_sum) / blocks[b].block.bound_value;
            block_total += blocks[b].block.partial_sum;
            rep.long_cases.push_back(blocks[b].block);
        }
        rep.long_reconciliation = std::abs(block_total - full);
    }
    return rep;
}

}  // namespace weyl
