#include "weyl/operators.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>

#include "weyl/errors.hpp"
#include "weyl/spectral.hpp"

namespace weyl {

namespace {

// Ghost-point reflection factor for an absent neighbour across the boundary:
// u_ghost = gamma * u_interior with gamma = (1 - h*sigma)/(1 + h*sigma);
// sigma = 0 reproduces Neumann, the Dirichlet branch drops the node entirely.
double missing_neighbor_diag(const BoundaryCondition& bc, double h, double inv_h2) {
    switch (bc.kind) {
        case BcKind::Dirichlet: return inv_h2;
        case BcKind::Neumann: return 0.0;
        case BcKind::Robin: {
            const double gamma = (1.0 - h * bc.sigma) / (1.0 + h * bc.sigma);
            return (1.0 - gamma) * inv_h2;
        }
    }
    return inv_h2;
}

}  // namespace

AssembledOperator assemble_laplacian(const Grid& grid, BoundaryCondition bc) {
    const std::size_t n = grid.size();
    const double inv_h2 = 1.0 / (grid.h * grid.h);

    AssembledOperator op;
    op.grid = grid;
    op.bc = bc;
    op.kind = OperatorKind::Free;
    op.matrix = Eigen::MatrixXd::Zero(n, n);

    for (int i = 1; i <= grid.nx; ++i) {
        for (int j = 1; j <= grid.ny; ++j) {
            const std::size_t row = grid.index(i, j);
            double diag = 0.0;
            // each of the four stencil arms: interior neighbour or boundary arm
            const int di[4] = {-1, 1, 0, 0};
            const int dj[4] = {0, 0, -1, 1};
            for (int d = 0; d < 4; ++d) {
                const int ii = i + di[d], jj = j + dj[d];
                if (ii >= 1 && ii <= grid.nx && jj >= 1 && jj <= grid.ny) {
                    diag += inv_h2;
                    const std::size_t col = grid.index(ii, jj);
                    if (col > row) {  // write both triangle entries from one value
                        op.matrix(row, col) = -inv_h2;
                        op.matrix(col, row) = -inv_h2;
                    }
                } else {
                    diag += missing_neighbor_diag(bc, grid.h, inv_h2);
                }
            }
            op.matrix(row, row) = diag;
        }
    }
    return op;
}

Eigen::VectorXd potential_diagonal(const Grid& grid, const PotentialSpec& V) {
    Eigen::VectorXd d(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k)
        d[static_cast<Eigen::Index>(k)] = cell_average(V, grid.node(k), grid.h);
    return d;
}

AssembledOperator assemble_schrodinger(const Grid& grid, BoundaryCondition bc,
                                       const PotentialSpec& V) {
    AssembledOperator op = assemble_laplacian(grid, bc);
    op.kind = OperatorKind::Schrodinger;
    op.potential = V;
    op.matrix.diagonal() += potential_diagonal(grid, V);
    return op;
}

double smallest_eigenvalue(const AssembledOperator& op) {
    return symmetric_eigenvalues(op.matrix).minCoeff();
}

double normalize_shift(AssembledOperator& op) {
    const double mu_min = smallest_eigenvalue(op);
    const double s = std::max(0.0, 1.0 - mu_min);
    apply_shift(op, s);
    return s;
}

void apply_shift(AssembledOperator& op, double s) {
    if (s == 0.0) return;
    op.matrix.diagonal().array() += s;
    op.shift += s;
}

namespace {
constexpr std::uint64_t kCacheMagic = 0x57454f503031ull;  // "WEOP01"
}

void save_operator(const AssembledOperator& op, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot open '" + path.string() + "' for writing");
    const std::uint64_t n = op.size();
    const std::int32_t bc_code = static_cast<std::int32_t>(op.bc.kind);
    const std::int32_t kind = static_cast<std::int32_t>(op.kind);
    const std::int32_t nx = op.grid.nx, ny = op.grid.ny;
    out.write(reinterpret_cast<const char*>(&kCacheMagic), sizeof kCacheMagic);
    out.write(reinterpret_cast<const char*>(&n), sizeof n);
    out.write(reinterpret_cast<const char*>(&op.grid.h), sizeof(double));
    out.write(reinterpret_cast<const char*>(&bc_code), sizeof bc_code);
    out.write(reinterpret_cast<const char*>(&op.bc.sigma), sizeof(double));
    out.write(reinterpret_cast<const char*>(&op.shift), sizeof(double));
    out.write(reinterpret_cast<const char*>(&kind), sizeof kind);
    out.write(reinterpret_cast<const char*>(&nx), sizeof nx);
    out.write(reinterpret_cast<const char*>(&ny), sizeof ny);
    // row-major payload
    for (std::uint64_t i = 0; i < n; ++i)
        for (std::uint64_t j = 0; j < n; ++j) {
            const double v = op.matrix(i, j);
            out.write(reinterpret_cast<const char*>(&v), sizeof v);
        }
    if (!out) throw InvalidInput("short write to '" + path.string() + "'");
}

AssembledOperator load_operator(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
    std::uint64_t magic = 0, n = 0;
    double h = 0.0, sigma = 0.0, shift = 0.0;
    std::int32_t bc_code = 0, kind = 0, nx = 0, ny = 0;
    in.read(reinterpret_cast<char*>(&magic), sizeof magic);
    if (magic != kCacheMagic) throw InvalidInput("not an operator cache file");
    in.read(reinterpret_cast<char*>(&n), sizeof n);
    in.read(reinterpret_cast<char*>(&h), sizeof h);
    in.read(reinterpret_cast<char*>(&bc_code), sizeof bc_code);
    in.read(reinterpret_cast<char*>(&sigma), sizeof sigma);
    in.read(reinterpret_cast<char*>(&shift), sizeof shift);
    in.read(reinterpret_cast<char*>(&kind), sizeof kind);
    in.read(reinterpret_cast<char*>(&nx), sizeof nx);
    in.read(reinterpret_cast<char*>(&ny), sizeof ny);
    if (!in || static_cast<std::uint64_t>(nx) * ny != n)
        throw InvalidInput("corrupt operator cache header");

    AssembledOperator op;
    op.bc.kind = static_cast<BcKind>(bc_code);
    op.bc.sigma = sigma;
    op.kind = static_cast<OperatorKind>(kind);
    op.grid = build_grid(make_rectangle((nx + 1) * h, (ny + 1) * h), h);
    op.shift = shift;
    op.matrix.resize(n, n);
    for (std::uint64_t i = 0; i < n; ++i)
        for (std::uint64_t j = 0; j < n; ++j) {
            double v = 0.0;
            in.read(reinterpret_cast<char*>(&v), sizeof v);
            op.matrix(i, j) = v;
        }
    if (!in) throw InvalidInput("truncated operator cache file");
    return op;
}

}  // namespace weyl
