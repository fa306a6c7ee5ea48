#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weyl/acceptance.hpp"
#include "weyl/config.hpp"
#include "weyl/duhamel.hpp"
#include "weyl/heat.hpp"
#include "weyl/multipliers.hpp"
#include "weyl/operators.hpp"
#include "weyl/potential.hpp"
#include "weyl/spectral.hpp"
#include "weyl/weyl_law.hpp"

namespace py = pybind11;
using namespace weyl;

namespace {

Point to_point(std::pair<double, double> p) { return {p.first, p.second}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "numerical spectral geometry on planar domains";

    py::class_<DomainSpec>(m, "DomainSpec")
        .def_readonly("area", &DomainSpec::area)
        .def_readonly("perimeter", &DomainSpec::perimeter)
        .def_readonly("dim", &DomainSpec::dim);
    m.def("make_rectangle", &make_rectangle, py::arg("a"), py::arg("b"));
    m.def("make_disk", &make_disk, py::arg("radius"));
    m.def("distance", [](std::pair<double, double> a, std::pair<double, double> b) {
        return distance(to_point(a), to_point(b));
    });

    py::class_<BoundaryCondition>(m, "BoundaryCondition")
        .def_readonly("sigma", &BoundaryCondition::sigma);
    m.def("parse_bc", &parse_bc, py::arg("text"),
          "dirichlet | neumann | robin:SIGMA");

    py::class_<Grid>(m, "Grid")
        .def_readonly("h", &Grid::h)
        .def_readonly("nx", &Grid::nx)
        .def_readonly("ny", &Grid::ny)
        .def_readonly("lambda_max", &Grid::lambda_max)
        .def_property_readonly("size", [](const Grid& g) { return g.size(); })
        .def("node", [](const Grid& g, std::size_t k) {
            const Point p = g.node(k);
            return std::make_pair(p.x, p.y);
        });
    m.def("build_grid", &build_grid, py::arg("domain"), py::arg("h"));

    py::class_<PotentialSpec>(m, "PotentialSpec")
        .def("__repr__", [](const PotentialSpec& s) { return format_potential(s); });
    m.def("parse_potential", &parse_potential, py::arg("text"));
    m.def("evaluate_potential", [](const PotentialSpec& s, std::pair<double, double> x) {
        return evaluate_potential(s, to_point(x));
    });
    m.def("kato_kernel", &kato_kernel, py::arg("r"), py::arg("n"));
    m.def("kato_norm", &kato_norm, py::arg("spec"), py::arg("domain"), py::arg("delta"),
          py::arg("resolution") = 8);
    m.def("split_potential", [](const PotentialSpec& s, const DomainSpec& d, double eps) {
        const SplitPotential sp = split_potential(s, d, eps);
        return py::dict(py::arg("clamp") = sp.clamp, py::arg("epsilon") = sp.epsilon,
                        py::arg("l1_norm_v1") = sp.l1_norm_v1);
    });
    m.def("cell_average", [](const PotentialSpec& s, std::pair<double, double> c, double h) {
        return cell_average(s, to_point(c), h);
    });

    py::class_<AssembledOperator>(m, "AssembledOperator")
        .def_readonly("matrix", &AssembledOperator::matrix)
        .def_readonly("shift", &AssembledOperator::shift);
    m.def("assemble_laplacian", &assemble_laplacian, py::arg("grid"), py::arg("bc"));
    m.def("assemble_schrodinger", &assemble_schrodinger, py::arg("grid"), py::arg("bc"),
          py::arg("potential"));
    m.def("normalize_shift", [](AssembledOperator& op) { return normalize_shift(op); });

    py::class_<SpectralData>(m, "SpectralData")
        .def_readonly("frequencies", &SpectralData::frequencies)
        .def_readonly("eigenvectors", &SpectralData::eigenvectors)
        .def_readonly("weight", &SpectralData::weight)
        .def_readonly("shift", &SpectralData::shift)
        .def_readonly("validity_ceiling", &SpectralData::validity_ceiling);
    m.def("eigendecompose", &eigendecompose, py::arg("op"), py::arg("dense_limit") = 6400);
    m.def("exact_rectangle_spectrum",
          [](double a, double b, const BoundaryCondition& bc, double cutoff) {
              return exact_rectangle_spectrum(a, b, bc, cutoff).frequencies;
          });
    m.def("exact_disk_spectrum", [](double R, const BoundaryCondition& bc, double cutoff) {
        return exact_disk_spectrum(R, bc, cutoff).frequencies;
    });
    m.def("bessel_zeros", &bessel_zeros, py::arg("nu"), py::arg("cutoff"));
    m.def("counting_function", [](const std::vector<double>& freqs, double lam) {
        return counting_function(freqs, lam);
    });
    m.def("spectral_function", &spectral_function, py::arg("data"), py::arg("node"),
          py::arg("lam"));

    py::class_<WeylCoefficients>(m, "WeylCoefficients")
        .def_readonly("c0", &WeylCoefficients::c0)
        .def_readonly("c1", &WeylCoefficients::c1)
        .def_readonly("robin_caveat", &WeylCoefficients::robin_caveat);
    m.def("weyl_coefficients", &weyl_coefficients, py::arg("domain"), py::arg("bc"),
          py::arg("n") = 2);
    m.def("remainder_curve",
          [](const std::vector<double>& freqs, const WeylCoefficients& c,
             const std::vector<double>& grid) {
              const RemainderCurve curve = remainder_curve(freqs, c, grid);
              return py::dict(py::arg("lam") = curve.lambda, py::arg("N") = curve.counts,
                              py::arg("R1") = curve.r1, py::arg("R2") = curve.r2);
          });
    m.def("fit_remainder_exponent",
          [](const std::vector<double>& lam, const std::vector<double>& rem, double lo,
             double hi) { return fit_remainder_exponent(lam, rem, lo, hi).exponent; });
    m.def("short_interval_count", [](const std::vector<double>& freqs, double lam, double eps) {
        return short_interval_count(freqs, lam, eps);
    });

    m.def("heat_kernel", &heat_kernel, py::arg("data"), py::arg("t"), py::arg("x"),
          py::arg("y"));
    m.def("heat_trace", [](const std::vector<double>& freqs, double t) {
        return heat_trace(freqs, t);
    });
    m.def("rectangle_heat_trace", &rectangle_heat_trace, py::arg("a"), py::arg("b"),
          py::arg("bc"), py::arg("t"));
    m.def("riesz_rel_diff", [](const SpectralData& data, int ell) {
        return riesz_kernel(data, ell).max_rel_diff;
    });

    m.def("smoothed_indicator", [](double eps, double lam, double tau) {
        return smoothed_indicator(MollifierSpec{eps}, lam, tau);
    });
    m.def("smoothed_indicator_osc", [](double eps, double lam, double tau) {
        return smoothed_indicator_osc(MollifierSpec{eps}, lam, tau);
    });
    m.def("smoothed_indicator_conv", [](double eps, double lam, double tau) {
        return smoothed_indicator_conv(MollifierSpec{eps}, lam, tau);
    });
    m.def("window", [](double eps, double lam, double tau) {
        return window(WindowSpec{eps}, lam, tau);
    });
    m.def("dyadic_partition", &dyadic_partition, py::arg("s"), py::arg("L"));

    py::class_<OperatorPair>(m, "OperatorPair")
        .def_readonly("shift", &OperatorPair::shift)
        .def_readonly("overlap", &OperatorPair::overlap)
        .def_readonly("v_overlap", &OperatorPair::v_overlap)
        .def_property_readonly("free", [](const OperatorPair& p) { return p.free; })
        .def_property_readonly("perturbed", [](const OperatorPair& p) { return p.perturbed; });
    m.def("make_operator_pair", &make_operator_pair, py::arg("grid"), py::arg("bc"),
          py::arg("potential"));
    m.def("duhamel_coefficient", &duhamel_coefficient, py::arg("lambda_j"), py::arg("tau_k"),
          py::arg("t"), py::arg("tol") = 1e-8);
    m.def("duhamel_identity_residual", &duhamel_identity_residual, py::arg("pair"),
          py::arg("t"));
    m.def("trace_perturbation_sum",
          [](const OperatorPair& pair, const std::function<double(double)>& g,
             const std::function<double(double)>& gd) {
              const TraceSumResult r = trace_perturbation_sum(pair, g, gd);
              return py::dict(py::arg("double_sum") = r.double_sum,
                              py::arg("direct_difference") = r.direct_difference,
                              py::arg("residual") = r.residual);
          });

    m.def("run_acceptance_criterion", [](int id) {
        const CriterionResult r = run_criterion(id);
        return py::dict(py::arg("id") = r.id, py::arg("name") = r.name,
                        py::arg("pass") = r.pass, py::arg("seconds") = r.seconds,
                        py::arg("details") = r.details);
    });
}
