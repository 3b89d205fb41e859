#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ndl/graph.hpp"
#include "ndl/rayleigh.hpp"
#include "ndl/search.hpp"
#include "ndl/spectral.hpp"

namespace py = pybind11;
using namespace ndl;

namespace {

std::vector<std::vector<int>> distance_rows(const DistanceData& dd) {
    std::vector<std::vector<int>> rows(dd.n, std::vector<int>(dd.n));
    for (int i = 0; i < dd.n; ++i)
        for (int j = 0; j < dd.n; ++j) rows[i][j] = dd.distance(i, j);
    return rows;
}

std::vector<std::vector<double>> matrix_rows(const SymmetricMatrix& m) {
    const int n = m.order();
    std::vector<std::vector<double>> rows(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = m(i, j);
    return rows;
}

}  // namespace

PYBIND11_MODULE(_ndl, m) {
    m.doc() = "Normalized distance Laplacian spectra of connected graphs";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DisconnectedGraphError>(m, "DisconnectedGraphError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def("vertex_count", &Graph::vertex_count)
        .def("edge_count", &Graph::edge_count)
        .def("has_edge", &Graph::has_edge)
        .def("add_edge", &Graph::add_edge)
        .def("remove_edge", &Graph::remove_edge)
        .def("toggle_edge", &Graph::toggle_edge)
        .def("connected", &Graph::connected)
        .def("is_complete", &Graph::is_complete)
        .def("edges", &Graph::edges)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(graph6='" + encode_graph6(g) + "')";
        });

    py::class_<DistanceData>(m, "DistanceData")
        .def_readonly("n", &DistanceData::n)
        .def_readonly("diameter", &DistanceData::diameter)
        .def_readonly("transmission", &DistanceData::transmission)
        .def("distance", &DistanceData::distance)
        .def("matrix", &distance_rows);

    py::class_<BarbellParams>(m, "BarbellParams")
        .def(py::init<int, int, int>(), py::arg("k1"), py::arg("p"), py::arg("k2"))
        .def_readwrite("k1", &BarbellParams::k1)
        .def_readwrite("p", &BarbellParams::p)
        .def_readwrite("k2", &BarbellParams::k2);

    py::class_<SymmetricMatrix>(m, "SymmetricMatrix")
        .def("order", &SymmetricMatrix::order)
        .def("__getitem__",
             [](const SymmetricMatrix& mat, std::pair<int, int> ij) {
                 return mat(ij.first, ij.second);
             })
        .def("rows", &matrix_rows);

    py::class_<Spectrum>(m, "Spectrum")
        .def_readonly("n", &Spectrum::n)
        .def_readonly("eigenvalues", &Spectrum::eigenvalues)
        .def("eigenvector", [](const Spectrum& s, int k) {
            const auto col = s.eigenvector(k);
            return std::vector<double>(col.begin(), col.end());
        });

    py::class_<HarmonicVector>(m, "HarmonicVector")
        .def_readonly("values", &HarmonicVector::values)
        .def_readonly("eigenvalue", &HarmonicVector::eigenvalue);

    py::class_<SignPartition>(m, "SignPartition")
        .def_readonly("positive", &SignPartition::positive)
        .def_readonly("negative", &SignPartition::negative)
        .def_readonly("geodesic", &SignPartition::geodesic)
        .def_readonly("geodesic_positive", &SignPartition::geodesic_positive)
        .def_readonly("geodesic_negative", &SignPartition::geodesic_negative);

    py::class_<ObjectiveReport>(m, "ObjectiveReport")
        .def_readonly("obj0", &ObjectiveReport::obj0)
        .def_readonly("obj1", &ObjectiveReport::obj1)
        .def_readonly("obj2", &ObjectiveReport::obj2)
        .def_readonly("obj3", &ObjectiveReport::obj3)
        .def_readonly("t_positive", &ObjectiveReport::transmission_positive)
        .def_readonly("t_negative", &ObjectiveReport::transmission_negative);

    py::class_<ConditionCheck>(m, "ConditionCheck")
        .def_readonly("epsilon", &ConditionCheck::epsilon)
        .def_readonly("mass_balanced", &ConditionCheck::mass_balanced)
        .def_readonly("geodesic_balanced", &ConditionCheck::geodesic_balanced)
        .def_readonly("partial_balanced", &ConditionCheck::partial_balanced)
        .def_readonly("min_mass_fraction", &ConditionCheck::min_mass_fraction)
        .def_readonly("min_geodesic_fraction", &ConditionCheck::min_geodesic_fraction)
        .def_readonly("min_partial_fraction", &ConditionCheck::min_partial_fraction);

    py::class_<EnumerationSummary>(m, "EnumerationSummary")
        .def_readonly("n", &EnumerationSummary::n)
        .def_readonly("graphs_checked", &EnumerationSummary::graphs_checked)
        .def_readonly("max_spectral_radius", &EnumerationSummary::max_spectral_radius)
        .def_readonly("argmax_graph6", &EnumerationSummary::argmax_graph6)
        .def_readonly("min_second_eigenvalue", &EnumerationSummary::min_second_eigenvalue)
        .def_readonly("argmin_graph6", &EnumerationSummary::argmin_graph6)
        .def_readonly("uniqueness_violations", &EnumerationSummary::uniqueness_violations)
        .def_readonly("bound_violations", &EnumerationSummary::bound_violations);

    py::enum_<SweepMode>(m, "SweepMode")
        .value("PAPER_FAMILY", SweepMode::PaperFamily)
        .value("ALL_COMPOSITIONS", SweepMode::AllCompositions);

    py::class_<SweepRecord>(m, "SweepRecord")
        .def_readonly("n", &SweepRecord::n)
        .def_readonly("k1", &SweepRecord::k1)
        .def_readonly("p", &SweepRecord::p)
        .def_readonly("k2", &SweepRecord::k2)
        .def_readonly("spectral_radius", &SweepRecord::spectral_radius)
        .def_readonly("gap", &SweepRecord::gap)
        .def_readonly("scaled_gap", &SweepRecord::scaled_gap)
        .def_readonly("diameter", &SweepRecord::diameter);

    py::class_<BoundAuditReport>(m, "BoundAuditReport")
        .def_readonly("n", &BoundAuditReport::n)
        .def_readonly("diameter", &BoundAuditReport::diameter)
        .def_readonly("spectral_radius", &BoundAuditReport::spectral_radius)
        .def_readonly("bound", &BoundAuditReport::bound)
        .def_readonly("margin", &BoundAuditReport::margin);

    py::class_<HillClimbResult>(m, "HillClimbResult")
        .def_readonly("graph", &HillClimbResult::graph)
        .def_readonly("spectral_radius", &HillClimbResult::spectral_radius)
        .def_readonly("start_spectral_radius", &HillClimbResult::start_spectral_radius)
        .def_readonly("steps", &HillClimbResult::steps)
        .def_readonly("accepted", &HillClimbResult::accepted)
        .def_readonly("plateau", &HillClimbResult::plateau)
        .def_readonly("seed", &HillClimbResult::seed);

    py::class_<DiameterReportRow>(m, "DiameterReportRow")
        .def_readonly("label", &DiameterReportRow::label)
        .def_readonly("n", &DiameterReportRow::n)
        .def_readonly("diameter", &DiameterReportRow::diameter)
        .def_readonly("diameter_ratio", &DiameterReportRow::diameter_ratio)
        .def_readonly("flagged", &DiameterReportRow::flagged);

    m.def("parse_edge_list", &parse_edge_list, py::arg("text"));
    m.def("parse_graph6", &parse_graph6, py::arg("token"));
    m.def("encode_graph6", &encode_graph6, py::arg("graph"));
    m.def("make_complete", &make_complete, py::arg("n"));
    m.def("make_path", &make_path, py::arg("n"));
    m.def("make_cycle", &make_cycle, py::arg("n"));
    m.def("make_barbell", &make_barbell, py::arg("params"));
    m.def("make_kpk", &make_kpk, py::arg("n1"), py::arg("n2"), py::arg("n3"));
    m.def("random_connected", &random_connected, py::arg("n"), py::arg("edge_probability"),
          py::arg("seed"));
    m.def("all_pairs_distances", &all_pairs_distances, py::arg("graph"));

    m.def("build_ndl", &build_ndl, py::arg("distances"));
    m.def("eigen_decompose", &eigen_decompose, py::arg("matrix"));
    m.def(
        "ndl_spectrum",
        [](const Graph& g) {
            auto [spec, dd] = ndl_spectrum(g);
            return py::make_tuple(std::move(spec), std::move(dd));
        },
        py::arg("graph"));
    m.def("harmonic", &harmonic, py::arg("spectrum"), py::arg("distances"), py::arg("index"));
    m.def("kernel_residual", &kernel_residual, py::arg("matrix"), py::arg("distances"));

    m.def("rayleigh_sos", &rayleigh_sos, py::arg("distances"), py::arg("y"));
    m.def("obj0", &obj0, py::arg("distances"), py::arg("y"));
    m.def("obj1", &obj1, py::arg("distances"), py::arg("y"));
    m.def("obj2", &obj2, py::arg("distances"), py::arg("partition"), py::arg("y"));
    m.def("obj3", &obj3, py::arg("distances"), py::arg("partition"), py::arg("y"));
    m.def("sign_partition", &sign_partition, py::arg("graph"), py::arg("distances"), py::arg("y"));
    m.def("partial_transmissions", &partial_transmissions, py::arg("distances"),
          py::arg("partition"));
    m.def("condition_check", &condition_check, py::arg("graph"), py::arg("distances"),
          py::arg("y"), py::arg("epsilon") = kDefaultConditionEpsilon);
    m.def("pair_sum_direct", &pair_sum_direct, py::arg("z"));
    m.def("pair_sum_closed_form", &pair_sum_closed_form, py::arg("z"));
    m.def("evaluate_objectives", &evaluate_objectives, py::arg("distances"), py::arg("partition"),
          py::arg("y"));

    m.def(
        "enumerate_verify",
        [](int n, double tol, int threads) {
            const py::gil_scoped_release release;
            return enumerate_verify(n, tol, threads);
        },
        py::arg("n"), py::arg("tol") = 1e-9, py::arg("threads") = 0);
    m.def("verify_graphs", &verify_graphs, py::arg("graphs"), py::arg("tol") = 1e-9);
    m.def("paper_family_params", &paper_family_params, py::arg("n"));
    m.def("barbell_sweep", &barbell_sweep, py::arg("n"), py::arg("mode"),
          py::call_guard<py::gil_scoped_release>());
    m.def("fit_gap_constant", &fit_gap_constant, py::arg("records"));
    m.def("bound_audit", &bound_audit, py::arg("graph"));
    m.def("hill_climb", &hill_climb, py::arg("n"), py::arg("seed"), py::arg("max_steps"),
          py::call_guard<py::gil_scoped_release>());
    m.def("diameter_lower_bound_report", &diameter_lower_bound_report, py::arg("candidates"));

#ifdef NDL_VERSION
    m.attr("__version__") = NDL_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
