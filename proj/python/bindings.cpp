#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "blockage/analytic.hpp"
#include "blockage/cli.hpp"
#include "blockage/geometry.hpp"
#include "blockage/layout.hpp"
#include "blockage/model.hpp"
#include "blockage/montecarlo.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace blockage;

namespace {

py::list intervals_to_list(const geometry::IntervalSet& set) {
    py::list out;
    for (const auto& iv : set) out.append(iv);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "LOS/NLOS interval statistics along urban trajectories (C++ core)";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<geometry::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<montecarlo::EmptySample>(m, "EmptySample", PyExc_ValueError);
    py::register_exception<layout::LayoutError>(m, "LayoutError", PyExc_ValueError);
    py::register_exception<layout::QueryError>(m, "QueryError", PyExc_ValueError);

    py::enum_<HeightRegime>(m, "HeightRegime")
        .value("BsBelowAll", HeightRegime::BsBelowAll)
        .value("BsWithin", HeightRegime::BsWithin)
        .value("BsAboveAll", HeightRegime::BsAboveAll);

    py::class_<ScenarioParams>(m, "ScenarioParams")
        .def(py::init<>())
        .def(py::init([](double lambda, double r, double d, double h_bs, double h_user, double l_min, double l_max,
                         double h_min, double h_max) {
                 return ScenarioParams{lambda, r, d, h_bs, h_user, l_min, l_max, h_min, h_max};
             }),
             py::arg("lambda_"), py::arg("r"), py::arg("d"), py::arg("h_bs"), py::arg("h_user"), py::arg("l_min"),
             py::arg("l_max"), py::arg("h_min"), py::arg("h_max"))
        .def_readwrite("lambda_", &ScenarioParams::lambda)
        .def_readwrite("r", &ScenarioParams::r)
        .def_readwrite("d", &ScenarioParams::d)
        .def_readwrite("h_bs", &ScenarioParams::h_bs)
        .def_readwrite("h_user", &ScenarioParams::h_user)
        .def_readwrite("l_min", &ScenarioParams::l_min)
        .def_readwrite("l_max", &ScenarioParams::l_max)
        .def_readwrite("h_min", &ScenarioParams::h_min)
        .def_readwrite("h_max", &ScenarioParams::h_max)
        .def("mean_length", &ScenarioParams::mean_length)
        .def("regime", &ScenarioParams::regime)
        .def("__repr__", [](const ScenarioParams& p) {
            return "ScenarioParams(lambda_=" + cli::format_number(p.lambda) + ", r=" + cli::format_number(p.r) +
                   ", d=" + cli::format_number(p.d) + ")";
        });

    py::class_<Building>(m, "Building")
        .def(py::init([](double cu, double cv, double length, double height) {
                 return Building{cu, cv, length, height};
             }),
             py::arg("cu"), py::arg("cv"), py::arg("length"), py::arg("height"))
        .def_readwrite("cu", &Building::cu)
        .def_readwrite("cv", &Building::cv)
        .def_readwrite("length", &Building::length)
        .def_readwrite("height", &Building::height);

    m.def("validate", &validate, py::arg("params"));
    m.def("baseline_params", &baseline_params, py::arg("r") = 100.0, py::arg("d") = 1000.0);

    // analytic
    py::class_<analytic::EtaPair>(m, "EtaPair")
        .def_readonly("eta_x", &analytic::EtaPair::eta_x)
        .def_readonly("eta_tilde", &analytic::EtaPair::eta_tilde)
        .def_readonly("regime", &analytic::EtaPair::regime);

    py::class_<analytic::AnalyticSummary>(m, "AnalyticSummary")
        .def_readonly("eta", &analytic::AnalyticSummary::eta)
        .def_readonly("p_los_point", &analytic::AnalyticSummary::p_los_point)
        .def_readonly("p_nlos_point", &analytic::AnalyticSummary::p_nlos_point)
        .def_readonly("mean_los_len", &analytic::AnalyticSummary::mean_los_len)
        .def_readonly("mean_nlos_len", &analytic::AnalyticSummary::mean_nlos_len)
        .def_readonly("density_per_m", &analytic::AnalyticSummary::density_per_m)
        .def_readonly("r_max_density", &analytic::AnalyticSummary::r_max_density)
        .def_readonly("r_equal_lengths", &analytic::AnalyticSummary::r_equal_lengths)
        .def_readonly("max_density_value", &analytic::AnalyticSummary::max_density_value)
        .def_readonly("equal_length_value", &analytic::AnalyticSummary::equal_length_value);

    m.def("eta_x", &analytic::eta_x, py::arg("params"));
    m.def("eta_tilde", &analytic::eta_tilde, py::arg("params"));
    m.def("eta_x_quadrature", &analytic::eta_x_quadrature, py::arg("params"), py::arg("n_points") = 10000);
    m.def("eta_tilde_quadrature", &analytic::eta_tilde_quadrature, py::arg("params"), py::arg("n_points") = 10000);
    m.def("blocking_area_point", &analytic::blocking_area_point, py::arg("params"), py::arg("l"), py::arg("h"));
    m.def("blocking_area_segment", &analytic::blocking_area_segment, py::arg("params"), py::arg("l"), py::arg("h"),
          py::arg("z"));
    m.def("p_los_point", &analytic::p_los_point, py::arg("params"));
    m.def("p_segment_los", &analytic::p_segment_los, py::arg("params"), py::arg("z"));
    m.def("cdf_los_bound", &analytic::cdf_los_bound, py::arg("params"), py::arg("z"));
    m.def("pdf_los_approx", &analytic::pdf_los_approx, py::arg("params"), py::arg("z"));
    m.def("mean_los_length", &analytic::mean_los_length, py::arg("params"));
    m.def("mean_nlos_length", &analytic::mean_nlos_length, py::arg("params"));
    m.def("interval_density", &analytic::interval_density, py::arg("params"));
    m.def(
        "critical_radii",
        [](const ScenarioParams& p) {
            const auto radii = analytic::critical_radii(p);
            return py::make_tuple(radii.r_max_density, radii.r_equal);
        },
        py::arg("params"));
    m.def("summarize", &analytic::summarize, py::arg("params"));

    // geometry
    py::enum_<geometry::Kind>(m, "Kind").value("LOS", geometry::Kind::Los).value("NLOS", geometry::Kind::Nlos);

    py::class_<geometry::Interval>(m, "Interval")
        .def_readonly("start", &geometry::Interval::start)
        .def_readonly("end", &geometry::Interval::end)
        .def_readonly("kind", &geometry::Interval::kind)
        .def_readonly("censored", &geometry::Interval::censored)
        .def_property_readonly("length", &geometry::Interval::length)
        .def("__repr__", [](const geometry::Interval& iv) {
            return std::string("Interval(") + geometry::to_string(iv.kind) + ", " + cli::format_number(iv.start) +
                   ", " + cli::format_number(iv.end) + (iv.censored ? ", censored)" : ")");
        });

    m.def(
        "shadow_of_building",
        [](const Building& b, const ScenarioParams& p) -> std::optional<std::pair<double, double>> {
            if (auto s = geometry::shadow_of_building(b, p)) return std::make_pair(s->lo, s->hi);
            return std::nullopt;
        },
        py::arg("building"), py::arg("params"));
    m.def(
        "merge_shadows",
        [](const std::vector<std::pair<double, double>>& shadows, double d) {
            std::vector<geometry::Shadow> s;
            for (const auto& [lo, hi] : shadows) s.push_back({lo, hi});
            return intervals_to_list(geometry::merge_shadows(s, d));
        },
        py::arg("shadows"), py::arg("d"));
    m.def(
        "extract_intervals",
        [](const std::vector<Building>& scene, const ScenarioParams& p) {
            return intervals_to_list(geometry::extract_intervals(scene, p));
        },
        py::arg("buildings"), py::arg("params"));
    m.def(
        "brute_force_intervals",
        [](const std::vector<Building>& scene, const ScenarioParams& p, double step) {
            return intervals_to_list(geometry::brute_force_intervals(scene, p, step));
        },
        py::arg("buildings"), py::arg("params"), py::arg("step"));

    // montecarlo
    py::class_<montecarlo::RunStats>(m, "RunStats")
        .def_readonly("los_lengths", &montecarlo::RunStats::los_lengths)
        .def_readonly("nlos_lengths", &montecarlo::RunStats::nlos_lengths)
        .def_readonly("n_los_intervals", &montecarlo::RunStats::n_los_intervals)
        .def_readonly("n_nlos_intervals", &montecarlo::RunStats::n_nlos_intervals)
        .def_readonly("n_los_censored", &montecarlo::RunStats::n_los_censored)
        .def_readonly("n_nlos_censored", &montecarlo::RunStats::n_nlos_censored)
        .def_readonly("total_trajectory_length", &montecarlo::RunStats::total_trajectory_length)
        .def_readonly("n_trials", &montecarlo::RunStats::n_trials)
        .def_property_readonly("point_los_frequency", &montecarlo::RunStats::point_los_frequency)
        .def_property_readonly("los_density", &montecarlo::RunStats::los_density)
        .def_property_readonly("nlos_density", &montecarlo::RunStats::nlos_density)
        .def_property_readonly("mean_los_length", &montecarlo::RunStats::mean_los_length)
        .def_property_readonly("mean_nlos_length", &montecarlo::RunStats::mean_nlos_length);

    m.def(
        "run_trials",
        [](const ScenarioParams& p, std::uint64_t n_trials, std::uint64_t seed, bool include_censored,
           unsigned threads) {
            montecarlo::TrialConfig config{p, n_trials, seed, include_censored, threads};
            py::gil_scoped_release release;
            return montecarlo::run_trials(config);
        },
        py::arg("params"), py::arg("n_trials"), py::arg("seed") = 0, py::arg("include_censored") = false,
        py::arg("threads") = 1);
    m.def(
        "sample_scene",
        [](const ScenarioParams& p, std::uint64_t seed, std::uint64_t index) {
            return montecarlo::trial_scene(p, seed, index);
        },
        py::arg("params"), py::arg("seed") = 0, py::arg("index") = 0);
    m.def(
        "empirical_cdf",
        [](const std::vector<double>& samples, const std::vector<double>& grid) {
            std::vector<double> out;
            for (const auto& point : montecarlo::empirical_cdf(samples, grid)) out.push_back(point.value);
            return out;
        },
        py::arg("samples"), py::arg("grid"));

    py::class_<montecarlo::SweepRow>(m, "SweepRow")
        .def_readonly("r", &montecarlo::SweepRow::r)
        .def_readonly("los_density", &montecarlo::SweepRow::los_density)
        .def_readonly("nlos_density", &montecarlo::SweepRow::nlos_density)
        .def_readonly("mean_z", &montecarlo::SweepRow::mean_z)
        .def_readonly("mean_s", &montecarlo::SweepRow::mean_s)
        .def_readonly("point_los_frequency", &montecarlo::SweepRow::point_los_frequency);
    m.def(
        "density_sweep",
        [](const ScenarioParams& p, const std::vector<double>& r_values, std::uint64_t n_trials, std::uint64_t seed,
           bool include_censored, unsigned threads) {
            py::gil_scoped_release release;
            return montecarlo::density_sweep(p, r_values, n_trials, seed, include_censored, threads);
        },
        py::arg("params"), py::arg("r_values"), py::arg("n_trials"), py::arg("seed") = 0,
        py::arg("include_censored") = false, py::arg("threads") = 1);

    // layout
    m.def("effective_line_factor", &layout::effective_line_factor, py::arg("r"));
    m.def(
        "estimate_density", [](const std::string& json_text) { return layout::estimate_density(layout::parse_layout(json_text)); },
        py::arg("layout_json"));
    m.def(
        "evaluate_layout",
        [](const std::string& json_text, double bs_u, double bs_v, double h_bs, double r, double u_lo, double u_hi,
           double h_user, int side, double thinning, std::uint64_t thinning_seed) {
            layout::LayoutQuery q{bs_u, bs_v, h_bs, r, side, u_lo, u_hi, h_user, thinning, thinning_seed};
            return intervals_to_list(layout::evaluate_layout(layout::parse_layout(json_text), q).intervals);
        },
        py::arg("layout_json"), py::arg("bs_u"), py::arg("bs_v"), py::arg("h_bs"), py::arg("r"), py::arg("u_lo"),
        py::arg("u_hi"), py::arg("h_user"), py::arg("side") = 1, py::arg("thinning") = 1.0,
        py::arg("thinning_seed") = 0);
    m.def(
        "scene_to_layout_json",
        [](const std::vector<Building>& scene, const ScenarioParams& p) {
            return layout::to_json(layout::scene_to_layout(scene, p));
        },
        py::arg("buildings"), py::arg("params"));

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
