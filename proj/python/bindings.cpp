// Python bindings for the radial Dirac laboratory.  The module mirrors the
// C++ value types one-to-one and keeps every operation a pure function of its
// arguments, so scripted experiments stay as reproducible as the CLI.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tuple>

#include "nldirac/decay.hpp"
#include "nldirac/dynamics.hpp"
#include "nldirac/errors.hpp"
#include "nldirac/grid.hpp"
#include "nldirac/oracles.hpp"
#include "nldirac/spinor.hpp"
#include "nldirac/virial.hpp"
#include "nldirac/weights.hpp"

namespace py = pybind11;
using namespace nldirac;

PYBIND11_MODULE(_nldirac, mod) {
    mod.doc() =
        "Numerical laboratory for the radial 2D nonlinear Dirac system: "
        "grids, virial weights, evolutions, and verification reports.";

    py::register_exception<ConfigError>(mod, "ConfigError", PyExc_ValueError);
    py::register_exception<DomainError>(mod, "DomainError", PyExc_ValueError);

    // ---- grid and quadrature ------------------------------------------------
    py::class_<RadialGrid>(mod, "RadialGrid")
        .def_readonly("n", &RadialGrid::n)
        .def_readonly("rmax", &RadialGrid::rmax)
        .def_readonly("h", &RadialGrid::h)
        .def_readonly("r", &RadialGrid::r)
        .def("__repr__", [](const RadialGrid& g) {
            return "RadialGrid(n=" + std::to_string(g.n) +
                   ", rmax=" + std::to_string(g.rmax) + ")";
        });
    mod.def("make_grid", [](double rmax, std::size_t n) { return make_grid(rmax, n); },
            py::arg("rmax"), py::arg("n"));
    mod.def("integrate_dr", &integrate_dr, py::arg("grid"), py::arg("f"));
    mod.def("integrate_rdr", &integrate_rdr, py::arg("grid"), py::arg("f"));
    mod.def("derivative", &derivative, py::arg("grid"), py::arg("f"));

    // ---- virial weights -----------------------------------------------------
    py::enum_<WeightFamily>(mod, "WeightFamily")
        .value("Strong", WeightFamily::Strong)
        .value("Delta", WeightFamily::Delta)
        .value("HWeight", WeightFamily::HWeight);
    py::class_<Weight>(mod, "Weight")
        .def(py::init<>())
        .def(py::init([](WeightFamily family, double delta) {
                 return Weight{family, delta};
             }),
             py::arg("family"), py::arg("delta") = 0.1)
        .def_readwrite("family", &Weight::family)
        .def_readwrite("delta", &Weight::delta);
    py::class_<WeightSample>(mod, "WeightSample")
        .def_readonly("phi", &WeightSample::phi)
        .def_readonly("d1", &WeightSample::d1)
        .def_readonly("d2", &WeightSample::d2)
        .def_readonly("d3", &WeightSample::d3);
    mod.def("eval_weight",
            [](const Weight& w, double r) { return eval_weight(w, r); },
            py::arg("weight"), py::arg("r"));
    mod.def("combo_gradient", &combo_gradient, py::arg("weight"), py::arg("r"));
    mod.def("combo_quadratic", &combo_quadratic, py::arg("weight"), py::arg("K"),
            py::arg("r"));
    mod.def("m1_coefficient", &m1_coefficient, py::arg("S"), py::arg("r"),
            py::arg("epsilon"), py::arg("C"));
    mod.def("verify_weight_identities", &verify_weight_identities,
            py::arg("weight"), py::arg("grid"));
    mod.def("fd_cross_check", &fd_cross_check, py::arg("weight"), py::arg("grid"),
            py::arg("step"));

    // ---- fields and models --------------------------------------------------
    py::class_<SpinorField>(mod, "SpinorField")
        .def(py::init<>())
        .def_static("zeros", &SpinorField::zeros, py::arg("n"))
        .def_readwrite("p11", &SpinorField::p11)
        .def_readwrite("p12", &SpinorField::p12)
        .def_readwrite("p21", &SpinorField::p21)
        .def_readwrite("p22", &SpinorField::p22)
        .def("size", &SpinorField::size);
    mod.def("modulus_squared", &modulus_squared, py::arg("field"));
    mod.def("gradient_squared", &gradient_squared, py::arg("grid"), py::arg("field"));

    py::enum_<Nonlinearity>(mod, "Nonlinearity")
        .value("Zero", Nonlinearity::Zero)
        .value("Honeycomb", Nonlinearity::Honeycomb)
        .value("Soler", Nonlinearity::Soler)
        .value("PurePower", Nonlinearity::PurePower);
    py::class_<ModelSpec>(mod, "ModelSpec")
        .def(py::init<>())
        .def_readwrite("mass", &ModelSpec::mass)
        .def_readwrite("vorticity", &ModelSpec::vorticity)
        .def_readwrite("family", &ModelSpec::family)
        .def_readwrite("g", &ModelSpec::g)
        .def_readwrite("beta1", &ModelSpec::beta1)
        .def_readwrite("beta2", &ModelSpec::beta2)
        .def_readwrite("power", &ModelSpec::power);
    mod.def("validate_model", [](const ModelSpec& m) { validate(m); },
            py::arg("model"));
    mod.def("structural_power", &structural_power, py::arg("model"));
    mod.def("power_bound_ratio", &power_bound_ratio, py::arg("model"),
            py::arg("field"));

    py::class_<NormReport>(mod, "NormReport")
        .def_readonly("l2_rdr", &NormReport::l2_rdr)
        .def_readonly("h1_rdr", &NormReport::h1_rdr)
        .def_readonly("e_delta", &NormReport::e_delta)
        .def_readonly("l_inf", &NormReport::l_inf);
    mod.def("norms", &norms, py::arg("grid"), py::arg("field"),
            py::arg("delta") = 0.1);
    mod.def("local_l2", &local_l2, py::arg("grid"), py::arg("field"), py::arg("R"));
    mod.def("strauss_ratio", &strauss_ratio, py::arg("grid"), py::arg("field"));
    mod.def("mass", &mass, py::arg("grid"), py::arg("field"));

    // ---- evolution ----------------------------------------------------------
    py::class_<InitialData>(mod, "InitialData")
        .def(py::init<>())
        .def_readwrite("amplitude", &InitialData::amplitude)
        .def_readwrite("width", &InitialData::width)
        .def_readwrite("center", &InitialData::center)
        .def_readwrite("in_p11", &InitialData::in_p11)
        .def_readwrite("in_p12", &InitialData::in_p12)
        .def_readwrite("in_p21", &InitialData::in_p21)
        .def_readwrite("in_p22", &InitialData::in_p22);
    mod.def("make_initial", &make_initial, py::arg("grid"), py::arg("S"),
            py::arg("init"));

    py::class_<SimulationOptions>(mod, "SimulationOptions")
        .def(py::init<>())
        .def_readwrite("dt", &SimulationOptions::dt)
        .def_readwrite("tmax", &SimulationOptions::tmax)
        .def_readwrite("record_every", &SimulationOptions::record_every)
        .def_readwrite("snapshot_every", &SimulationOptions::snapshot_every)
        .def_readwrite("weight", &SimulationOptions::weight)
        .def_readwrite("delta", &SimulationOptions::delta)
        .def_readwrite("radii", &SimulationOptions::radii)
        .def_readwrite("cfl", &SimulationOptions::cfl);

    py::class_<VirialReport>(mod, "VirialReport")
        .def_readonly("j1", &VirialReport::j1)
        .def_readonly("k1t", &VirialReport::k1t)
        .def_readonly("j2", &VirialReport::j2)
        .def_readonly("k2t", &VirialReport::k2t)
        .def_readonly("j_total", &VirialReport::j_total)
        .def_readonly("h_total", &VirialReport::h_total)
        .def_readonly("n1", &VirialReport::n1)
        .def_readonly("n2", &VirialReport::n2)
        .def_readonly("n3", &VirialReport::n3)
        .def_readonly("n4", &VirialReport::n4)
        .def_readonly("dj_rhs", &VirialReport::dj_rhs)
        .def_readonly("dh_rhs", &VirialReport::dh_rhs)
        .def_readonly("dj1", &VirialReport::dj1)
        .def_readonly("dk1", &VirialReport::dk1)
        .def_readonly("dj2", &VirialReport::dj2)
        .def_readonly("dk2", &VirialReport::dk2)
        .def_readonly("dj_prop", &VirialReport::dj_prop)
        .def_readonly("coercive_grad", &VirialReport::coercive_grad)
        .def_readonly("coercive_field", &VirialReport::coercive_field);
    mod.def("virial_report", &virial_report, py::arg("grid"), py::arg("field"),
            py::arg("model"), py::arg("weight"));
    mod.def("compute_j", &compute_j, py::arg("grid"), py::arg("field"),
            py::arg("model"), py::arg("weight"));
    mod.def("compute_h", &compute_h, py::arg("grid"), py::arg("field"));

    py::class_<RunRecord>(mod, "RunRecord")
        .def_readonly("times", &RunRecord::times)
        .def_readonly("mass_series", &RunRecord::mass_series)
        .def_readonly("energy_series", &RunRecord::energy_series)
        .def_readonly("energy_defined", &RunRecord::energy_defined)
        .def_readonly("virial_series", &RunRecord::virial_series)
        .def_readonly("linf_series", &RunRecord::linf_series)
        .def_readonly("l2_rdr_series", &RunRecord::l2_rdr_series)
        .def_readonly("e_delta_series", &RunRecord::e_delta_series)
        .def_readonly("local_series", &RunRecord::local_series)
        .def_readonly("radii", &RunRecord::radii)
        .def_readonly("snapshot_times", &RunRecord::snapshot_times)
        .def_readonly("snapshots", &RunRecord::snapshots)
        .def_readonly("blowup", &RunRecord::blowup)
        .def_readonly("dt", &RunRecord::dt)
        .def_readonly("record_every", &RunRecord::record_every)
        .def_readonly("sup_linf", &RunRecord::sup_linf)
        .def_readonly("vorticity", &RunRecord::vorticity);
    mod.def("simulate", &simulate, py::arg("model"), py::arg("grid"),
            py::arg("init"), py::arg("options"));
    mod.def("simulate_from", &simulate_from, py::arg("model"), py::arg("grid"),
            py::arg("field"), py::arg("options"));

    py::class_<IdentityCheck>(mod, "IdentityCheck")
        .def_readonly("residuals", &IdentityCheck::residuals)
        .def_readonly("max_residual", &IdentityCheck::max_residual)
        .def_readonly("max_rhs", &IdentityCheck::max_rhs);
    mod.def("verify_virial_identity",
            [](const RunRecord& run, const std::string& which) {
                if (which.size() != 1)
                    throw DomainError("verify_virial_identity: which must be 'J' or 'H'");
                return verify_virial_identity(run, which[0]);
            },
            py::arg("run"), py::arg("which"));

    py::class_<CoercivityCheck>(mod, "CoercivityCheck")
        .def_readonly("c_estimate", &CoercivityCheck::c_estimate)
        .def_readonly("violations", &CoercivityCheck::violations)
        .def_readonly("samples", &CoercivityCheck::samples)
        .def_readonly("applicable", &CoercivityCheck::applicable)
        .def_readonly("sup_linf", &CoercivityCheck::sup_linf);
    mod.def("coercivity_check", &coercivity_check, py::arg("run"));

    // ---- decay reporting ----------------------------------------------------
    py::class_<DecayRadiusRow>(mod, "DecayRadiusRow")
        .def_readonly("R", &DecayRadiusRow::R)
        .def_readonly("initial", &DecayRadiusRow::initial)
        .def_readonly("terminal", &DecayRadiusRow::terminal)
        .def_readonly("running_max", &DecayRadiusRow::running_max)
        .def_readonly("terminal_over_max", &DecayRadiusRow::terminal_over_max);
    py::class_<DecayReport>(mod, "DecayReport")
        .def_readonly("radii", &DecayReport::radii)
        .def_readonly("h_domination_worst", &DecayReport::h_domination_worst)
        .def_readonly("h_domination_violations", &DecayReport::h_domination_violations)
        .def_readonly("integrated_coercive", &DecayReport::integrated_coercive)
        .def_readonly("j_sup", &DecayReport::j_sup)
        .def_readonly("e_delta_sup", &DecayReport::e_delta_sup)
        .def_readonly("j_bound_ratio", &DecayReport::j_bound_ratio);
    mod.def("decay_report", &decay_report, py::arg("run"),
            py::arg("c_measure") = 1.0);

    py::class_<SweepRow>(mod, "SweepRow")
        .def_readonly("power", &SweepRow::power)
        .def_readonly("amplitude", &SweepRow::amplitude)
        .def_readonly("blowup", &SweepRow::blowup)
        .def_readonly("sup_linf", &SweepRow::sup_linf)
        .def_readonly("terminal_l2", &SweepRow::terminal_l2)
        .def_readonly("final_time", &SweepRow::final_time);
    mod.def("threshold_sweep", &threshold_sweep, py::arg("base"), py::arg("grid"),
            py::arg("init"), py::arg("options"), py::arg("powers"),
            py::arg("amplitudes"));

    // ---- closed-form oracles ------------------------------------------------
    py::class_<TestFunction>(mod, "TestFunction")
        .def(py::init([](const std::vector<std::tuple<double, int, double>>& terms) {
                 TestFunction f;
                 for (const auto& [a, q, b] : terms)
                     f.terms.push_back(TestFunction::Term{a, q, b});
                 validate(f);
                 return f;
             }),
             py::arg("terms"),
             "Sum of a * r^q * exp(-b r) terms given as (a, q, b) tuples; "
             "q >= 2 and b > 0.")
        .def("value", &TestFunction::value, py::arg("r"))
        .def("deriv1", &TestFunction::deriv1, py::arg("r"))
        .def("deriv2", &TestFunction::deriv2, py::arg("r"));
    py::class_<IdentityValue>(mod, "IdentityValue")
        .def_readonly("lhs", &IdentityValue::lhs)
        .def_readonly("rhs", &IdentityValue::rhs)
        .def_readonly("residual", &IdentityValue::residual);
    mod.def("second_order_identity", &second_order_identity, py::arg("f"),
            py::arg("weight"), py::arg("K"), py::arg("grid"), py::arg("which"));
    mod.def("pairing_residual", &pairing_residual, py::arg("f"), py::arg("weight"),
            py::arg("grid"));

    mod.attr("STATIC_COUPLING_SIGN") = py::int_(kStaticCouplingSign);
    mod.def("static_profile_V", &static_profile_V, py::arg("S"), py::arg("r"));
    mod.def("static_profile_U", &static_profile_U, py::arg("S"), py::arg("r"));
    mod.def("static_profile",
            [](int S, double lam, const RadialGrid& g) {
                return static_profile(StaticProfileSpec{S, lam}, g);
            },
            py::arg("S"), py::arg("lam"), py::arg("grid"));
    mod.def("static_residual", &static_residual, py::arg("grid"), py::arg("profile"),
            py::arg("S"), py::arg("coupling_sign") = kStaticCouplingSign);

    py::class_<SmallnessRow>(mod, "SmallnessRow")
        .def_readonly("lam", &SmallnessRow::lambda)
        .def_readonly("l_inf", &SmallnessRow::l_inf)
        .def_readonly("l2_rdr", &SmallnessRow::l2_rdr);
    mod.def("smallness_report", &smallness_report, py::arg("S"), py::arg("grid"));

    mod.def("bessel_field", &bessel_field, py::arg("grid"), py::arg("S"),
            py::arg("k"), py::arg("t"));
}
