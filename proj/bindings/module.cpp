#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rrfilt/analyzer.hpp"
#include "rrfilt/oracle.hpp"

namespace py = pybind11;
using namespace rrfilt;

namespace {

std::string ideal_repr(const NormalizedIdeal& e) {
    std::ostringstream os;
    os << "NormalizedIdeal(min=" << e.min() << ", conductor=" << e.conductor() << ", members=[";
    const auto mem = e.window_members();
    for (std::size_t j = 0; j < mem.size(); ++j) os << (j ? ", " : "") << mem[j];
    os << "])";
    return os.str();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Ratliff-Rush filtration kernel for numerical semigroup rings";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);

    py::class_<NumericalSemigroup, std::shared_ptr<NumericalSemigroup>>(m, "NumericalSemigroup")
        .def(py::init<std::vector<std::int64_t>>(), py::arg("generators"))
        .def_property_readonly("generators", &NumericalSemigroup::generators)
        .def_property_readonly("multiplicity", &NumericalSemigroup::multiplicity)
        .def_property_readonly("frobenius", &NumericalSemigroup::frobenius)
        .def_property_readonly("conductor", &NumericalSemigroup::conductor)
        .def_property_readonly("genus", &NumericalSemigroup::genus)
        .def("gaps", &NumericalSemigroup::gaps)
        .def("contains", &NumericalSemigroup::contains, py::arg("z"))
        .def("apery_set", &NumericalSemigroup::apery_set, py::arg("a"))
        .def("is_symmetric", &NumericalSemigroup::is_symmetric)
        .def("__eq__", [](const NumericalSemigroup& a, const NumericalSemigroup& b) { return a == b; })
        .def("__repr__", [](const NumericalSemigroup& s) {
            std::ostringstream os;
            os << "NumericalSemigroup(<";
            const auto& g = s.generators();
            for (std::size_t j = 0; j < g.size(); ++j) os << (j ? "," : "") << g[j];
            os << ">)";
            return os.str();
        });

    py::class_<NormalizedIdeal>(m, "NormalizedIdeal")
        .def_static("from_generators",
                    [](std::shared_ptr<NumericalSemigroup> s, const std::vector<std::int64_t>& gens) {
                        return NormalizedIdeal::from_generators(std::move(s), gens);
                    },
                    py::arg("semigroup"), py::arg("generators"))
        .def_static("semigroup_ideal",
                    [](std::shared_ptr<NumericalSemigroup> s) { return NormalizedIdeal::semigroup_ideal(std::move(s)); },
                    py::arg("semigroup"))
        .def_static("maximal_ideal",
                    [](std::shared_ptr<NumericalSemigroup> s) { return NormalizedIdeal::maximal_ideal(std::move(s)); },
                    py::arg("semigroup"))
        .def_static("canonical_ideal",
                    [](std::shared_ptr<NumericalSemigroup> s) { return NormalizedIdeal::canonical_ideal(std::move(s)); },
                    py::arg("semigroup"))
        .def_property_readonly("min", &NormalizedIdeal::min)
        .def_property_readonly("conductor", &NormalizedIdeal::conductor)
        .def("contains", &NormalizedIdeal::contains, py::arg("z"))
        .def("members", &NormalizedIdeal::window_members)
        .def("__eq__", [](const NormalizedIdeal& a, const NormalizedIdeal& b) { return a == b; })
        .def("__repr__", &ideal_repr);

    m.def("product", &product);
    m.def("power", &power, py::arg("ideal"), py::arg("n"));
    m.def("shift", &shift, py::arg("ideal"), py::arg("c"));
    m.def("ideal_sum", &sum);
    m.def("intersect", &intersect);
    m.def("colon_z", &colon_z);
    m.def("colon_in", &colon_in);
    m.def("minimal_generators", &minimal_generators);
    m.def("quotient_length", &quotient_length);
    m.def("integral_closure_power", &integral_closure_power, py::arg("ideal"), py::arg("t"));

    py::class_<ReductionIndex>(m, "ReductionIndex")
        .def_readonly("v_min", &ReductionIndex::v_min)
        .def_readonly("r_x", &ReductionIndex::r_x)
        .def("__repr__", [](const ReductionIndex& r) {
            return "ReductionIndex(v_min=" + std::to_string(r.v_min) + ", r_x=" + std::to_string(r.r_x) + ")";
        });

    py::class_<RRIndices>(m, "RRIndices")
        .def_readonly("v_min", &RRIndices::v_min)
        .def_readonly("r_x", &RRIndices::r_x)
        .def_readonly("s_star", &RRIndices::s_star)
        .def_readonly("rho", &RRIndices::rho)
        .def_readonly("s", &RRIndices::s)
        .def("__repr__", [](const RRIndices& ix) {
            std::ostringstream os;
            os << "RRIndices(s=" << ix.s << ", rho=" << ix.rho << ", s_star=" << ix.s_star
               << ", r_x=" << ix.r_x << ", v_min=" << ix.v_min << ")";
            return os.str();
        });

    m.def("reduction_index", &reduction_index);
    m.def("rr_ideal", &rr_ideal, py::arg("ideal"), py::arg("t"), py::arg("module"));
    m.def("rr_closure", &rr_closure, py::arg("ideal"), py::arg("t"));
    m.def("rr_module_closure", &rr_module_closure, py::arg("ideal"), py::arg("t"), py::arg("module"));
    m.def("indices", &indices, py::arg("ideal"), py::arg("t"), py::arg("module"));

    py::class_<DepthWitness>(m, "DepthWitness")
        .def_readonly("n", &DepthWitness::n)
        .def_readonly("element", &DepthWitness::element);

    py::class_<StableWindow>(m, "StableWindow")
        .def_readonly("r_x", &StableWindow::r_x)
        .def_readonly("members", &StableWindow::members)
        .def_readonly("n_star", &StableWindow::n_star);

    py::class_<QuasiHilbertReport>(m, "QuasiHilbertReport")
        .def_readonly("gorenstein", &QuasiHilbertReport::gorenstein)
        .def_readonly("depth_positive", &QuasiHilbertReport::depth_positive)
        .def_readonly("witness", &QuasiHilbertReport::witness)
        .def_readonly("v_min", &QuasiHilbertReport::v_min)
        .def_readonly("r_x", &QuasiHilbertReport::r_x)
        .def_readonly("e_series_tilde", &QuasiHilbertReport::e_series_tilde)
        .def_readonly("e_series_power", &QuasiHilbertReport::e_series_power)
        .def_readonly("stable_window", &QuasiHilbertReport::stable_window)
        .def_readonly("n_star", &QuasiHilbertReport::n_star)
        .def_readonly("eventual_length", &QuasiHilbertReport::eventual_length)
        .def_readonly("quasi_hilbert", &QuasiHilbertReport::quasi_hilbert)
        .def_readonly("hilbert_mod_x", &QuasiHilbertReport::hilbert_mod_x)
        .def_readonly("note", &QuasiHilbertReport::note);

    m.def("depth_positive", [](std::shared_ptr<NumericalSemigroup> s) {
        const DepthReport rep = depth_positive(std::move(s));
        return py::make_tuple(rep.positive, rep.witness);
    });
    m.def("e_series", [](std::shared_ptr<NumericalSemigroup> s, std::int64_t n_max) {
        return e_series(std::move(s), n_max);
    }, py::arg("semigroup"), py::arg("n_max"));
    m.def("stable_window", [](std::shared_ptr<NumericalSemigroup> s) { return stable_window(std::move(s)); });
    m.def("verdict", [](std::shared_ptr<NumericalSemigroup> s, std::int64_t n_max) {
        return verdict(std::move(s), n_max);
    }, py::arg("semigroup"), py::arg("n_max") = 0);
    m.def("hilbert_fn_mod_x", [](std::shared_ptr<NumericalSemigroup> s) { return hilbert_fn_mod_x(std::move(s)); });

    py::class_<oracle::OracleReport>(m, "OracleReport")
        .def_readonly("operation", &oracle::OracleReport::operation)
        .def_readonly("instance", &oracle::OracleReport::instance)
        .def_readonly("kernel_value", &oracle::OracleReport::kernel_value)
        .def_readonly("oracle_value", &oracle::OracleReport::oracle_value)
        .def_readonly("agree", &oracle::OracleReport::agree)
        .def_readonly("margin_ok", &oracle::OracleReport::margin_ok);

    m.def("compare_suite", [](std::uint64_t seed, std::int64_t count, std::int64_t bound) {
        oracle::SuiteOptions opt;
        opt.seed = seed;
        opt.count = count;
        opt.bound = bound;
        return oracle::compare_suite(opt);
    }, py::arg("seed") = 1, py::arg("count") = 100, py::arg("bound") = 0);

#ifdef RRFILT_VERSION
    m.attr("__version__") = RRFILT_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
