#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "gridwlp/field.hpp"
#include "gridwlp/geometry.hpp"
#include "gridwlp/ideals.hpp"
#include "gridwlp/lefschetz.hpp"
#include "gridwlp/matrix.hpp"
#include "gridwlp/predictor.hpp"
#include "gridwlp/report.hpp"
#include "gridwlp/suite.hpp"

namespace py = pybind11;
using namespace gridwlp;

namespace {

// Every entry point returns JSON text; the Python package decodes it.
struct Options {
    int a = 0;
    std::optional<int> b;
    std::uint64_t prime = kDefaultPrime;
    bool rational = false;
    int trials = 3;
    std::uint64_t seed = RandomSeed{}.value;
    std::string params;

    RandomSeed random_seed() const { return RandomSeed{seed}; }
    std::uint64_t prime_or_zero() const { return rational ? 0 : prime; }

    template <class F>
    GridConfig<F> grid(const F& field) const {
        if (!params.empty()) {
            const auto spec = parse_grid_spec(params);
            return make_grid(field, spec.u, spec.v);
        }
        if (a < 1) throw std::invalid_argument("need a >= 1 or explicit params");
        return seeded_grid(field, a, b.value_or(a), random_seed());
    }

    template <class Fn>
    std::string dispatch(Fn&& fn) const {
        if (rational) return fn(RationalField{});
        return fn(PrimeField(prime));
    }
};

std::string wlp(const Options& o, int d) {
    return o.dispatch([&](const auto& field) {
        auto r = wlp_test(field, o.grid(field), d, o.trials, o.random_seed());
        r.prime = o.prime_or_zero();
        return to_json(r).dump();
    });
}

std::string hilbert(const Options& o, int d) {
    return o.dispatch([&](const auto& field) { return to_json(hilbert_table(*powers_quotient(field, o.grid(field), d))).dump(); });
}

std::string coker(const Options& o, int d, int t) {
    return o.dispatch([&](const auto& field) {
        const auto grid = o.grid(field);
        const auto q = powers_quotient(field, grid, d);
        MultMapReport best;
        for (int i = 0; i < o.trials; ++i) {
            const auto r = mult_map_report(*q, generic_form(field, o.random_seed(), i), t);
            if (i == 0 || r.rank > best.rank) best = r;
        }
        const auto predicted = t >= d ? coker_formula_geproci(grid.a(), grid.b(), d, t - d) : std::nullopt;
        Json j{{"map", to_json(best)}, {"measured", best.coker}};
        j["predicted"] = predicted ? Json(*predicted) : Json(nullptr);
        return j.dump();
    });
}

std::string nll(const Options& o, int d, const std::string& locus) {
    return o.dispatch([&](const auto& field) {
        auto r = non_lefschetz_probe(field, o.grid(field), d, Locus::parse(locus), o.trials, o.random_seed());
        r.prime = o.prime_or_zero();
        return to_json(r).dump();
    });
}

std::string bx(const Options& o, int d_max) {
    return o.dispatch([&](const auto& field) {
        const auto grid = o.grid(field);
        BxSequence seq{grid.a(), grid.b(), d_max, {}};
        for (int d = 1; d <= d_max; ++d) seq.bits.push_back(wlp_test(field, grid, d, o.trials, o.random_seed()).verdict);
        return to_json(seq).dump();
    });
}

std::string verify(const Options& o, int a_max, bool cross_checks) {
    SuiteOptions s;
    s.prime = o.prime;
    s.rational = o.rational;
    s.a_max = a_max;
    s.trials = o.trials;
    s.seed = o.random_seed();
    s.cross_checks = cross_checks;
    SuiteResult result;
    {
        py::gil_scoped_release release;
        result = run_acceptance_suite(s);
    }
    Json checks = Json::array();
    for (const auto& c : result.checks) {
        checks.push_back(Json{{"id", c.id},
                              {"name", c.name},
                              {"pass", c.pass},
                              {"knownDeviation", c.known_deviation},
                              {"expected", c.expected},
                              {"computed", c.computed},
                              {"note", c.note}});
    }
    return Json{{"checks", checks}, {"allPass", result.all_pass()}, {"acceptable", result.acceptable()}}.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Weak Lefschetz computations for grids on a quadric";
    py::register_exception<DimensionCapExceeded>(m, "DimensionCapExceeded");
    py::register_exception<FieldError>(m, "FieldError", PyExc_ValueError);

    py::class_<Options>(m, "Options")
        .def(py::init<>())
        .def_readwrite("a", &Options::a)
        .def_readwrite("b", &Options::b)
        .def_readwrite("prime", &Options::prime)
        .def_readwrite("rational", &Options::rational)
        .def_readwrite("trials", &Options::trials)
        .def_readwrite("seed", &Options::seed)
        .def_readwrite("params", &Options::params);

    m.attr("DEFAULT_PRIME") = kDefaultPrime;
    m.attr("DEFAULT_SEED") = RandomSeed{}.value;
    m.def("wlp", &wlp, py::arg("options"), py::arg("d"));
    m.def("hilbert", &hilbert, py::arg("options"), py::arg("d"));
    m.def("coker", &coker, py::arg("options"), py::arg("d"), py::arg("t"));
    m.def("nll", &nll, py::arg("options"), py::arg("d"), py::arg("locus"));
    m.def("bx", &bx, py::arg("options"), py::arg("d_max"));
    m.def("verify", &verify, py::arg("options"), py::arg("a_max") = 5, py::arg("cross_checks") = true);
    m.def("coker_formula", &coker_formula_geproci, py::arg("a"), py::arg("b"), py::arg("d"), py::arg("t"));
    m.def("wlp_verdict_square", &wlp_verdict_theorem_a, py::arg("a"), py::arg("d"));
}
