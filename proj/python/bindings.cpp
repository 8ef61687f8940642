// Python bindings. Exact values cross the boundary as rational strings
// ("p/q"), structured results as JSON text; the pure-python wrapper turns
// those into Fraction and dict.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "longrun/axioms.hpp"
#include "longrun/evaluate.hpp"
#include "longrun/ordering.hpp"
#include "longrun/rational.hpp"
#include "longrun/reports.hpp"
#include "longrun/stream.hpp"
#include "longrun/streamspec.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace py = pybind11;
using namespace longrun;

namespace {

std::vector<std::string> format_all(const std::vector<Rational>& xs) {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (const Rational& x : xs) out.push_back(format_rational(x));
    return out;
}

EpStream ep_from_spec(const std::string& text) {
    AnyStream any = parse_stream_spec_text(text);
    if (!std::holds_alternative<EpStream>(any))
        throw StreamSpecError("spec describes a generator, not an exact stream");
    return std::get<EpStream>(any);
}

EpStream ep_from_lists(const std::vector<std::string>& head,
                       const std::vector<std::string>& cycle) {
    std::vector<Rational> h, c;
    for (const std::string& x : head) h.push_back(parse_rational(x));
    for (const std::string& x : cycle) c.push_back(parse_rational(x));
    return EpStream::make(std::move(h), std::move(c));
}

}  // namespace

PYBIND11_MODULE(_longrun, m) {
    m.doc() = "exact and numerical evaluation of infinite utility streams";

    py::register_exception<StreamSpecError>(m, "StreamSpecError", PyExc_ValueError);
    py::register_exception<BoundViolation>(m, "BoundViolation", PyExc_RuntimeError);

    py::class_<EpStream>(m, "EpStream")
        .def(py::init(&ep_from_lists), py::arg("head"), py::arg("cycle"))
        .def_static("from_spec", &ep_from_spec, py::arg("text"))
        .def("spec", [](const EpStream& s) { return stream_spec_json(s).dump(); })
        .def("head", [](const EpStream& s) { return format_all(s.head()); })
        .def("cycle", [](const EpStream& s) { return format_all(s.cycle()); })
        .def("value_at",
             [](const EpStream& s, std::int64_t t) { return format_rational(s.value_at(t)); },
             py::arg("t"))
        .def("partial_sum",
             [](const EpStream& s, std::int64_t T) { return format_rational(s.partial_sum(T)); },
             py::arg("T"))
        .def("__eq__", [](const EpStream& a, const EpStream& b) { return a == b; })
        .def("__ne__", [](const EpStream& a, const EpStream& b) { return a != b; })
        .def("__repr__", [](const EpStream& s) {
            return "EpStream(" + stream_spec_json(s).dump() + ")";
        });

    m.def("tail", [](const EpStream& s, std::int64_t T) { return tail(s, T); },
          py::arg("s"), py::arg("T"));
    m.def("add", [](const EpStream& a, const EpStream& b) { return add(a, b); },
          py::arg("u"), py::arg("v"));
    m.def("scale",
          [](const EpStream& s, const std::string& c) { return scale(s, parse_rational(c)); },
          py::arg("s"), py::arg("c"));
    m.def("replicate_prefix",
          [](const EpStream& s, std::int64_t T) { return replicate_prefix(s, T); },
          py::arg("s"), py::arg("T"));

    m.def("partial_mean",
          [](const EpStream& s, std::int64_t T) { return format_rational(partial_mean(s, T)); },
          py::arg("s"), py::arg("T"));
    m.def("cesaro_average",
          [](const EpStream& s) { return format_rational(cesaro_average(s)); }, py::arg("s"));
    m.def("discounted_value_exact",
          [](const EpStream& s, const std::string& delta) {
              return format_rational(discounted_value_exact(s, parse_rational(delta)));
          },
          py::arg("s"), py::arg("delta"));
    m.def("discounted_value",
          [](const EpStream& s, double delta) { return discounted_value(s, delta); },
          py::arg("s"), py::arg("delta"));
    m.def("kstep_mean_bounds",
          [](const EpStream& s, int kmax, std::int64_t horizon) {
              auto [lo, hi] = kstep_mean_bounds(s, kmax, horizon);
              return py::make_tuple(format_rational(lo), format_rational(hi));
          },
          py::arg("s"), py::arg("kmax") = 4, py::arg("horizon") = (std::int64_t{1} << 20));
    m.def("abel_identity_residual",
          [](const EpStream& s, double delta, std::int64_t N) {
              return abel_identity_residual(s, delta, N);
          },
          py::arg("s"), py::arg("delta"), py::arg("N"));

    m.def("compare_json",
          [](const std::string& rule_id, const EpStream& u, const EpStream& v) {
              const Rule& rule = builtin_rule(rule_id);
              return comparison_json(rule.compare(u, v)).dump();
          },
          py::arg("rule"), py::arg("u"), py::arg("v"));
    m.def("brute_compare_json",
          [](const EpStream& u, const EpStream& v, const std::string& criterion,
             std::int64_t horizon, int kmax) {
              Criterion c;
              if (criterion == "catching_up") c = Criterion::CatchingUp;
              else if (criterion == "fixed_step") c = Criterion::FixedStep;
              else throw std::invalid_argument("criterion must be catching_up or fixed_step");
              return comparison_json(brute_force_compare(u, v, c, horizon, kmax)).dump();
          },
          py::arg("u"), py::arg("v"), py::arg("criterion"), py::arg("horizon") = 2000,
          py::arg("kmax") = 12);

    m.def("rule_ids", &builtin_rule_ids);
    m.def("axiom_ids", [] { return axiom_ids(); });
    m.def("test_axiom_json",
          [](const std::string& rule_id, const std::string& axiom_id, std::int64_t trials,
             std::uint64_t seed, std::size_t corpus_size) {
              HarnessConfig cfg;
              cfg.trials = trials;
              cfg.seed = seed;
              AxiomReport r = test_axiom(builtin_rule(rule_id), axiom_id,
                                         make_corpus(corpus_size, seed), cfg);
              return axiom_report_json(r).dump();
          },
          py::arg("rule"), py::arg("axiom"), py::arg("trials") = 200, py::arg("seed") = 1,
          py::arg("corpus_size") = 500);
    m.def("search_json",
          [](const std::string& property_id, std::uint64_t seed, std::int64_t budget) {
              return search_result_json(search_counterexample(property_id, seed, budget)).dump();
          },
          py::arg("property"), py::arg("seed") = 1, py::arg("budget") = 10000);
}
