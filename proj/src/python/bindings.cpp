#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lamdist/cli.hpp"
#include "lamdist/equivalence.hpp"
#include "lamdist/gandy.hpp"
#include "lamdist/properties.hpp"
#include "lamdist/reduction.hpp"
#include "lamdist/spine.hpp"
#include "lamdist/syntax.hpp"
#include "lamdist/typing.hpp"

namespace py = pybind11;
using namespace lamdist;

namespace {

// Every entry point takes terms with distinct names, like the CLI.
Term distinct(const Term& t) {
  NameSupply supply;
  supply.observe(t);
  return ensure_distinct_names(t, supply);
}

TypeContext context_arg(const py::object& ctx) {
  if (ctx.is_none()) return {};
  if (py::isinstance<py::str>(ctx)) return parse_context(ctx.cast<std::string>());
  TypeContext out;
  for (auto [k, v] : ctx.cast<py::dict>()) out.emplace(parse_name(k.cast<std::string>()), parse_type(v.cast<std::string>()));
  return out;
}

py::object verdict(Verdict v) {
  if (v == Verdict::Unknown) return py::none();
  return py::bool_(v == Verdict::True);
}

py::dict spine(const Term& t) {
  SpineAnalysis a = analyze_spine(distinct(t));
  py::list word;
  for (const SpineItem& i : a.word) {
    if (is_abs(i)) word.append(py::make_tuple("abs", binder_of(i).name.str()));
    else word.append(py::make_tuple("arg", argument_of(i)));
  }
  py::list pairs;
  for (const SpinePair& p : a.matching) pairs.append(py::make_tuple(p.arg, p.abs));
  py::dict d;
  d["head"] = a.head_var.str();
  d["word"] = word;
  d["matching"] = pairs;
  d["n_lambda"] = a.n_lambda();
  d["n_app"] = a.n_app();
  d["n_pairs"] = a.n_pairs();
  d["e_context"] = is_e_context(a);
  return d;
}

py::dict reduce(const Term& t, const std::string& rule, std::optional<std::size_t> fuel) {
  Rule r = parse_rule(rule);
  Term start = distinct(t);
  NameSupply supply;
  supply.observe(start);
  Normalization n = normalize(start, r, fuel.value_or(default_fuel(start)), supply);
  py::list steps;
  for (const TraceStep& s : n.trace.steps)
    steps.append(py::make_tuple(rule_name(s.redex.rule), path_str(s.redex.position), s.result));
  py::dict d;
  d["term"] = n.term;
  d["steps"] = steps;
  d["exhausted"] = n.exhausted;
  return d;
}

py::dict suite(const std::string& name, std::uint64_t seed, std::size_t count, std::size_t max_size) {
  GenConfig cfg;
  cfg.seed = seed;
  cfg.max_size = max_size;
  Report r = run_property_suite(name, cfg, count);
  py::list failures;
  for (const Counterexample& c : r.failures) failures.append(py::make_tuple(c.seed, c.term, c.message));
  py::dict d;
  d["suite"] = r.suite;
  d["passed"] = r.passed;
  d["failed"] = r.failed;
  d["skipped"] = r.skipped;
  d["failures"] = failures;
  return d;
}

py::tuple cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_lamdist, m) {
  m.doc() = "Lambda-calculus reduction laboratory";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<TypeError>(m, "TypeCheckError", PyExc_TypeError);

  py::class_<Term>(m, "Term")
      .def("__str__", [](const Term& t) { return print(t); })
      .def("__repr__", [](const Term& t) { return "Term(" + print(t) + ")"; })
      .def("__eq__", [](const Term& a, const Term& b) { return a == b; })
      .def("__hash__", [](const Term& t) { return std::hash<std::string>{}(print(t)); })
      .def_property_readonly("size", &Term::size)
      .def_property_readonly("kind", [](const Term& t) {
        return t.is_var() ? "var" : t.is_abs() ? "abs" : "app";
      });

  m.def("parse", &parse, py::arg("text"));
  m.def("print_term", [](const Term& t) { return print(t); }, py::arg("term"));
  m.def("distinct_names", &distinct, py::arg("term"), "rename binders to satisfy the distinct-names property");
  m.def("has_distinct_names", &has_distinct_names, py::arg("term"));
  m.def("free_vars", [](const Term& t) {
    std::vector<std::string> out;
    for (const Name& n : free_vars(t)) out.push_back(n.str());
    return out;
  }, py::arg("term"));
  m.def("alpha_eq", &alpha_eq, py::arg("t"), py::arg("s"));

  m.def("spine", &spine, py::arg("term"));
  m.def("canon", [](const Term& t) { return head_canonical(distinct(t)).render(); }, py::arg("term"));
  m.def("normalize_e", [](const Term& t, const std::string& order, std::uint64_t seed) {
    ESelector sel = order == "leftmost" ? ESelector::leftmost()
                    : order == "rightmost" ? ESelector::rightmost()
                    : order == "random" ? ESelector::random(seed)
                    : throw std::invalid_argument("order must be leftmost, rightmost or random");
    return normalize_e(distinct(t), sel);
  }, py::arg("term"), py::arg("order") = "leftmost", py::arg("seed") = 1);
  m.def("equivalent", [](const Term& t, const Term& s, const std::string& rel, std::size_t fuel) {
    return verdict(equivalent(distinct(t), distinct(s), parse_relation(rel), fuel));
  }, py::arg("t"), py::arg("s"), py::arg("rel") = "sigma", py::arg("fuel") = 0,
     "True or False, or None when beta runs out of fuel");

  m.def("reduce", &reduce, py::arg("term"), py::arg("rule"), py::arg("fuel") = py::none());

  m.def("typecheck", [](const Term& t, const py::object& ctx) { return infer(t, context_arg(ctx)).str(); },
        py::arg("term"), py::arg("ctx") = py::none());
  m.def("measure", [](const Term& t, const py::object& ctx) {
    Term u = distinct(t);
    Nat mu = measure(u, default_valuation(context_arg(ctx)));
    return py::int_(py::str(mu.str()));
  }, py::arg("term"), py::arg("ctx") = py::none());

  m.def("suite_names", &suite_names);
  m.def("run_suite", &suite, py::arg("name"), py::arg("seed") = 1, py::arg("count") = 100, py::arg("max_size") = 20);
  m.def("cli", &cli, py::arg("args"), "run the command line tool; returns (exit code, stdout, stderr)");
}
