// Python bindings for the core library. The surface mirrors the C++ API:
// immutable Value objects, the kernel operations, text parsing/rendering,
// bounded universes and the axiom suite. Exceptions map onto a small
// hierarchy rooted at smx.SmxError.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "smx/axioms.hpp"
#include "smx/errors.hpp"
#include "smx/eval.hpp"
#include "smx/hf.hpp"
#include "smx/json_io.hpp"
#include "smx/kernel.hpp"
#include "smx/syntax.hpp"
#include "smx/universe.hpp"
#include "smx/value.hpp"

namespace py = pybind11;
using namespace smx;

namespace {

Value evaluate_text(const std::string& text, std::size_t cap) {
  Env env;
  EvalContext ctx;
  ctx.cap = cap;
  return eval_term(parse_term(text), env, ctx);
}

bool check_text(const std::string& text, const UniverseSpec& universe,
                std::size_t cap) {
  const std::vector<Value> carrier = generate_universe(universe, cap);
  Env env;
  EvalContext ctx;
  ctx.cap = cap;
  ctx.universe = &carrier;
  return eval_formula(parse_formula(text), env, ctx);
}

std::vector<std::pair<Shape, Value>> partition_pairs(const Value& x) {
  ShapePartition part = partition_by_shape(x);
  return {std::make_move_iterator(part.begin()),
          std::make_move_iterator(part.end())};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "kernel for hereditarily finite sets and set matrices";
  m.attr("DEFAULT_CAP") = kDefaultCap;

  // Base first, subclasses after: translators run newest-first, so the
  // most specific match wins.
  auto base = py::register_exception<Error>(m, "SmxError");
  py::register_exception<KindError>(m, "KindError", base);
  py::register_exception<ConstructionError>(m, "ConstructionError", base);
  py::register_exception<GuardError>(m, "GuardError", base);
  py::register_exception<CapError>(m, "CapError", base);
  py::register_exception<FunctionalityError>(m, "FunctionalityError", base);
  py::register_exception<CoverageError>(m, "CoverageError", base);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<EvalError>(m, "EvalError", base);
  py::register_exception<FragmentError>(m, "FragmentError", base);

  py::class_<Value>(m, "Value",
                    "An immutable hereditarily finite set or matrix.")
      .def(py::init<>())
      .def_property_readonly("is_set", &Value::is_set)
      .def_property_readonly("is_matrix", &Value::is_matrix)
      .def_property_readonly("rank", &Value::rank)
      .def_property_readonly("rows", &Value::rows)
      .def_property_readonly("cols", &Value::cols)
      .def("elements", &Value::elements,
           "Set elements in canonical order (sets only).")
      .def("entries", &Value::entries, "Row-major entries (matrices only).")
      .def("__len__", &Value::size)
      .def("__contains__",
           [](const Value& x, const Value& a) { return member(a, x); })
      .def("__eq__",
           [](const Value& a, const Value& b) { return values_equal(a, b); },
           py::is_operator())
      .def("__ne__",
           [](const Value& a, const Value& b) { return !values_equal(a, b); },
           py::is_operator())
      .def("__lt__",
           [](const Value& a, const Value& b) {
             return canonical_compare(a, b) < 0;
           },
           py::is_operator())
      .def("__hash__", [](const Value& v) { return value_hash(v); })
      .def("__repr__", [](const Value& v) { return render(v); });

  py::class_<Shape>(m, "Shape",
                    "A matrix skeleton: leaf for sets, grid for matrices.")
      .def_property_readonly("is_leaf", &Shape::is_leaf)
      .def_property_readonly("is_grid", &Shape::is_grid)
      .def_property_readonly("leaf_count", &Shape::leaf_count)
      .def("__eq__",
           [](const Shape& a, const Shape& b) { return a == b; },
           py::is_operator())
      .def("__repr__", [](const Shape& s) { return render_shape(s); });

  py::class_<UniverseSpec>(m, "UniverseSpec",
                           "Bounds for the finite carrier of quantifiers.")
      .def(py::init([](std::size_t rank, std::size_t width, std::size_t dims,
                       std::size_t nest) {
             UniverseSpec u;
             u.rank_bound = rank;
             u.set_width_bound = width;
             u.matrix_dim_bound = dims;
             u.nest_depth_bound = nest;
             return u;
           }),
           py::arg("rank") = 2, py::arg("width") = 2, py::arg("dims") = 2,
           py::arg("nest") = 1)
      .def_readwrite("rank", &UniverseSpec::rank_bound)
      .def_readwrite("width", &UniverseSpec::set_width_bound)
      .def_readwrite("dims", &UniverseSpec::matrix_dim_bound)
      .def_readwrite("nest", &UniverseSpec::nest_depth_bound)
      .def("__eq__",
           [](const UniverseSpec& a, const UniverseSpec& b) { return a == b; },
           py::is_operator())
      .def("__repr__", [](const UniverseSpec& u) {
        return "UniverseSpec(rank=" + std::to_string(u.rank_bound) +
               ", width=" + std::to_string(u.set_width_bound) +
               ", dims=" + std::to_string(u.matrix_dim_bound) +
               ", nest=" + std::to_string(u.nest_depth_bound) + ")";
      });

  py::class_<AxiomOutcome>(m, "AxiomOutcome")
      .def_readonly("axiom", &AxiomOutcome::axiom)
      .def_property_readonly(
          "verdict",
          [](const AxiomOutcome& o) { return verdict_name(o.verdict); })
      .def_readonly("counterexample", &AxiomOutcome::counterexample)
      .def("__repr__", [](const AxiomOutcome& o) {
        return o.axiom + ": " + verdict_name(o.verdict);
      });

  py::class_<AxiomReport>(m, "AxiomReport")
      .def_readonly("bounds", &AxiomReport::bounds)
      .def_readonly("universe_size", &AxiomReport::universe_size)
      .def_readonly("results", &AxiomReport::results)
      .def_property_readonly("all_pass", &AxiomReport::all_checkable_pass)
      .def("to_json",
           [](const AxiomReport& r) { return report_to_json(r).dump(); })
      .def("__str__",
           [](const AxiomReport& r) { return format_report(r); })
      .def("__repr__", [](const AxiomReport& r) {
        return "AxiomReport(universe_size=" +
               std::to_string(r.universe_size) + ", all_pass=" +
               (r.all_checkable_pass() ? "True" : "False") + ")";
      });

  // Construction.
  m.def("empty_set", &empty_set);
  m.def("mk_set", &mk_set, py::arg("elements"),
        "Set from any iterable of values; order and duplicates are ignored.");
  m.def("mk_matrix", &mk_matrix, py::arg("rows"), py::arg("cols"),
        py::arg("entries"),
        "Matrix from row-major entries; a 1x1 matrix collapses to its "
        "entry.");
  m.def("numeral", &numeral, py::arg("n"));
  m.def("naturals_upto", &naturals_upto, py::arg("n"));
  m.def("tuple_of", &tuple_of, py::arg("items"));

  // Kernel operations.
  m.def("member", &member, py::arg("a"), py::arg("x"));
  m.def("subset", &subset, py::arg("x"), py::arg("y"));
  m.def("pair", &pair, py::arg("a"), py::arg("b"));
  m.def("successor", &successor, py::arg("x"));
  m.def("union_family", &union_family, py::arg("x"));
  m.def("union2", &union2, py::arg("x"), py::arg("y"));
  m.def("power_set", &power_set, py::arg("x"),
        py::arg("cap") = kDefaultCap);
  m.def("set_of_matrices", &set_of_matrices, py::arg("rows"), py::arg("cols"),
        py::arg("x"), py::arg("cap") = kDefaultCap);
  m.def("cartesian", &cartesian, py::arg("x"), py::arg("y"),
        py::arg("cap") = kDefaultCap);
  m.def(
      "cartesian_n",
      [](const std::vector<Value>& factors, std::size_t cap) {
        return cartesian_n(factors, cap);
      },
      py::arg("factors"), py::arg("cap") = kDefaultCap);
  m.def("function_space", &function_space, py::arg("x"), py::arg("y"),
        py::arg("cap") = kDefaultCap);
  m.def("foundation_witness", &foundation_witness, py::arg("x"));

  // Shapes.
  m.def("shape_of", &shape_of, py::arg("v"));
  m.def("render_shape", &render_shape, py::arg("shape"));
  m.def("shape_leaves", &shape_leaves, py::arg("v"));
  m.def(
      "rebuild_with_leaves",
      [](const Shape& shape, const std::vector<Value>& leaves) {
        return rebuild_with_leaves(shape, leaves);
      },
      py::arg("shape"), py::arg("leaves"));
  m.def("partition_by_shape", &partition_pairs, py::arg("x"),
        "Blocks of x grouped by shape, as (shape, block) pairs.");

  // Text and JSON.
  m.def("render", &render, py::arg("v"), "Canonical text for a value.");
  m.def("evaluate", &evaluate_text, py::arg("text"),
        py::arg("cap") = kDefaultCap,
        "Parse and evaluate a closed term.");
  m.def("check", &check_text, py::arg("text"),
        py::arg("universe") = UniverseSpec{}, py::arg("cap") = kDefaultCap,
        "Parse and evaluate a closed formula; unbounded quantifiers range "
        "over the given universe bounds.");
  m.def("to_json", &value_to_json_text, py::arg("v"));
  m.def("from_json", &value_from_json_text, py::arg("text"));

  // Universes and the axiom suite.
  m.def(
      "generate_universe",
      [](const UniverseSpec& u, std::size_t cap) {
        return generate_universe(u, cap);
      },
      py::arg("universe") = UniverseSpec{}, py::arg("cap") = kDefaultCap);
  m.def(
      "run_axiom_suite",
      [](const UniverseSpec& u, std::size_t cap) {
        return run_axiom_suite(u, cap);
      },
      py::arg("universe") = UniverseSpec{}, py::arg("cap") = kDefaultCap);
}
