#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "groupdet/cli.hpp"
#include "groupdet/frobenius.hpp"
#include "groupdet/io.hpp"

namespace py = pybind11;
using namespace groupdet;

namespace {

py::object to_python(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

CheckOptions make_options(const std::string& mode, int points, double tol, std::uint64_t seed) {
  CheckOptions o;
  o.mode = parse_mode(mode);
  o.n_points = points;
  o.tolerance = tol;
  o.seed = seed;
  return o;
}

Subgroup subgroup_of(const GroupPtr& g, const std::vector<int>& elements) { return Subgroup(g, elements); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Group determinants, subgroup regular representations and factorization checks";

  py::register_exception<Error>(m, "GroupdetError");

  py::class_<FiniteGroup, std::shared_ptr<FiniteGroup>>(m, "Group")
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("identity", &FiniteGroup::identity)
      .def_property_readonly("label", &FiniteGroup::label)
      .def_property_readonly("names", &FiniteGroup::names)
      .def_property_readonly("table", &FiniteGroup::table)
      .def("mul", &FiniteGroup::mul)
      .def("inverse", &FiniteGroup::inverse)
      .def("element_order", &FiniteGroup::element_order)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("center", &FiniteGroup::center)
      .def("conjugacy_classes", &FiniteGroup::conjugacy_classes)
      .def("to_json", [](const FiniteGroup& g) { return to_python(io::group_to_json(g)); })
      .def("__repr__", [](const FiniteGroup& g) {
        return "<Group " + group_label(g) + " of order " + std::to_string(g.order()) + ">";
      });

  auto cat = m.def_submodule("catalog", "Groups with fixed element orderings");
  cat.def("cyclic", [](int n) { return std::const_pointer_cast<FiniteGroup>(catalog::cyclic(n)); });
  cat.def("dihedral", [](int n) { return std::const_pointer_cast<FiniteGroup>(catalog::dihedral(n)); });
  cat.def("symmetric", [](int n) { return std::const_pointer_cast<FiniteGroup>(catalog::symmetric(n)); });
  cat.def("alternating", [](int n) { return std::const_pointer_cast<FiniteGroup>(catalog::alternating(n)); });
  cat.def("quaternion8", [] { return std::const_pointer_cast<FiniteGroup>(catalog::quaternion8()); });
  cat.def("from_name", [](const std::string& s) { return std::const_pointer_cast<FiniteGroup>(catalog::from_name(s)); });

  m.def("from_cayley_table",
        [](std::vector<std::vector<int>> table, std::vector<std::string> names) {
          return std::const_pointer_cast<FiniteGroup>(make_group(std::move(table), std::move(names)));
        },
        py::arg("table"), py::arg("names") = std::vector<std::string>{});
  m.def("from_permutations",
        [](const std::vector<std::string>& gens, int degree) {
          return std::const_pointer_cast<FiniteGroup>(from_permutations(gens, degree));
        },
        py::arg("generators"), py::arg("degree"));

  m.def("all_subgroups", [](const std::shared_ptr<FiniteGroup>& g) {
    std::vector<std::vector<int>> out;
    for (const auto& h : all_subgroups(g)) out.push_back(h.elements());
    return out;
  });
  m.def("subgroup_generated", [](const std::shared_ptr<FiniteGroup>& g, const std::vector<int>& seeds) {
    return subgroup_generated(g, seeds).elements();
  });
  m.def("is_normal", [](const std::shared_ptr<FiniteGroup>& g, const std::vector<int>& h) {
    return is_normal(subgroup_of(g, h));
  });
  m.def("left_transversal", [](const std::shared_ptr<FiniteGroup>& g, const std::vector<int>& h) {
    return left_transversal(subgroup_of(g, h)).reps();
  });

  m.def("theta", [](const std::shared_ptr<FiniteGroup>& g) { return theta_symbolic(g).to_string(); },
        "The group determinant as a string, graded-lex order");
  m.def("theta_terms", [](const std::shared_ptr<FiniteGroup>& g) {
    return to_python(io::polynomial_to_json(theta_symbolic(g)));
  });
  m.def("theta_at", [](const std::shared_ptr<FiniteGroup>& g, const std::vector<Complex>& point) {
    return theta_at(g, point);
  });

  m.def("irreps",
        [](const std::shared_ptr<FiniteGroup>& g, std::uint64_t seed) {
          const auto set = irreducible_decomposition(g, seed);
          std::vector<std::vector<ComplexMatrix>> out;
          for (const auto& rep : set.irreps) out.push_back(rep.matrices);
          return out;
        },
        py::arg("group"), py::arg("seed") = 0, "Per irrep, one complex matrix per element");
  m.def("irrep_degrees",
        [](const std::shared_ptr<FiniteGroup>& g, std::uint64_t seed) {
          return irreducible_decomposition(g, seed).degrees();
        },
        py::arg("group"), py::arg("seed") = 0);

  m.def("verify",
        [](const std::shared_ptr<FiniteGroup>& g, std::optional<std::vector<int>> subgroup, const std::string& mode,
           int points, double tol, std::uint64_t seed, std::optional<std::uint64_t> irrep_seed) {
          const auto opts = make_options(mode, points, tol, seed);
          const auto iseed = irrep_seed.value_or(seed);
          if (!subgroup) return to_python(to_json(classical_factorization_check(g, irreducible_decomposition(g, iseed), opts)));
          return to_python(to_json(generalized_factorization_check(subgroup_of(g, *subgroup), iseed, opts)));
        },
        py::arg("group"), py::arg("subgroup") = py::none(), py::arg("mode") = "pit", py::arg("points") = 20,
        py::arg("tol") = NumericDefaults::kPitTolerance, py::arg("seed") = 0, py::arg("irrep_seed") = py::none(),
        "Classical factorization, or the subgroup form when `subgroup` lists its elements");

  m.def("degree_bound",
        [](const std::shared_ptr<FiniteGroup>& g, std::uint64_t seed) {
          py::list rows;
          for (const auto& r : degree_bound_check(g, seed)) {
            py::dict d;
            d["subgroup"] = r.subgroup.elements();
            d["index"] = r.index;
            d["max_subgroup_degree"] = r.max_subgroup_degree;
            d["bound"] = r.bound;
            d["max_group_degree"] = r.max_group_degree;
            d["slack"] = r.slack;
            d["tight"] = r.tight;
            d["passed"] = r.passed;
            rows.append(d);
          }
          return rows;
        },
        py::arg("group"), py::arg("seed") = 0);

  m.def("run_cli",
        [](std::vector<std::string> args) {
          args.insert(args.begin(), "groupdet");
          std::ostringstream out, err;
          const int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        "Runs the command-line tool in-process; returns (exit_code, stdout, stderr)");
}
