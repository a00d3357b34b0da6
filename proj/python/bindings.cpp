#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "braidq/acceptance.hpp"
#include "braidq/group.hpp"
#include "braidq/hyperocta.hpp"
#include "braidq/models.hpp"
#include "braidq/so_path.hpp"

namespace py = pybind11;
using namespace braidq;

namespace {

  Variant variant_of(std::string const& v) {
    return parse_variant(v);
  }

  std::vector<std::string> pretty(GroupCtx const& g, std::vector<Element> const& es) {
    std::vector<std::string> out;
    for (auto e : es) {
      out.push_back(to_pretty(name_word(g, e)));
    }
    return out;
  }

  py::dict flow_dict(FlowResult const& r) {
    py::dict d;
    d["verdict"]     = std::string(to_string(r.verdict));
    d["iterations"]  = r.iterations;
    d["final_max_d"] = r.final_max_d;
    d["retries"]     = r.retries;
    d["trace"]       = r.trace;
    return d;
  }

  RotationPath path_of(std::string const& gens, int n, int samples) {
    return compile_word(parse_word(gens, n), samples);
  }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "braidq core";

  py::register_exception<Error>(m, "BraidqError", PyExc_ValueError);

  m.def(
      "group_order",
      [](int n, std::string const& variant, std::string const& strategy) {
        EnumLimits lim;
        lim.strategy = parse_strategy(strategy);
        return group_order(presentation_for(n, variant_of(variant)), lim);
      },
      py::arg("n"), py::arg("variant") = "standard", py::arg("strategy") = "hlt",
      py::call_guard<py::gil_scoped_release>());

  py::class_<GroupCtx>(m, "Group")
      .def(py::init([](int n, std::string const& variant) {
             return std::make_unique<GroupCtx>(n, variant_of(variant));
           }),
           py::arg("n"), py::arg("variant") = "standard")
      .def_property_readonly("rank", &GroupCtx::rank)
      .def_property_readonly("order", &GroupCtx::order)
      .def(
          "element",
          [](GroupCtx const& g, std::string const& word) {
            return element_from_word(g, parse_word(word, g.rank())).id;
          },
          "coset id of the element named by a token word")
      .def(
          "name",
          [](GroupCtx const& g, CosetId id) { return to_pretty(name_word(g, g.element(id))); })
      .def("product", [](GroupCtx const& g, CosetId a, CosetId b) {
        return multiply(g, g.element(a), g.element(b)).id;
      })
      .def("element_order",
           [](GroupCtx const& g, CosetId id) { return element_order(g, g.element(id)); })
      .def("order_profile", [](GroupCtx const& g) { return order_profile(g); });

  m.def(
      "canonical_form",
      [](GroupCtx const& g, std::string const& word) {
        auto cf = canonical_form(g, element_from_word(g, parse_word(word, g.rank())));
        return py::make_tuple(to_tokens(expand(cf)), family_key(cf));
      },
      py::arg("group"), py::arg("word"),
      "(token word, family key) of the canonical form");
  m.def("kernel", [](GroupCtx const& g) { return pretty(g, kernel(g)); });
  m.def("center", [](GroupCtx const& g) { return pretty(g, center(g)); });
  m.def(
      "theta",
      [](std::string const& word, int n) { return theta_word(parse_word(word, n), n).images(); },
      py::arg("word"), py::arg("n"));

  m.def(
      "verify_models",
      [](std::string const& which) {
        Report r = which == "2o"     ? verify_2O()
                   : which == "gl23" ? verify_matrix_model(MatrixModel::gl23)
                   : which == "sl24" ? verify_matrix_model(MatrixModel::sl24)
                   : which == "stem" ? stem_report()
                                     : throw Error("unknown model: " + which);
        py::list checks;
        for (auto const& c : r.checks) {
          checks.append(py::make_tuple(c.name, c.pass, c.detail));
        }
        return py::make_tuple(r.all_pass(), checks);
      },
      py::arg("which"));

  m.def(
      "contract",
      [](std::string const& gens, int n, int samples, std::uint64_t seed) {
        FlowParams fp;
        fp.seed = seed;
        FlowResult r;
        {
          py::gil_scoped_release nogil;
          r = contract(path_of(gens, n, samples), fp);
        }
        return flow_dict(r);
      },
      py::arg("gens"), py::arg("n") = 3, py::arg("samples") = 16, py::arg("seed") = 1);
  m.def(
      "stall",
      [](std::string const& gens, int n, int samples, std::uint64_t seed) {
        FlowParams fp;
        fp.seed = seed;
        FlowResult r;
        {
          py::gil_scoped_release nogil;
          r = stall_witness(path_of(gens, n, samples), fp);
        }
        return flow_dict(r);
      },
      py::arg("gens"), py::arg("n") = 3, py::arg("samples") = 16, py::arg("seed") = 1);
  m.def(
      "reduce_word",
      [](std::string const& plane_word, int n) {
        auto                     t = reduce_local_word(parse_plane_word(plane_word, n), n);
        std::vector<std::string> rules;
        for (auto const& s : t.steps) {
          rules.push_back(s.rule);
        }
        return py::make_tuple(to_tokens(replay(t)), rules);
      },
      py::arg("plane_word"), py::arg("n"),
      "(final word after replay, applied rules); the final word is empty on success");

  m.def(
      "run_criterion",
      [](int id) {
        auto r = run_criterion(id);
        return py::make_tuple(r.pass, format(r));
      },
      py::arg("id"), py::call_guard<py::gil_scoped_release>());
}
