#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "goldman/bv_hochschild.hpp"
#include "goldman/fuchsian.hpp"
#include "goldman/goldman.hpp"
#include "goldman/io.hpp"
#include "goldman/surface_group.hpp"

namespace py = pybind11;
using namespace goldman;

namespace {

std::map<std::string, std::string> sum_to_dict(const FormalSum& s) {
  std::map<std::string, std::string> out;
  for (const auto& [cls, coeff] : s.terms) out[class_to_token(cls)] = rational_to_string(coeff);
  return out;
}

BracketConfig config(int depth, double tol) {
  BracketConfig cfg;
  cfg.max_conjugator_length = depth;
  cfg.tolerance = tol;
  return cfg;
}

BVElement element_from_string(const std::string& text) {
  return bv_element_from_json(Json::parse(text));
}

SignConfig signs_or_default(const std::string& signs) {
  return signs.empty() ? default_sign_config() : parse_sign_config(signs);
}

}  // namespace

PYBIND11_MODULE(pygoldman, m) {
  m.doc() = "Goldman bracket and surface BV algebra bindings";

  py::register_exception<InputError>(m, "InputError");
  py::register_exception<NonStabilizedError>(m, "NonStabilizedError");
  py::register_exception<DegenerateGeometryError>(m, "DegenerateGeometryError");

  m.def(
      "bracket",
      [](int genus, const std::string& x, const std::string& y, int depth, double tol) {
        const LoopClass cx = token_to_class(x, genus);
        const LoopClass cy = token_to_class(y, genus);
        if (genus == 1) return sum_to_dict(torus_bracket(cx, cy));
        const Representation rep = build_representation(genus, tol);
        return sum_to_dict(goldman_bracket(cx, cy, rep, config(depth, tol)));
      },
      py::arg("genus"), py::arg("x"), py::arg("y"), py::arg("depth") = 8,
      py::arg("tolerance") = 1e-9,
      "Goldman bracket as a dict mapping class token to rational coefficient.");

  m.def(
      "classes",
      [](int genus, int max_length) {
        std::vector<std::string> out;
        for (const auto& c : enumerate_classes(Presentation::standard(genus), max_length))
          out.push_back(class_to_token(c));
        return out;
      },
      py::arg("genus"), py::arg("max_length"),
      "Class tokens of canonical length up to the bound, trivial class first.");

  m.def(
      "canonical",
      [](int genus, const std::string& word) {
        return class_to_token(token_to_class(word, genus));
      },
      py::arg("genus"), py::arg("word"), "Canonical token of the conjugacy class of a word.");

  m.def(
      "cup",
      [](const std::string& e1, const std::string& e2, const std::string& signs, int depth) {
        const BVElement x = element_from_string(e1);
        const BVElement y = element_from_string(e2);
        const auto br = make_bracket_backend(x.genus, config(depth, 1e-9));
        return bv_element_to_json(cup(x, y, signs_or_default(signs), br)).dump();
      },
      py::arg("e1"), py::arg("e2"), py::arg("signs") = "", py::arg("depth") = 8,
      "Cup product of two JSON elements; returns the JSON result.");

  m.def(
      "delta",
      [](const std::string& e) {
        return bv_element_to_json(bv_delta(element_from_string(e))).dump();
      },
      py::arg("e"), "BV operator on a JSON element.");

  m.def(
      "gerstenhaber",
      [](const std::string& e1, const std::string& e2, const std::string& signs, int depth) {
        const BVElement x = element_from_string(e1);
        const BVElement y = element_from_string(e2);
        const auto br = make_bracket_backend(x.genus, config(depth, 1e-9));
        return bv_element_to_json(gerstenhaber(x, y, signs_or_default(signs), br)).dump();
      },
      py::arg("e1"), py::arg("e2"), py::arg("signs") = "", py::arg("depth") = 8,
      "Gerstenhaber bracket of two JSON elements; returns the JSON result.");

  m.def(
      "verify_axioms",
      [](int genus, int max_class_length, int samples, unsigned seed, const std::string& signs,
         int depth) {
        const auto br = make_bracket_backend(genus, config(depth, 1e-9));
        return axiom_report_to_json(
                   verify_axioms(genus, max_class_length, samples, seed, signs_or_default(signs), br))
            .dump();
      },
      py::arg("genus"), py::arg("max_class_length") = 2, py::arg("samples") = 50,
      py::arg("seed") = 7, py::arg("signs") = "", py::arg("depth") = 8,
      "Run the BV axiom suite; returns the JSON report.");

  m.def(
      "resolve_signs",
      [](int genus, int max_class_length, int samples, unsigned seed, int depth) {
        const auto br = make_bracket_backend(genus, config(depth, 1e-9));
        return sign_search_to_json(resolve_signs(genus, max_class_length, samples, seed, br))
            .dump();
      },
      py::arg("genus") = 1, py::arg("max_class_length") = 2, py::arg("samples") = 20,
      py::arg("seed") = 7, py::arg("depth") = 8,
      "Search all 16 sign configurations; returns the JSON result.");

  m.def(
      "relator_residual",
      [](int genus, double tol) {
        const Representation rep = build_representation(genus, tol);
        const MobiusMap rel = rep.evaluate(Presentation::standard(genus).relator());
        const auto dev = [&](double s) {
          return std::max(std::max(std::abs(rel.a - s), std::abs(rel.d - s)),
                          std::max(std::abs(rel.b), std::abs(rel.c)));
        };
        return std::min(dev(1.0), dev(-1.0));
      },
      py::arg("genus"), py::arg("tolerance") = 1e-9,
      "Max entry deviation of the evaluated relator from plus or minus the identity.");
}
