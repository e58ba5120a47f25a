#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "milnor4/autc.hpp"
#include "milnor4/classical.hpp"
#include "milnor4/error.hpp"
#include "milnor4/gauss.hpp"
#include "milnor4/io.hpp"
#include "milnor4/milnor.hpp"
#include "milnor4/nilpotent.hpp"
#include "milnor4/word.hpp"

namespace py = pybind11;
using namespace milnor4;

namespace {

py::int_ to_py(const Integer& v) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::dict table_to_dict(const MilnorTable& t) {
  py::dict out;
  for (const auto& [seq, r] : t.entries())
    out[py::tuple(py::cast(seq))] =
        py::make_tuple(to_py(r.value()), to_py(r.modulus()));
  return out;
}

py::dict comparison_to_dict(const Comparison& c) {
  py::dict out;
  out["equal"] = c.equal;
  if (c.witness) {
    out["witness"] = py::tuple(py::cast(*c.witness));
    out["left"] = py::make_tuple(to_py(c.left.value()), to_py(c.left.modulus()));
    out["right"] =
        py::make_tuple(to_py(c.right.value()), to_py(c.right.modulus()));
  }
  return out;
}

QuotientContext context(int n, std::optional<int> k, bool reduced) {
  if (reduced == k.has_value())
    throw SemanticError("give exactly one of k or reduced=True");
  return reduced ? QuotientContext::reduced(n) : QuotientContext::nilpotent(n, *k);
}

std::vector<Word> words(const std::vector<std::string>& texts) {
  std::vector<Word> out;
  for (const auto& t : texts)
    out.push_back(parse_word(t, static_cast<int>(texts.size())));
  return out;
}

std::vector<std::string> texts(std::span<const Word> ws) {
  std::vector<std::string> out;
  for (const Word& w : ws) out.push_back(to_string(w));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Milnor invariants of welded string links";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<SemanticError>(m, "SemanticError", base.ptr());

  py::class_<GaussData>(m, "StringLink")
      .def_static("from_braid", [](const std::string& text,
                                   std::optional<int> n) { return parse_braid(text, n); },
                  py::arg("text"), py::arg("n") = py::none())
      .def_static("from_json", [](const std::string& text) { return gauss_from_json(text); })
      .def_static("parse", [](const std::string& text, std::optional<int> n) {
                    return parse_string_link(text, n);
                  },
                  py::arg("text"), py::arg("n") = py::none())
      .def_static("realize", [](const std::vector<std::string>& conj) {
        return realize(words(conj));
      })
      .def_property_readonly("n", &GaussData::strands)
      .def("to_json", [](const GaussData& d) { return gauss_to_json(d); })
      .def("stack", [](const GaussData& a, const GaussData& b) { return stack(a, b); },
           "This string link below `other`.", py::arg("other"))
      .def("mirror", [](const GaussData& d) { return mirror(d); })
      .def("longitudes",
           [](const GaussData& d, std::optional<int> k, bool reduced) {
             const auto sol = solve(d, context(d.strands(), k, reduced));
             return py::make_tuple(texts(sol.longitudes.raw),
                                   texts(sol.longitudes.preferred));
           },
           "(raw, preferred) longitudes as word strings.",
           py::arg("k") = py::none(), py::arg("reduced") = false)
      .def("__repr__", [](const GaussData& d) {
        return "<StringLink n=" + std::to_string(d.strands()) + " events=" +
               std::to_string(d.total_events()) + ">";
      });

  py::class_<ConjAut>(m, "ConjAut")
      .def(py::init([](const std::vector<std::string>& conj, std::optional<int> k,
                       bool reduced) {
             return ConjAut(context(static_cast<int>(conj.size()), k, reduced),
                            words(conj));
           }),
           py::arg("conjugators"), py::arg("k") = py::none(),
           py::arg("reduced") = false)
      .def_property_readonly("n", &ConjAut::strands)
      .def_property_readonly("quotient",
                             [](const ConjAut& f) { return to_string(f.context()); })
      .def_property_readonly("conjugators",
                             [](const ConjAut& f) { return texts(f.conjugators()); })
      .def("then", [](const ConjAut& g, const ConjAut& f) { return compose(g, f); },
           "Apply this automorphism, then `f`.", py::arg("f"))
      .def("inverse", [](const ConjAut& f) { return inverse(f); })
      .def("is_identity",
           [](const ConjAut& f) { return equal(f, ConjAut::identity(f.context())); })
      .def("__eq__", [](const ConjAut& f, const ConjAut& g) { return equal(f, g); })
      .def("__repr__", [](const ConjAut& f) {
        return "<ConjAut " + to_string(f.context()) + " " +
               conjugators_to_text(f.conjugators()) + ">";
      });

  m.def("phi",
        [](const GaussData& d, std::optional<int> k, bool reduced) {
          return from_gauss(d, context(d.strands(), k, reduced));
        },
        py::arg("link"), py::arg("k") = py::none(), py::arg("reduced") = false);
  m.def("group_commutator", &group_commutator);

  m.def("mu4",
        [](const GaussData& d, int max_length, std::optional<std::string> ind) {
          std::optional<MilnorTable> t;
          if (ind) t = table_from_tsv(*ind, d.strands());
          return table_to_dict(mu4(d, max_length, t ? &*t : nullptr));
        },
        "Table {sequence: (value, modulus)}.", py::arg("link"),
        py::arg("max_length"), py::arg("indeterminacy") = py::none());
  m.def("mu4_tsv", [](const GaussData& d, int max_length) {
    return table_to_tsv(mu4(d, max_length));
  });
  m.def("compare",
        [](const GaussData& a, const GaussData& b, const std::string& mode,
           std::optional<int> k) {
          if (mode == "lh") {
            if (k) throw SemanticError("k only applies to mode 'conc'");
            return comparison_to_dict(compare_link_homotopy(a, b));
          }
          if (mode != "conc") throw SemanticError("mode must be 'lh' or 'conc'");
          if (!k) throw SemanticError("mode 'conc' needs k");
          return comparison_to_dict(compare_concordance(a, b, *k));
        },
        py::arg("a"), py::arg("b"), py::arg("mode") = "lh",
        py::arg("k") = py::none());
  m.def("classical",
        [](const std::string& pd, int max_length) {
          return table_to_dict(mu_link(parse_pd(pd), max_length));
        },
        "Milnor invariants of a PD code, residues modulo Delta.",
        py::arg("pd"), py::arg("max_length"));
  m.def("is_trivial",
        [](const std::string& w, int n, std::optional<int> k, bool reduced) {
          return is_trivial(parse_word(w, n), context(n, k, reduced));
        },
        py::arg("word"), py::arg("n"), py::arg("k") = py::none(),
        py::arg("reduced") = false);
  m.def("reduce_word", [](const std::string& w, int n) {
    return to_string(parse_word(w, n));
  });
}
