#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bisetlab/algebra.hpp"
#include "bisetlab/errors.hpp"
#include "bisetlab/parallel.hpp"
#include "bisetlab/report.hpp"

namespace py = pybind11;
using namespace bisetlab;

namespace {

// Reports cross the boundary as JSON text; the Python package decodes them.
Catalog open_catalog(const std::string& path, int cap) {
  return path.empty() ? Catalog::builtin() : Catalog::with_file(path, cap);
}

RunContext context(const std::string& cmd, const Catalog& cat, int cap, std::vector<std::string> probes = {}) {
  return {cmd, cat.hash_hex(), cap, std::move(probes)};
}

std::vector<std::string> strings(const RVec& v) {
  std::vector<std::string> out;
  for (const auto& q : v) out.push_back(q.to_string());
  return out;
}

std::string gram(const std::string& h, const std::string& l, const std::string& t, const std::string& field,
                 int cap, const std::string& catalog) {
  const Catalog cat = open_catalog(catalog, cap);
  const FieldMode mode = parse_field(field);
  const GroupPtr gh = cat.get(h), gl = cat.get(l), gt = cat.get(t);
  return gram_report(context("gram", cat, cap), gh, gl, gt, mode, gram_matrix(gh, gl, gt, mode, cap)).dump();
}

std::string nondeg(const std::string& h, const std::string& l, const std::string& t, const std::string& field,
                   int cap, const std::string& catalog) {
  const Catalog cat = open_catalog(catalog, cap);
  const FieldMode mode = parse_field(field);
  const GroupPtr gh = cat.get(h), gl = cat.get(l), gt = cat.get(t);
  return nondegeneracy_report(context("nondeg", cat, cap), gh, gl, gt, mode,
                              check_pairing_nondegenerate(gh, gl, gt, mode, cap))
      .dump();
}

std::string radical(const std::string& l, const std::string& t, const std::string& field, const std::string& fixture,
                    int cap, const std::string& catalog) {
  const Catalog cat = open_catalog(catalog, cap);
  const FiniteDimAlgebra a =
      fixture.empty() ? build_endo_algebra(cat.get(l), cat.get(t), parse_field(field), cap) : fixture_algebra(fixture);
  return radical_report(context("radical", cat, cap), a, radical_via_trace_form(a)).dump();
}

std::string certify(const std::string& l, const std::string& t, const std::string& field,
                    const std::vector<std::string>& probes, int cap, const std::string& catalog) {
  const Catalog cat = open_catalog(catalog, cap);
  std::vector<GroupPtr> hs;
  for (const auto& p : probes) hs.push_back(cat.get(p));
  const auto c = certify_semisimple(cat.get(l), cat.get(t), parse_field(field), hs, cap);
  return certificate_report(context("certify", cat, cap, probes), c).dump();
}

std::string essential(const std::string& g, const std::string& t, const std::string& field, int cap,
                      const std::string& catalog) {
  const Catalog cat = open_catalog(catalog, cap);
  const FieldMode mode = parse_field(field);
  const GroupPtr gg = cat.get(g), gt = cat.get(t);
  return essential_report(context("essential", cat, cap), gg, gt, mode, essential_algebra(gg, gt, mode, cat, cap))
      .dump();
}

std::string oracle(const std::string& h, const std::string& l, const std::string& k, const std::string& t, int cap,
                   const std::string& catalog) {
  const Catalog cat = open_catalog(catalog, cap);
  const GroupPtr gh = cat.get(h), gl = cat.get(l), gk = cat.get(k.empty() ? l : k), gt = cat.get(t);
  return oracle_report(context("oracle", cat, cap), gh, gl, gk, gt, linearization_oracle(gh, gl, gk, gt, cap)).dump();
}

std::string autmult(const std::string& l, const std::string& t, const std::string& c, int cap,
                    const std::string& catalog) {
  const Catalog cat = open_catalog(catalog, cap);
  const GroupPtr gl = cat.get(l), gt = cat.get(t), gc = cat.get(c);
  return aut_report(context("autmult", cat, cap), gl, gt, gc, aut_multiplicities(gl, gt, gc, cap)).dump();
}

std::vector<std::string> compose_basis(const std::string& h, const std::string& g, const std::string& k,
                                       const std::string& t, const std::string& field, int i, int j, int cap) {
  const Catalog& cat = Catalog::builtin();
  const FieldMode mode = parse_field(field);
  const auto beta = MorphismSpace::get(cat.get(h), cat.get(g), cat.get(t), mode, cap);
  const auto alpha = MorphismSpace::get(cat.get(g), cat.get(k), cat.get(t), mode, cap);
  MorphismSpace::get(cat.get(h), cat.get(k), cat.get(t), mode, cap);
  if (i < 0 || i >= beta->dim() || j < 0 || j >= alpha->dim()) throw InvalidInput("basis index out of range");
  return strings(compose(RepMorphism::basis_element(beta, i), RepMorphism::basis_element(alpha, j)).coefficients());
}

std::vector<std::string> basis_labels(const std::string& h, const std::string& k, const std::string& t,
                                      const std::string& field, int cap) {
  const Catalog& cat = Catalog::builtin();
  const auto sp = MorphismSpace::get(cat.get(h), cat.get(k), cat.get(t), parse_field(field), cap);
  std::vector<std::string> out;
  for (int b = 0; b < sp->dim(); ++b) out.push_back(sp->basis().label(b));
  return out;
}

std::vector<std::vector<std::string>> table(const std::string& g) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : character_table(Catalog::builtin().get(g)).rows) {
    std::vector<std::string> r;
    for (const auto& v : row) {
      std::ostringstream os;
      os << v;
      r.push_back(os.str());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations with shifted Green biset functors";

  static py::exception<Error> error(m, "BisetlabError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.attr("DEFAULT_CAP") = kDefaultOrderCap;
  m.def("set_threads", &set_thread_count, py::arg("n"));
  m.def(
      "catalog",
      [](const std::string& path, int cap) {
        std::vector<std::pair<std::string, int>> out;
        const Catalog cat = open_catalog(path, cap);
        for (const auto& g : cat.groups()) out.emplace_back(g->name(), g->order());
        return out;
      },
      py::arg("path") = "", py::arg("cap") = kDefaultOrderCap);
  m.def("catalog_hash", [](const std::string& path) { return open_catalog(path, kDefaultOrderCap).hash_hex(); },
        py::arg("path") = "");
  m.def("catalog_add", &append_to_catalog_file, py::arg("catalog"), py::arg("source"),
        py::arg("cap") = kDefaultOrderCap);
  m.def("character_table", &table, py::arg("group"));

  const auto cap = py::arg("cap") = kDefaultOrderCap;
  const auto catalog = py::arg("catalog") = "";
  m.def("gram", &gram, py::arg("H"), py::arg("L"), py::arg("T") = "C1", py::arg("field") = "rational", cap, catalog);
  m.def("nondeg", &nondeg, py::arg("H"), py::arg("L"), py::arg("T") = "C1", py::arg("field") = "rational", cap,
        catalog);
  m.def("radical", &radical, py::arg("L") = "C1", py::arg("T") = "C1", py::arg("field") = "rational",
        py::arg("fixture") = "", cap, catalog);
  m.def("certify", &certify, py::arg("L"), py::arg("T") = "C1", py::arg("field") = "rational",
        py::arg("probes") = std::vector<std::string>{}, cap, catalog);
  m.def("essential", &essential, py::arg("G"), py::arg("T") = "C1", py::arg("field") = "rational", cap, catalog);
  m.def("oracle", &oracle, py::arg("H"), py::arg("L"), py::arg("K") = "", py::arg("T") = "C1", cap, catalog);
  m.def("autmult", &autmult, py::arg("L"), py::arg("T"), py::arg("C"), cap, catalog);
  m.def("basis_labels", &basis_labels, py::arg("H"), py::arg("K"), py::arg("T") = "C1",
        py::arg("field") = "rational", cap);
  m.def("compose_basis", &compose_basis, py::arg("H"), py::arg("G"), py::arg("K"), py::arg("T"), py::arg("field"),
        py::arg("i"), py::arg("j"), cap);
}
