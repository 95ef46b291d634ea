#include "bisetlab/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "bisetlab/errors.hpp"

namespace bisetlab {

using nlohmann::json;

json rational_to_json(const Rational& q) {
  if (auto i = q.to_int64()) return *i;
  return q.to_string();
}

json vector_to_json(const RVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
  return out;
}

json report_header(const RunContext& ctx) {
  return json{{"command", ctx.command}, {"catalog_hash", ctx.catalog_hash}, {"cap", ctx.cap}, {"probes", ctx.probes}};
}

namespace {

json gram_json(const GramReport& g) {
  json minors = json::array();
  for (const auto& m : g.minors) minors.push_back(rational_to_json(m));
  return json{{"matrix", matrix_to_json(g.gram)},
              {"symmetric", g.symmetric},
              {"integer", g.integer},
              {"leading_minors", minors}};
}

json nondeg_json(const NondegeneracyReport& r) {
  return json{{"rank", r.rank}, {"dim", r.dim}, {"pass", r.pass}};
}

std::string orbit_key(const std::vector<int>& orbit) {
  std::string s = "psi{";
  for (std::size_t i = 0; i < orbit.size(); ++i) s += (i ? "," : "") + std::to_string(orbit[i]);
  return s + "}";
}

}  // namespace

json gram_report(const RunContext& ctx, const GroupPtr& h, const GroupPtr& l, const GroupPtr& t, FieldMode mode,
                 const GramReport& g) {
  json r = report_header(ctx);
  r["H"] = h->name();
  r["L"] = l->name();
  r["T"] = t->name();
  r["field"] = field_name(mode);
  r["gram"] = gram_json(g);
  r["pd"] = g.positive_definite;
  return r;
}

json nondegeneracy_report(const RunContext& ctx, const GroupPtr& h, const GroupPtr& l, const GroupPtr& t,
                          FieldMode mode, const NondegeneracyReport& n) {
  json r = report_header(ctx);
  r["H"] = h->name();
  r["L"] = l->name();
  r["T"] = t->name();
  r["field"] = field_name(mode);
  r["nondegenerate"] = nondeg_json(n);
  return r;
}

json radical_report(const RunContext& ctx, const FiniteDimAlgebra& a, const RadicalReport& rad) {
  json r = report_header(ctx);
  json basis = json::array();
  for (const auto& v : rad.basis) basis.push_back(vector_to_json(v));
  r["algebra"] = a.name;
  r["algebra_dim"] = a.dim();
  r["radical_dim"] = rad.dimension;
  r["radical_basis"] = basis;
  r["trace_form_determinant"] = rational_to_json(rad.trace_form_determinant);
  r["consistent"] = rad.consistent;
  return r;
}

json certificate_report(const RunContext& ctx, const SemisimplicityCertificate& c) {
  json r = report_header(ctx);
  r["L"] = c.l->name();
  r["T"] = c.t->name();
  r["field"] = field_name(c.mode);
  json probes = json::array();
  for (const auto& p : c.probes) {
    probes.push_back(json{{"H", p.h->name()},
                          {"L", c.l->name()},
                          {"T", c.t->name()},
                          {"field", field_name(c.mode)},
                          {"gram", gram_json(p.gram)},
                          {"pd", p.gram.positive_definite},
                          {"nondegenerate", nondeg_json(p.nondegenerate)}});
  }
  r["reports"] = probes;
  r["algebra"] = c.algebra_name;
  r["algebra_dim"] = c.algebra_dim;
  r["radical_dim"] = c.radical_dim;
  r["verdict"] = c.pass ? "pass" : "fail";
  return r;
}

json essential_report(const RunContext& ctx, const GroupPtr& g, const GroupPtr& t, FieldMode mode,
                      const EssentialReport& e) {
  json r = report_header(ctx);
  json basis = json::array();
  for (const auto& v : e.ideal_basis) basis.push_back(vector_to_json(v));
  r["G"] = g->name();
  r["T"] = t->name();
  r["field"] = field_name(mode);
  r["algebra_dim"] = e.algebra_dim;
  r["ideal_dim"] = e.ideal_dim;
  r["essential_dim"] = e.quotient_dim;
  r["through"] = e.through;
  r["ideal_basis"] = basis;
  return r;
}

json aut_report(const RunContext& ctx, const GroupPtr& l, const GroupPtr& t, const GroupPtr& c, const AutReport& a) {
  json r = report_header(ctx);
  r["L"] = l->name();
  r["T"] = t->name();
  r["C"] = c->name();
  r["units"] = a.units;
  r["module_dim"] = a.module_dim;
  json mult = json::object();
  json comps = json::array();
  for (const auto& comp : a.components) {
    json values = json::array();
    for (const auto& v : comp.values) values.push_back(rational_to_json(v));
    mult[orbit_key(comp.characters)] = rational_to_json(comp.multiplicity);
    comps.push_back(json{{"character", orbit_key(comp.characters)},
                         {"values", values},
                         {"isotypic_dim", comp.isotypic_dim},
                         {"multiplicity", rational_to_json(comp.multiplicity)}});
  }
  r["aut_multiplicities"] = mult;
  r["components"] = comps;
  r["relations_hold"] = a.relations_hold;
  r["projectors_ok"] = a.projectors_ok;
  return r;
}

OracleReport linearization_oracle(const GroupPtr& h, const GroupPtr& l, const GroupPtr& k, const GroupPtr& t,
                                  int order_cap) {
  BisetSpacePtr outer = BisetSpace::get(h, l, t, order_cap);
  BisetSpacePtr inner = BisetSpace::get(l, k, t, order_cap);
  BisetSpace::get(h, k, t, order_cap);
  OracleReport r;
  std::vector<RepMorphism> lin_inner;
  for (int j = 0; j < inner->dim(); ++j) lin_inner.push_back(linearize_class(inner, j));
  for (int i = 0; i < outer->dim(); ++i) {
    const BurnsideMorphism b = BurnsideMorphism::basis_element(outer, i);
    const RepMorphism lb = linearize_class(outer, i);
    for (int j = 0; j < inner->dim(); ++j) {
      ++r.pairs;
      const RepMorphism lhs = linearize(compose_bisets(b, BurnsideMorphism::basis_element(inner, j)));
      if (lhs.values() != compose(lb, lin_inner[j]).values()) {
        ++r.mismatches;
        if (r.failures.size() < 5) r.failures.push_back("E" + std::to_string(i) + " o D" + std::to_string(j));
      }
    }
  }
  r.identity_ok = linearize(identity_biset(l, t)).values() == identity(l, t, FieldMode::Rational).values();
  return r;
}

json oracle_report(const RunContext& ctx, const GroupPtr& h, const GroupPtr& l, const GroupPtr& k,
                   const GroupPtr& t, const OracleReport& o) {
  json r = report_header(ctx);
  r["H"] = h->name();
  r["L"] = l->name();
  r["K"] = k->name();
  r["T"] = t->name();
  r["pairs"] = o.pairs;
  r["mismatches"] = o.mismatches;
  r["failures"] = o.failures;
  r["identity_ok"] = o.identity_ok;
  r["verdict"] = o.pass() ? "pass" : "fail";
  return r;
}

namespace {

std::string cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print_matrix(std::ostream& os, const json& m) {
  std::size_t width = 1;
  for (const auto& row : m)
    for (const auto& x : row) width = std::max(width, cell(x).size());
  for (const auto& row : m) {
    os << "  [";
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << std::setw(static_cast<int>(width)) << cell(row[j]);
    os << "]\n";
  }
}

const char* yes(bool b) { return b ? "yes" : "no"; }

void render_header(std::ostream& os, const json& r) {
  os << "command: " << r.at("command").get<std::string>() << "\n";
  os << "catalog: " << r.at("catalog_hash").get<std::string>() << "  cap: " << r.at("cap").get<int>() << "\n";
}

void render_gram(std::ostream& os, const json& g) {
  os << "gram (" << g.at("matrix").size() << "x" << g.at("matrix").size() << "):\n";
  print_matrix(os, g.at("matrix"));
  os << "symmetric: " << yes(g.at("symmetric").get<bool>()) << "  integer: " << yes(g.at("integer").get<bool>())
     << "\n";
}

}  // namespace

std::string render_report(const json& r) {
  std::ostringstream os;
  try {
    const std::string cmd = r.at("command").get<std::string>();
    render_header(os, r);
    if (cmd == "gram" || cmd == "nondeg") {
      os << "H = " << cell(r.at("H")) << "  L = " << cell(r.at("L")) << "  T = " << cell(r.at("T"))
         << "  field = " << cell(r.at("field")) << "\n";
      if (r.contains("gram")) {
        render_gram(os, r.at("gram"));
        os << "positive definite: " << yes(r.at("pd").get<bool>()) << "\n";
      }
      if (r.contains("nondegenerate")) {
        const json& n = r.at("nondegenerate");
        os << "nondegenerate: " << yes(n.at("pass").get<bool>()) << " (rank " << n.at("rank").get<int>() << " / dim "
           << n.at("dim").get<int>() << ")\n";
      }
    } else if (cmd == "certify") {
      os << "L = " << cell(r.at("L")) << "  T = " << cell(r.at("T")) << "  field = " << cell(r.at("field")) << "\n";
      const json& reports = r.at("reports");
      if (reports.empty()) {
        os << "no probes\n";
      } else {
        os << std::left << std::setw(10) << "H" << std::setw(6) << "dim" << std::setw(6) << "pd" << "rank/dim\n";
        for (const auto& p : reports) {
          const json& n = p.at("nondegenerate");
          os << std::setw(10) << cell(p.at("H")) << std::setw(6) << p.at("gram").at("matrix").size() << std::setw(6)
             << yes(p.at("pd").get<bool>())
             << (std::to_string(n.at("rank").get<int>()) + "/" + std::to_string(n.at("dim").get<int>())) << "\n";
        }
        os << std::right;
      }
      os << "algebra: " << cell(r.at("algebra")) << " (dim " << r.at("algebra_dim").get<int>() << ")\n";
      os << "radical_dim: " << r.at("radical_dim").get<int>() << "\n";
      if (r.contains("essential_dim")) os << "essential_dim: " << r.at("essential_dim").get<int>() << "\n";
      if (r.contains("aut_multiplicities")) {
        for (const auto& [k, v] : r.at("aut_multiplicities").items()) os << "aut " << k << ": " << cell(v) << "\n";
      }
      os << "verdict: " << cell(r.at("verdict")) << "\n";
    } else if (cmd == "radical") {
      os << "algebra: " << cell(r.at("algebra")) << " (dim " << r.at("algebra_dim").get<int>() << ")\n";
      os << "trace form determinant: " << cell(r.at("trace_form_determinant")) << "\n";
      os << "radical_dim: " << r.at("radical_dim").get<int>() << "\n";
    } else if (cmd == "essential") {
      os << "G = " << cell(r.at("G")) << "  T = " << cell(r.at("T")) << "  field = " << cell(r.at("field")) << "\n";
      os << "algebra_dim: " << r.at("algebra_dim").get<int>() << "  ideal_dim: " << r.at("ideal_dim").get<int>()
         << "\n";
      os << "essential_dim: " << r.at("essential_dim").get<int>() << "\n";
    } else if (cmd == "oracle") {
      os << "H = " << cell(r.at("H")) << "  L = " << cell(r.at("L")) << "  K = " << cell(r.at("K"))
         << "  T = " << cell(r.at("T")) << "\n";
      os << "pairs: " << r.at("pairs").get<int>() << "  mismatches: " << r.at("mismatches").get<int>()
         << "  identity: " << yes(r.at("identity_ok").get<bool>()) << "\n";
      os << "verdict: " << cell(r.at("verdict")) << "\n";
    } else if (cmd == "autmult") {
      os << "L = " << cell(r.at("L")) << "  T = " << cell(r.at("T")) << "  C = " << cell(r.at("C"))
         << "  dim M(C) = " << r.at("module_dim").get<int>() << "\n";
      os << std::left << std::setw(16) << "character" << std::setw(14) << "isotypic_dim" << "multiplicity\n";
      for (const auto& c : r.at("components")) {
        os << std::setw(16) << cell(c.at("character")) << std::setw(14) << c.at("isotypic_dim").get<int>()
           << cell(c.at("multiplicity")) << "\n";
      }
      os << std::right;
      os << "relations: " << yes(r.at("relations_hold").get<bool>())
         << "  projectors: " << yes(r.at("projectors_ok").get<bool>()) << "\n";
    } else {
      throw InvalidInput("unknown report command \"" + cmd + "\"");
    }
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed report: ") + e.what());
  }
  return os.str();
}

}  // namespace bisetlab
