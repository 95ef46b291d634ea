#include "bisetlab/algebra.hpp"

#include <numeric>
#include <stdexcept>

#include "bisetlab/burnside.hpp"
#include "bisetlab/errors.hpp"
#include "bisetlab/parallel.hpp"

namespace bisetlab {

using nlohmann::json;

RVec FiniteDimAlgebra::multiply(const RVec& a, const RVec& b) const {
  RVec out(dim());
  for (int i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      const Rational f = a[i] * b[j];
      const RVec& c = structure[i][j];
      for (int k = 0; k < dim(); ++k)
        if (!c[k].is_zero()) out[k] += f * c[k];
    }
  }
  return out;
}

Matrix FiniteDimAlgebra::left_multiplication(int i) const {
  Matrix m(dim(), dim());
  for (int j = 0; j < dim(); ++j)
    for (int k = 0; k < dim(); ++k) m(k, j) = structure[i][j][k];
  return m;
}

std::optional<std::string> FiniteDimAlgebra::check_axioms() const {
  const int n = dim();
  if (static_cast<int>(structure.size()) != n || static_cast<int>(unit.size()) != n) {
    return "structure constants do not match the basis";
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(structure[i].size()) != n) return "structure constants do not match the basis";
    for (int j = 0; j < n; ++j)
      if (static_cast<int>(structure[i][j].size()) != n) return "structure constants do not match the basis";
  }
  for (int i = 0; i < n; ++i) {
    RVec e(n);
    e[i] = 1;
    if (multiply(unit, e) != e || multiply(e, unit) != e) return "unit law fails at " + labels[i];
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        RVec ek(n);
        ek[k] = 1;
        RVec ei(n);
        ei[i] = 1;
        if (multiply(structure[i][j], ek) != multiply(ei, structure[j][k])) {
          return "associativity fails at (" + labels[i] + ", " + labels[j] + ", " + labels[k] + ")";
        }
      }
  return std::nullopt;
}

namespace {

Rational json_rational(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_array() && v.size() == 2) return Rational(v[0].get<long long>(), v[1].get<long long>());
  throw InvalidInput("expected an integer, \"a/b\" or [a, b]");
}

json rational_json(const Rational& q) {
  if (auto i = q.to_int64()) return *i;
  return q.to_string();
}

RVec json_rvec(const json& v) {
  RVec out;
  for (const auto& x : v) out.push_back(json_rational(x));
  return out;
}

Matrix json_matrix(const json& v, int n) {
  if (!v.is_array() || static_cast<int>(v.size()) != n) throw InvalidInput("action matrix has the wrong size");
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    if (!v[i].is_array() || static_cast<int>(v[i].size()) != n) throw InvalidInput("action matrix has the wrong size");
    for (int j = 0; j < n; ++j) m(i, j) = json_rational(v[i][j]);
  }
  return m;
}

}  // namespace

FiniteDimAlgebra algebra_from_json(const json& j) {
  try {
    FiniteDimAlgebra a;
    a.name = j.value("name", "fixture");
    a.labels = j.at("labels").get<std::vector<std::string>>();
    for (const auto& row : j.at("structure")) {
      std::vector<RVec> r;
      for (const auto& c : row) r.push_back(json_rvec(c));
      a.structure.push_back(std::move(r));
    }
    a.unit = json_rvec(j.at("unit"));
    if (auto err = a.check_axioms()) throw InvalidInput(a.name + ": " + *err);
    return a;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("algebra descriptor: ") + e.what());
  }
}

json algebra_to_json(const FiniteDimAlgebra& a) {
  json structure = json::array();
  for (const auto& row : a.structure) {
    json r = json::array();
    for (const auto& c : row) {
      json v = json::array();
      for (const auto& x : c) v.push_back(rational_json(x));
      r.push_back(v);
    }
    structure.push_back(r);
  }
  json unit = json::array();
  for (const auto& x : a.unit) unit.push_back(rational_json(x));
  return json{{"name", a.name}, {"labels", a.labels}, {"structure", structure}, {"unit", unit}};
}

FiniteDimAlgebra build_endo_algebra(const GroupPtr& l, const GroupPtr& t, FieldMode mode, int order_cap) {
  SpacePtr s = MorphismSpace::get(l, l, t, mode, order_cap);
  const int n = s->dim();
  FiniteDimAlgebra a;
  a.name = "A(" + l->name() + "x" + l->name() + ") T=" + t->name() + " " + field_name(mode);
  std::vector<RepMorphism> basis;
  for (int b = 0; b < n; ++b) {
    basis.push_back(RepMorphism::basis_element(s, b));
    a.labels.push_back(s->basis().label(b));
  }
  a.structure.assign(n, std::vector<RVec>(n));
  parallel_for(n, [&](int i) {
    for (int j = 0; j < n; ++j) a.structure[i][j] = compose(basis[i], basis[j]).coefficients();
  });
  a.unit = identity(l, t, mode).coefficients();
  return a;
}

FiniteDimAlgebra algebra_product(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b) {
  const int n = a.dim(), m = b.dim();
  FiniteDimAlgebra p;
  p.name = a.name + " x " + b.name;
  for (const auto& l : a.labels) p.labels.push_back("L:" + l);
  for (const auto& l : b.labels) p.labels.push_back("R:" + l);
  p.structure.assign(n + m, std::vector<RVec>(n + m, RVec(n + m)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) p.structure[i][j][k] = a.structure[i][j][k];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) p.structure[n + i][n + j][n + k] = b.structure[i][j][k];
  p.unit = a.unit;
  p.unit.insert(p.unit.end(), b.unit.begin(), b.unit.end());
  return p;
}

namespace {

FiniteDimAlgebra rationals() {
  return {"Q", {"1"}, {{RVec{1}}}, RVec{1}};
}

FiniteDimAlgebra dual_numbers() {
  FiniteDimAlgebra a;
  a.name = "Q[x]/(x^2)";
  a.labels = {"1", "x"};
  a.structure = {{RVec{1, 0}, RVec{0, 1}}, {RVec{0, 1}, RVec{0, 0}}};
  a.unit = RVec{1, 0};
  return a;
}

}  // namespace

std::vector<std::string> fixture_names() { return {"Q", "nilpotent2", "endo-injected"}; }

FiniteDimAlgebra fixture_algebra(const std::string& name) {
  if (name == "Q") return rationals();
  if (name == "nilpotent2") return dual_numbers();
  if (name == "endo-injected") {
    const Catalog& cat = Catalog::builtin();
    FiniteDimAlgebra p =
        algebra_product(build_endo_algebra(cat.get("C2"), cat.get("C3"), FieldMode::Rational), dual_numbers());
    p.name = "endo-injected";
    return p;
  }
  throw InvalidInput("unknown fixture \"" + name + "\"");
}

RadicalReport radical_via_trace_form(const FiniteDimAlgebra& a) {
  const int n = a.dim();
  RVec tr(n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) tr[k] += a.structure[k][j][j];
  RadicalReport r;
  r.trace_form = Matrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational s;
      for (int k = 0; k < n; ++k)
        if (!a.structure[i][j][k].is_zero()) s += a.structure[i][j][k] * tr[k];
      r.trace_form(i, j) = s;
    }
  r.basis = nullspace(r.trace_form);
  r.dimension = static_cast<int>(r.basis.size());
  r.trace_form_determinant = determinant(r.trace_form);
  r.consistent = (r.dimension == 0) == !r.trace_form_determinant.is_zero();
  if (!r.consistent) throw std::logic_error("trace-form kernel and determinant disagree");
  return r;
}

SemisimplicityCertificate certify_semisimple(const GroupPtr& l, const GroupPtr& t, FieldMode mode,
                                             const std::vector<GroupPtr>& probes, int order_cap,
                                             const FiniteDimAlgebra* algebra) {
  SemisimplicityCertificate c;
  c.l = l;
  c.t = t;
  c.mode = mode;
  bool ok = true;
  for (const auto& h : probes) {
    ProbeReport p{h, gram_matrix(h, l, t, mode, order_cap), check_pairing_nondegenerate(h, l, t, mode, order_cap)};
    ok = ok && p.gram.positive_definite && p.nondegenerate.pass;
    c.probes.push_back(std::move(p));
  }
  const FiniteDimAlgebra alg = algebra ? *algebra : build_endo_algebra(l, t, mode, order_cap);
  if (auto err = alg.check_axioms()) throw std::logic_error(alg.name + ": " + *err);
  c.algebra_name = alg.name;
  c.algebra_dim = alg.dim();
  c.radical_dim = radical_via_trace_form(alg).dimension;
  c.pass = ok && c.radical_dim == 0;
  return c;
}

EssentialReport essential_algebra(const GroupPtr& g, const GroupPtr& t, FieldMode mode, const Catalog& catalog,
                                  int order_cap) {
  const std::vector<GroupPtr> smaller = catalog.smaller_groups(g->order());
  SpacePtr a = MorphismSpace::get(g, g, t, mode, order_cap);
  const int n = a->dim();
  SpanBuilder ideal(n);
  EssentialReport r;
  r.algebra_dim = n;
  for (const auto& k : smaller) {
    r.through.push_back(k->name());
    SpacePtr left = MorphismSpace::get(g, k, t, mode, order_cap);   // K -> G
    SpacePtr right = MorphismSpace::get(k, g, t, mode, order_cap);  // G -> K
    for (int i = 0; i < left->dim(); ++i) {
      const RepMorphism x = RepMorphism::basis_element(left, i);
      for (int j = 0; j < right->dim(); ++j) {
        ideal.add(compose(x, RepMorphism::basis_element(right, j)).coefficients());
        if (ideal.dim() == n) break;
      }
    }
  }
  // two-sided closure under the algebra basis
  std::vector<RepMorphism> basis;
  for (int b = 0; b < n; ++b) basis.push_back(RepMorphism::basis_element(a, b));
  for (std::size_t done = 0; done < ideal.basis().size() && ideal.dim() < n; ++done) {
    const RepMorphism v = RepMorphism::from_coefficients(a, ideal.basis()[done]);
    for (const auto& x : basis) {
      ideal.add(compose(x, v).coefficients());
      ideal.add(compose(v, x).coefficients());
    }
  }
  r.ideal_dim = ideal.dim();
  r.quotient_dim = n - r.ideal_dim;
  r.ideal_basis = ideal.basis();
  return r;
}

ModuleData module_from_json(const json& j, const MorphismSpace& endo) {
  try {
    ModuleData m;
    m.dim = j.at("dim").get<int>();
    if (m.dim < 0) throw InvalidInput("module dimension must be non-negative");
    const json& action = j.at("action");
    if (!action.is_object()) throw InvalidInput("\"action\" must map basis labels to matrices");
    std::map<std::string, int> index;
    for (int b = 0; b < endo.dim(); ++b) index[endo.basis().label(b)] = b;
    for (const auto& [label, _] : action.items())
      if (!index.count(label)) throw InvalidInput("unknown basis label \"" + label + "\"");
    for (int b = 0; b < endo.dim(); ++b) {
      const std::string& label = endo.basis().label(b);
      if (!action.contains(label)) throw InvalidInput("missing action of basis element " + label);
      m.action.push_back(json_matrix(action[label], m.dim));
    }
    return m;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("module descriptor: ") + e.what());
  }
}

ModuleData regular_module(const GroupPtr& c, const GroupPtr& t, FieldMode mode) {
  const FiniteDimAlgebra a = build_endo_algebra(c, t, mode, 1 << 30);
  ModuleData m;
  m.dim = a.dim();
  for (int i = 0; i < a.dim(); ++i) m.action.push_back(a.left_multiplication(i));
  return m;
}

EvaluationReport eval_simple_quotient(const GroupPtr& c, const ModuleData& v, const GroupPtr& g,
                                      const GroupPtr& t, FieldMode mode, int order_cap) {
  const FiniteDimAlgebra endo = build_endo_algebra(c, t, mode, order_cap);
  const int n = endo.dim(), d = v.dim;
  if (static_cast<int>(v.action.size()) != n) throw NotAModule("one action matrix per basis element expected");
  for (const auto& m : v.action)
    if (m.rows() != d || m.cols() != d) throw NotAModule("action matrices must be dim x dim");
  Matrix one(d, d);
  for (int k = 0; k < n; ++k) one = one + v.action[k].scaled(endo.unit[k]);
  if (one != Matrix::identity(d)) throw NotAModule("the unit does not act as the identity");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix rhs(d, d);
      for (int k = 0; k < n; ++k)
        if (!endo.structure[i][j][k].is_zero()) rhs = rhs + v.action[k].scaled(endo.structure[i][j][k]);
      if (v.action[i] * v.action[j] != rhs) {
        throw NotAModule("action violates " + endo.labels[i] + " * " + endo.labels[j]);
      }
    }

  SpacePtr x = MorphismSpace::get(g, c, t, mode, order_cap);  // A(G x C)
  SpacePtr y = MorphismSpace::get(c, g, t, mode, order_cap);  // A(C x G)
  SpacePtr e = MorphismSpace::get(c, c, t, mode, order_cap);
  const int m = x->dim(), q = y->dim();
  std::vector<RepMorphism> xs, rs;
  for (int a = 0; a < m; ++a) xs.push_back(RepMorphism::basis_element(x, a));
  for (int j = 0; j < n; ++j) rs.push_back(RepMorphism::basis_element(e, j));

  // relations (x_a o r_j) (x) v_k - x_a (x) r_j v_k
  Matrix rel(m * n * d, m * d);
  for (int a = 0; a < m; ++a)
    for (int j = 0; j < n; ++j) {
      const RVec w = compose(xs[a], rs[j]).coefficients();
      for (int k = 0; k < d; ++k) {
        const int row = (a * n + j) * d + k;
        for (int b = 0; b < m; ++b)
          if (!w[b].is_zero()) rel(row, b * d + k) += w[b];
        for (int l = 0; l < d; ++l) rel(row, a * d + l) -= v.action[j](l, k);
      }
    }

  // Phi: x_a (x) v_k -> ((y_b o x_a) v_k)_b
  Matrix phi(q * d, m * d);
  for (int b = 0; b < q; ++b) {
    const RepMorphism yb = RepMorphism::basis_element(y, b);
    for (int a = 0; a < m; ++a) {
      const RVec u = compose(yb, xs[a]).coefficients();
      for (int k = 0; k < d; ++k)
        for (int j = 0; j < n; ++j) {
          if (u[j].is_zero()) continue;
          for (int l = 0; l < d; ++l) phi(b * d + l, a * d + k) += u[j] * v.action[j](l, k);
        }
    }
  }
  if (!(phi * rel.transpose()).is_zero()) throw std::logic_error("Phi does not vanish on the tensor relations");

  EvaluationReport r;
  r.dim_tensor = m * d;
  r.dim_l = m * d - rank(rel);
  r.dim_s = rank(phi);
  r.dim_j = r.dim_l - r.dim_s;
  return r;
}

AutReport aut_multiplicities(const GroupPtr& l, const GroupPtr& t, const GroupPtr& c, int order_cap) {
  if (!c->is_cyclic()) throw NotCyclic(c->name() + " is not cyclic");
  if (std::gcd(t->order(), c->order()) != 1 || std::gcd(t->order(), l->order()) != 1) {
    throw CoprimalityViolated("|" + t->name() + "| must be prime to |" + c->name() + "| and |" + l->name() + "|");
  }
  const long long mod = c->order();
  AutReport r;
  for (long long u = 1; u <= std::max(1LL, mod); ++u)
    if (std::gcd(u, mod) == 1 && (mod == 1 || u < mod)) r.units.push_back(u);
  const int nu = static_cast<int>(r.units.size());
  std::vector<std::vector<int>> table(nu, std::vector<int>(nu));
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nu; ++j) {
      const long long p = (r.units[i] * r.units[j]) % std::max(1LL, mod);
      for (int k = 0; k < nu; ++k)
        if (r.units[k] % std::max(1LL, mod) == p) table[i][j] = k;
    }
  const GroupPtr aut = FiniteGroup::from_table("Aut(" + c->name() + ")", table);

  SpacePtr m = MorphismSpace::get(c, l, t, FieldMode::Rational, order_cap);
  const int n = m->dim();
  r.module_dim = n;
  std::vector<RepMorphism> basis;
  for (int b = 0; b < n; ++b) basis.push_back(RepMorphism::basis_element(m, b));
  for (long long u : r.units) {
    const RepMorphism act = linearize(beta_r(c, u, t));
    Matrix rho(n, n);
    for (int b = 0; b < n; ++b) {
      const RVec col = compose(act, basis[b]).coefficients();
      for (int k = 0; k < n; ++k) rho(k, b) = col[k];
    }
    r.action.push_back(std::move(rho));
  }
  r.relations_hold = true;
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nu; ++j) {
      const Matrix ab = r.action[i] * r.action[j];
      if (ab != r.action[table[i][j]] || ab != r.action[j] * r.action[i]) r.relations_hold = false;
    }

  const RationalBasis rb = rational_basis(aut);
  const auto& cls = aut->classes();
  Matrix total(n, n);
  for (std::size_t o = 0; o < rb.rows.size(); ++o) {
    AutComponent comp;
    comp.characters = rb.orbits[o];
    Matrix e(n, n);
    for (int u = 0; u < nu; ++u) {
      comp.values.push_back(rb.rows[o][cls.class_of[u]].to_rational());
      const Rational w = rb.rows[o][cls.class_of[aut->inv(u)]].to_rational();
      if (!w.is_zero()) e = e + r.action[u].scaled(w);
    }
    comp.projector = e.scaled(Rational(1, nu));
    const Rational tr = comp.projector.trace();
    if (!tr.is_integer()) throw NotIntegral("isotypic dimension " + tr.to_string());
    comp.isotypic_dim = static_cast<int>(*tr.to_int64());
    comp.multiplicity = tr / Rational(static_cast<long long>(comp.characters.size()));
    total = total + comp.projector;
    r.components.push_back(std::move(comp));
  }
  r.projectors_ok = total == Matrix::identity(n);
  for (std::size_t a = 0; a < r.components.size(); ++a)
    for (std::size_t b = 0; b < r.components.size(); ++b) {
      const Matrix p = r.components[a].projector * r.components[b].projector;
      if (a == b ? p != r.components[a].projector : !p.is_zero()) r.projectors_ok = false;
    }
  return r;
}

}  // namespace bisetlab
