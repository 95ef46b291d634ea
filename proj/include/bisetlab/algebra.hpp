#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bisetlab/catalog.hpp"
#include "bisetlab/rep_category.hpp"

namespace bisetlab {

/// Finite-dimensional algebra over Q given by structure constants.
struct FiniteDimAlgebra {
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::vector<RVec>> structure;  // structure[i][j] = coefficients of b_i b_j
  RVec unit;

  int dim() const { return static_cast<int>(labels.size()); }
  RVec multiply(const RVec& a, const RVec& b) const;
  /// Matrix of x -> b_i x, columns indexed by the basis.
  Matrix left_multiplication(int i) const;
  /// Empty when associative and unital; otherwise a description of the first failure.
  std::optional<std::string> check_axioms() const;
};

FiniteDimAlgebra algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const FiniteDimAlgebra& a);

/// A(L x L) for A = (Q R_F)_T with composition as product.
FiniteDimAlgebra build_endo_algebra(const GroupPtr& l, const GroupPtr& t, FieldMode mode,
                                    int order_cap = kDefaultOrderCap);
/// A1 x A2 (direct product of algebras).
FiniteDimAlgebra algebra_product(const FiniteDimAlgebra& a, const FiniteDimAlgebra& b);
/// Built-in fixtures: "Q", "nilpotent2" (Q[x]/(x^2)) and "endo-injected"
/// (A(C2 x C2) for T = C3 in rational mode, times Q[x]/(x^2)).
FiniteDimAlgebra fixture_algebra(const std::string& name);
std::vector<std::string> fixture_names();

struct RadicalReport {
  int dimension = 0;
  std::vector<RVec> basis;
  Matrix trace_form;
  Rational trace_form_determinant;
  /// radical = 0 exactly when the trace form is nonsingular
  bool consistent = false;
};
/// Kernel of (a, b) -> tr(L_{ab}); the Jacobson radical in characteristic 0.
RadicalReport radical_via_trace_form(const FiniteDimAlgebra& a);

struct ProbeReport {
  GroupPtr h;
  GramReport gram;
  NondegeneracyReport nondegenerate;
};

struct SemisimplicityCertificate {
  GroupPtr l, t;
  FieldMode mode = FieldMode::Rational;
  std::vector<ProbeReport> probes;
  std::string algebra_name;
  int algebra_dim = 0;
  int radical_dim = 0;
  bool pass = false;
};
/// Gram + positivity and nondegeneracy for every probe H, plus the radical
/// of A(L x L) (or of `algebra` when given, for negative controls).
SemisimplicityCertificate certify_semisimple(const GroupPtr& l, const GroupPtr& t, FieldMode mode,
                                             const std::vector<GroupPtr>& probes,
                                             int order_cap = kDefaultOrderCap,
                                             const FiniteDimAlgebra* algebra = nullptr);

struct EssentialReport {
  int algebra_dim = 0;
  int ideal_dim = 0;
  int quotient_dim = 0;
  std::vector<RVec> ideal_basis;
  std::vector<std::string> through;  // the smaller groups used
};
/// A(G x G) modulo the span of a o b through every smaller group K of the
/// catalog. Throws IncompleteCatalog.
EssentialReport essential_algebra(const GroupPtr& g, const GroupPtr& t, FieldMode mode,
                                  const Catalog& catalog, int order_cap = kDefaultOrderCap);

/// A module over A(C x C): one matrix per basis element, acting on Q^dim.
struct ModuleData {
  int dim = 0;
  std::vector<Matrix> action;  // indexed like the basis of A(C x C)
};
/// Reads {"dim": d, "action": {label: matrix}} against the basis labels of
/// the space A(C x C). Throws InvalidInput.
ModuleData module_from_json(const nlohmann::json& j, const MorphismSpace& endo);
/// The regular module A(C x C) acting on itself by left composition.
ModuleData regular_module(const GroupPtr& c, const GroupPtr& t, FieldMode mode);

struct EvaluationReport {
  int dim_tensor = 0;  // dim A(G x C) * dim V
  int dim_l = 0;
  int dim_j = 0;
  int dim_s = 0;
};
/// Dimensions of L_{C,V}(G), J_{C,V}(G), S_{C,V}(G). Throws NotAModule.
EvaluationReport eval_simple_quotient(const GroupPtr& c, const ModuleData& v, const GroupPtr& g,
                                      const GroupPtr& t, FieldMode mode,
                                      int order_cap = kDefaultOrderCap);

struct AutComponent {
  std::vector<int> characters;        // rows of the character table of Aut(C)
  std::vector<Rational> values;       // orbit-sum character on the units, in unit order
  Matrix projector;
  int isotypic_dim = 0;
  Rational multiplicity;
};
struct AutReport {
  std::vector<long long> units;
  int module_dim = 0;
  std::vector<Matrix> action;  // per unit
  std::vector<AutComponent> components;
  bool relations_hold = false;      // rho(u) rho(v) = rho(uv), commuting
  bool projectors_ok = false;       // idempotent, orthogonal, summing to 1
};
/// Aut(C) = (Z/m)^x acting on M(C) = A(C x L) for A = (Q R_Q)_T through
/// composition with linearize(beta_r). Throws NotCyclic, CoprimalityViolated.
AutReport aut_multiplicities(const GroupPtr& l, const GroupPtr& t, const GroupPtr& c,
                             int order_cap = kDefaultOrderCap);

}  // namespace bisetlab
