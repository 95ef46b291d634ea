#pragma once

#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "bisetlab/rep_category.hpp"
#include "bisetlab/subgroup.hpp"

namespace bisetlab {

/// Transitive bisets for Hom(source, target) in kB_shift: conjugacy classes
/// of subgroups of target x source x shift, each stored as its minimal
/// conjugate.
class BisetSpace {
 public:
  static std::shared_ptr<const BisetSpace> get(const GroupPtr& target, const GroupPtr& source,
                                               const GroupPtr& shift, int order_cap = kDefaultOrderCap);
  BisetSpace(GroupPtr target, GroupPtr source, GroupPtr shift, int order_cap);

  const GroupPtr& target() const { return target_; }
  const GroupPtr& source() const { return source_; }
  const GroupPtr& shift() const { return shift_; }
  /// target x source x shift
  const GroupPtr& product() const { return product_; }
  const std::vector<Subgroup>& classes() const { return classes_; }
  int dim() const { return static_cast<int>(classes_.size()); }
  /// Class index of any subgroup of product(); throws std::logic_error when
  /// the mask is not a subgroup.
  int class_of(const ElementSet& mask) const;

 private:
  GroupPtr target_, source_, shift_, product_;
  std::vector<Subgroup> classes_;
  std::unordered_map<ElementSet, int, ElementSetHash> lookup_;
};

using BisetSpacePtr = std::shared_ptr<const BisetSpace>;

/// Integer combination of transitive bisets; a morphism source -> target.
struct BurnsideMorphism {
  BisetSpacePtr space;
  std::map<int, long long> coeffs;  // class index -> coefficient, no zeros

  static BurnsideMorphism basis_element(const BisetSpacePtr& space, int cls);
  friend bool operator==(const BurnsideMorphism& a, const BurnsideMorphism& b) {
    return a.space == b.space && a.coeffs == b.coeffs;
  }
};

/// beta o alpha via the double-coset formula. Throws FactorMismatch.
BurnsideMorphism compose_bisets(const BurnsideMorphism& beta, const BurnsideMorphism& alpha);
/// The class of Delta(G) x T.
BurnsideMorphism identity_biset(const GroupPtr& g, const GroupPtr& shift);
/// The class of Delta_r(D) x T. Throws NotCyclic, NotAUnit.
BurnsideMorphism beta_r(const GroupPtr& d, long long r, const GroupPtr& shift);

/// Permutation characters, extended linearly; lands in the rational basis.
RepMorphism linearize(const BurnsideMorphism& x);
/// Permutation character of (target x source x shift)/E as a morphism.
RepMorphism linearize_class(const BisetSpacePtr& space, int cls);

}  // namespace bisetlab
