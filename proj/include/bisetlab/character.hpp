#pragma once

#include <span>
#include <string>
#include <vector>

#include "bisetlab/cyclotomic.hpp"
#include "bisetlab/group.hpp"
#include "bisetlab/linalg.hpp"
#include "bisetlab/subgroup.hpp"

namespace bisetlab {

/// Irreducible complex characters of a group, indexed by its conjugacy classes.
struct CharacterTable {
  GroupPtr group;
  std::vector<std::vector<Cyclotomic>> rows;  // rows[i][class]
  std::vector<int> degrees;
  /// galois[j][i] = row of the conjugate of row i under zeta -> zeta^j, for
  /// 0 <= j < exponent; -1 when j is not a unit.
  std::vector<std::vector<int>> galois;
  /// Row of the contragredient (complex conjugate) character.
  std::vector<int> dual;

  int size() const { return static_cast<int>(rows.size()); }
};

/// Memoized per group object. Direct products get the outer tensor product of
/// their factor tables, rows in mixed-radix order of the factor rows; other
/// groups use Dixon's modular method, rows sorted by degree and then by
/// descending values (so the trivial character comes first).
/// Throws TableComputationFailure if the result fails orthogonality.
const CharacterTable& character_table(const GroupPtr& g);
/// Dixon's method without the product shortcut, for cross-checks.
CharacterTable dixon_table(const GroupPtr& g);

/// Class function on one group, by class.
struct VirtualCharacter {
  GroupPtr group;
  std::vector<Cyclotomic> values;

  friend bool operator==(const VirtualCharacter&, const VirtualCharacter&) = default;
};

VirtualCharacter irreducible(const GroupPtr& g, int row);
/// Number of fixed points on G/S.
VirtualCharacter permutation_character(const GroupPtr& g, const Subgroup& s);
/// (1/|G|) sum_g chi(g) conj(psi(g)); throws NotRational if not in Q.
Rational inner_product(const VirtualCharacter& chi, const VirtualCharacter& psi);
VirtualCharacter contragredient(const VirtualCharacter& chi);
/// Coefficients on the irreducible rows; throws NotRational when chi is not
/// a rational combination of irreducibles.
RVec decompose(const VirtualCharacter& chi);

/// Classes of a product of groups, as tuples of factor classes. Tuples are
/// flattened in mixed radix, first factor most significant.
class ClassSpace {
 public:
  explicit ClassSpace(std::vector<GroupPtr> factors);

  const std::vector<GroupPtr>& factors() const { return factors_; }
  int arity() const { return static_cast<int>(factors_.size()); }
  int size() const { return size_; }
  int radix(int axis) const { return radix_[axis]; }
  int stride(int axis) const { return stride_[axis]; }
  int component(int index, int axis) const { return (index / stride_[axis]) % radix_[axis]; }
  int index(std::span<const int> tuple) const;
  long long class_size(int index) const { return sizes_[index]; }
  int inverse(int index) const { return inverse_[index]; }
  long long group_order() const { return order_; }
  int exponent() const { return exponent_; }
  /// Tuple index of the class of `element` of a product group whose factors
  /// are exactly these (throws FactorMismatch otherwise).
  std::vector<int> classes_of(const FiniteGroup& product) const;

 private:
  std::vector<GroupPtr> factors_;
  std::vector<int> radix_, stride_;
  int size_ = 1;
  std::vector<long long> sizes_;
  std::vector<int> inverse_;
  long long order_ = 1;
  int exponent_ = 1;
};

enum class FieldMode { Split, Rational };

const char* field_name(FieldMode mode);
FieldMode parse_field(const std::string& text);

/// A basis of Q (x) R_F on a ClassSpace: tensor products of irreducibles
/// (Split) or Galois-orbit sums of them (Rational).
class CharacterBasis {
 public:
  CharacterBasis(ClassSpace space, FieldMode mode);

  const ClassSpace& space() const { return space_; }
  FieldMode mode() const { return mode_; }
  int dim() const { return static_cast<int>(values_.size()); }
  const std::vector<Cyclotomic>& values(int b) const { return values_[b]; }
  const std::string& label(int b) const { return labels_[b]; }
  /// Tensor-row indices (irreducible tuples, flattened) making up element b.
  const std::vector<int>& members(int b) const { return members_[b]; }
  /// Coefficients of a class function in this basis. Throws NotRational when
  /// the function is not in the Q-span.
  RVec coefficients(std::span<const Cyclotomic> values) const;
  /// Coefficients on the tensor rows (before grouping into orbits).
  RVec split_coefficients(std::span<const Cyclotomic> values) const;

 private:
  ClassSpace space_;
  FieldMode mode_;
  std::vector<std::vector<Cyclotomic>> values_;
  std::vector<std::vector<int>> members_;
  std::vector<int> orbit_of_row_;  // tensor row -> basis element
  std::vector<std::string> labels_;
  // per axis: proj[a][row][class] = |class| conj(chi_row(class)) / |G_a|
  std::vector<std::vector<std::vector<Cyclotomic>>> proj_;
};

/// Galois-orbit basis of one group (the rational basis of R_Q(G)).
struct RationalBasis {
  GroupPtr group;
  std::vector<std::vector<int>> orbits;         // rows of the character table
  std::vector<std::vector<Cyclotomic>> rows;    // orbit sums, rational values
};
RationalBasis rational_basis(const GroupPtr& g);

}  // namespace bisetlab
