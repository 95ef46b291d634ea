#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace bisetlab {

inline constexpr int kDefaultOrderCap = 64;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Conjugacy classes of a group. Classes are ordered by representative, and
/// the representative of a class is its minimal element index.
struct ConjugacyClassSet {
  std::vector<std::vector<int>> classes;
  std::vector<int> representatives;
  std::vector<int> class_of;
  std::vector<int> sizes;
  std::vector<int> inverse_class;  // class of g^-1 for g in the class

  int count() const { return static_cast<int>(classes.size()); }
};

/// A finite group stored as a full Cayley table. Element 0 is the identity.
///
/// Groups built by direct_product() also remember their factors; their
/// elements are indexed lexicographically by factor coordinates with the
/// first factor most significant, so (0, ..., 0) is the identity.
class FiniteGroup {
 public:
  /// Validates identity, inverses and (for order <= 64) associativity.
  static GroupPtr from_table(std::string name, const std::vector<std::vector<int>>& table,
                             int order_cap = kDefaultOrderCap);
  /// Closes a set of permutations of {0..degree-1} under composition.
  /// Elements are listed in breadth-first order from the identity.
  static GroupPtr from_permutations(std::string name, int degree,
                                    const std::vector<std::vector<int>>& generators,
                                    int order_cap = kDefaultOrderCap);
  static GroupPtr cyclic(int n, std::string name = "");

  const std::string& name() const { return name_; }
  int order() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  int power(int g, long long k) const;
  int element_order(int g) const { return element_order_[g]; }
  int exponent() const { return exponent_; }
  bool is_abelian() const { return abelian_; }
  bool is_cyclic() const;

  const ConjugacyClassSet& classes() const { return classes_; }
  int centralizer_order(int g) const { return n_ / classes_.sizes[classes_.class_of[g]]; }

  const std::vector<int>& table() const { return table_; }
  /// Same order and identical Cayley table.
  bool same_table(const FiniteGroup& other) const;
  std::uint64_t fingerprint() const;

  bool is_product() const { return !factors_.empty(); }
  const std::vector<GroupPtr>& factors() const { return factors_; }
  int coordinate(int element, int axis) const;
  std::vector<int> coordinates(int element) const;
  int element_at(std::span<const int> coords) const;

 private:
  FiniteGroup(std::string name, int n, std::vector<int> table);
  void finish();

  friend GroupPtr direct_product(const std::vector<GroupPtr>& factors, int order_cap,
                                 std::string name);

  std::string name_;
  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> element_order_;
  int exponent_ = 1;
  bool abelian_ = true;
  ConjugacyClassSet classes_;
  std::vector<GroupPtr> factors_;
  std::vector<int> coords_;  // n_ x factors_.size()
};

/// Direct product with componentwise multiplication. Throws OrderCapExceeded.
GroupPtr direct_product(const std::vector<GroupPtr>& factors, int order_cap = kDefaultOrderCap,
                        std::string name = "");

const ConjugacyClassSet& conjugacy_classes(const FiniteGroup& g);

/// True when the two groups are the same object or have identical tables.
bool same_group(const GroupPtr& a, const GroupPtr& b);

}  // namespace bisetlab
