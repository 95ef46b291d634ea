#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "bisetlab/group.hpp"

namespace bisetlab {

/// Fixed-width membership bitmap over the elements of one group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

  int universe() const { return n_; }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  int count() const;
  bool subset_of(const ElementSet& other) const;
  std::vector<int> members() const;
  std::size_t hash() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

/// A subgroup of a parent group, members kept sorted.
class Subgroup {
 public:
  Subgroup() = default;
  /// Checks closure; throws InvalidInput if the members do not form a subgroup.
  Subgroup(GroupPtr parent, std::vector<int> members);
  static Subgroup trusted(GroupPtr parent, const ElementSet& mask);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<int>& members() const { return members_; }
  const ElementSet& mask() const { return mask_; }
  int order() const { return static_cast<int>(members_.size()); }
  bool contains(int g) const { return mask_.test(g); }

  friend bool operator==(const Subgroup& a, const Subgroup& b);

 private:
  GroupPtr parent_;
  std::vector<int> members_;
  ElementSet mask_;
};

/// Deterministic subgroup order: by size, then lexicographic member list.
bool subgroup_less(const Subgroup& a, const Subgroup& b);

Subgroup whole_group(const GroupPtr& g);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup generated_subgroup(const GroupPtr& g, const std::vector<int>& generators);
/// g S g^-1
Subgroup conjugate(const Subgroup& s, int g);
/// The minimal conjugate of s under subgroup_less.
Subgroup canonical_conjugate(const Subgroup& s);
bool is_normal_in(const Subgroup& n, const Subgroup& h);

/// Every subgroup of g, sorted by subgroup_less.
std::vector<Subgroup> all_subgroups(const GroupPtr& g, int order_cap = kDefaultOrderCap);
/// One canonical representative per conjugacy class, sorted by subgroup_less.
std::vector<Subgroup> subgroups_up_to_conjugacy(const GroupPtr& g, int order_cap = kDefaultOrderCap);
/// Representatives of the conjugacy classes of cyclic subgroups.
std::vector<Subgroup> cyclic_subgroups_up_to_conjugacy(const GroupPtr& g,
                                                       int order_cap = kDefaultOrderCap);

struct DoubleCoset {
  int representative;  // minimal element of the double coset
  int size;
};
/// The double cosets a \ G / b, ordered by representative.
std::vector<DoubleCoset> double_cosets(const Subgroup& a, const Subgroup& b);

/// E * D = {(g,k[,t]) | exists h: (g,h[,t]) in E, (h,k[,t]) in D} for
/// E <= G x H [x T] and D <= H x K [x T]. The result lives in `target` when it
/// is given (it must be G x K [x T]), otherwise in a freshly built product.
Subgroup star_product(const Subgroup& e, const Subgroup& d, GroupPtr target = nullptr);
/// The member mask of E * D inside `target`, without the closure check.
ElementSet star_product_mask(const Subgroup& e, const Subgroup& d, const GroupPtr& target);

/// p_i(E) and k_i(E) as subgroups of factor `axis` of E's parent product.
std::pair<Subgroup, Subgroup> projections_kernels(const Subgroup& e, int axis);
/// Image of E under projection onto the listed axes, inside `target` (the
/// product of those factors, in that order).
Subgroup project(const Subgroup& e, const std::vector<int>& axes, const GroupPtr& target);

/// A generator of a cyclic group (the minimal element of maximal order).
int cyclic_generator(const FiniteGroup& g);
/// {(d, d^r)} inside `dd` = D x D; builds D x D when dd is null.
Subgroup twisted_diagonal(const GroupPtr& d, long long r, GroupPtr dd = nullptr);
/// {(g, g)} inside G x G.
Subgroup diagonal(const GroupPtr& g, GroupPtr gg = nullptr);

/// Brute-force isomorphism test by generator images; requires |a| <= 16.
bool isomorphic(const FiniteGroup& a, const FiniteGroup& b);
/// Quotient h / n as a table group (coset of the identity first).
GroupPtr quotient_group(const Subgroup& h, const Subgroup& n);
/// Whether k is isomorphic to some H0 / N with N normal in H0 <= h.
bool is_subquotient(const GroupPtr& k, const GroupPtr& h, int order_cap = kDefaultOrderCap);

}  // namespace bisetlab
