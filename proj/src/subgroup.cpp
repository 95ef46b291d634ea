#include "bisetlab/subgroup.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "bisetlab/errors.hpp"

namespace bisetlab {

int ElementSet::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool ElementSet::subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

std::vector<int> ElementSet::members() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

std::size_t ElementSet::hash() const {
  std::size_t h = static_cast<std::size_t>(n_) * 0x9e3779b97f4a7c15ULL;
  for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
  return h;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<int> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  const FiniteGroup& g = *parent_;
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  mask_ = ElementSet(g.order());
  for (int m : members_) {
    if (m < 0 || m >= g.order()) throw InvalidInput("subgroup member out of range");
    mask_.set(m);
  }
  if (members_.empty() || !mask_.test(0)) throw InvalidInput("subgroup must contain the identity");
  for (int a : members_) {
    if (!mask_.test(g.inv(a))) throw InvalidInput("subset is not closed under inverses");
    for (int b : members_)
      if (!mask_.test(g.mul(a, b))) throw InvalidInput("subset is not closed under multiplication");
  }
}

Subgroup Subgroup::trusted(GroupPtr parent, const ElementSet& mask) {
  Subgroup s;
  s.parent_ = std::move(parent);
  s.mask_ = mask;
  s.members_ = mask.members();
  return s;
}

bool operator==(const Subgroup& a, const Subgroup& b) {
  return same_group(a.parent_, b.parent_) && a.members_ == b.members_;
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.members() < b.members();
}

Subgroup whole_group(const GroupPtr& g) {
  std::vector<int> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  ElementSet m(g->order());
  for (int x : all) m.set(x);
  return Subgroup::trusted(g, m);
}

Subgroup trivial_subgroup(const GroupPtr& g) {
  ElementSet m(g->order());
  m.set(0);
  return Subgroup::trusted(g, m);
}

namespace {

ElementSet closure(const FiniteGroup& g, const std::vector<int>& gens) {
  ElementSet m(g.order());
  m.set(0);
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int s : gens) {
      int y = g.mul(queue[i], s);
      if (!m.test(y)) {
        m.set(y);
        queue.push_back(y);
      }
    }
  }
  return m;
}

ElementSet conjugate_mask(const FiniteGroup& g, const ElementSet& s, int x) {
  ElementSet out(g.order());
  for (int m : s.members()) out.set(g.conj(x, m));
  return out;
}

}  // namespace

Subgroup generated_subgroup(const GroupPtr& g, const std::vector<int>& generators) {
  for (int x : generators)
    if (x < 0 || x >= g->order()) throw InvalidInput("generator out of range");
  return Subgroup::trusted(g, closure(*g, generators));
}

Subgroup conjugate(const Subgroup& s, int g) {
  return Subgroup::trusted(s.parent(), conjugate_mask(*s.parent(), s.mask(), g));
}

Subgroup canonical_conjugate(const Subgroup& s) {
  Subgroup best = s;
  for (int x = 1; x < s.parent()->order(); ++x) {
    Subgroup c = conjugate(s, x);
    if (subgroup_less(c, best)) best = std::move(c);
  }
  return best;
}

bool is_normal_in(const Subgroup& n, const Subgroup& h) {
  const FiniteGroup& g = *h.parent();
  if (!n.mask().subset_of(h.mask())) return false;
  for (int x : h.members())
    for (int m : n.members())
      if (!n.contains(g.conj(x, m))) return false;
  return true;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g, int order_cap) {
  if (g->order() > order_cap) {
    throw OrderCapExceeded(g->name() + " has order " + std::to_string(g->order()) + " > cap " +
                           std::to_string(order_cap));
  }
  struct Node {
    ElementSet mask;
    std::vector<int> gens;
  };
  std::vector<Node> nodes;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Node> cyclic;
  for (int x = 0; x < g->order(); ++x) {
    ElementSet m = closure(*g, {x});
    if (seen.insert(m).second) {
      Node n{m, x == 0 ? std::vector<int>{} : std::vector<int>{x}};
      cyclic.push_back(n);
      nodes.push_back(n);
    }
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (const Node& c : cyclic) {
      if (c.gens.empty() || nodes[i].mask.test(c.gens[0])) continue;
      std::vector<int> gens = nodes[i].gens;
      gens.push_back(c.gens[0]);
      ElementSet m = closure(*g, gens);
      if (seen.insert(m).second) nodes.push_back(Node{std::move(m), std::move(gens)});
    }
  }
  std::vector<Subgroup> out;
  out.reserve(nodes.size());
  for (const Node& n : nodes) out.push_back(Subgroup::trusted(g, n.mask));
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

std::vector<Subgroup> subgroups_up_to_conjugacy(const GroupPtr& g, int order_cap) {
  std::vector<Subgroup> all = all_subgroups(g, order_cap);
  std::unordered_set<ElementSet, ElementSetHash> covered;
  std::vector<Subgroup> reps;
  for (const Subgroup& s : all) {
    if (covered.count(s.mask())) continue;
    reps.push_back(s);  // sorted order makes the first member of a class its minimum
    for (int x = 0; x < g->order(); ++x) covered.insert(conjugate_mask(*g, s.mask(), x));
  }
  return reps;
}

std::vector<Subgroup> cyclic_subgroups_up_to_conjugacy(const GroupPtr& g, int order_cap) {
  std::vector<Subgroup> out;
  for (const Subgroup& s : subgroups_up_to_conjugacy(g, order_cap)) {
    bool cyclic = false;
    for (int x : s.members()) {
      if (g->element_order(x) == s.order()) {
        cyclic = true;
        break;
      }
    }
    if (cyclic) out.push_back(s);
  }
  return out;
}

std::vector<DoubleCoset> double_cosets(const Subgroup& a, const Subgroup& b) {
  if (!same_group(a.parent(), b.parent())) throw FactorMismatch("double cosets in different groups");
  const FiniteGroup& g = *a.parent();
  std::vector<char> seen(g.order(), 0);
  std::vector<DoubleCoset> out;
  for (int x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    int size = 0;
    for (int u : a.members()) {
      int ux = g.mul(u, x);
      for (int v : b.members()) {
        int y = g.mul(ux, v);
        if (!seen[y]) {
          seen[y] = 1;
          ++size;
        }
      }
    }
    out.push_back({x, size});
  }
  return out;
}

namespace {

void require_product(const Subgroup& s, const char* what) {
  if (!s.parent()->is_product()) {
    throw FactorMismatch(std::string(what) + " is not a subgroup of a direct product");
  }
}

}  // namespace

namespace {

/// Checks the factor layout of E, D (and target when given); returns the
/// factors of the result product.
std::vector<GroupPtr> star_factors(const Subgroup& e, const Subgroup& d, const GroupPtr& target) {
  require_product(e, "E");
  require_product(d, "D");
  const auto& ef = e.parent()->factors();
  const auto& df = d.parent()->factors();
  const std::size_t arity = ef.size();
  if ((arity != 2 && arity != 3) || df.size() != arity) {
    throw FactorMismatch("star product needs two 2-factor or two 3-factor products");
  }
  if (!same_group(ef[1], df[0])) throw FactorMismatch("middle factors differ");
  if (arity == 3 && !same_group(ef[2], df[2])) throw FactorMismatch("shift factors differ");
  std::vector<GroupPtr> out{ef[0], df[1]};
  if (arity == 3) out.push_back(ef[2]);
  if (target) {
    const auto& tf = target->factors();
    if (tf.size() != arity) throw FactorMismatch("target has wrong arity");
    for (std::size_t i = 0; i < arity; ++i)
      if (!same_group(tf[i], out[i])) throw FactorMismatch("target factors differ");
  }
  return out;
}

}  // namespace

ElementSet star_product_mask(const Subgroup& e, const Subgroup& d, const GroupPtr& target) {
  star_factors(e, d, target);
  const FiniteGroup& pe = *e.parent();
  const FiniteGroup& pd = *d.parent();
  const std::size_t arity = pe.factors().size();
  const int t_order = arity == 3 ? pe.factors()[2]->order() : 1;
  std::unordered_map<int, std::vector<int>> by_middle;  // (h, t) -> ks
  for (int x : d.members()) {
    int h = pd.coordinate(x, 0);
    int t = arity == 3 ? pd.coordinate(x, 2) : 0;
    by_middle[h * t_order + t].push_back(pd.coordinate(x, 1));
  }
  ElementSet out(target->order());
  int coords[3];
  for (int x : e.members()) {
    int h = pe.coordinate(x, 1);
    int t = arity == 3 ? pe.coordinate(x, 2) : 0;
    auto it = by_middle.find(h * t_order + t);
    if (it == by_middle.end()) continue;
    coords[0] = pe.coordinate(x, 0);
    coords[2] = t;
    for (int k : it->second) {
      coords[1] = k;
      out.set(target->element_at(std::span<const int>(coords, arity)));
    }
  }
  return out;
}

Subgroup star_product(const Subgroup& e, const Subgroup& d, GroupPtr target) {
  std::vector<GroupPtr> factors = star_factors(e, d, target);
  if (!target) {
    long long order = 1;
    for (const auto& f : factors) order *= f->order();
    target = direct_product(factors, static_cast<int>(order));
  }
  return Subgroup(target, star_product_mask(e, d, target).members());
}

std::pair<Subgroup, Subgroup> projections_kernels(const Subgroup& e, int axis) {
  const FiniteGroup& p = *e.parent();
  if (!p.is_product()) throw BadAxis(p.name() + " is not a direct product");
  const int arity = static_cast<int>(p.factors().size());
  if (axis < 0 || axis >= arity) throw BadAxis("axis " + std::to_string(axis) + " out of range");
  const GroupPtr& f = p.factors()[axis];
  ElementSet image(f->order()), kernel(f->order());
  for (int x : e.members()) {
    int c = p.coordinate(x, axis);
    image.set(c);
    bool others_trivial = true;
    for (int i = 0; i < arity; ++i)
      if (i != axis && p.coordinate(x, i) != 0) others_trivial = false;
    if (others_trivial) kernel.set(c);
  }
  return {Subgroup::trusted(f, image), Subgroup::trusted(f, kernel)};
}

Subgroup project(const Subgroup& e, const std::vector<int>& axes, const GroupPtr& target) {
  const FiniteGroup& p = *e.parent();
  if (!p.is_product()) throw BadAxis(p.name() + " is not a direct product");
  const int arity = static_cast<int>(p.factors().size());
  std::vector<GroupPtr> want;
  for (int a : axes) {
    if (a < 0 || a >= arity) throw BadAxis("axis " + std::to_string(a) + " out of range");
    want.push_back(p.factors()[a]);
  }
  if (axes.size() == 1) {
    if (!same_group(target, want[0])) throw FactorMismatch("projection target mismatch");
  } else {
    if (target->factors().size() != axes.size()) throw FactorMismatch("projection target arity");
    for (std::size_t i = 0; i < axes.size(); ++i)
      if (!same_group(target->factors()[i], want[i])) throw FactorMismatch("projection target mismatch");
  }
  ElementSet image(target->order());
  std::vector<int> coords(axes.size());
  for (int x : e.members()) {
    for (std::size_t i = 0; i < axes.size(); ++i) coords[i] = p.coordinate(x, axes[i]);
    image.set(axes.size() == 1 ? coords[0] : target->element_at(coords));
  }
  return Subgroup::trusted(target, image);
}

int cyclic_generator(const FiniteGroup& g) {
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) == g.order()) return x;
  throw NotCyclic(g.name() + " is not cyclic");
}

Subgroup twisted_diagonal(const GroupPtr& d, long long r, GroupPtr dd) {
  cyclic_generator(*d);
  const long long m = d->order();
  const long long rr = ((r % m) + m) % m;
  if (std::gcd(rr, m) != 1 && m > 1) {
    throw NotAUnit(std::to_string(r) + " is not a unit mod " + std::to_string(m));
  }
  if (!dd) dd = direct_product({d, d}, static_cast<int>(m * m));
  ElementSet out(dd->order());
  for (int x = 0; x < d->order(); ++x) {
    int c[2] = {x, d->power(x, rr)};
    out.set(dd->element_at(c));
  }
  return Subgroup::trusted(dd, out);
}

Subgroup diagonal(const GroupPtr& g, GroupPtr gg) {
  if (!gg) gg = direct_product({g, g}, g->order() * g->order());
  ElementSet out(gg->order());
  for (int x = 0; x < g->order(); ++x) {
    int c[2] = {x, x};
    out.set(gg->element_at(c));
  }
  return Subgroup::trusted(gg, out);
}

namespace {

constexpr int kIsomorphismCap = 16;

std::vector<int> sorted_orders(const FiniteGroup& g) {
  std::vector<int> o(g.order());
  for (int x = 0; x < g.order(); ++x) o[x] = g.element_order(x);
  std::sort(o.begin(), o.end());
  return o;
}

bool extends_to_isomorphism(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& gens,
                            const std::vector<int>& images) {
  std::vector<int> map(a.order(), -1);
  std::vector<char> used(b.order(), 0);
  map[0] = 0;
  used[0] = 1;
  std::vector<int> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    int x = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      int y = a.mul(x, gens[j]);
      int fy = b.mul(map[x], images[j]);
      if (map[y] < 0) {
        if (used[fy]) return false;
        map[y] = fy;
        used[fy] = 1;
        queue.push_back(y);
      } else if (map[y] != fy) {
        return false;
      }
    }
  }
  return static_cast<int>(queue.size()) == a.order();
}

}  // namespace

bool isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  if (a.order() > kIsomorphismCap) {
    throw OrderCapExceeded("isomorphism testing is limited to order " +
                           std::to_string(kIsomorphismCap));
  }
  if (a.same_table(b)) return true;
  if (sorted_orders(a) != sorted_orders(b) || a.is_abelian() != b.is_abelian()) return false;

  std::vector<int> by_order(a.order());
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](int x, int y) { return a.element_order(x) > a.element_order(y); });
  std::vector<int> gens;
  ElementSet span = closure(a, {});
  for (int x : by_order) {
    if (span.count() == a.order()) break;
    if (span.test(x)) continue;
    gens.push_back(x);
    span = closure(a, gens);
  }
  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (int y = 0; y < b.order(); ++y)
      if (b.element_order(y) == a.element_order(gens[j])) candidates[j].push_back(y);

  std::vector<int> images(gens.size());
  std::function<bool(std::size_t)> search = [&](std::size_t j) {
    if (j == gens.size()) return extends_to_isomorphism(a, b, gens, images);
    for (int y : candidates[j]) {
      images[j] = y;
      if (search(j + 1)) return true;
    }
    return false;
  };
  return search(0);
}

GroupPtr quotient_group(const Subgroup& h, const Subgroup& n) {
  if (!is_normal_in(n, h)) throw InvalidInput("quotient by a non-normal subgroup");
  const FiniteGroup& g = *h.parent();
  std::unordered_map<int, int> coset_of;  // element -> coset index
  std::vector<int> reps;
  for (int x : h.members()) {
    if (coset_of.count(x)) continue;
    int idx = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int m : n.members()) coset_of[g.mul(x, m)] = idx;
  }
  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) table[i][j] = coset_of.at(g.mul(reps[i], reps[j]));
  return FiniteGroup::from_table(g.name() + "/N", table, q);
}

bool is_subquotient(const GroupPtr& k, const GroupPtr& h, int order_cap) {
  if (h->order() > order_cap || k->order() > order_cap) {
    throw OrderCapExceeded("is_subquotient arguments exceed cap " + std::to_string(order_cap));
  }
  if (k->order() == 1) return true;
  if (h->order() % k->order() != 0) return false;
  const std::vector<Subgroup> all = all_subgroups(h, order_cap);
  for (const Subgroup& h0 : subgroups_up_to_conjugacy(h, order_cap)) {
    if (h0.order() % k->order() != 0) continue;
    const int n_order = h0.order() / k->order();
    for (const Subgroup& n : all) {
      if (n.order() != n_order || !is_normal_in(n, h0)) continue;
      if (isomorphic(*k, *quotient_group(h0, n))) return true;
    }
  }
  return false;
}

}  // namespace bisetlab
