#include "bisetlab/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bisetlab/errors.hpp"

namespace bisetlab {

namespace {

void check_cap(long long order, int cap, const std::string& what) {
  if (order > cap) {
    throw OrderCapExceeded(what + " has order " + std::to_string(order) + " > cap " +
                           std::to_string(cap));
  }
}

std::string product_name(const std::vector<GroupPtr>& factors) {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::string& n = factors[i]->name();
    bool wrap = n.find('x') != std::string::npos;
    if (i) out += "x";
    out += wrap ? "(" + n + ")" : n;
  }
  return out;
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, int n, std::vector<int> table)
    : name_(std::move(name)), n_(n), table_(std::move(table)) {}

void FiniteGroup::finish() {
  inverse_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
    }
  }
  element_order_.assign(n_, 0);
  exponent_ = 1;
  for (int g = 0; g < n_; ++g) {
    int k = 1;
    for (int x = g; x != 0; x = mul(x, g)) ++k;
    element_order_[g] = g == 0 ? 1 : k;
    exponent_ = std::lcm(exponent_, element_order_[g]);
  }
  abelian_ = true;
  for (int a = 0; a < n_ && abelian_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) {
        abelian_ = false;
        break;
      }

  classes_ = ConjugacyClassSet{};
  classes_.class_of.assign(n_, -1);
  for (int g = 0; g < n_; ++g) {
    if (classes_.class_of[g] >= 0) continue;
    const int idx = classes_.count();
    std::vector<int> members;
    for (int x = 0; x < n_; ++x) {
      int c = conj(x, g);
      if (classes_.class_of[c] < 0) {
        classes_.class_of[c] = idx;
        members.push_back(c);
      }
    }
    std::sort(members.begin(), members.end());
    classes_.representatives.push_back(g);
    classes_.sizes.push_back(static_cast<int>(members.size()));
    classes_.classes.push_back(std::move(members));
  }
  classes_.inverse_class.resize(classes_.count());
  for (int c = 0; c < classes_.count(); ++c) {
    classes_.inverse_class[c] = classes_.class_of[inv(classes_.representatives[c])];
  }
}

GroupPtr FiniteGroup::from_table(std::string name, const std::vector<std::vector<int>>& table,
                                 int order_cap) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw NotAGroup(name + ": empty table");
  check_cap(n, order_cap, name);
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw NotAGroup(name + ": table is not square");
    for (int v : row) {
      if (v < 0 || v >= n) throw NotAGroup(name + ": entry out of range");
      flat.push_back(v);
    }
  }
  auto at = [&](int a, int b) { return flat[static_cast<std::size_t>(a) * n + b]; };
  for (int i = 0; i < n; ++i) {
    if (at(0, i) != i || at(i, 0) != i) throw NotAGroup(name + ": index 0 is not the identity");
  }
  for (int i = 0; i < n; ++i) {
    std::vector<char> row_seen(n, 0), col_seen(n, 0);
    for (int j = 0; j < n; ++j) {
      if (row_seen[at(i, j)]++ || col_seen[at(j, i)]++) {
        throw NotAGroup(name + ": element " + std::to_string(i) + " has no unique inverse");
      }
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c))) {
          throw NotAGroup(name + ": associativity fails at (" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) + ")");
        }
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup(std::move(name), n, std::move(flat)));
  g->finish();
  return g;
}

GroupPtr FiniteGroup::from_permutations(std::string name, int degree,
                                        const std::vector<std::vector<int>>& generators,
                                        int order_cap) {
  if (degree < 0) throw NotAGroup(name + ": negative degree");
  for (const auto& p : generators) {
    if (static_cast<int>(p.size()) != degree) throw NotAGroup(name + ": generator has wrong degree");
    std::vector<char> seen(degree, 0);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[v]++) throw NotAGroup(name + ": generator is not a permutation");
    }
  }
  using Perm = std::vector<int>;
  auto compose = [&](const Perm& a, const Perm& b) {  // (a*b)(x) = a(b(x))
    Perm r(degree);
    for (int x = 0; x < degree; ++x) r[x] = a[b[x]];
    return r;
  };
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elements{id};
  std::map<Perm, int> index{{id, 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : generators) {
      Perm p = compose(elements[i], g);
      if (index.emplace(p, static_cast<int>(elements.size())).second) {
        elements.push_back(std::move(p));
        check_cap(static_cast<long long>(elements.size()), order_cap, name);
      }
    }
  }
  const int n = static_cast<int>(elements.size());
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) flat[static_cast<std::size_t>(a) * n + b] = index.at(compose(elements[a], elements[b]));
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup(std::move(name), n, std::move(flat)));
  g->finish();
  return g;
}

GroupPtr FiniteGroup::cyclic(int n, std::string name) {
  if (n < 1) throw NotAGroup("cyclic group of order " + std::to_string(n));
  if (name.empty()) name = "C" + std::to_string(n);
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) flat[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup(std::move(name), n, std::move(flat)));
  g->finish();
  return g;
}

int FiniteGroup::power(int g, long long k) const {
  const int o = element_order_[g];
  long long e = ((k % o) + o) % o;
  int r = 0;
  for (long long i = 0; i < e; ++i) r = mul(r, g);
  return r;
}

bool FiniteGroup::is_cyclic() const { return exponent_ == n_; }

bool FiniteGroup::same_table(const FiniteGroup& other) const {
  return n_ == other.n_ && table_ == other.table_;
}

std::uint64_t FiniteGroup::fingerprint() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(static_cast<std::uint64_t>(n_));
  for (int v : table_) mix(static_cast<std::uint64_t>(v));
  return h;
}

int FiniteGroup::coordinate(int element, int axis) const {
  if (axis < 0 || axis >= static_cast<int>(factors_.size())) {
    throw BadAxis("axis " + std::to_string(axis) + " of " + name_);
  }
  return coords_[static_cast<std::size_t>(element) * factors_.size() + axis];
}

std::vector<int> FiniteGroup::coordinates(int element) const {
  const std::size_t k = factors_.size();
  return {coords_.begin() + element * k, coords_.begin() + (element + 1) * k};
}

int FiniteGroup::element_at(std::span<const int> coords) const {
  if (coords.size() != factors_.size()) throw BadAxis("coordinate arity mismatch for " + name_);
  int idx = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) idx = idx * factors_[i]->order() + coords[i];
  return idx;
}

GroupPtr direct_product(const std::vector<GroupPtr>& factors, int order_cap, std::string name) {
  if (factors.empty()) throw InvalidInput("direct product of no factors");
  long long order = 1;
  for (const auto& f : factors) order *= f->order();
  if (name.empty()) name = product_name(factors);
  check_cap(order, order_cap, name);
  const int n = static_cast<int>(order);
  const std::size_t k = factors.size();
  std::vector<int> coords(static_cast<std::size_t>(n) * k);
  for (int e = 0; e < n; ++e) {
    int rem = e;
    for (std::size_t i = k; i-- > 0;) {
      coords[e * k + i] = rem % factors[i]->order();
      rem /= factors[i]->order();
    }
  }
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int idx = 0;
      for (std::size_t i = 0; i < k; ++i) {
        idx = idx * factors[i]->order() + factors[i]->mul(coords[a * k + i], coords[b * k + i]);
      }
      flat[static_cast<std::size_t>(a) * n + b] = idx;
    }
  }
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup(std::move(name), n, std::move(flat)));
  g->factors_ = factors;
  g->coords_ = std::move(coords);
  g->finish();
  return g;
}

const ConjugacyClassSet& conjugacy_classes(const FiniteGroup& g) { return g.classes(); }

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  return a == b || (a && b && a->same_table(*b));
}

}  // namespace bisetlab
