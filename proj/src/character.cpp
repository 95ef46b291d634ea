#include "bisetlab/character.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "bisetlab/errors.hpp"

namespace bisetlab {

namespace {

using i64 = long long;

i64 pow_mod(i64 b, i64 e, i64 p) {
  i64 r = 1;
  b %= p;
  if (b < 0) b += p;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return r;
}

i64 inv_mod(i64 a, i64 p) { return pow_mod(a, p - 2, p); }

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

i64 primitive_root(i64 p) {
  std::vector<i64> primes;
  i64 m = p - 1;
  for (i64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) primes.push_back(m);
  for (i64 g = 2; g < p; ++g) {
    bool ok = true;
    for (i64 q : primes)
      if (pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return 1;  // p = 2
}

using ModVec = std::vector<i64>;

/// Basis of {c : M c = 0} for a rows x cols matrix over F_p.
std::vector<ModVec> nullspace_mod(std::vector<ModVec> m, int cols, i64 p) {
  const int rows = static_cast<int>(m.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int j = 0; j < cols && r < rows; ++j) {
    int q = r;
    while (q < rows && m[q][j] == 0) ++q;
    if (q == rows) continue;
    std::swap(m[q], m[r]);
    const i64 inv = inv_mod(m[r][j], p);
    for (int k = 0; k < cols; ++k) m[r][k] = m[r][k] * inv % p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][j] == 0) continue;
      const i64 f = m[i][j];
      for (int k = 0; k < cols; ++k) m[i][k] = ((m[i][k] - f * m[r][k]) % p + p) % p;
    }
    pivot_col.push_back(j);
    ++r;
  }
  std::vector<char> is_pivot(cols, 0);
  for (int j : pivot_col) is_pivot[j] = 1;
  std::vector<ModVec> out;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    ModVec v(cols, 0);
    v[f] = 1;
    for (int i = 0; i < r; ++i) v[pivot_col[i]] = (p - m[i][f]) % p;
    out.push_back(std::move(v));
  }
  return out;
}

Cyclotomic normalized(const Cyclotomic& x) {
  if (x.order() > 1 && x.is_rational()) return Cyclotomic(x.to_rational());
  return x;
}

void fill_galois(CharacterTable& t, int exponent) {
  std::map<std::vector<Cyclotomic>, int> index;
  for (int i = 0; i < t.size(); ++i) index.emplace(t.rows[i], i);
  t.galois.assign(exponent, std::vector<int>(t.size(), -1));
  for (int j = 0; j < exponent; ++j) {
    if (std::gcd(j, exponent) != 1) continue;
    for (int i = 0; i < t.size(); ++i) {
      std::vector<Cyclotomic> g;
      g.reserve(t.rows[i].size());
      for (const auto& v : t.rows[i]) g.push_back(normalized(v.galois(j)));
      auto it = index.find(g);
      if (it == index.end()) {
        throw TableComputationFailure(t.group->name() + ": Galois conjugate of a row is not a row");
      }
      t.galois[j][i] = it->second;
    }
  }
  t.dual = t.galois[(exponent - 1) % exponent];
}

void verify_table(const CharacterTable& t) {
  const FiniteGroup& g = *t.group;
  const auto& cls = g.classes();
  if (t.size() != cls.count()) {
    throw TableComputationFailure(g.name() + ": wrong number of irreducible characters");
  }
  long long sum_sq = 0;
  for (int d : t.degrees) sum_sq += static_cast<long long>(d) * d;
  if (sum_sq != g.order()) throw TableComputationFailure(g.name() + ": sum of squared degrees");
  const Rational inv_order(1, g.order());
  for (int i = 0; i < t.size(); ++i) {
    for (int j = i; j < t.size(); ++j) {
      Cyclotomic s;
      for (int c = 0; c < cls.count(); ++c) {
        s += (t.rows[i][c] * t.rows[j][c].conjugate()).scaled(Rational(cls.sizes[c]));
      }
      if (s.scaled(inv_order) != Cyclotomic(i == j ? 1 : 0)) {
        throw TableComputationFailure(g.name() + ": rows " + std::to_string(i) + ", " +
                                      std::to_string(j) + " are not orthonormal");
      }
    }
  }
}

CharacterTable tensor_table(const GroupPtr& g) {
  std::vector<const CharacterTable*> parts;
  for (const auto& f : g->factors()) parts.push_back(&character_table(f));
  ClassSpace space(g->factors());
  const std::vector<int> tuple_of = space.classes_of(*g);
  CharacterTable t;
  t.group = g;
  const int n = space.size();
  for (int r = 0; r < n; ++r) {
    std::vector<Cyclotomic> row(tuple_of.size());
    for (std::size_t c = 0; c < tuple_of.size(); ++c) {
      Cyclotomic v(1);
      for (int a = 0; a < space.arity(); ++a) {
        v = v * parts[a]->rows[space.component(r, a)][space.component(tuple_of[c], a)];
      }
      row[c] = normalized(v);
    }
    int deg = 1;
    for (int a = 0; a < space.arity(); ++a) deg *= parts[a]->degrees[space.component(r, a)];
    t.rows.push_back(std::move(row));
    t.degrees.push_back(deg);
  }
  fill_galois(t, g->exponent());
  return t;
}

}  // namespace

CharacterTable dixon_table(const GroupPtr& gp) {
  const FiniteGroup& g = *gp;
  const auto& cls = g.classes();
  const int k = cls.count();
  const i64 n = g.order();
  const int e = g.exponent();

  i64 p = e + 1;
  while (!is_prime(p) || static_cast<double>(p) <= 2.0 * std::sqrt(static_cast<double>(n))) p += e;
  const i64 z = pow_mod(primitive_root(p), (p - 1) / e, p);  // plays the role of zeta_e

  // A_j[i][l] = #{(y, w) in C_j x C_i : y w = x_l}
  std::vector<std::vector<ModVec>> a(k, std::vector<ModVec>(k, ModVec(k, 0)));
  for (int j = 0; j < k; ++j)
    for (int l = 0; l < k; ++l)
      for (int y : cls.classes[j]) {
        int i = cls.class_of[g.mul(g.inv(y), cls.representatives[l])];
        a[j][i][l] += 1;
      }

  // split F_p^k into common eigenspaces of all A_j
  std::vector<std::vector<ModVec>> spaces;  // each a list of column vectors
  {
    std::vector<ModVec> whole;
    for (int i = 0; i < k; ++i) {
      ModVec v(k, 0);
      v[i] = 1;
      whole.push_back(v);
    }
    spaces.push_back(whole);
  }
  for (int j = 1; j < k; ++j) {
    std::vector<std::vector<ModVec>> next;
    for (const auto& basis : spaces) {
      if (basis.size() == 1) {
        next.push_back(basis);
        continue;
      }
      const int d = static_cast<int>(basis.size());
      // AB = A_j * B as k x d
      std::vector<ModVec> ab(k, ModVec(d, 0));
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < d; ++c) {
          i64 s = 0;
          for (int l = 0; l < k; ++l) s += a[j][r][l] * basis[c][l];
          ab[r][c] = s % p;
        }
      int found = 0;
      for (i64 lambda = 0; lambda < p && found < d; ++lambda) {
        std::vector<ModVec> m = ab;
        for (int r = 0; r < k; ++r)
          for (int c = 0; c < d; ++c) m[r][c] = ((m[r][c] - lambda * basis[c][r]) % p + p) % p;
        auto null = nullspace_mod(m, d, p);
        if (null.empty()) continue;
        std::vector<ModVec> sub;
        for (const auto& coeff : null) {
          ModVec v(k, 0);
          for (int c = 0; c < d; ++c)
            for (int l = 0; l < k; ++l) v[l] = (v[l] + coeff[c] * basis[c][l]) % p;
          sub.push_back(std::move(v));
        }
        found += static_cast<int>(sub.size());
        next.push_back(std::move(sub));
      }
      if (found != d) throw TableComputationFailure(g.name() + ": class matrix is not diagonalizable mod p");
    }
    spaces = std::move(next);
  }
  if (static_cast<int>(spaces.size()) != k) {
    throw TableComputationFailure(g.name() + ": common eigenspaces are not one-dimensional");
  }

  CharacterTable t;
  t.group = gp;
  const i64 root_n = static_cast<i64>(std::sqrt(static_cast<double>(n)) + 0.5);
  for (const auto& sp : spaces) {
    ModVec w = sp[0];
    if (w[0] == 0) throw TableComputationFailure(g.name() + ": eigenvector vanishes at the identity");
    const i64 s0 = inv_mod(w[0], p);
    for (auto& x : w) x = x * s0 % p;
    i64 s = 0;
    for (int i = 0; i < k; ++i) {
      s = (s + w[i] * w[cls.inverse_class[i]] % p * inv_mod(cls.sizes[i], p)) % p;
    }
    if (s == 0) throw TableComputationFailure(g.name() + ": degenerate central character");
    const i64 d2 = n % p * inv_mod(s, p) % p;
    i64 deg = 0;
    for (i64 d = 1; d <= root_n; ++d)
      if (d * d % p == d2) {
        deg = d;
        break;
      }
    if (deg == 0) throw TableComputationFailure(g.name() + ": no degree matches mod p");
    ModVec chi(k);
    for (int i = 0; i < k; ++i) chi[i] = deg * w[i] % p * inv_mod(cls.sizes[i], p) % p;

    std::vector<Cyclotomic> row(k);
    for (int i = 0; i < k; ++i) {
      const int x = cls.representatives[i];
      const int o = g.element_order(x);
      const i64 zo = pow_mod(z, e / o, p);
      const i64 inv_o = inv_mod(o, p);
      Cyclotomic value;
      int total = 0;
      for (int kk = 0; kk < o; ++kk) {
        i64 m = 0;
        int xl = 0;
        for (int l = 0; l < o; ++l) {
          m = (m + chi[cls.class_of[xl]] * pow_mod(zo, static_cast<i64>(p - 1) - (static_cast<i64>(kk) * l) % (p - 1), p)) % p;
          xl = g.mul(xl, x);
        }
        m = m * inv_o % p;
        if (m > deg) throw TableComputationFailure(g.name() + ": eigenvalue multiplicity out of range");
        total += static_cast<int>(m);
        if (m) value += Cyclotomic::root_of_unity(e, static_cast<i64>(kk) * (e / o)).scaled(Rational(m));
      }
      if (total != deg) throw TableComputationFailure(g.name() + ": multiplicities do not sum to the degree");
      row[i] = normalized(value);
    }
    t.rows.push_back(std::move(row));
    t.degrees.push_back(static_cast<int>(deg));
  }

  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (t.degrees[x] != t.degrees[y]) return t.degrees[x] < t.degrees[y];
    return t.rows[x] > t.rows[y];
  });
  CharacterTable sorted;
  sorted.group = gp;
  for (int i : order) {
    sorted.rows.push_back(t.rows[i]);
    sorted.degrees.push_back(t.degrees[i]);
  }
  for (const auto& v : sorted.rows[0])
    if (v != Cyclotomic(1)) throw TableComputationFailure(g.name() + ": trivial character is not first");
  verify_table(sorted);
  fill_galois(sorted, e);
  return sorted;
}

const CharacterTable& character_table(const GroupPtr& g) {
  static std::recursive_mutex mutex;
  static std::map<const FiniteGroup*, std::pair<GroupPtr, std::unique_ptr<CharacterTable>>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(g.get());
  if (it != cache.end()) return *it->second.second;
  auto t = std::make_unique<CharacterTable>(g->is_product() ? tensor_table(g) : dixon_table(g));
  const CharacterTable& ref = *t;
  cache.emplace(g.get(), std::make_pair(g, std::move(t)));
  return ref;
}

VirtualCharacter irreducible(const GroupPtr& g, int row) {
  const auto& t = character_table(g);
  if (row < 0 || row >= t.size()) throw InvalidInput("character row out of range");
  return {g, t.rows[row]};
}

VirtualCharacter permutation_character(const GroupPtr& g, const Subgroup& s) {
  if (!same_group(g, s.parent())) throw FactorMismatch("subgroup of a different group");
  const auto& cls = g->classes();
  std::vector<long long> hits(cls.count(), 0);
  for (int x : s.members()) ++hits[cls.class_of[x]];
  VirtualCharacter chi{g, std::vector<Cyclotomic>(cls.count())};
  for (int c = 0; c < cls.count(); ++c) {
    // fixed points of x on G/S: |C_G(x)| |x^G cap S| / |S|
    chi.values[c] = Rational(hits[c] * g->order(), static_cast<long long>(cls.sizes[c]) * s.order());
  }
  return chi;
}

Rational inner_product(const VirtualCharacter& chi, const VirtualCharacter& psi) {
  if (!same_group(chi.group, psi.group)) throw FactorMismatch("inner product across groups");
  const auto& cls = chi.group->classes();
  Cyclotomic s;
  for (int c = 0; c < cls.count(); ++c) {
    s += (chi.values[c] * psi.values[c].conjugate()).scaled(Rational(cls.sizes[c]));
  }
  return s.scaled(Rational(1, chi.group->order())).to_rational();
}

VirtualCharacter contragredient(const VirtualCharacter& chi) {
  const auto& cls = chi.group->classes();
  VirtualCharacter out{chi.group, std::vector<Cyclotomic>(cls.count())};
  for (int c = 0; c < cls.count(); ++c) out.values[c] = chi.values[cls.inverse_class[c]];
  return out;
}

RVec decompose(const VirtualCharacter& chi) {
  const auto& t = character_table(chi.group);
  RVec out;
  for (int i = 0; i < t.size(); ++i) out.push_back(inner_product(chi, {chi.group, t.rows[i]}));
  return out;
}

ClassSpace::ClassSpace(std::vector<GroupPtr> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw InvalidInput("class space needs at least one factor");
  const int ar = arity();
  radix_.resize(ar);
  stride_.resize(ar);
  for (int a = ar - 1; a >= 0; --a) {
    radix_[a] = factors_[a]->classes().count();
    stride_[a] = size_;
    size_ *= radix_[a];
    order_ *= factors_[a]->order();
    exponent_ = std::lcm(exponent_, factors_[a]->exponent());
  }
  sizes_.assign(size_, 1);
  inverse_.assign(size_, 0);
  for (int idx = 0; idx < size_; ++idx) {
    for (int a = 0; a < ar; ++a) {
      const auto& cls = factors_[a]->classes();
      const int c = component(idx, a);
      sizes_[idx] *= cls.sizes[c];
      inverse_[idx] += cls.inverse_class[c] * stride_[a];
    }
  }
}

int ClassSpace::index(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != arity()) throw BadAxis("class tuple has the wrong arity");
  int idx = 0;
  for (int a = 0; a < arity(); ++a) idx += tuple[a] * stride_[a];
  return idx;
}

std::vector<int> ClassSpace::classes_of(const FiniteGroup& product) const {
  const auto& pf = product.factors();
  if (pf.size() != factors_.size()) throw FactorMismatch("product arity differs from class space");
  for (std::size_t a = 0; a < pf.size(); ++a)
    if (!same_group(pf[a], factors_[a])) throw FactorMismatch("product factors differ from class space");
  const auto& cls = product.classes();
  std::vector<int> out(cls.count());
  for (int c = 0; c < cls.count(); ++c) {
    int idx = 0;
    for (int a = 0; a < arity(); ++a) {
      idx += factors_[a]->classes().class_of[product.coordinate(cls.representatives[c], a)] * stride_[a];
    }
    out[c] = idx;
  }
  return out;
}

const char* field_name(FieldMode mode) { return mode == FieldMode::Split ? "split" : "rational"; }

FieldMode parse_field(const std::string& text) {
  if (text == "split") return FieldMode::Split;
  if (text == "rational") return FieldMode::Rational;
  throw InvalidInput("field must be split or rational, got \"" + text + "\"");
}

CharacterBasis::CharacterBasis(ClassSpace space, FieldMode mode) : space_(std::move(space)), mode_(mode) {
  const int ar = space_.arity();
  const int n = space_.size();
  std::vector<const CharacterTable*> tables;
  for (const auto& f : space_.factors()) tables.push_back(&character_table(f));

  auto tuple_label = [&](int r) {
    std::string s;
    for (int a = 0; a < ar; ++a) {
      if (a) s += ".";
      s += std::to_string(space_.component(r, a));
    }
    return s;
  };

  std::vector<std::vector<Cyclotomic>> tensor(n, std::vector<Cyclotomic>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Cyclotomic v(1);
      for (int a = 0; a < ar; ++a) {
        const Cyclotomic& f = tables[a]->rows[space_.component(r, a)][space_.component(c, a)];
        if (!f.is_rational() || !f.to_rational().is_one()) v = v * f;
      }
      tensor[r][c] = normalized(v);
    }

  orbit_of_row_.assign(n, -1);
  if (mode_ == FieldMode::Split) {
    for (int r = 0; r < n; ++r) {
      orbit_of_row_[r] = r;
      members_.push_back({r});
      labels_.push_back("x" + tuple_label(r));
      values_.push_back(tensor[r]);
    }
  } else {
    const int e = space_.exponent();
    for (int r = 0; r < n; ++r) {
      if (orbit_of_row_[r] >= 0) continue;
      const int b = static_cast<int>(members_.size());
      std::vector<int> orbit;
      for (int j = 0; j < e; ++j) {
        if (std::gcd(j, e) != 1) continue;
        int img = 0;
        for (int a = 0; a < ar; ++a) {
          const auto& t = *tables[a];
          const int ea = static_cast<int>(t.galois.size());
          img += t.galois[j % ea][space_.component(r, a)] * space_.stride(a);
        }
        if (orbit_of_row_[img] < 0) {
          orbit_of_row_[img] = b;
          orbit.push_back(img);
        }
      }
      std::sort(orbit.begin(), orbit.end());
      std::vector<Cyclotomic> sum(n);
      for (int m : orbit)
        for (int c = 0; c < n; ++c) sum[c] += tensor[m][c];
      for (auto& v : sum) v = normalized(v);
      members_.push_back(orbit);
      labels_.push_back("o" + tuple_label(r));
      values_.push_back(std::move(sum));
    }
  }

  proj_.resize(ar);
  for (int a = 0; a < ar; ++a) {
    const auto& t = *tables[a];
    const auto& cls = space_.factors()[a]->classes();
    const Rational inv_order(1, space_.factors()[a]->order());
    proj_[a].assign(t.size(), std::vector<Cyclotomic>(cls.count()));
    for (int r = 0; r < t.size(); ++r)
      for (int c = 0; c < cls.count(); ++c)
        proj_[a][r][c] = normalized(t.rows[r][c].conjugate().scaled(inv_order * Rational(cls.sizes[c])));
  }
}

RVec CharacterBasis::split_coefficients(std::span<const Cyclotomic> values) const {
  const int n = space_.size();
  if (static_cast<int>(values.size()) != n) throw InvalidInput("class function has the wrong length");
  std::vector<Cyclotomic> w(values.begin(), values.end());
  std::vector<Cyclotomic> out(n);
  for (int a = 0; a < space_.arity(); ++a) {
    const int stride = space_.stride(a), radix = space_.radix(a);
    for (int base = 0; base < n; ++base) {
      if (space_.component(base, a) != 0) continue;
      for (int r = 0; r < radix; ++r) {
        Cyclotomic acc;
        for (int c = 0; c < radix; ++c) {
          const Cyclotomic& v = w[base + c * stride];
          if (v.is_zero()) continue;
          acc += proj_[a][r][c] * v;
        }
        out[base + r * stride] = normalized(acc);
      }
    }
    std::swap(w, out);
  }
  RVec coeffs(n);
  for (int i = 0; i < n; ++i) coeffs[i] = w[i].to_rational();
  return coeffs;
}

RVec CharacterBasis::coefficients(std::span<const Cyclotomic> values) const {
  RVec split = split_coefficients(values);
  if (mode_ == FieldMode::Split) return split;
  RVec out(dim());
  for (int b = 0; b < dim(); ++b) {
    const auto& m = members_[b];
    out[b] = split[m[0]];
    for (int r : m) {
      if (split[r] != out[b]) {
        throw NotRational("class function is not Galois-stable (basis element " + labels_[b] + ")");
      }
    }
  }
  return out;
}

RationalBasis rational_basis(const GroupPtr& g) {
  CharacterBasis b(ClassSpace({g}), FieldMode::Rational);
  RationalBasis out;
  out.group = g;
  for (int i = 0; i < b.dim(); ++i) {
    out.orbits.push_back(b.members(i));
    out.rows.push_back(b.values(i));
  }
  return out;
}

}  // namespace bisetlab
