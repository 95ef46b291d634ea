#include "bisetlab/rep_category.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "bisetlab/errors.hpp"
#include "bisetlab/parallel.hpp"

namespace bisetlab {

MorphismSpace::MorphismSpace(GroupPtr target, GroupPtr source, GroupPtr shift, FieldMode mode)
    : target_(std::move(target)),
      source_(std::move(source)),
      shift_(std::move(shift)),
      basis_(ClassSpace({target_, source_, shift_}), mode) {}

SpacePtr MorphismSpace::get(const GroupPtr& target, const GroupPtr& source, const GroupPtr& shift,
                            FieldMode mode, int order_cap) {
  const long long order = static_cast<long long>(target->order()) * source->order() * shift->order();
  if (order > order_cap) {
    throw OrderCapExceeded(target->name() + "x" + source->name() + "x" + shift->name() +
                           " has order " + std::to_string(order) + " > cap " + std::to_string(order_cap));
  }
  using Key = std::tuple<const FiniteGroup*, const FiniteGroup*, const FiniteGroup*, FieldMode>;
  static std::mutex mutex;
  static std::map<Key, SpacePtr> cache;
  const Key key{target.get(), source.get(), shift.get(), mode};
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto space = std::make_shared<const MorphismSpace>(target, source, shift, mode);
  std::lock_guard lock(mutex);
  return cache.emplace(key, space).first->second;
}

RepMorphism::RepMorphism(SpacePtr space, std::vector<Cyclotomic> values, std::optional<RVec> coeffs)
    : space_(std::move(space)), values_(std::move(values)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(values_.size()) != space_->classes().size()) {
    throw InvalidInput("morphism values do not match the class space");
  }
  bool rational = true;
  for (const auto& v : values_)
    if (!v.is_rational()) {
      rational = false;
      break;
    }
  if (rational) {
    rational_.reserve(values_.size());
    for (const auto& v : values_) rational_.push_back(v.to_rational());
  }
  for (const auto& v : values_) order_ = lcm_order(order_, v.order());
  const int d = cyclotomic_field(order_).degree;
  constexpr long long kLimit = 1LL << 40;
  std::vector<Cyclotomic> lifted;
  lifted.reserve(values_.size());
  for (const auto& v : values_) {
    lifted.push_back(v.order() == order_ ? v : v.at_order(order_));
    for (const auto& c : lifted.back().reduced()) {
      if (!c.is_small() || c.small_den() > kLimit) return;
      den_ = std::lcm(den_, c.small_den());
      if (den_ > kLimit) return;
    }
  }
  ints_.assign(values_.size() * d, 0);
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    const auto r = lifted[i].reduced();
    for (std::size_t j = 0; j < r.size(); ++j) {
      const __int128 x = static_cast<__int128>(r[j].small_num()) * (den_ / r[j].small_den());
      if (x > kLimit || x < -kLimit) {
        ints_.clear();
        return;
      }
      ints_[i * d + j] = static_cast<long long>(x);
    }
  }
}

RepMorphism RepMorphism::basis_element(const SpacePtr& space, int b) {
  if (b < 0 || b >= space->dim()) throw InvalidInput("basis index out of range");
  RVec c(space->dim());
  c[b] = 1;
  return RepMorphism(space, space->basis().values(b), std::move(c));
}

RepMorphism RepMorphism::from_coefficients(const SpacePtr& space, const RVec& coeffs) {
  if (static_cast<int>(coeffs.size()) != space->dim()) throw InvalidInput("coefficient vector length");
  std::vector<Cyclotomic> v(space->classes().size());
  for (int b = 0; b < space->dim(); ++b) {
    if (coeffs[b].is_zero()) continue;
    const auto& bv = space->basis().values(b);
    for (std::size_t c = 0; c < v.size(); ++c) v[c] += bv[c].scaled(coeffs[b]);
  }
  return RepMorphism(space, std::move(v), coeffs);
}

RepMorphism RepMorphism::zero(const SpacePtr& space) {
  return RepMorphism(space, std::vector<Cyclotomic>(space->classes().size()), RVec(space->dim()));
}

RVec RepMorphism::coefficients() const {
  if (coeffs_) return *coeffs_;
  return space_->basis().coefficients(values_);
}

bool RepMorphism::integral() const {
  for (const auto& c : coefficients())
    if (!c.is_integer()) return false;
  return true;
}

RepMorphism RepMorphism::scaled(const Rational& q) const {
  std::vector<Cyclotomic> v;
  v.reserve(values_.size());
  for (const auto& x : values_) v.push_back(x.scaled(q));
  std::optional<RVec> c;
  if (coeffs_) {
    c = *coeffs_;
    for (auto& x : *c) x *= q;
  }
  return RepMorphism(space_, std::move(v), std::move(c));
}

RepMorphism operator+(const RepMorphism& a, const RepMorphism& b) {
  if (a.space_ != b.space_) throw FactorMismatch("adding morphisms from different spaces");
  std::vector<Cyclotomic> v(a.values_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values_[i];
  std::optional<RVec> c;
  if (a.coeffs_ && b.coeffs_) {
    c = *a.coeffs_;
    for (std::size_t i = 0; i < c->size(); ++i) (*c)[i] += (*b.coeffs_)[i];
  }
  return RepMorphism(a.space_, std::move(v), std::move(c));
}

RepMorphism operator-(const RepMorphism& a, const RepMorphism& b) { return a + b.scaled(-1); }

bool operator==(const RepMorphism& a, const RepMorphism& b) {
  return a.space_ == b.space_ && a.values_ == b.values_;
}

namespace {

void check_composable(const RepMorphism& beta, const RepMorphism& alpha) {
  if (beta.mode() != alpha.mode()) throw FieldMismatch("composing split with rational morphisms");
  if (!same_group(beta.shift(), alpha.shift())) {
    throw ShiftMismatch(beta.shift()->name() + " vs " + alpha.shift()->name());
  }
  if (!same_group(beta.source(), alpha.target())) {
    throw FactorMismatch("cannot compose through " + beta.source()->name() + " and " +
                         alpha.target()->name());
  }
}

}  // namespace

namespace {

// Integer coefficients of one morphism at order e (a multiple of its own order).
std::vector<long long> lift_ints(const std::vector<long long>& ints, int from, int e) {
  if (from == e) return ints;
  const int df = cyclotomic_field(from).degree;
  const CyclotomicField& fe = cyclotomic_field(e);
  const int n = static_cast<int>(ints.size()) / df, step = e / from;
  std::vector<long long> out(static_cast<std::size_t>(n) * fe.degree, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < df; ++j) {
      const long long c = ints[i * df + j];
      if (c == 0) continue;
      const auto& red = fe.reduction[(j * step) % e];
      for (int r = 0; r < fe.degree; ++r) out[i * fe.degree + r] += c * red[r];
    }
  return out;
}

Rational wide_ratio(__int128 num, __int128 den) {
  if (num == 0) return Rational();
  constexpr __int128 kMax = (static_cast<__int128>(1) << 62);
  if (num < kMax && num > -kMax && den < kMax) return Rational(static_cast<long long>(num), static_cast<long long>(den));
  auto to_mpz = [](__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    mpz_class z(static_cast<unsigned long>(u >> 64));
    z <<= 64;
    z += mpz_class(static_cast<unsigned long>(u & ~0UL));
    return neg ? mpz_class(-z) : z;
  };
  return Rational(to_mpz(num)) / Rational(to_mpz(den));
}

}  // namespace

RepMorphism compose_values(const RepMorphism& beta, const RepMorphism& alpha) {
  check_composable(beta, alpha);
  if (!beta.ints_.empty() && !alpha.ints_.empty()) {
    const GroupPtr& mid = alpha.target();
    SpacePtr out = MorphismSpace::get(beta.target(), alpha.source(), beta.shift(), beta.mode(), 1 << 30);
    const ClassSpace& sb = beta.space()->classes();
    const ClassSpace& sa = alpha.space()->classes();
    const ClassSpace& so = out->classes();
    const auto& mcls = mid->classes();
    const int nh = so.radix(0), nk = so.radix(1), nt = so.radix(2), ng = mcls.count();
    const int e = lcm_order(beta.order_, alpha.order_);
    const CyclotomicField& f = cyclotomic_field(e);
    const int d = f.degree;
    const std::vector<long long> bi = lift_ints(beta.ints_, beta.order_, e);
    const std::vector<long long> ai = lift_ints(alpha.ints_, alpha.order_, e);
    const __int128 den = static_cast<__int128>(beta.den_) * alpha.den_ * mid->order();
    std::vector<__int128> acc(d), prod(2 * d);
    std::vector<Cyclotomic> v(so.size());
    std::vector<Rational> powers(e);
    for (int h = 0; h < nh; ++h)
      for (int k = 0; k < nk; ++k)
        for (int t = 0; t < nt; ++t) {
          std::fill(acc.begin(), acc.end(), 0);
          for (int g = 0; g < ng; ++g) {
            const long long* x = &bi[static_cast<std::size_t>(h * sb.stride(0) + g * sb.stride(1) + t) * d];
            const long long* y = &ai[static_cast<std::size_t>(g * sa.stride(0) + k * sa.stride(1) + t) * d];
            std::fill(prod.begin(), prod.end(), 0);
            bool any = false;
            for (int i = 0; i < d; ++i) {
              if (x[i] == 0) continue;
              for (int j = 0; j < d; ++j)
                if (y[j] != 0) {
                  prod[i + j] += static_cast<__int128>(x[i]) * y[j];
                  any = true;
                }
            }
            if (!any) continue;
            const long long w = mcls.sizes[g];
            for (int p = 0; p < 2 * d - 1; ++p) {
              if (prod[p] == 0) continue;
              if (p < d) {
                acc[p] += w * prod[p];
              } else {
                const auto& red = f.reduction[p % e];
                for (int r = 0; r < d; ++r) acc[r] += w * prod[p] * red[r];
              }
            }
          }
          bool rational = true;
          for (int r = 1; r < d; ++r) rational = rational && acc[r] == 0;
          Cyclotomic value;
          if (rational) {
            value = Cyclotomic(wide_ratio(acc[0], den));
          } else {
            std::fill(powers.begin(), powers.end(), Rational());
            for (int r = 0; r < d; ++r) powers[r] = wide_ratio(acc[r], den);
            value = Cyclotomic::from_powers(e, powers);
          }
          v[h * so.stride(0) + k * so.stride(1) + t] = std::move(value);
        }
    return RepMorphism(out, std::move(v));
  }
  const GroupPtr& mid = alpha.target();
  SpacePtr out = MorphismSpace::get(beta.target(), alpha.source(), beta.shift(), beta.mode(),
                                    1 << 30);
  const ClassSpace& sb = beta.space()->classes();
  const ClassSpace& sa = alpha.space()->classes();
  const ClassSpace& so = out->classes();
  const auto& mcls = mid->classes();
  const int nh = so.radix(0), nk = so.radix(1), nt = so.radix(2), ng = mcls.count();
  std::vector<Rational> weight(ng);
  for (int g = 0; g < ng; ++g) weight[g] = Rational(mcls.sizes[g], mid->order());

  std::vector<Cyclotomic> v(so.size());
  if (beta.rational_valued() && alpha.rational_valued()) {
    const auto& bv = beta.rational_values();
    const auto& av = alpha.rational_values();
    for (int h = 0; h < nh; ++h)
      for (int k = 0; k < nk; ++k)
        for (int t = 0; t < nt; ++t) {
          Rational acc;
          for (int g = 0; g < ng; ++g) {
            const Rational& x = bv[h * sb.stride(0) + g * sb.stride(1) + t];
            if (x.is_zero()) continue;
            const Rational& y = av[g * sa.stride(0) + k * sa.stride(1) + t];
            if (y.is_zero()) continue;
            acc += weight[g] * x * y;
          }
          v[h * so.stride(0) + k * so.stride(1) + t] = acc;
        }
  } else {
    const auto& bv = beta.values();
    const auto& av = alpha.values();
    for (int h = 0; h < nh; ++h)
      for (int k = 0; k < nk; ++k)
        for (int t = 0; t < nt; ++t) {
          Cyclotomic acc;
          for (int g = 0; g < ng; ++g) {
            const Cyclotomic& x = bv[h * sb.stride(0) + g * sb.stride(1) + t];
            if (x.is_zero()) continue;
            const Cyclotomic& y = av[g * sa.stride(0) + k * sa.stride(1) + t];
            if (y.is_zero()) continue;
            acc += (x * y).scaled(weight[g]);
          }
          if (acc.order() > 1 && acc.is_rational()) acc = Cyclotomic(acc.to_rational());
          v[h * so.stride(0) + k * so.stride(1) + t] = std::move(acc);
        }
  }
  return RepMorphism(out, std::move(v));
}

RepMorphism compose(const RepMorphism& beta, const RepMorphism& alpha) {
  RepMorphism r = compose_values(beta, alpha);
  RVec c = r.coefficients();  // NotRational when outside the span
  if (beta.integral() && alpha.integral()) {
    for (const auto& x : c)
      if (!x.is_integer()) throw NotIntegral("composite of integral morphisms has coefficient " + x.to_string());
  }
  return RepMorphism(r.space(), r.values(), std::move(c));
}

RepMorphism identity(const GroupPtr& g, const GroupPtr& shift, FieldMode mode) {
  SpacePtr s = MorphismSpace::get(g, g, shift, mode, 1 << 30);
  const ClassSpace& cs = s->classes();
  const auto& cls = g->classes();
  std::vector<Cyclotomic> v(cs.size());
  for (int c = 0; c < cls.count(); ++c)
    for (int t = 0; t < cs.radix(2); ++t)
      v[c * cs.stride(0) + c * cs.stride(1) + t] = Rational(g->order() / cls.sizes[c]);
  return RepMorphism(s, std::move(v));
}

RepMorphism op_swap(const RepMorphism& a) {
  SpacePtr s = MorphismSpace::get(a.source(), a.target(), a.shift(), a.mode(), 1 << 30);
  const ClassSpace& from = a.space()->classes();
  const ClassSpace& to = s->classes();
  std::vector<Cyclotomic> v(to.size());
  for (int idx = 0; idx < from.size(); ++idx) {
    const int h = from.component(idx, 0), k = from.component(idx, 1), t = from.component(idx, 2);
    v[k * to.stride(0) + h * to.stride(1) + t] = a.values()[idx];
  }
  return RepMorphism(s, std::move(v));
}

RepMorphism contragredient(const RepMorphism& a) {
  const ClassSpace& cs = a.space()->classes();
  std::vector<Cyclotomic> v(cs.size());
  for (int idx = 0; idx < cs.size(); ++idx) v[idx] = a.values()[cs.inverse(idx)];
  return RepMorphism(a.space(), std::move(v));
}

RepMorphism sharp(const RepMorphism& u) { return op_swap(contragredient(u)); }

Rational tau(const RepMorphism& chi) {
  if (!same_group(chi.source(), chi.target())) throw FactorMismatch("tau needs an endomorphism");
  const ClassSpace& cs = chi.space()->classes();
  const auto& lc = chi.target()->classes();
  const auto& tc = chi.shift()->classes();
  Cyclotomic s;
  for (int c = 0; c < lc.count(); ++c)
    for (int d = 0; d < tc.count(); ++d) {
      const Cyclotomic& x = chi.values()[c * cs.stride(0) + c * cs.stride(1) + d];
      if (!x.is_zero()) s += x.scaled(Rational(static_cast<long long>(lc.sizes[c]) * tc.sizes[d]));
    }
  const Rational r =
      s.scaled(Rational(1, static_cast<long long>(chi.target()->order()) * chi.shift()->order())).to_rational();
  if (!r.is_integer() && chi.integral()) throw NotIntegral("tau of an integral morphism is " + r.to_string());
  return r;
}

Rational pairing_direct(const RepMorphism& u, const RepMorphism& v) {
  if (u.space() != v.space()) throw FactorMismatch("pairing needs morphisms in the same space");
  const ClassSpace& cs = u.space()->classes();
  Cyclotomic s;
  for (int idx = 0; idx < cs.size(); ++idx) {
    const Cyclotomic& a = u.values()[idx];
    const Cyclotomic& b = v.values()[cs.inverse(idx)];
    if (a.is_zero() || b.is_zero()) continue;
    s += (a * b).scaled(Rational(cs.class_size(idx)));
  }
  return s.scaled(Rational(1, cs.group_order())).to_rational();
}

Rational pairing(const RepMorphism& u, const RepMorphism& v) {
  const Rational via_tau = tau(compose_values(sharp(v), u));
  const Rational direct = pairing_direct(u, v);
  if (via_tau != direct) {
    throw std::logic_error("pairing: tau route gives " + via_tau.to_string() + ", triple sum gives " +
                           direct.to_string());
  }
  return via_tau;
}

GramReport gram_matrix(const GroupPtr& h, const GroupPtr& l, const GroupPtr& t, FieldMode mode,
                       int order_cap) {
  SpacePtr s = MorphismSpace::get(h, l, t, mode, order_cap);
  const int n = s->dim();
  std::vector<RepMorphism> basis;
  for (int b = 0; b < n; ++b) basis.push_back(RepMorphism::basis_element(s, b));
  GramReport rep;
  rep.gram = Matrix(n, n);
  parallel_for(n, [&](int i) {
    for (int j = 0; j < n; ++j) rep.gram(i, j) = pairing(basis[i], basis[j]);
  });
  rep.symmetric = rep.gram.is_symmetric();
  rep.integer = rep.gram.all_integer();
  if (!rep.integer) throw NotIntegral("Gram matrix has non-integer entries");
  rep.minors = leading_principal_minors(rep.gram);
  rep.positive_definite = rep.symmetric && positive_definite(rep.gram);
  return rep;
}

NondegeneracyReport check_pairing_nondegenerate(const GroupPtr& h, const GroupPtr& l, const GroupPtr& t,
                                                FieldMode mode, int order_cap) {
  SpacePtr s = MorphismSpace::get(h, l, t, mode, order_cap);
  SpacePtr w = MorphismSpace::get(l, l, t, mode, 1 << 30);
  const int n = s->dim(), m = w->dim();
  std::vector<RepMorphism> basis, ops;
  for (int b = 0; b < n; ++b) {
    basis.push_back(RepMorphism::basis_element(s, b));
    ops.push_back(op_swap(basis.back()));
  }
  Matrix big(n * m, n);
  parallel_for(n, [&](int j) {
    for (int i = 0; i < n; ++i) {
      RVec c = compose(ops[j], basis[i]).coefficients();
      for (int r = 0; r < m; ++r) big(j * m + r, i) = c[r];
    }
  });
  NondegeneracyReport rep;
  rep.dim = n;
  rep.rank = rank(big);
  rep.pass = rep.rank == rep.dim;
  return rep;
}

}  // namespace bisetlab
