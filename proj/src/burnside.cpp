#include "bisetlab/burnside.hpp"

#include <mutex>
#include <stdexcept>
#include <tuple>

#include "bisetlab/catalog.hpp"
#include "bisetlab/errors.hpp"

namespace bisetlab {

BisetSpace::BisetSpace(GroupPtr target, GroupPtr source, GroupPtr shift, int order_cap)
    : target_(std::move(target)), source_(std::move(source)), shift_(std::move(shift)) {
  product_ = product_of({target_, source_, shift_}, order_cap);
  classes_ = subgroups_up_to_conjugacy(product_, order_cap);
  const FiniteGroup& x = *product_;
  for (int c = 0; c < dim(); ++c) {
    for (int g = 0; g < x.order(); ++g) lookup_.emplace(conjugate(classes_[c], g).mask(), c);
  }
}

BisetSpacePtr BisetSpace::get(const GroupPtr& target, const GroupPtr& source, const GroupPtr& shift,
                              int order_cap) {
  using Key = std::tuple<const FiniteGroup*, const FiniteGroup*, const FiniteGroup*>;
  static std::mutex mutex;
  static std::map<Key, BisetSpacePtr> cache;
  const Key key{target.get(), source.get(), shift.get()};
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) {
      if (it->second->product()->order() > order_cap) {
        throw OrderCapExceeded(it->second->product()->name() + " exceeds cap " + std::to_string(order_cap));
      }
      return it->second;
    }
  }
  auto space = std::make_shared<const BisetSpace>(target, source, shift, order_cap);
  std::lock_guard lock(mutex);
  return cache.emplace(key, space).first->second;
}

int BisetSpace::class_of(const ElementSet& mask) const {
  auto it = lookup_.find(mask);
  if (it == lookup_.end()) throw std::logic_error("element set is not a subgroup of " + product_->name());
  return it->second;
}

BurnsideMorphism BurnsideMorphism::basis_element(const BisetSpacePtr& space, int cls) {
  if (cls < 0 || cls >= space->dim()) throw InvalidInput("biset class index out of range");
  return {space, {{cls, 1}}};
}

namespace {

/// Terms of (X/E) o (Y/D) as class indices of the result space.
std::vector<int> compose_classes(const BisetSpace& outer, const BisetSpace& inner, const BisetSpace& out,
                                 int e_cls, int d_cls) {
  const Subgroup& e = outer.classes()[e_cls];
  const Subgroup& d = inner.classes()[d_cls];
  const GroupPtr mid_shift = product_of({inner.target(), inner.shift()});
  const Subgroup pe = project(e, {1, 2}, mid_shift);
  const Subgroup pd = project(d, {0, 2}, mid_shift);
  const FiniteGroup& dp = *inner.product();
  std::vector<int> terms;
  for (const auto& dc : double_cosets(pe, pd)) {
    const int g = mid_shift->coordinate(dc.representative, 0);
    const int t = mid_shift->coordinate(dc.representative, 1);
    const int c[3] = {g, 0, t};
    const Subgroup dd = conjugate(d, dp.element_at(c));
    terms.push_back(out.class_of(star_product_mask(e, dd, out.product())));
  }
  return terms;
}

}  // namespace

BurnsideMorphism compose_bisets(const BurnsideMorphism& beta, const BurnsideMorphism& alpha) {
  const BisetSpace& bs = *beta.space;
  const BisetSpace& as = *alpha.space;
  if (!same_group(bs.shift(), as.shift())) throw FactorMismatch("biset shifts differ");
  if (!same_group(bs.source(), as.target())) throw FactorMismatch("biset middle groups differ");
  BisetSpacePtr out = BisetSpace::get(bs.target(), as.source(), bs.shift(), 1 << 30);
  BurnsideMorphism r{out, {}};
  for (const auto& [eb, cb] : beta.coeffs)
    for (const auto& [ea, ca] : alpha.coeffs)
      for (int term : compose_classes(bs, as, *out, eb, ea)) r.coeffs[term] += cb * ca;
  std::erase_if(r.coeffs, [](const auto& kv) { return kv.second == 0; });
  return r;
}

BurnsideMorphism identity_biset(const GroupPtr& g, const GroupPtr& shift) {
  BisetSpacePtr s = BisetSpace::get(g, g, shift, 1 << 30);
  const FiniteGroup& x = *s->product();
  ElementSet mask(x.order());
  for (int a = 0; a < g->order(); ++a)
    for (int t = 0; t < shift->order(); ++t) {
      const int c[3] = {a, a, t};
      mask.set(x.element_at(c));
    }
  return BurnsideMorphism::basis_element(s, s->class_of(mask));
}

BurnsideMorphism beta_r(const GroupPtr& d, long long r, const GroupPtr& shift) {
  const Subgroup delta = twisted_diagonal(d, r);  // validates cyclicity and r
  BisetSpacePtr s = BisetSpace::get(d, d, shift, 1 << 30);
  const FiniteGroup& x = *s->product();
  const FiniteGroup& dd = *delta.parent();
  ElementSet mask(x.order());
  for (int m : delta.members())
    for (int t = 0; t < shift->order(); ++t) {
      const int c[3] = {dd.coordinate(m, 0), dd.coordinate(m, 1), t};
      mask.set(x.element_at(c));
    }
  return BurnsideMorphism::basis_element(s, s->class_of(mask));
}

RepMorphism linearize_class(const BisetSpacePtr& space, int cls) {
  SpacePtr rs = MorphismSpace::get(space->target(), space->source(), space->shift(), FieldMode::Rational,
                                   1 << 30);
  const GroupPtr& x = space->product();
  const VirtualCharacter chi = permutation_character(x, space->classes().at(cls));
  const std::vector<int> tuple = rs->classes().classes_of(*x);
  std::vector<Cyclotomic> v(rs->classes().size());
  for (std::size_t c = 0; c < tuple.size(); ++c) v[tuple[c]] = chi.values[c];
  return RepMorphism(rs, std::move(v));
}

RepMorphism linearize(const BurnsideMorphism& x) {
  SpacePtr rs = MorphismSpace::get(x.space->target(), x.space->source(), x.space->shift(),
                                   FieldMode::Rational, 1 << 30);
  RepMorphism out = RepMorphism::zero(rs);
  for (const auto& [cls, c] : x.coeffs) out = out + linearize_class(x.space, cls).scaled(Rational(c));
  return RepMorphism(rs, out.values());
}

}  // namespace bisetlab
