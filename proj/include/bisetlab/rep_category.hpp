#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "bisetlab/character.hpp"
#include "bisetlab/linalg.hpp"

namespace bisetlab {

class RepMorphism;

/// Hom(source, target) = Q (x) R_F(target x source x shift), with its basis.
class MorphismSpace {
 public:
  /// Memoized on (target, source, shift, mode). Throws OrderCapExceeded when
  /// |target x source x shift| exceeds order_cap.
  static std::shared_ptr<const MorphismSpace> get(const GroupPtr& target, const GroupPtr& source,
                                                  const GroupPtr& shift, FieldMode mode,
                                                  int order_cap = kDefaultOrderCap);

  const GroupPtr& target() const { return target_; }
  const GroupPtr& source() const { return source_; }
  const GroupPtr& shift() const { return shift_; }
  FieldMode mode() const { return basis_.mode(); }
  const ClassSpace& classes() const { return basis_.space(); }
  const CharacterBasis& basis() const { return basis_; }
  int dim() const { return basis_.dim(); }

  MorphismSpace(GroupPtr target, GroupPtr source, GroupPtr shift, FieldMode mode);

 private:
  GroupPtr target_, source_, shift_;
  CharacterBasis basis_;
};

using SpacePtr = std::shared_ptr<const MorphismSpace>;

/// A morphism source -> target in P_A for A = (Q R_F)_shift, stored as a
/// class function on target x source x shift.
class RepMorphism {
 public:
  RepMorphism(SpacePtr space, std::vector<Cyclotomic> values, std::optional<RVec> coeffs = std::nullopt);
  static RepMorphism basis_element(const SpacePtr& space, int b);
  static RepMorphism from_coefficients(const SpacePtr& space, const RVec& coeffs);
  static RepMorphism zero(const SpacePtr& space);

  const SpacePtr& space() const { return space_; }
  const GroupPtr& target() const { return space_->target(); }
  const GroupPtr& source() const { return space_->source(); }
  const GroupPtr& shift() const { return space_->shift(); }
  FieldMode mode() const { return space_->mode(); }
  const std::vector<Cyclotomic>& values() const { return values_; }
  bool rational_valued() const { return !rational_.empty() || values_.empty(); }
  const std::vector<Rational>& rational_values() const { return rational_; }

  /// Coefficients in the space's basis; throws NotRational when outside the span.
  RVec coefficients() const;
  bool integral() const;

  RepMorphism scaled(const Rational& q) const;
  friend RepMorphism operator+(const RepMorphism& a, const RepMorphism& b);
  friend RepMorphism operator-(const RepMorphism& a, const RepMorphism& b);
  friend bool operator==(const RepMorphism& a, const RepMorphism& b);

 private:
  SpacePtr space_;
  std::vector<Cyclotomic> values_;
  std::vector<Rational> rational_;  // filled when every value is rational
  std::optional<RVec> coeffs_;
  // Values as integer power-basis coefficients over one denominator, at the
  // lcm of the value orders; empty when they do not fit in 40 bits.
  int order_ = 1;
  long long den_ = 1;
  std::vector<long long> ints_;

  friend RepMorphism compose_values(const RepMorphism& beta, const RepMorphism& alpha);
};

/// beta o alpha for beta: G -> H and alpha: K -> G. Throws ShiftMismatch,
/// FieldMismatch, FactorMismatch; NotRational / NotIntegral when the result
/// leaves the basis span (or the lattice, for integral inputs).
RepMorphism compose(const RepMorphism& beta, const RepMorphism& alpha);
/// The convolution alone, without the coefficient checks.
RepMorphism compose_values(const RepMorphism& beta, const RepMorphism& alpha);

RepMorphism identity(const GroupPtr& g, const GroupPtr& shift, FieldMode mode);
RepMorphism op_swap(const RepMorphism& a);
RepMorphism contragredient(const RepMorphism& a);
RepMorphism sharp(const RepMorphism& u);

/// (1/(|L||T|)) sum chi(l, l, t). Throws NotRational / NotIntegral (the
/// latter only for morphisms with integral coefficients).
Rational tau(const RepMorphism& chi);
/// tau(sharp(V) o U), checked against the direct triple sum.
Rational pairing(const RepMorphism& u, const RepMorphism& v);
/// (1/|H||L||T|) sum chi_V(h^-1, l^-1, t^-1) chi_U(h, l, t).
Rational pairing_direct(const RepMorphism& u, const RepMorphism& v);

struct GramReport {
  Matrix gram;
  bool symmetric = false;
  bool integer = false;
  bool positive_definite = false;
  std::vector<Rational> minors;
};
GramReport gram_matrix(const GroupPtr& h, const GroupPtr& l, const GroupPtr& t, FieldMode mode,
                       int order_cap = kDefaultOrderCap);

struct NondegeneracyReport {
  int rank = 0;
  int dim = 0;
  bool pass = false;
};
/// Rank of alpha -> (beta_j^op o alpha)_j over the basis {beta_j} of A(H x L).
NondegeneracyReport check_pairing_nondegenerate(const GroupPtr& h, const GroupPtr& l,
                                                const GroupPtr& t, FieldMode mode,
                                                int order_cap = kDefaultOrderCap);

}  // namespace bisetlab
