#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "bisetlab/rational.hpp"

namespace bisetlab {

/// Largest cyclotomic order that field operations will create.
inline constexpr int kMaxCyclotomicOrder = 1 << 16;

/// Reduction data for Q(zeta_n): the powers zeta_n^k (0 <= k < n) written in
/// the basis 1, zeta_n, ..., zeta_n^{phi(n)-1} modulo the n-th cyclotomic
/// polynomial. Instances are created once per order and never freed.
struct CyclotomicField {
  int order = 1;
  int degree = 1;                                // phi(order)
  std::vector<long long> polynomial;             // Phi_n, lowest degree first, monic
  std::vector<std::vector<long long>> reduction; // order x degree
};

const CyclotomicField& cyclotomic_field(int order);

int euler_phi(int n);
int lcm_order(int a, int b);

/// Exact element of Q(zeta_n).
///
/// Stored canonically as the remainder modulo Phi_n in the power basis, so
/// two values of the same order are equal iff their coefficient vectors are.
/// Binary operations first lift both operands to the lcm of their orders.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(Rational()) {}
  Cyclotomic(const Rational& q);  // NOLINT: rationals embed implicitly
  Cyclotomic(long long n) : Cyclotomic(Rational(n)) {}  // NOLINT

  static Cyclotomic root_of_unity(int order, long long k);
  /// Builds sum_k coeffs[k] zeta_n^k from a length-n power-basis vector.
  static Cyclotomic from_powers(int order, std::span<const Rational> coeffs);

  int order() const { return field_->order; }
  std::span<const Rational> reduced() const { return {coeffs_.data(), coeffs_.size()}; }
  /// Canonical coefficients padded to length order().
  std::vector<Rational> coeffs() const;

  /// Same value written at order n, which must be a multiple of order().
  Cyclotomic at_order(int n) const;

  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rational> rational_value() const;
  /// Throws NotRational when the value is not in Q.
  Rational to_rational() const;

  /// Complex conjugation, zeta_n -> zeta_n^{-1}.
  Cyclotomic conjugate() const;
  /// The automorphism zeta_n -> zeta_n^j; throws NotAUnit unless gcd(j, n) = 1.
  Cyclotomic galois(long long j) const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& b);
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this += -b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

  Cyclotomic scaled(const Rational& q) const;
  /// this += a * b, with all three already at the same order.
  void add_product(const Cyclotomic& a, const Cyclotomic& b);

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  /// Total order: lexicographic on canonical coefficients at the common order.
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

 private:
  using Coeffs = boost::container::small_vector<Rational, 4>;
  Cyclotomic(const CyclotomicField* field, Coeffs coeffs) : field_(field), coeffs_(std::move(coeffs)) {}
  /// Reduces a length-n unreduced power vector.
  static Cyclotomic reduce(const CyclotomicField& f, const std::vector<Rational>& powers);

  const CyclotomicField* field_;
  Coeffs coeffs_;  // length field_->degree
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

}  // namespace bisetlab
