#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>

namespace bisetlab {

/// Exact rational number, always reduced with a positive denominator.
///
/// Values whose numerator and denominator fit in 62 bits live inline and
/// use 128-bit intermediates; anything larger is promoted to a shared,
/// immutable GMP rational. The representation is canonical: a value that
/// fits inline is never stored as a GMP rational, so equality is a field
/// comparison.
class Rational {
 public:
  Rational() = default;
  Rational(long long n);  // NOLINT: implicit integer promotion is intended
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q);
  explicit Rational(const mpz_class& z);

  /// Parses "a" or "a/b" (decimal, optional sign).
  static Rational parse(const std::string& text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  /// Inline numerator/denominator when the value is small.
  bool is_small() const { return !big_; }
  long long small_num() const { return num_; }
  long long small_den() const { return den_; }

  /// Integer value if this is an integer fitting in 64 bits.
  std::optional<long long> to_int64() const;

  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;
  std::string to_string() const;

  Rational operator-() const;
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(__int128 num, __int128 den);
  static Rational from_mpq(mpq_class q);

  long long num_ = 0;
  long long den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace bisetlab
