#include "bisetlab/rational.hpp"

#include <numeric>
#include <ostream>

#include "bisetlab/errors.hpp"

namespace bisetlab {

namespace {

constexpr long long kInlineLimit = 1LL << 62;

using u128 = unsigned __int128;

u128 abs128(__int128 v) { return v < 0 ? u128(-v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from_u128(u128 v) {
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(v)));
  return (hi << 64) + lo;
}

mpz_class mpz_from_i128(__int128 v) {
  mpz_class m = mpz_from_u128(abs128(v));
  return v < 0 ? mpz_class(-m) : m;
}

bool fits_inline(const mpz_class& z) {
  return z.fits_slong_p() && std::abs(z.get_si()) < kInlineLimit;
}

}  // namespace

Rational::Rational(long long n) {
  if (n <= -kInlineLimit || n >= kInlineLimit) {
    *this = from_mpq(mpq_class(mpz_class(static_cast<long>(n))));
  } else {
    num_ = n;
  }
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw InvalidInput("zero denominator");
  *this = from_wide(num, den);
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

Rational::Rational(const mpz_class& z) { *this = from_mpq(mpq_class(z)); }

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(text, 10));
    mpz_class n(text.substr(0, slash), 10);
    mpz_class d(text.substr(slash + 1), 10);
    if (d == 0) throw InvalidInput("zero denominator in '" + text + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
  } catch (const std::invalid_argument&) {
    throw InvalidInput("cannot parse rational '" + text + "'");
  }
}

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 g = gcd128(abs128(num), u128(den));
  if (g > 1) {
    num /= static_cast<__int128>(g);
    den /= static_cast<__int128>(g);
  }
  if (num > -kInlineLimit && num < kInlineLimit && den < kInlineLimit) {
    Rational r;
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
  }
  mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
  Rational r;
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::from_mpq(mpq_class q) {
  q.canonicalize();
  Rational r;
  if (fits_inline(q.get_num()) && fits_inline(q.get_den())) {
    r.num_ = q.get_num().get_si();
    r.den_ = q.get_den().get_si();
  } else {
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
  }
  return r;
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

std::optional<long long> Rational::to_int64() const {
  if (!is_integer()) return std::nullopt;
  if (!big_) return num_;
  const mpz_class& n = big_->get_num();
  if (!n.fits_slong_p()) return std::nullopt;
  return n.get_si();
}

mpz_class Rational::numerator() const {
  return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_) return from_mpq(-*big_);
  Rational r = *this;
  r.num_ = -num_;
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw InvalidInput("division by zero");
  if (big_) return from_mpq(1 / *big_);
  return from_wide(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    if (a.den_ == b.den_) {
      if (a.den_ == 1) return Rational(a.num_ + b.num_);
      return Rational::from_wide(__int128(a.num_) + b.num_, a.den_);
    }
    __int128 n = __int128(a.num_) * b.den_ + __int128(b.num_) * a.den_;
    return Rational::from_wide(n, __int128(a.den_) * b.den_);
  }
  return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && b.den_ == 1) {
      __int128 n = __int128(a.num_) * b.num_;
      if (n > -kInlineLimit && n < kInlineLimit) return Rational(static_cast<long long>(n));
      return Rational::from_wide(n, 1);
    }
    return Rational::from_wide(__int128(a.num_) * b.num_, __int128(a.den_) * b.den_);
  }
  return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical: inline and big never coincide
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    __int128 l = __int128(a.num_) * b.den_;
    __int128 r = __int128(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace bisetlab
