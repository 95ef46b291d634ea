#include "bisetlab/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "bisetlab/errors.hpp"

namespace bisetlab {

namespace {

using Poly = std::vector<long long>;

Poly poly_divide_exact(Poly num, const Poly& den) {
  // den is monic
  Poly q(num.size() - den.size() + 1, 0);
  for (int i = static_cast<int>(num.size()) - 1; i >= static_cast<int>(den.size()) - 1; --i) {
    long long c = num[i];
    int shift = i - static_cast<int>(den.size()) + 1;
    q[shift] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
  }
  return q;
}

Poly poly_multiply(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

std::unique_ptr<CyclotomicField> make_field(int n) {
  auto f = std::make_unique<CyclotomicField>();
  f->order = n;
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  Poly numerator(n + 1, 0);
  numerator[0] = -1;
  numerator[n] = 1;
  Poly divisor{1};
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) divisor = poly_multiply(divisor, cyclotomic_field(d).polynomial);
  }
  f->polynomial = poly_divide_exact(numerator, divisor);
  f->degree = static_cast<int>(f->polynomial.size()) - 1;
  const int deg = f->degree;
  f->reduction.assign(n, std::vector<long long>(deg, 0));
  std::vector<long long> cur(deg, 0);
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    f->reduction[k] = cur;
    // multiply by x and fold x^deg = -sum_{i<deg} Phi_i x^i
    long long top = cur[deg - 1];
    for (int i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int i = 0; i < deg; ++i) cur[i] -= top * f->polynomial[i];
    }
  }
  return f;
}

long long mod_pos(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

const CyclotomicField& cyclotomic_field(int order) {
  if (order < 1 || order > kMaxCyclotomicOrder) {
    throw InvalidInput("cyclotomic order " + std::to_string(order) + " out of range");
  }
  static std::recursive_mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicField>> fields;
  std::lock_guard lock(mutex);
  auto it = fields.find(order);
  if (it != fields.end()) return *it->second;
  auto f = make_field(order);
  const CyclotomicField& ref = *f;
  fields.emplace(order, std::move(f));
  return ref;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

int lcm_order(int a, int b) {
  long long l = std::lcm(static_cast<long long>(a), static_cast<long long>(b));
  if (l > kMaxCyclotomicOrder) {
    throw InvalidInput("cyclotomic order " + std::to_string(l) + " exceeds cap");
  }
  return static_cast<int>(l);
}

Cyclotomic::Cyclotomic(const Rational& q) : field_(&cyclotomic_field(1)), coeffs_{q} {}

Cyclotomic Cyclotomic::reduce(const CyclotomicField& f, const std::vector<Rational>& powers) {
  Coeffs out(f.degree);
  for (int k = 0; k < f.order; ++k) {
    const Rational& c = powers[k];
    if (c.is_zero()) continue;
    if (k < f.degree) {
      out[k] += c;
      continue;
    }
    const auto& row = f.reduction[k];
    for (int i = 0; i < f.degree; ++i) {
      if (row[i] != 0) out[i] += c * Rational(row[i]);
    }
  }
  return Cyclotomic(&f, std::move(out));
}

Cyclotomic Cyclotomic::root_of_unity(int order, long long k) {
  const CyclotomicField& f = cyclotomic_field(order);
  Coeffs out(f.degree);
  const auto& row = f.reduction[mod_pos(k, order)];
  for (int i = 0; i < f.degree; ++i) out[i] = row[i];
  return Cyclotomic(&f, std::move(out));
}

Cyclotomic Cyclotomic::from_powers(int order, std::span<const Rational> coeffs) {
  const CyclotomicField& f = cyclotomic_field(order);
  if (static_cast<int>(coeffs.size()) != order) {
    throw InvalidInput("cyclotomic coefficient vector must have length " + std::to_string(order));
  }
  return reduce(f, std::vector<Rational>(coeffs.begin(), coeffs.end()));
}

std::vector<Rational> Cyclotomic::coeffs() const {
  std::vector<Rational> out(coeffs_.begin(), coeffs_.end());
  out.resize(order());
  return out;
}

Cyclotomic Cyclotomic::at_order(int n) const {
  if (n == order()) return *this;
  if (n % order() != 0) {
    throw InvalidInput("order " + std::to_string(n) + " is not a multiple of " +
                       std::to_string(order()));
  }
  const CyclotomicField& f = cyclotomic_field(n);
  const int step = n / order();
  Coeffs out(f.degree);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const auto& row = f.reduction[static_cast<int>(i) * step];
    for (int j = 0; j < f.degree; ++j) {
      if (row[j] != 0) out[j] += coeffs_[i] * Rational(row[j]);
    }
  }
  return Cyclotomic(&f, std::move(out));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

std::optional<Rational> Cyclotomic::rational_value() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

Rational Cyclotomic::to_rational() const {
  if (!is_rational()) {
    std::ostringstream os;
    os << *this;
    throw NotRational(os.str() + " is not in Q");
  }
  return coeffs_[0];
}

Cyclotomic Cyclotomic::galois(long long j) const {
  const int n = order();
  if (std::gcd(mod_pos(j, n), static_cast<long long>(n)) != 1 && n > 1) {
    throw NotAUnit(std::to_string(j) + " is not a unit mod " + std::to_string(n));
  }
  if (n <= 2) return *this;
  const long long jj = mod_pos(j, n);
  Coeffs out(field_->degree);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const auto& row = field_->reduction[mod_pos(static_cast<long long>(i) * jj, n)];
    for (int k = 0; k < field_->degree; ++k) {
      if (row[k] != 0) out[k] += coeffs_[i] * Rational(row[k]);
    }
  }
  return Cyclotomic(field_, std::move(out));
}

Cyclotomic Cyclotomic::conjugate() const { return galois(order() - 1); }

Cyclotomic Cyclotomic::operator-() const {
  Coeffs out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return Cyclotomic(field_, std::move(out));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& b) {
  if (field_ != b.field_) return *this = *this + b;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!b.coeffs_[i].is_zero()) coeffs_[i] += b.coeffs_[i];
  }
  return *this;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ != b.field_) {
    int n = lcm_order(a.order(), b.order());
    return a.at_order(n) + b.at_order(n);
  }
  Cyclotomic r = a;
  r += b;
  return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ != b.field_) {
    int n = lcm_order(a.order(), b.order());
    return a.at_order(n) * b.at_order(n);
  }
  Cyclotomic r(a.field_, Cyclotomic::Coeffs(a.coeffs_.size()));
  r.add_product(a, b);
  return r;
}

void Cyclotomic::add_product(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ != field_ || b.field_ != field_) {
    *this += a * b;
    return;
  }
  const CyclotomicField& f = *field_;
  if (f.degree == 1) {
    if (!a.coeffs_[0].is_zero() && !b.coeffs_[0].is_zero()) coeffs_[0] += a.coeffs_[0] * b.coeffs_[0];
    return;
  }
  for (int i = 0; i < f.degree; ++i) {
    const Rational& ai = a.coeffs_[i];
    if (ai.is_zero()) continue;
    for (int j = 0; j < f.degree; ++j) {
      const Rational& bj = b.coeffs_[j];
      if (bj.is_zero()) continue;
      Rational p = ai * bj;
      int k = (i + j) % f.order;
      if (k < f.degree) {
        coeffs_[k] += p;
      } else {
        const auto& row = f.reduction[k];
        for (int m = 0; m < f.degree; ++m) {
          if (row[m] == 1) {
            coeffs_[m] += p;
          } else if (row[m] == -1) {
            coeffs_[m] -= p;
          } else if (row[m] != 0) {
            coeffs_[m] += p * Rational(row[m]);
          }
        }
      }
    }
  }
}

Cyclotomic Cyclotomic::scaled(const Rational& q) const {
  Coeffs out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * q;
  return Cyclotomic(field_, std::move(out));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ == b.field_) return a.coeffs_ == b.coeffs_;
  int n = lcm_order(a.order(), b.order());
  return a.at_order(n).coeffs_ == b.at_order(n).coeffs_;
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ != b.field_) {
    int n = lcm_order(a.order(), b.order());
    return a.at_order(n) <=> b.at_order(n);
  }
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    auto c = a.coeffs_[i] <=> b.coeffs_[i];
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) {
  bool first = true;
  const auto r = x.reduced();
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << r[i];
    } else {
      if (!r[i].is_one()) os << r[i] << "*";
      os << "z" << x.order();
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os;
}

}  // namespace bisetlab
