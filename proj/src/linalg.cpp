#include "bisetlab/linalg.hpp"

#include "bisetlab/errors.hpp"

namespace bisetlab {

namespace {

/// Scales each row by the lcm of its denominators so every entry is integral.
Matrix integral_rows(const Matrix& m) {
  Matrix out = m;
  for (int i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (int j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_integer()) l = lcm(l, m(i, j).denominator());
    }
    if (l == 1) continue;
    Rational s{mpz_class(l)};
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j) * s;
  }
  return out;
}

/// Fraction-free elimination in place; returns the rank and the sign flips.
int bareiss(Matrix& a, bool pivoting, int* swaps, std::vector<Rational>* pivots) {
  const int n = a.rows(), m = a.cols();
  Rational prev = 1;
  int r = 0;
  for (int c = 0; c < m && r < n; ++c) {
    int p = r;
    if (pivoting) {
      while (p < n && a(p, c).is_zero()) ++p;
      if (p == n) continue;
      if (p != r) {
        for (int j = 0; j < m; ++j) std::swap(a(p, j), a(r, j));
        if (swaps) ++*swaps;
      }
    } else if (a(r, c).is_zero()) {
      return r;
    }
    const Rational piv = a(r, c);
    if (pivots) pivots->push_back(piv);
    for (int i = r + 1; i < n; ++i) {
      const Rational lead = a(i, c);
      for (int j = c + 1; j < m; ++j) {
        a(i, j) = (a(i, j) * piv - lead * a(r, j)) / prev;
      }
      a(i, c) = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

}  // namespace

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<RVec>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols) throw InvalidInput("ragged matrix rows");
    for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RVec Matrix::row(int i) const {
  return RVec(data_.begin() + static_cast<std::ptrdiff_t>(i) * cols_,
              data_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::all_integer() const {
  for (const auto& x : data_)
    if (!x.is_integer()) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InvalidInput("matrix shape mismatch in product");
  Matrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix shape mismatch in sum");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + b.scaled(-1); }

Matrix Matrix::scaled(const Rational& q) const {
  Matrix c = *this;
  for (auto& x : c.data_) x *= q;
  return c;
}

Rational Matrix::trace() const {
  Rational t;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

int rank(const Matrix& m) {
  Matrix a = integral_rows(m);
  return bareiss(a, true, nullptr, nullptr);
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  // clear denominators, then undo the row scaling
  Rational scale = 1;
  Matrix a = integral_rows(m);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) {
        scale *= m(i, j) / a(i, j);
        break;
      }
    }
  }
  int swaps = 0;
  const int r = bareiss(a, true, &swaps, nullptr);
  if (r < m.rows()) return 0;
  Rational d = a(m.rows() - 1, m.cols() - 1) * scale;
  return swaps % 2 ? -d : d;
}

std::vector<Rational> leading_principal_minors(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("minors of a non-square matrix");
  if (!m.all_integer()) throw NotIntegral("leading minors expect an integer matrix");
  Matrix a = m;
  std::vector<Rational> pivots;
  bareiss(a, false, nullptr, &pivots);
  return pivots;
}

bool positive_definite(const Matrix& m) {
  auto minors = leading_principal_minors(m);
  if (static_cast<int>(minors.size()) != m.rows()) return false;
  for (const auto& d : minors)
    if (d.sign() <= 0) return false;
  return true;
}

std::vector<RVec> nullspace(const Matrix& m) {
  Matrix a = m;
  const int n = a.rows(), c = a.cols();
  std::vector<int> pivot_col;
  int r = 0;
  for (int j = 0; j < c && r < n; ++j) {
    int p = r;
    while (p < n && a(p, j).is_zero()) ++p;
    if (p == n) continue;
    for (int k = 0; k < c; ++k) std::swap(a(p, k), a(r, k));
    const Rational inv = a(r, j).inverse();
    for (int k = j; k < c; ++k) a(r, k) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == r || a(i, j).is_zero()) continue;
      const Rational f = a(i, j);
      for (int k = j; k < c; ++k)
        if (!a(r, k).is_zero()) a(i, k) -= f * a(r, k);
    }
    pivot_col.push_back(j);
    ++r;
  }
  std::vector<char> is_pivot(c, 0);
  for (int j : pivot_col) is_pivot[j] = 1;
  std::vector<RVec> basis;
  for (int f = 0; f < c; ++f) {
    if (is_pivot[f]) continue;
    RVec v(c);
    v[f] = 1;
    for (int i = 0; i < r; ++i) v[pivot_col[i]] = -a(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

void SpanBuilder::reduce(RVec& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = v[pivots_[i]];
    if (f.is_zero()) continue;
    const RVec& row = rows_[i];
    for (int k = pivots_[i]; k < n_; ++k)
      if (!row[k].is_zero()) v[k] -= f * row[k];
  }
}

bool SpanBuilder::add(RVec v) {
  if (static_cast<int>(v.size()) != n_) throw InvalidInput("vector length mismatch in span");
  reduce(v);
  int p = 0;
  while (p < n_ && v[p].is_zero()) ++p;
  if (p == n_) return false;
  const Rational inv = v[p].inverse();
  for (int k = p; k < n_; ++k) v[k] *= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool SpanBuilder::contains(RVec v) const {
  reduce(v);
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace bisetlab
