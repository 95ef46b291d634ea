#pragma once

#include <vector>

#include "bisetlab/rational.hpp"

namespace bisetlab {

using RVec = std::vector<Rational>;

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<RVec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  RVec row(int i) const;

  Matrix transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;
  bool all_integer() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;
  Matrix scaled(const Rational& q) const;
  Rational trace() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank by fraction-free (Bareiss) elimination with row pivoting.
int rank(const Matrix& m);
/// Determinant of a square matrix, fraction-free with pivoting.
Rational determinant(const Matrix& m);
/// The leading principal minors d_1..d_n, read off as the pivots of Bareiss
/// elimination without pivoting. Stops early (shorter result) at the first
/// zero minor, since elimination cannot continue past it.
std::vector<Rational> leading_principal_minors(const Matrix& m);
/// Positive definite iff all n leading principal minors exist and are > 0.
bool positive_definite(const Matrix& m);

/// Basis (as rows) of {x : m x = 0}, from the reduced row echelon form.
std::vector<RVec> nullspace(const Matrix& m);

/// Incrementally grown row-echelon basis of a subspace of Q^n.
class SpanBuilder {
 public:
  explicit SpanBuilder(int n) : n_(n) {}
  /// Returns true when v was not already in the span.
  bool add(RVec v);
  bool contains(RVec v) const;
  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return n_; }
  const std::vector<RVec>& basis() const { return rows_; }

 private:
  void reduce(RVec& v) const;

  int n_;
  std::vector<RVec> rows_;
  std::vector<int> pivots_;
};

}  // namespace bisetlab
