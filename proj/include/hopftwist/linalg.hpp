#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hopftwist/scalars.hpp"

namespace hopftwist {

using Vector = std::vector<Scalar>;

// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Scalar& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Scalar> row(size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  Scalar trace() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// A linear map between coordinate spaces, stored as its matrix.
using LinearMap = Matrix;

// Reduced row echelon form with first-nonzero pivots; returns pivot columns.
std::vector<size_t> row_reduce(Matrix& m);
size_t rank(Matrix m);
// Basis of {x : m x = 0}.
std::vector<Vector> nullspace(const Matrix& m);
// Some x with m x = b, or nothing if inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
std::optional<Matrix> inverse(const Matrix& m);
// The solution of a square system, or nothing if the matrix is singular.
// Solves modulo several primes in every embedding of the cyclotomic field,
// recombines and certifies the candidate exactly; prime-field systems are
// solved directly.
std::optional<Vector> solve_unique(const Matrix& m, const Vector& b);
// Same for several right-hand sides (the columns of b).
std::optional<Matrix> solve_unique(const Matrix& m, const Matrix& b);

// Incrementally maintained echelon basis of a subspace of k^n.
class Subspace {
 public:
  explicit Subspace(size_t ambient) : n_(ambient) {}
  // Returns true if v was outside the span (and is now included).
  bool insert(Vector v);
  bool contains(Vector v) const;
  size_t dimension() const { return basis_.size(); }
  size_t ambient() const { return n_; }
  const std::vector<Vector>& basis() const { return basis_; }

 private:
  void reduce(Vector& v) const;
  size_t n_;
  std::vector<Vector> basis_;   // each normalized to 1 at its pivot
  std::vector<size_t> pivots_;
};

}  // namespace hopftwist
