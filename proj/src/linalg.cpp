#include "hopftwist/linalg.hpp"

#include <stdexcept>

namespace hopftwist {

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = Scalar::integer(1);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix/vector dimension mismatch");
  Vector out(rows_);
  for (size_t r = 0; r < rows_; ++r) {
    Scalar acc;
    for (size_t c = 0; c < cols_; ++c) {
      const Scalar& a = (*this)(r, c);
      if (a.is_zero() || v[c].is_zero()) continue;
      acc += a * v[c];
    }
    out[r] = acc;
  }
  return out;
}

Scalar Matrix::trace() const {
  Scalar acc;
  for (size_t i = 0; i < std::min(rows_, cols_); ++i) acc += (*this)(i, i);
  return acc;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix out(a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (y.is_zero()) continue;
        out(i, j) += x * y;
      }
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
  Matrix out = a;
  for (size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference dimension mismatch");
  Matrix out = a;
  for (size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix out = a;
  for (auto& x : out.data_) x *= s;
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (size_t i = 0; i < a.data_.size(); ++i)
    if (a.data_[i] != b.data_[i]) return false;
  return true;
}

std::vector<size_t> row_reduce(Matrix& m) {
  std::vector<size_t> pivots;
  size_t prow = 0;
  for (size_t c = 0; c < m.cols() && prow < m.rows(); ++c) {
    size_t r = prow;
    while (r < m.rows() && m(r, c).is_zero()) ++r;
    if (r == m.rows()) continue;
    if (r != prow)
      for (size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(prow, k));
    Scalar inv = m(prow, c).inverse();
    for (size_t k = c; k < m.cols(); ++k)
      if (!m(prow, k).is_zero()) m(prow, k) *= inv;
    for (size_t rr = 0; rr < m.rows(); ++rr) {
      if (rr == prow || m(rr, c).is_zero()) continue;
      Scalar f = m(rr, c);
      for (size_t k = c; k < m.cols(); ++k) {
        const Scalar& pv = m(prow, k);
        if (pv.is_zero()) continue;
        m(rr, k) -= f * pv;
      }
    }
    pivots.push_back(c);
    ++prow;
  }
  return pivots;
}

size_t rank(Matrix m) { return row_reduce(m).size(); }

std::vector<Vector> nullspace(const Matrix& m) {
  Matrix r = m;
  auto pivots = row_reduce(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = Scalar::integer(1);
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side dimension mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (size_t r = 0; r < m.rows(); ++r) {
    for (size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  const size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar::integer(1);
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

void Subspace::reduce(Vector& v) const {
  for (size_t i = 0; i < basis_.size(); ++i) {
    const Scalar& c = v[pivots_[i]];
    if (c.is_zero()) continue;
    Scalar f = c;
    const Vector& b = basis_[i];
    for (size_t k = 0; k < n_; ++k)
      if (!b[k].is_zero()) v[k] -= f * b[k];
  }
}

bool Subspace::insert(Vector v) {
  if (v.size() != n_) throw std::invalid_argument("subspace dimension mismatch");
  reduce(v);
  size_t piv = 0;
  while (piv < n_ && v[piv].is_zero()) ++piv;
  if (piv == n_) return false;
  Scalar inv = v[piv].inverse();
  for (auto& x : v)
    if (!x.is_zero()) x *= inv;
  // keep the basis fully reduced at the new pivot
  for (auto& b : basis_) {
    if (b[piv].is_zero()) continue;
    Scalar f = b[piv];
    for (size_t k = 0; k < n_; ++k)
      if (!v[k].is_zero()) b[k] -= f * v[k];
  }
  basis_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

bool Subspace::contains(Vector v) const {
  reduce(v);
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace hopftwist
