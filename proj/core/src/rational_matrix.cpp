#include "halfcomm/rational_matrix.hpp"

#include <utility>

#include "halfcomm/errors.hpp"

namespace halfcomm {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw UsageError("matrix product shape mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  mpq_class tmp;
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const mpq_class& ark = a(r, k);
      if (sgn(ark) == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        if (sgn(b(k, c)) == 0) continue;
        tmp = ark * b(k, c);
        out(r, c) += tmp;
      }
    }
  return out;
}

Echelon RationalMatrix::rref() const {
  Echelon e{*this, {}};
  RationalMatrix& m = e.reduced;
  std::size_t row = 0;
  mpq_class factor;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pivot = row;
    while (pivot < rows_ && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < cols_; ++c) std::swap(m(pivot, c), m(row, c));
    const mpq_class inv = 1 / m(row, col);
    for (std::size_t c = col; c < cols_; ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      factor = m(r, col);
      for (std::size_t c = col; c < cols_; ++c)
        if (sgn(m(row, c)) != 0) m(r, c) -= factor * m(row, c);
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

std::size_t RationalMatrix::rank() const { return rref().pivots.size(); }

RationalMatrix RationalMatrix::solve(const RationalMatrix& rhs) const {
  if (rows_ != cols_ || rhs.rows_ != rows_) throw UsageError("solve expects a square system");
  RationalMatrix aug(rows_, cols_ + rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < rhs.cols_; ++c) aug(r, cols_ + c) = rhs(r, c);
  }
  const Echelon e = aug.rref();
  if (e.pivots.size() < rows_ || e.pivots[rows_ - 1] >= cols_) throw UsageError("singular system");
  RationalMatrix x(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < rhs.cols_; ++c) x(r, c) = e.reduced(r, cols_ + c);
  return x;
}

RationalMatrix RationalMatrix::pseudo_inverse() const {
  const Echelon e = rref();
  const std::size_t rank = e.pivots.size();
  if (rank == 0) return RationalMatrix(cols_, rows_);
  RationalMatrix f(rows_, rank);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < rank; ++k) f(r, k) = (*this)(r, e.pivots[k]);
  RationalMatrix h(rank, cols_);
  for (std::size_t k = 0; k < rank; ++k)
    for (std::size_t c = 0; c < cols_; ++c) h(k, c) = e.reduced(k, c);
  const RationalMatrix ft = f.transpose();
  const RationalMatrix ht = h.transpose();
  // (FᵀF)⁻¹ Fᵀ, then (HHᵀ)⁻¹ applied on the left, then Hᵀ.
  const RationalMatrix left = (ft * f).solve(ft);
  return ht * (h * ht).solve(left);
}

} // namespace halfcomm
