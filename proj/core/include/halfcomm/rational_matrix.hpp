#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace halfcomm {

struct Echelon;

/// Dense exact matrix over Q, row-major.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  mpq_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpq_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Reduced row echelon form by Gauss-Jordan elimination.
  Echelon rref() const;
  std::size_t rank() const;

  /// X with A X = B for square nonsingular A; throws UsageError when singular.
  RationalMatrix solve(const RationalMatrix& rhs) const;
  /// Moore-Penrose pseudo-inverse through a full-rank factorization A = F H:
  /// A⁺ = Hᵀ (H Hᵀ)⁻¹ (Fᵀ F)⁻¹ Fᵀ.
  RationalMatrix pseudo_inverse() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> data_;
};

struct Echelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots; ///< pivot column of each nonzero row
};

} // namespace halfcomm
