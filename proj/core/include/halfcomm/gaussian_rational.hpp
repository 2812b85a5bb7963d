#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace halfcomm {

/// Exact element a + b i of Q(i) with arbitrary-precision rational parts.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {} // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0);

  /// p/q as a real Gaussian rational; q must be nonzero.
  static GaussianRational fraction(long p, long q);
  static GaussianRational imaginary_unit() { return {0, 1}; }

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, always a nonnegative rational.
  mpq_class norm_squared() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// "p/q", "p/q i", or "p/q + p'/q' i"; integers print without a denominator.
  std::string to_string() const;

private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// Renders Σ c_k·body_k in the expression grammar ("0" when empty). Unit
/// coefficients are elided, genuinely complex ones are parenthesized.
std::string format_linear_combination(
    const std::vector<std::pair<GaussianRational, std::string>>& terms);

} // namespace halfcomm
