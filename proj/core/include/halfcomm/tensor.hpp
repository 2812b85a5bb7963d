#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "halfcomm/gaussian_rational.hpp"

namespace halfcomm {

/// Formal linear combination of pure tensors b_1 ⊗ ... ⊗ b_k over Q(i).
/// Zero coefficients are never stored.
template <class Basis>
class TensorSum {
public:
  using Key = std::vector<Basis>;
  using Terms = std::map<Key, GaussianRational>;

  TensorSum() = default;

  void add(const Key& key, const GaussianRational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add(const TensorSum& other, const GaussianRational& scale = 1) {
    for (const auto& [key, c] : other.terms_) add(key, c * scale);
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  friend bool operator==(const TensorSum& a, const TensorSum& b) { return a.terms_ == b.terms_; }

  friend TensorSum operator-(const TensorSum& a, const TensorSum& b) {
    TensorSum out = a;
    out.add(b, -1);
    return out;
  }

private:
  Terms terms_;
};

} // namespace halfcomm
