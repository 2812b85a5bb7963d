#pragma once

// Fusion rules of a compact group G ⊂ U_n and the induced rules of the crossed
// product R(G) ⋊ CZ2 and of A_*(G). Products are ordered: Ws ⊗ V and V ⊗ Ws differ.

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "halfcomm/gaussian_rational.hpp"

namespace halfcomm {

/// Instance-specific label payload: a U_n highest weight, {2j} for an SU_2 spin,
/// or a torus character in Z^n.
struct IrrLabel {
  std::vector<int> v;

  friend auto operator<=>(const IrrLabel&, const IrrLabel&) = default;
};

template <class Label>
using Multiset = std::map<Label, long>;

using Decomposition = Multiset<IrrLabel>;

/// Abstract fusion datum of a self-transpose compact group G.
class FusionData {
public:
  virtual ~FusionData() = default;

  virtual std::string name() const = 0;
  /// Throws UsageError if the label does not name an irreducible of this group.
  virtual void validate(const IrrLabel& a) const = 0;
  virtual long dim(const IrrLabel& a) const = 0;
  virtual Decomposition tensor(const IrrLabel& a, const IrrLabel& b) const = 0;
  virtual IrrLabel dual(const IrrLabel& a) const = 0;
  /// V^σ, the twist by g -> ḡ.
  virtual IrrLabel sigma(const IrrLabel& a) const = 0;
  virtual int grade(const IrrLabel& a) const = 0;
  /// True for a genuine Z-grading by central character, false when only its parity is defined.
  virtual bool z_graded() const = 0;
  virtual IrrLabel unit() const = 0;
  /// Decomposition of the fundamental representation U (irreducible except for tori, n > 1).
  virtual Decomposition fundamental() const = 0;
  /// Every label whose size measure (sum of |entries|, or 2j) is at most cap.
  virtual std::vector<IrrLabel> labels_up_to(int cap) const = 0;

  virtual std::string format(const IrrLabel& a) const = 0;
  virtual IrrLabel parse(const std::string& text) const = 0;

  /// Membership in Irr(G)_[m] by the grade criterion.
  bool in_grade_class(const IrrLabel& a, int m) const;
};

/// U_n: weights λ_1 >= ... >= λ_n, tensor products by Littlewood-Richardson.
class UnitaryFusion final : public FusionData {
public:
  explicit UnitaryFusion(int n);

  int rank() const noexcept { return n_; }
  std::string name() const override { return "un:" + std::to_string(n_); }
  void validate(const IrrLabel& a) const override;
  long dim(const IrrLabel& a) const override;
  Decomposition tensor(const IrrLabel& a, const IrrLabel& b) const override;
  IrrLabel dual(const IrrLabel& a) const override;
  IrrLabel sigma(const IrrLabel& a) const override { return dual(a); }
  int grade(const IrrLabel& a) const override;
  bool z_graded() const override { return true; }
  IrrLabel unit() const override { return IrrLabel{std::vector<int>(static_cast<std::size_t>(n_), 0)}; }
  Decomposition fundamental() const override;
  std::vector<IrrLabel> labels_up_to(int cap) const override;
  std::string format(const IrrLabel& a) const override;
  IrrLabel parse(const std::string& text) const override;

private:
  int n_;
};

/// SU_2: spins j stored as {2j}; dual = sigma = identity, grade = 2j mod 2.
class SU2Fusion final : public FusionData {
public:
  std::string name() const override { return "sun:2"; }
  void validate(const IrrLabel& a) const override;
  long dim(const IrrLabel& a) const override;
  Decomposition tensor(const IrrLabel& a, const IrrLabel& b) const override;
  IrrLabel dual(const IrrLabel& a) const override { return a; }
  IrrLabel sigma(const IrrLabel& a) const override { return a; }
  int grade(const IrrLabel& a) const override;
  bool z_graded() const override { return false; }
  IrrLabel unit() const override { return IrrLabel{{0}}; }
  Decomposition fundamental() const override { return {{IrrLabel{{1}}, 1}}; }
  std::vector<IrrLabel> labels_up_to(int cap) const override;
  std::string format(const IrrLabel& a) const override;
  IrrLabel parse(const std::string& text) const override;
};

/// T^n: characters a ∈ Z^n, all one-dimensional.
class TorusFusion final : public FusionData {
public:
  explicit TorusFusion(int n);

  std::string name() const override { return "torus:" + std::to_string(n_); }
  void validate(const IrrLabel& a) const override;
  long dim(const IrrLabel&) const override { return 1; }
  Decomposition tensor(const IrrLabel& a, const IrrLabel& b) const override;
  IrrLabel dual(const IrrLabel& a) const override;
  IrrLabel sigma(const IrrLabel& a) const override { return dual(a); }
  int grade(const IrrLabel& a) const override;
  bool z_graded() const override { return true; }
  IrrLabel unit() const override { return IrrLabel{std::vector<int>(static_cast<std::size_t>(n_), 0)}; }
  Decomposition fundamental() const override;
  std::vector<IrrLabel> labels_up_to(int cap) const override;
  std::string format(const IrrLabel& a) const override;
  IrrLabel parse(const std::string& text) const override;

private:
  int n_;
};

/// "un:N", "sun:2" (or "su2"), "torus:N". Other groups have no shipped fusion data.
std::unique_ptr<FusionData> make_fusion_data(const std::string& group);

/// Littlewood-Richardson product of U_n weights (memoized, thread-safe).
Decomposition lr_tensor(const std::vector<int>& lambda, const std::vector<int>& mu, int n);
/// LR coefficients c^ν_{λμ} for partitions, keeping ν with at most max_rows rows.
Multiset<std::vector<int>> lr_partitions(const std::vector<int>& lambda, const std::vector<int>& mu, int max_rows);
/// Weyl dimension formula Π_{i<j} (λ_i - λ_j + j - i)/(j - i).
long un_dim(const std::vector<int>& lambda);

struct StructureMaps {
  IrrLabel dual;
  IrrLabel sigma;
  int grade = 0;
};

StructureMaps structure_maps(const IrrLabel& a, const FusionData& data);

/// Simple comodule of R(G) ⋊ CZ2: V (s = 0) or V ⊗ s (s = 1).
struct CrossedLabel {
  IrrLabel base;
  int s = 0;

  friend auto operator<=>(const CrossedLabel&, const CrossedLabel&) = default;
};

/// Simple comodule label of A_*(G): V (parity 0) or Vs (parity 1), grade(V) ≡ parity mod 2.
struct AStarLabel {
  IrrLabel base;
  int parity = 0;

  friend auto operator<=>(const AStarLabel&, const AStarLabel&) = default;
};

/// V ⊗ (W s^j) = (V ⊗ W) s^j and (V s) ⊗ (W s^j) = (V ⊗ W^σ) s^{1+j}.
Multiset<CrossedLabel> crossed_tensor(const CrossedLabel& x, const CrossedLabel& y, const FusionData& data);

/// Throws UsageError unless grade(base) ≡ parity (mod 2).
void validate_astar(const AStarLabel& x, const FusionData& data);
/// x is an actual simple of A_*(G): base in Irr(G)_[parity].
bool is_simple_astar(const AStarLabel& x, const FusionData& data);

/// Same rules as crossed_tensor on parity-consistent labels; asserts every output is consistent.
Multiset<AStarLabel> astar_tensor(const AStarLabel& x, const AStarLabel& y, const FusionData& data);
/// Extends astar_tensor bilinearly to multisets.
Multiset<AStarLabel> astar_tensor(const Multiset<AStarLabel>& x, const Multiset<AStarLabel>& y,
                                  const FusionData& data);
/// conj(V) for parity 0, conj(W)^σ s for parity 1.
AStarLabel astar_dual(const AStarLabel& x, const FusionData& data);
long astar_dim(const AStarLabel& x, const FusionData& data);

std::string format_astar(const AStarLabel& x, const FusionData& data);
/// "([1,0],s)" or "([1,1],e)" with the base in the instance's own syntax.
AStarLabel parse_astar(const std::string& text, const FusionData& data);

struct MomentCheck {
  long fusion_count = 0;
  GaussianRational haar_value;
};

/// Multiplicity of the trivial comodule in (Us)^{⊗2k} for A_*(U_n), alongside the exact
/// Haar value h((Σ_i π(v_ii))^{2k}). The two are computed independently and must agree.
MomentCheck moment_crosscheck(int n, int k, int p_max = 5);

} // namespace halfcomm
