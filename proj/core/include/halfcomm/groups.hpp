#pragma once

// Concrete compact matrix groups G ⊂ U_N: Haar samplers, membership tests, the
// self-transpose / non-real / doubly non-real predicates, and the 2x2 matrix model
// f ⊗ 1 -> diag(f(g), f(ḡ)), f ⊗ s -> antidiag(f(g), f(ḡ)) of the crossed product.

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "halfcomm/crossed.hpp"

namespace halfcomm {

enum class GroupKind { Un, On, SUn, TorusN, Kn, U2n };

inline constexpr double kDefaultMembershipTolerance = 1e-8;

struct GroupModel {
  GroupKind kind = GroupKind::Un;
  int n = 1;
  double tolerance = kDefaultMembershipTolerance;

  /// "un:N", "on:N", "sun:N", "torus:N", "kn:N", "u2n:N".
  static GroupModel parse(const std::string& text);
  std::string name() const;
  /// Matrix size: n, except U2n which lives in U_{2n}.
  int ambient_dim() const noexcept { return kind == GroupKind::U2n ? 2 * n : n; }
};

using UnitaryMatrix = Eigen::MatrixXcd;

/// Seeded Haar sampler. Draws are a deterministic function of (model, seed).
class HaarSampler {
public:
  HaarSampler(GroupModel model, std::uint64_t seed) : model_(model), rng_(seed) {}

  UnitaryMatrix operator()();
  const GroupModel& model() const noexcept { return model_; }

private:
  GroupModel model_;
  std::mt19937_64 rng_;
};

/// One Haar sample, equal to the first draw of HaarSampler(model, seed).
UnitaryMatrix sample_haar(const GroupModel& model, std::uint64_t seed);

/// Unitarity plus the model's structural pattern, within model.tolerance.
bool contains(const GroupModel& model, const UnitaryMatrix& g);

enum class Predicate { SelfTranspose, NonReal, DoublyNonReal };

struct PredicateWitness {
  UnitaryMatrix g;
  /// 1-based (i, j) for non_real; (i, j, k, l) for doubly_non_real; unused slots are 0.
  std::array<int, 4> indices{};
  /// g_ij, or g_ij·conj(g_kl).
  std::complex<double> value;
};

struct PredicateResult {
  bool holds = false;
  /// The answer is structural rather than a sampling outcome (O_n is real; witnesses prove existence).
  bool proven = false;
  std::optional<PredicateWitness> witness;
  int trials_run = 0;
};

/// Imaginary parts below this are treated as real when hunting witnesses.
inline constexpr double kWitnessThreshold = 1e-6;

/// Predicates by sampling. self_transpose reports a counterexample as its
/// witness when it fails; the other two are one-sided: a witness proves `true`.
PredicateResult predicate(const GroupModel& model, Predicate which, int trials, std::uint64_t seed);

std::complex<double> evaluate(const FunElement& f, const UnitaryMatrix& g);
Eigen::Matrix2cd matrix_model_eval(const CrossedElement& x, const UnitaryMatrix& g);

} // namespace halfcomm
