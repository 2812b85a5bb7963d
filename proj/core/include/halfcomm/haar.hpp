#pragma once

// Exact Haar integration on U_n by Weingarten calculus, the induced Haar state and
// norm on R(U_n) ⋊ CZ2 (an exact equality test for A_*(U_n)), and Monte Carlo
// estimates over any GroupModel as an independent cross-check.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include <gmpxx.h>

#include "halfcomm/crossed.hpp"
#include "halfcomm/gaussian_rational.hpp"
#include "halfcomm/groups.hpp"
#include "halfcomm/permutation.hpp"
#include "halfcomm/rational_matrix.hpp"

namespace halfcomm {

inline constexpr int kDefaultMaxDegree = 5;

/// Weingarten function Wg(·, n) on S_p, stored by lexicographic permutation rank.
struct WeingartenTable {
  int p = 0;
  int n = 0;
  /// Gram matrix invertible (n >= p); otherwise the values are its pseudo-inverse.
  bool full_rank = true;
  std::vector<mpq_class> values;

  const mpq_class& operator()(const Permutation& perm) const { return values[permutation_rank(perm)]; }
};

/// G[σ, τ] = n^{#cycles(σ τ⁻¹)} over S_p, rows and columns in lexicographic order.
RationalMatrix gram_matrix(int p, int n);

/// Cached, thread-safe. Throws ResourceError when p > p_max.
std::shared_ptr<const WeingartenTable> weingarten_table(int p, int n, int p_max = kDefaultMaxDegree);

/// ∫_{U_n} f(g) dg with n = f.dimension().
GaussianRational haar_integral(const FunElement& f, int p_max = kDefaultMaxDegree);
/// h(f0 ⊗ 1 + f1 ⊗ s) = ∫ f0.
GaussianRational haar_state(const CrossedElement& x, int p_max = kDefaultMaxDegree);
/// h(x* x), a nonnegative rational.
GaussianRational haar_norm_squared(const CrossedElement& x, int p_max = kDefaultMaxDegree);
/// x == y in A_*(U_n), decided by h((x-y)*(x-y)) == 0.
bool norm_equal(const CrossedElement& x, const CrossedElement& y, int p_max = kDefaultMaxDegree);

/// Integrates leg `leg` of a two-leg tensor with the Haar state, leaving the other leg.
CrossedElement haar_on_leg(const CrossedTensor& t, std::size_t leg, int n, int p_max = kDefaultMaxDegree);

struct MCEstimate {
  std::complex<double> mean;
  double std_error = 0.0; ///< sample standard deviation / sqrt(samples)
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kDefaultChunkSize = 4096;

/// Chunked Monte Carlo: chunk c draws from its own seeded stream, chunks run on worker
/// threads and their sums are combined in chunk order, so results depend only on
/// (seed, samples, chunk_size).
MCEstimate mc_integral(const FunElement& f, const GroupModel& model, std::size_t samples, std::uint64_t seed,
                       std::size_t chunk_size = kDefaultChunkSize);
/// Integrates the average of the diagonal entries of matrix_model_eval(x, g), i.e. f0.
MCEstimate mc_integral(const CrossedElement& x, const GroupModel& model, std::size_t samples,
                       std::uint64_t seed, std::size_t chunk_size = kDefaultChunkSize);

struct ProbabilisticEquality {
  bool equal = false;
  MCEstimate norm;
  double threshold = 0.0;
};

/// Equality for groups without exact calculus: the estimated h((x-y)*(x-y)) counts
/// as zero when below max(1e-6, 5 stderr).
ProbabilisticEquality mc_norm_equal(const CrossedElement& x, const CrossedElement& y, const GroupModel& model,
                                    std::size_t samples, std::uint64_t seed);

} // namespace halfcomm
