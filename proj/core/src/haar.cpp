#include "halfcomm/haar.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <thread>
#include <utility>

#include "halfcomm/errors.hpp"

namespace halfcomm {

RationalMatrix gram_matrix(int p, int n) {
  const auto perms = all_permutations(p);
  RationalMatrix g(perms.size(), perms.size());
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      const int cycles = cycle_count(compose(perms[a], inverse(perms[b])));
      mpz_class power;
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(cycles));
      g(a, b) = mpq_class(power);
    }
  return g;
}

namespace {

std::shared_ptr<const WeingartenTable> build_weingarten(int p, int n) {
  auto table = std::make_shared<WeingartenTable>();
  table->p = p;
  table->n = n;
  const RationalMatrix g = gram_matrix(p, n);
  const std::size_t size = g.rows();
  // Wg(σ τ⁻¹) = G⁻¹[σ, τ]; the column at τ = identity (rank 0) is Wg itself.
  table->full_rank = n >= p;
  table->values.resize(size);
  if (table->full_rank) {
    RationalMatrix e(size, 1);
    e(0, 0) = 1;
    const RationalMatrix x = g.solve(e);
    for (std::size_t k = 0; k < size; ++k) table->values[k] = x(k, 0);
  } else {
    const RationalMatrix pinv = g.pseudo_inverse();
    for (std::size_t k = 0; k < size; ++k) table->values[k] = pinv(k, 0);
  }
  return table;
}

struct BalancedMonomial {
  std::vector<Symbol> u;
  std::vector<Symbol> ubar;
};

} // namespace

std::shared_ptr<const WeingartenTable> weingarten_table(int p, int n, int p_max) {
  if (p < 0 || n < 1) throw UsageError("weingarten_table needs p >= 0 and n >= 1");
  if (p > p_max)
    throw ResourceError("Weingarten degree " + std::to_string(p) + " exceeds the cap " + std::to_string(p_max));
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const WeingartenTable>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({p, n}); it != cache.end()) return it->second;
  }
  auto table = build_weingarten(p, n);
  std::lock_guard lock(mutex);
  return cache.try_emplace({p, n}, std::move(table)).first->second;
}

namespace {

// ∫ u_{i1 j1}..u_{ip jp} ū_{i'1 j'1}..ū_{i'p j'p}
//   = Σ_{σ,τ} Π_k δ(i_k, i'_σ(k)) δ(j_k, j'_τ(k)) Wg(τ σ⁻¹).
mpq_class integrate_monomial(const FunMonomial& m, int p_max) {
  const std::size_t p = m.u_degree();
  if (p != m.ubar_degree()) return 0;
  if (p == 0) return 1;
  if (static_cast<int>(p) > p_max)
    throw ResourceError("monomial needs Weingarten degree " + std::to_string(p) + " above the cap " +
                        std::to_string(p_max));
  const auto symbols = m.expand();
  const std::vector<Symbol> u(symbols.begin(), symbols.begin() + static_cast<std::ptrdiff_t>(p));
  const std::vector<Symbol> ubar(symbols.begin() + static_cast<std::ptrdiff_t>(p), symbols.end());
  const auto table = weingarten_table(static_cast<int>(p), m.dimension(), p_max);
  const auto perms = all_permutations(static_cast<int>(p));
  std::vector<const Permutation*> rows, cols;
  for (const auto& perm : perms) {
    bool row_ok = true, col_ok = true;
    for (std::size_t k = 0; k < p; ++k) {
      const Symbol& target = ubar[static_cast<std::size_t>(perm[k])];
      row_ok = row_ok && u[k].row == target.row;
      col_ok = col_ok && u[k].col == target.col;
    }
    if (row_ok) rows.push_back(&perm);
    if (col_ok) cols.push_back(&perm);
  }
  mpq_class total = 0;
  for (const Permutation* sigma : rows) {
    const Permutation sigma_inv = inverse(*sigma);
    for (const Permutation* tau : cols) total += (*table)(compose(*tau, sigma_inv));
  }
  return total;
}

} // namespace

GaussianRational haar_integral(const FunElement& f, int p_max) {
  GaussianRational total = 0;
  for (const auto& [m, c] : f.terms()) {
    const mpq_class v = integrate_monomial(m, p_max);
    if (sgn(v) != 0) total += c * GaussianRational(v);
  }
  return total;
}

GaussianRational haar_state(const CrossedElement& x, int p_max) { return haar_integral(x.f0(), p_max); }

GaussianRational haar_norm_squared(const CrossedElement& x, int p_max) {
  return haar_state(crossed_mul(crossed_star(x), x), p_max);
}

bool norm_equal(const CrossedElement& x, const CrossedElement& y, int p_max) {
  return haar_norm_squared(x - y, p_max).is_zero();
}

CrossedElement haar_on_leg(const CrossedTensor& t, std::size_t leg, int n, int p_max) {
  CrossedElement out(n);
  for (const auto& [key, c] : t.terms()) {
    if (key.size() != 2 || leg > 1) throw UsageError("haar_on_leg expects a two-leg tensor");
    const GaussianRational h = haar_state(basis_element(key[leg]), p_max);
    if (h.is_zero()) continue;
    out += basis_element(key[1 - leg], c * h);
  }
  return out;
}

namespace {

struct ChunkSums {
  std::complex<double> sum;
  double sum_abs2 = 0.0;
  std::size_t count = 0;
};

std::uint64_t chunk_seed(std::uint64_t seed, std::size_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

MCEstimate run_monte_carlo(const std::function<std::complex<double>(const UnitaryMatrix&)>& value,
                           const GroupModel& model, std::size_t samples, std::uint64_t seed,
                           std::size_t chunk_size) {
  if (samples < 2) throw UsageError("Monte Carlo needs at least two samples");
  if (chunk_size == 0) throw UsageError("chunk size must be positive");
  const std::size_t chunks = (samples + chunk_size - 1) / chunk_size;
  std::vector<ChunkSums> sums(chunks);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t c = next++; c < chunks; c = next++) {
      HaarSampler sampler(model, chunk_seed(seed, c));
      const std::size_t count = std::min(chunk_size, samples - c * chunk_size);
      ChunkSums s;
      for (std::size_t k = 0; k < count; ++k) {
        const std::complex<double> v = value(sampler());
        s.sum += v;
        s.sum_abs2 += std::norm(v);
      }
      s.count = count;
      sums[c] = s;
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(chunks, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::complex<double> total;
  double total_abs2 = 0.0;
  for (const auto& s : sums) {
    total += s.sum;
    total_abs2 += s.sum_abs2;
  }
  const auto n = static_cast<double>(samples);
  MCEstimate est;
  est.mean = total / n;
  const double variance = std::max(0.0, (total_abs2 - n * std::norm(est.mean)) / (n - 1.0));
  est.std_error = std::sqrt(variance / n);
  est.samples = samples;
  est.seed = seed;
  return est;
}

} // namespace

MCEstimate mc_integral(const FunElement& f, const GroupModel& model, std::size_t samples, std::uint64_t seed,
                       std::size_t chunk_size) {
  if (f.dimension() != model.ambient_dim())
    throw UsageError("symbols of dimension " + std::to_string(f.dimension()) + " integrated over " + model.name());
  return run_monte_carlo([&f](const UnitaryMatrix& g) { return evaluate(f, g); }, model, samples, seed,
                         chunk_size);
}

MCEstimate mc_integral(const CrossedElement& x, const GroupModel& model, std::size_t samples,
                       std::uint64_t seed, std::size_t chunk_size) {
  if (x.dimension() != model.ambient_dim())
    throw UsageError("symbols of dimension " + std::to_string(x.dimension()) + " integrated over " + model.name());
  return run_monte_carlo(
      [&x](const UnitaryMatrix& g) {
        return 0.5 * (evaluate(x.f0(), g) + evaluate(x.f0(), g.conjugate()));
      },
      model, samples, seed, chunk_size);
}

ProbabilisticEquality mc_norm_equal(const CrossedElement& x, const CrossedElement& y, const GroupModel& model,
                                    std::size_t samples, std::uint64_t seed) {
  const CrossedElement d = x - y;
  ProbabilisticEquality out;
  out.norm = mc_integral(crossed_mul(crossed_star(d), d), model, samples, seed);
  out.threshold = std::max(1e-6, 5.0 * out.norm.std_error);
  out.equal = out.norm.mean.real() < out.threshold;
  return out;
}

} // namespace halfcomm
