#include "halfcomm/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace halfcomm {

std::size_t factorial(int p) {
  std::size_t f = 1;
  for (int k = 2; k <= p; ++k) f *= static_cast<std::size_t>(k);
  return f;
}

std::vector<Permutation> all_permutations(int p) {
  std::vector<Permutation> out;
  out.reserve(factorial(p));
  Permutation perm(static_cast<std::size_t>(p));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::size_t permutation_rank(const Permutation& perm) {
  const std::size_t p = perm.size();
  std::size_t rank = 0;
  for (std::size_t k = 0; k < p; ++k) {
    std::size_t smaller = 0;
    for (std::size_t t = k + 1; t < p; ++t)
      if (perm[t] < perm[k]) ++smaller;
    rank += smaller * factorial(static_cast<int>(p - k - 1));
  }
  return rank;
}

int cycle_count(const Permutation& perm) {
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (auto k = start; !seen[k]; k = static_cast<std::size_t>(perm[k])) seen[k] = true;
  }
  return cycles;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) out[k] = a[static_cast<std::size_t>(b[k])];
  return out;
}

Permutation inverse(const Permutation& perm) {
  Permutation out(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) out[static_cast<std::size_t>(perm[k])] = static_cast<int>(k);
  return out;
}

} // namespace halfcomm
