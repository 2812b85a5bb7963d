#pragma once

#include <cstddef>
#include <vector>

namespace halfcomm {

/// Permutation of {0, ..., p-1} in one-line notation: k -> perm[k].
using Permutation = std::vector<int>;

/// All of S_p in lexicographic order; position in the result equals permutation_rank.
std::vector<Permutation> all_permutations(int p);
/// Lexicographic rank via the Lehmer code.
std::size_t permutation_rank(const Permutation& perm);
std::size_t factorial(int p);
int cycle_count(const Permutation& perm);
/// (a ∘ b)(k) = a(b(k)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& perm);

} // namespace halfcomm
