#pragma once

// Brute-force oracles written without the library's rewriting code.

#include <set>
#include <vector>

namespace oracle {

/// A letter as (row, col); the presentation is orthogonal.
using Pair = std::pair<int, int>;
using PlainWord = std::vector<Pair>;

/// All words reachable from w by rewriting any factor abc into cba (depth-first).
std::set<PlainWord> half_commutation_class(const PlainWord& w);

/// Some word of the class has an adjacent pair v_ij v_ik (j != k) or v_ki v_ji (j != k).
bool class_has_forbidden_adjacency(const std::set<PlainWord>& cls);

/// Closed-form Haar moments on U_n used as frozen reference values.
double moment_abs_u11(int n, int k); ///< ∫ |u_11|^{2k} = k! (n-1)! / (n+k-1)!

} // namespace oracle
