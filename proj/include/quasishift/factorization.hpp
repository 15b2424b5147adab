#pragma once

#include <vector>

namespace quasishift {

// Factor sizes usable for the componentwise idempotent construction.
inline bool admissible_factor(int p) { return p >= 2 && p != 2 && p != 6; }

// All multisets (p_1 <= ... <= p_q) with product N and every p_i admissible;
// q >= 2 when require_nontrivial, else q >= 1. Sorted lexicographically.
// An empty result signals inapplicability, not an error.
std::vector<std::vector<int>> admissible_factorization(int N, bool require_nontrivial);

}  // namespace quasishift
