#ifndef PARKFN_STATS_HPP
#define PARKFN_STATS_HPP

#include <vector>

#include "parkfn/core.hpp"

namespace parkfn {

// {t in 1..n-1 : sigma(t-1) > sigma(t)}, ascending.
std::vector<int> descent_set(const Permutation& sigma);

// Sum of (n - t) over the descent set.
int maj(const Permutation& sigma);

// u_i = smallest j in [0,i] such that the segment sigma(j-1..i), with the
// virtual boundary sigma(-1) = +infinity, contains no descents or exactly one
// descent together with sigma(j-1) > sigma(i). The boundary pair
// (sigma(j-1), sigma(j)) counts as a segment descent; at j=0 it always is one.
// Result is nondecreasing with 0 <= u_i <= i.
std::vector<int> u_vector(const Permutation& sigma);

// Componentwise u_i(sigma) <= k_i <= i. Length mismatch is an error.
bool is_hl_pair(const Permutation& sigma, const std::vector<int>& k);

}  // namespace parkfn

#endif  // PARKFN_STATS_HPP
