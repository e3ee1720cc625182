#ifndef PARKFN_BS_CODEC_HPP
#define PARKFN_BS_CODEC_HPP

#include <vector>

#include "parkfn/core.hpp"

namespace parkfn {

// 0 <= l_i <= k_i <= i for all i, and every i < j with l_i > l_j has
// k_j >= i+1. Length mismatch is an error.
bool is_admissible(const std::vector<int>& k, const std::vector<int>& l);

// The unique permutation whose left-inversion count at position i
// (number of earlier, larger entries) equals c_i = k_i - l_i.
Permutation sigma_from_kl(const std::vector<int>& k, const std::vector<int>& l);

// q with q_{sigma_{k,l}(i)} = k_i.
ParkingFunction bs_encode(const AdmissiblePair& pair);

inline constexpr int kBsDecodeDefaultBound = 8;

// The unique admissible pair mapping to q, via a per-n memoized forward index.
// n beyond the bound is an unsupported-size error.
AdmissiblePair bs_decode(const ParkingFunction& q,
                         int search_bound = kBsDecodeDefaultBound);

// Matches sigma against the small-maj closed forms: an ascending head followed
// by a short tail whose descents produce maj(sigma). Every permutation with
// maj <= 4 matches exactly one variant; maj > 4 reports Unsupported.
ShapeDescriptor classify_shape(const Permutation& sigma);

// Reconstructs the permutation of a supported shape at size n
// (ascending complement head + params as tail). Invalid params are an error.
Permutation shape_to_permutation(const ShapeDescriptor& shape, int n);

// All supported shape descriptors that exist at size n (maj 0..4).
std::vector<ShapeDescriptor> enumerate_shapes(int n);

// The l-sequence associated with a supported shape. FourTailS3S1S2 has no
// correspondence at all (no-correspondence error); Unsupported is an
// unsupported-shape error.
std::vector<int> shape_to_l(const ShapeDescriptor& shape, int n);

// Inverse of shape_to_l on its maj <= 3 image families (all-zero prefix plus
// the family tail constraints). Anything else is an unsupported-l error.
ShapeDescriptor shape_from_l(const std::vector<int>& l);

}  // namespace parkfn

#endif  // PARKFN_BS_CODEC_HPP
