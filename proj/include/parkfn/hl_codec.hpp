#ifndef PARKFN_HL_CODEC_HPP
#define PARKFN_HL_CODEC_HPP

#include <cstdint>

#include "parkfn/core.hpp"

namespace parkfn {

// p with p_{sigma(i)} = k_i. Always a parking function for an HL-pair.
ParkingFunction hl_encode(const HLPair& pair);

// Which candidate ordering the decoder explores first. Every strategy returns
// the same pair (the preimage is unique); the agreement is itself tested.
enum class DecodeStrategy {
  LeftmostDescent,   // ascending (q_value, value)
  RightmostDescent,  // descending (q_value, value)
  RandomSeeded,      // shuffled by a seeded mt19937_64
};

inline constexpr uint64_t kDefaultDecodeSeed = 0x5eed;

// The unique HL-pair (sigma, k) with hl_encode((sigma, k)) = q.
HLPair hl_decode(const ParkingFunction& q);
HLPair hl_decode_with_strategy(const ParkingFunction& q, DecodeStrategy strategy,
                               uint64_t seed = kDefaultDecodeSeed);

}  // namespace parkfn

#endif  // PARKFN_HL_CODEC_HPP
