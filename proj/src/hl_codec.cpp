#include "parkfn/hl_codec.hpp"

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "parkfn/stats.hpp"

namespace parkfn {

ParkingFunction hl_encode(const HLPair& pair) {
  int n = pair.size();
  std::vector<int> p(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    p[static_cast<size_t>(pair.sigma()(i))] = pair.k()[static_cast<size_t>(i)];
  return ParkingFunction(std::move(p));
}

namespace {

// Builds sigma left to right. Placing value v at position pos fixes
// k_pos = q_v, so v is viable iff q_v <= pos and u_pos(prefix+v) <= q_v.
// u_pos depends only on the prefix, so it can be maintained incrementally.
// The preimage is unique; the candidate ordering only shapes the search path.
struct Decoder {
  const std::vector<int>& q;
  int n;
  DecodeStrategy strategy;
  std::mt19937_64 rng;

  std::vector<int> sigma, u, dp;  // dp[t]: descents among positions 1..t
  std::vector<char> used;

  Decoder(const std::vector<int>& q_in, DecodeStrategy s, uint64_t seed)
      : q(q_in),
        n(static_cast<int>(q_in.size())),
        strategy(s),
        rng(seed),
        sigma(q_in.size(), 0),
        u(q_in.size(), 0),
        dp(q_in.size(), 0),
        used(q_in.size(), 0) {}

  bool search(int pos) {
    if (pos == n) return true;
    std::vector<std::pair<int, int>> cand;  // (q_v, v)
    for (int v = 0; v < n; ++v) {
      if (!used[static_cast<size_t>(v)] && q[static_cast<size_t>(v)] <= pos)
        cand.emplace_back(q[static_cast<size_t>(v)], v);
    }
    switch (strategy) {
      case DecodeStrategy::LeftmostDescent:
        std::sort(cand.begin(), cand.end());
        break;
      case DecodeStrategy::RightmostDescent:
        std::sort(cand.begin(), cand.end(), std::greater<>());
        break;
      case DecodeStrategy::RandomSeeded:
        std::shuffle(cand.begin(), cand.end(), rng);
        break;
    }
    for (auto [qv, v] : cand) {
      sigma[static_cast<size_t>(pos)] = v;
      dp[static_cast<size_t>(pos)] =
          pos == 0 ? 0
                   : dp[static_cast<size_t>(pos - 1)] +
                         (sigma[static_cast<size_t>(pos - 1)] > v ? 1 : 0);
      int j = pos == 0 ? 0 : u[static_cast<size_t>(pos - 1)];
      for (;; ++j) {
        int interior =
            dp[static_cast<size_t>(pos)] - dp[static_cast<size_t>(j)];
        int boundary =
            (j == 0) ? 1
                     : (sigma[static_cast<size_t>(j - 1)] >
                                sigma[static_cast<size_t>(j)]
                            ? 1
                            : 0);
        int total = interior + boundary;
        if (total == 0) break;
        if (total == 1 && (j == 0 || sigma[static_cast<size_t>(j - 1)] > v))
          break;
      }
      if (j <= qv) {
        u[static_cast<size_t>(pos)] = j;
        used[static_cast<size_t>(v)] = 1;
        if (search(pos + 1)) return true;
        used[static_cast<size_t>(v)] = 0;
      }
    }
    return false;
  }
};

}  // namespace

HLPair hl_decode_with_strategy(const ParkingFunction& q, DecodeStrategy strategy,
                               uint64_t seed) {
  Decoder dec(q.values(), strategy, seed);
  if (!dec.search(0))
    throw InternalError("decode search exhausted for a valid parking function");
  int n = q.size();
  std::vector<int> k(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    k[static_cast<size_t>(i)] = q[dec.sigma[static_cast<size_t>(i)]];
  try {
    return HLPair(Permutation(std::move(dec.sigma)), std::move(k));
  } catch (const InvalidInputError& e) {
    throw InternalError(std::string("decode produced an invalid pair: ") +
                        e.what());
  }
}

HLPair hl_decode(const ParkingFunction& q) {
  return hl_decode_with_strategy(q, DecodeStrategy::LeftmostDescent);
}

}  // namespace parkfn
