#include "parkfn/stats.hpp"

#include <string>

namespace parkfn {

std::vector<int> descent_set(const Permutation& sigma) {
  std::vector<int> out;
  for (int t = 1; t < sigma.size(); ++t) {
    if (sigma(t - 1) > sigma(t)) out.push_back(t);
  }
  return out;
}

int maj(const Permutation& sigma) {
  int n = sigma.size();
  int total = 0;
  for (int t : descent_set(sigma)) total += n - t;
  return total;
}

std::vector<int> u_vector(const Permutation& sigma) {
  int n = sigma.size();
  // dp[t] = number of descents among positions 1..t of the prefix.
  std::vector<int> dp(static_cast<size_t>(n), 0);
  for (int t = 1; t < n; ++t)
    dp[static_cast<size_t>(t)] =
        dp[static_cast<size_t>(t - 1)] + (sigma(t - 1) > sigma(t) ? 1 : 0);

  std::vector<int> u(static_cast<size_t>(n), 0);
  for (int i = 1; i < n; ++i) {
    // u is nondecreasing, so the scan can start where the previous one ended;
    // j = i always qualifies, which bounds the loop.
    int j = u[static_cast<size_t>(i - 1)];
    for (;; ++j) {
      int interior = dp[static_cast<size_t>(i)] - dp[static_cast<size_t>(j)];
      int boundary = (j == 0) ? 1 : (sigma(j - 1) > sigma(j) ? 1 : 0);
      int total = interior + boundary;
      if (total == 0) break;
      if (total == 1 && (j == 0 || sigma(j - 1) > sigma(i))) break;
    }
    u[static_cast<size_t>(i)] = j;
  }
  return u;
}

bool is_hl_pair(const Permutation& sigma, const std::vector<int>& k) {
  if (static_cast<int>(k.size()) != sigma.size())
    throw InvalidInputError("k length " + std::to_string(k.size()) +
                            " does not match permutation size " +
                            std::to_string(sigma.size()));
  std::vector<int> u = u_vector(sigma);
  for (int i = 0; i < sigma.size(); ++i) {
    if (k[static_cast<size_t>(i)] < u[static_cast<size_t>(i)] ||
        k[static_cast<size_t>(i)] > i)
      return false;
  }
  return true;
}

}  // namespace parkfn
