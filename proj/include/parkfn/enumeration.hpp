#ifndef PARKFN_ENUMERATION_HPP
#define PARKFN_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "parkfn/core.hpp"

namespace parkfn {

struct EnumerationJob {
  enum class Target { HlPairs, ParkingFunctions, AdmissiblePairs, RPolynomial };

  int n = 1;
  Target target = Target::RPolynomial;
  int partitions = 1;
  std::string checkpoint_path;  // empty: no checkpointing
};

// Deterministic streams. Order: permutations lexicographic; for each sigma the
// k-box [u_i, i] in lexicographic order; parking functions lexicographic via
// backtracking with sorted-prefix feasibility pruning; admissible pairs by
// k lexicographic, then l lexicographic.
void enumerate_hl_pairs(int n, const std::function<void(const HLPair&)>& yield);
void enumerate_parking_functions(
    int n, const std::function<void(const ParkingFunction&)>& yield);
void enumerate_admissible_pairs(
    int n, const std::function<void(const AdmissiblePair&)>& yield);

// R_n(q,t) = sum over HL-pairs of q^maj(sigma) t^(n(n-1)/2 - sum k_i).
// For fixed sigma the k-sum factorizes into a product of ones-polynomials in
// t, so the cost is per-permutation, not per-pair. Work is split into
// contiguous lexicographic rank blocks whose grid depends only on n; results
// are bit-identical for every partition count. A nonempty checkpoint_dir
// persists completed blocks and resumes from them.
BivariatePolynomial compute_r_polynomial(int n, int partitions = 1,
                                         const std::string& checkpoint_dir = {});
BivariatePolynomial compute_r_polynomial(const EnumerationJob& job);

// Rank arithmetic for the block grid (factorial number system).
uint64_t factorial(int n);  // n <= 20
Permutation permutation_at_rank(int n, uint64_t rank);
uint64_t block_count(int n);

struct VerificationReport {
  bool passed = false;
  long long hl_count = 0;
  long long parking_count = 0;
  long long admissible_count = 0;
  long long r_at_one_one = 0;
  long long round_trip_failures = 0;
  long long correspondence_failures = 0;  // maj <= 3 layer
  bool histograms_match = false;
  bool r_symmetric = false;               // informational, never gates passed
  std::string first_counterexample;       // empty when passed
  std::vector<std::string> lines;         // human-readable report

  nlohmann::ordered_json to_json() const;
};

// Cross-checks the HL and admissible encodings against the parking-function
// set at size n: the four set cardinalities, round-trips, the maj <= 3
// l-correspondence layer, and the per-(maj, sum k) histograms. The q<->t
// symmetry of R_n is reported as an observation only.
VerificationReport verify_bijections(int n);

// Exploration output for a single parking function: the exponent pair its
// decoded HL-pair contributes to R_n, as {"maj":…, "t_exponent":…}.
nlohmann::ordered_json pf_statistics(const ParkingFunction& q);

}  // namespace parkfn

#endif  // PARKFN_ENUMERATION_HPP
