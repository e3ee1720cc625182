#include "parkfn/core.hpp"

#include <algorithm>
#include <string>

#include "parkfn/stats.hpp"

namespace parkfn {

namespace {

std::string at_position(int i) { return " at position " + std::to_string(i); }

// Shared by AdmissiblePair and bs_codec::is_admissible. Assumes equal lengths.
bool admissible_ok(const std::vector<int>& k, const std::vector<int>& l,
                   std::string* why) {
  int n = static_cast<int>(k.size());
  for (int i = 0; i < n; ++i) {
    if (l[i] < 0 || l[i] > k[i] || k[i] > i) {
      if (why) *why = "requires 0 <= l_i <= k_i <= i" + at_position(i);
      return false;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (l[i] > l[j] && k[j] < i + 1) {
        if (why) {
          *why = "inversion l_" + std::to_string(i) + " > l_" +
                 std::to_string(j) + " requires k_" + std::to_string(j) +
                 " >= " + std::to_string(i + 1);
        }
        return false;
      }
    }
  }
  return true;
}

}  // namespace

namespace detail {
bool admissible_check(const std::vector<int>& k, const std::vector<int>& l) {
  return admissible_ok(k, l, nullptr);
}
}  // namespace detail

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  int n = static_cast<int>(values_.size());
  if (n == 0) throw InvalidInputError("permutation must be nonempty");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : values_) {
    if (v < 0 || v >= n)
      throw InvalidInputError("permutation entry " + std::to_string(v) +
                              " outside 0.." + std::to_string(n - 1));
    if (seen[static_cast<size_t>(v)])
      throw InvalidInputError("permutation repeats value " + std::to_string(v));
    seen[static_cast<size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw InvalidInputError("permutation size must be >= 1");
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i;
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  int n = size();
  std::vector<int> r(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) r[static_cast<size_t>(values_[static_cast<size_t>(i)])] = i;
  return Permutation(std::move(r));
}

bool validate_parking_function(const std::vector<int>& values) {
  if (values.empty()) throw InvalidInputError("sequence must be nonempty");
  for (int v : values) {
    if (v < 0)
      throw InvalidInputError("sequence entry " + std::to_string(v) +
                              " is negative");
  }
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
    if (sorted[static_cast<size_t>(i)] > i) return false;
  }
  return true;
}

ParkingFunction::ParkingFunction(std::vector<int> values)
    : values_(std::move(values)) {
  if (!validate_parking_function(values_))
    throw InvalidInputError(
        "not a parking function: sorted values violate s_i <= i");
}

HLPair::HLPair(Permutation sigma, std::vector<int> k)
    : sigma_(std::move(sigma)), k_(std::move(k)) {
  if (static_cast<int>(k_.size()) != sigma_.size())
    throw InvalidInputError("k length " + std::to_string(k_.size()) +
                            " does not match permutation size " +
                            std::to_string(sigma_.size()));
  std::vector<int> u = u_vector(sigma_);
  for (int i = 0; i < sigma_.size(); ++i) {
    if (k_[static_cast<size_t>(i)] < u[static_cast<size_t>(i)] ||
        k_[static_cast<size_t>(i)] > i)
      throw InvalidInputError("requires u_i <= k_i <= i" + at_position(i));
  }
}

AdmissiblePair::AdmissiblePair(std::vector<int> k, std::vector<int> l)
    : k_(std::move(k)), l_(std::move(l)) {
  if (k_.size() != l_.size())
    throw InvalidInputError("k length " + std::to_string(k_.size()) +
                            " does not match l length " +
                            std::to_string(l_.size()));
  if (k_.empty()) throw InvalidInputError("pair must be nonempty");
  std::string why;
  if (!admissible_ok(k_, l_, &why)) throw InvalidInputError("inadmissible: " + why);
}

std::string variant_name(ShapeVariant v) {
  switch (v) {
    case ShapeVariant::Identity: return "identity";
    case ShapeVariant::OneCycleTail: return "one-cycle-tail";
    case ShapeVariant::TwoTailIncreasing: return "two-tail-increasing";
    case ShapeVariant::ThreeTailIncreasing: return "three-tail-increasing";
    case ShapeVariant::ThreeTail2Inv: return "three-tail-2inv";
    case ShapeVariant::FourTailIncreasing: return "four-tail-increasing";
    case ShapeVariant::FourTailS1S3S2: return "four-tail-s1s3s2";
    case ShapeVariant::FourTailS3S1S2: return "four-tail-s3s1s2";
    case ShapeVariant::Unsupported: return "unsupported";
  }
  throw InternalError("unknown shape variant");
}

namespace {

long long checked_add(long long a, long long b) {
  long long out = 0;
  if (__builtin_add_overflow(a, b, &out))
    throw OverflowError("coefficient addition overflows 64 bits");
  return out;
}

long long checked_mul(long long a, long long b) {
  long long out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw OverflowError("multiplication overflows 64 bits");
  return out;
}

}  // namespace

void BivariatePolynomial::add(int a, int b, long long coeff) {
  if (a < 0 || b < 0) throw InvalidInputError("exponents must be nonnegative");
  if (coeff == 0) return;
  Key key{a, b};
  auto it = c_.find(key);
  if (it == c_.end()) {
    c_.emplace(key, coeff);
    return;
  }
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) c_.erase(it);
}

void BivariatePolynomial::merge(const BivariatePolynomial& other) {
  for (const auto& [key, coeff] : other.c_) add(key.first, key.second, coeff);
}

long long BivariatePolynomial::coeff(int a, int b) const {
  auto it = c_.find({a, b});
  return it == c_.end() ? 0 : it->second;
}

long long BivariatePolynomial::evaluate(long long q, long long t) const {
  long long total = 0;
  for (const auto& [key, coeff] : c_) {
    long long term = coeff;
    for (int i = 0; i < key.first; ++i) term = checked_mul(term, q);
    for (int i = 0; i < key.second; ++i) term = checked_mul(term, t);
    total = checked_add(total, term);
  }
  return total;
}

}  // namespace parkfn
