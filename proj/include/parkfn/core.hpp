#ifndef PARKFN_CORE_HPP
#define PARKFN_CORE_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "parkfn/errors.hpp"

namespace parkfn {

// A bijection on {0,...,n-1} in 0-indexed one-line notation.
class Permutation {
 public:
  explicit Permutation(std::vector<int> values);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  int operator()(int i) const { return values_[static_cast<size_t>(i)]; }
  const std::vector<int>& values() const { return values_; }

  // r with r(sigma(i)) = i for all i.
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

// True iff the sorted copy s satisfies s_i <= i for all i; equivalently some
// permutation tau majorates the sequence componentwise.
// Empty input or a negative entry is an error, not "false".
bool validate_parking_function(const std::vector<int>& values);

// A sequence that validates as a parking function.
class ParkingFunction {
 public:
  explicit ParkingFunction(std::vector<int> values);

  int size() const { return static_cast<int>(values_.size()); }
  int operator[](int i) const { return values_[static_cast<size_t>(i)]; }
  const std::vector<int>& values() const { return values_; }

  bool operator==(const ParkingFunction&) const = default;
  auto operator<=>(const ParkingFunction&) const = default;

 private:
  std::vector<int> values_;
};

// (sigma, k) with u_i(sigma) <= k_i <= i componentwise.
class HLPair {
 public:
  HLPair(Permutation sigma, std::vector<int> k);

  const Permutation& sigma() const { return sigma_; }
  const std::vector<int>& k() const { return k_; }
  int size() const { return sigma_.size(); }

  bool operator==(const HLPair&) const = default;

 private:
  Permutation sigma_;
  std::vector<int> k_;
};

// (k, l) with 0 <= l_i <= k_i <= i, and k_j >= i+1 whenever i < j, l_i > l_j.
class AdmissiblePair {
 public:
  AdmissiblePair(std::vector<int> k, std::vector<int> l);

  const std::vector<int>& k() const { return k_; }
  const std::vector<int>& l() const { return l_; }
  int size() const { return static_cast<int>(k_.size()); }

  bool operator==(const AdmissiblePair&) const = default;

 private:
  std::vector<int> k_;
  std::vector<int> l_;
};

namespace detail {
// Admissibility conditions without length/emptiness policing.
bool admissible_check(const std::vector<int>& k, const std::vector<int>& l);
}  // namespace detail

enum class ShapeVariant {
  Identity,
  OneCycleTail,
  TwoTailIncreasing,
  ThreeTailIncreasing,
  ThreeTail2Inv,
  FourTailIncreasing,
  FourTailS1S3S2,
  FourTailS3S1S2,
  Unsupported,
};

// Dash-separated tag, e.g. "one-cycle-tail".
std::string variant_name(ShapeVariant v);

// Classification of a permutation into the small-maj closed forms.
// params holds the tail values in positional order (empty for Identity and
// Unsupported). maj_value is in {0..4} for supported variants; for
// Unsupported it carries the actual major index.
struct ShapeDescriptor {
  int maj_value = 0;
  ShapeVariant variant = ShapeVariant::Identity;
  std::vector<int> params;

  bool operator==(const ShapeDescriptor&) const = default;
};

// Sparse exact-integer polynomial in q (exponent a) and t (exponent b).
// Coefficients are nonnegative in this domain; arithmetic is overflow-checked.
class BivariatePolynomial {
 public:
  using Key = std::pair<int, int>;  // (a, b)
  using Map = std::map<Key, long long>;

  BivariatePolynomial() = default;

  void add(int a, int b, long long coeff);       // throws OverflowError
  void merge(const BivariatePolynomial& other);  // associative + commutative
  long long coeff(int a, int b) const;
  const Map& coefficients() const& { return c_; }
  Map coefficients() && { return std::move(c_); }
  bool empty() const { return c_.empty(); }

  long long evaluate(long long q, long long t) const;  // checked 64-bit

  bool operator==(const BivariatePolynomial&) const = default;

 private:
  Map c_;
};

}  // namespace parkfn

#endif  // PARKFN_CORE_HPP
