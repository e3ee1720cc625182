#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "parkfn/bs_codec.hpp"
#include "parkfn/core.hpp"
#include "parkfn/errors.hpp"
#include "parkfn/stats.hpp"
#include "oracles.hpp"

using namespace parkfn;

namespace {

template <class F>
void for_each_permutation(int n, F visit) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  do {
    visit(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

// All (k, l) with 0 <= l_i <= k_i <= i, no admissibility filter.
template <class F>
void for_each_bounded_pair(int n, F visit) {
  std::vector<int> k(static_cast<size_t>(n), 0);
  for (;;) {
    std::vector<int> l(static_cast<size_t>(n), 0);
    for (;;) {
      visit(k, l);
      int i = n - 1;
      while (i >= 0 && l[static_cast<size_t>(i)] == k[static_cast<size_t>(i)]) {
        l[static_cast<size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++l[static_cast<size_t>(i)];
    }
    int i = n - 1;
    while (i >= 0 && k[static_cast<size_t>(i)] == i) {
      k[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++k[static_cast<size_t>(i)];
  }
}

std::vector<int> left_inversion_counts(const Permutation& sigma) {
  int n = sigma.size();
  std::vector<int> c(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (sigma(j) > sigma(i)) ++c[static_cast<size_t>(i)];
  return c;
}

}  // namespace

TEST_CASE("is_admissible examples") {
  CHECK(is_admissible({0, 1}, {0, 0}));
  CHECK_FALSE(is_admissible({0, 0}, {0, 1}));
  // Zero l is admissible for every in-range k.
  for_each_bounded_pair(4, [](const std::vector<int>& k,
                              const std::vector<int>& l) {
    if (std::all_of(l.begin(), l.end(), [](int x) { return x == 0; }))
      CHECK(is_admissible(k, l));
  });
  // l_1 > l_2 requires k_2 >= 2.
  CHECK_FALSE(is_admissible({0, 1, 0}, {0, 1, 0}));
  CHECK(is_admissible({0, 1, 2}, {0, 1, 0}));
  CHECK_THROWS_AS(is_admissible({0, 1}, {0}), InvalidInputError);
}

TEST_CASE("admissible pair count at n=3 is 16") {
  int count = 0;
  for_each_bounded_pair(3, [&](const std::vector<int>& k,
                               const std::vector<int>& l) {
    if (is_admissible(k, l)) ++count;
  });
  CHECK(count == 16);
}

TEST_CASE("sigma_from_kl examples") {
  CHECK(sigma_from_kl({0, 1, 2}, {0, 1, 2}) == Permutation::identity(3));
  CHECK(sigma_from_kl({0, 1, 2, 3}, {0, 0, 0, 0}) == Permutation({3, 2, 1, 0}));
  CHECK_THROWS_AS(sigma_from_kl({0, 2}, {0, 0}), InvalidInputError);
}

TEST_CASE("sigma_from_kl inverts left-inversion counting") {
  for (int n = 1; n <= 6; ++n)
    for_each_permutation(n, [&](const Permutation& sigma) {
      std::vector<int> c = left_inversion_counts(sigma);
      std::vector<int> zeros(static_cast<size_t>(n), 0);
      CHECK(sigma_from_kl(c, zeros) == sigma);
    });
}

TEST_CASE("bs_encode examples") {
  CHECK(bs_encode(AdmissiblePair({0, 1}, {0, 0})) == ParkingFunction({1, 0}));
  CHECK(bs_encode(AdmissiblePair({0, 0}, {0, 0})) == ParkingFunction({0, 0}));
}

TEST_CASE("bs_encode is a bijection onto parking functions") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<int>> images;
    long long pairs = 0;
    for_each_bounded_pair(n, [&](const std::vector<int>& k,
                                 const std::vector<int>& l) {
      if (!is_admissible(k, l)) return;
      ++pairs;
      images.insert(bs_encode(AdmissiblePair(k, l)).values());
    });
    CHECK(pairs == oracles::kParkingCounts[static_cast<size_t>(n - 1)]);
    CHECK(static_cast<long long>(images.size()) == pairs);
    for (const auto& img : images) CHECK(validate_parking_function(img));
  }
}

TEST_CASE("bs_decode examples and round-trip") {
  AdmissiblePair a = bs_decode(ParkingFunction({0, 0}));
  CHECK(a.k() == std::vector<int>{0, 0});
  CHECK(a.l() == std::vector<int>{0, 0});
  AdmissiblePair b = bs_decode(ParkingFunction({1, 0}));
  CHECK(b.k() == std::vector<int>{0, 1});
  CHECK(b.l() == std::vector<int>{0, 0});
  for (int n = 1; n <= 6; ++n)
    oracles::for_each_tuple(n, n, [&](const std::vector<int>& t) {
      if (!validate_parking_function(t)) return;
      ParkingFunction q(t);
      CHECK(bs_encode(bs_decode(q)) == q);
    });
}

TEST_CASE("bs_decode enforces its search bound") {
  CHECK_THROWS_AS(bs_decode(ParkingFunction(std::vector<int>(9, 0))),
                  UnsupportedError);
  CHECK_THROWS_AS(bs_decode(ParkingFunction({0, 0, 0, 0}), 3),
                  UnsupportedError);
  CHECK_NOTHROW(bs_decode(ParkingFunction({0, 0, 0, 0}), 4));
}

TEST_CASE("classify_shape examples") {
  ShapeDescriptor id = classify_shape(Permutation::identity(4));
  CHECK(id.variant == ShapeVariant::Identity);
  CHECK(id.maj_value == 0);
  CHECK(id.params.empty());

  ShapeDescriptor one = classify_shape(Permutation({0, 2, 3, 1}));
  CHECK(one.variant == ShapeVariant::OneCycleTail);
  CHECK(one.maj_value == 1);
  CHECK(one.params == std::vector<int>{1});

  ShapeDescriptor two = classify_shape(Permutation({2, 0, 1}));
  CHECK(two.variant == ShapeVariant::TwoTailIncreasing);
  CHECK(two.maj_value == 2);
  CHECK(two.params == std::vector<int>{0, 1});
}

TEST_CASE("classification is total for maj <= 4 and faithful") {
  for (int n = 1; n <= 6; ++n)
    for_each_permutation(n, [&](const Permutation& sigma) {
      int m = maj(sigma);
      ShapeDescriptor d = classify_shape(sigma);
      CHECK(d.maj_value == m);
      if (m <= 4) {
        CHECK(d.variant != ShapeVariant::Unsupported);
        CHECK(shape_to_permutation(d, n) == sigma);
      } else {
        CHECK(d.variant == ShapeVariant::Unsupported);
      }
    });
}

TEST_CASE("enumerate_shapes covers each maj stratum exactly once") {
  for (int n = 1; n <= 6; ++n) {
    std::map<int, long long> maj_counts;
    for_each_permutation(n, [&](const Permutation& sigma) {
      int m = maj(sigma);
      if (m <= 4) ++maj_counts[m];
    });
    std::map<int, long long> shape_counts;
    std::set<std::vector<int>> seen;
    for (const ShapeDescriptor& d : enumerate_shapes(n)) {
      ++shape_counts[d.maj_value];
      Permutation sigma = shape_to_permutation(d, n);
      CHECK(seen.insert(sigma.values()).second);
      CHECK(classify_shape(sigma) == d);
    }
    CHECK(shape_counts == maj_counts);
  }
}

TEST_CASE("shape_to_l tables") {
  ShapeDescriptor id{0, ShapeVariant::Identity, {}};
  CHECK(shape_to_l(id, 4) == std::vector<int>{0, 0, 0, 0});

  ShapeDescriptor one{1, ShapeVariant::OneCycleTail, {1}};
  CHECK(shape_to_l(one, 4) == std::vector<int>{0, 0, 0, 2});

  ShapeDescriptor two_inv{3, ShapeVariant::ThreeTail2Inv, {2, 1}};
  CHECK(shape_to_l(two_inv, 4) == std::vector<int>{0, 0, 2, 1});

  ShapeDescriptor no_corr{4, ShapeVariant::FourTailS3S1S2, {2, 3, 0}};
  CHECK_THROWS_AS(shape_to_l(no_corr, 5), NoCorrespondenceError);

  ShapeDescriptor unsupported{5, ShapeVariant::Unsupported, {}};
  CHECK_THROWS_AS(shape_to_l(unsupported, 5), UnsupportedError);
}

TEST_CASE("shape_from_l examples") {
  ShapeDescriptor id = shape_from_l({0, 0, 0});
  CHECK(id.variant == ShapeVariant::Identity);

  ShapeDescriptor one = shape_from_l({0, 0, 0, 2});
  CHECK(one.variant == ShapeVariant::OneCycleTail);
  CHECK(one.params == std::vector<int>{1});

  ShapeDescriptor two_inv = shape_from_l({0, 0, 2, 1});
  CHECK(two_inv.variant == ShapeVariant::ThreeTail2Inv);
  CHECK(two_inv.params == std::vector<int>{2, 1});

  // No size-3 shape produces l = (0,2,1): the tail head is out of range.
  CHECK_THROWS_AS(shape_from_l({0, 2, 1}), UnsupportedError);
  CHECK_THROWS_AS(shape_from_l({1, 0, 0}), UnsupportedError);
}

TEST_CASE("shape_from_l inverts shape_to_l on the stated families") {
  for (int n = 1; n <= 7; ++n)
    for (const ShapeDescriptor& d : enumerate_shapes(n)) {
      if (d.maj_value > 3) continue;
      std::vector<int> l = shape_to_l(d, n);
      CHECK(shape_from_l(l) == d);
    }
}

TEST_CASE("distinct maj <= 3 shapes have distinct l") {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::vector<int>> ls;
    for (const ShapeDescriptor& d : enumerate_shapes(n)) {
      if (d.maj_value > 3) continue;
      CHECK(ls.insert(shape_to_l(d, n)).second);
    }
  }
}

TEST_CASE("u-vector closed forms hold on every shape family") {
  for (int n = 1; n <= 8; ++n)
    for (const ShapeDescriptor& d : enumerate_shapes(n)) {
      Permutation sigma = shape_to_permutation(d, n);
      CHECK(u_vector(sigma) == oracles::expected_u_for_shape(d, n));
    }
}

TEST_CASE("maj <= 3 box admissibility and image equality") {
  for (int n = 1; n <= 5; ++n)
    for_each_permutation(n, [&](const Permutation& sigma) {
      if (maj(sigma) > 3) return;
      ShapeDescriptor d = classify_shape(sigma);
      std::vector<int> l = shape_to_l(d, n);
      std::vector<int> u = u_vector(sigma);
      std::vector<int> k = u;
      for (;;) {
        CHECK(is_admissible(k, l));
        int i = n - 1;
        while (i >= 0 && k[static_cast<size_t>(i)] == i) {
          k[static_cast<size_t>(i)] = u[static_cast<size_t>(i)];
          --i;
        }
        if (i < 0) break;
        ++k[static_cast<size_t>(i)];
      }
    });
}

TEST_CASE("shape_to_permutation validates its input") {
  CHECK_THROWS_AS(
      shape_to_permutation({5, ShapeVariant::Unsupported, {}}, 6),
      UnsupportedError);
  // One-cycle parameter must satisfy s <= n-2.
  CHECK_THROWS_AS(
      shape_to_permutation({1, ShapeVariant::OneCycleTail, {3}}, 4),
      InvalidInputError);
  CHECK_THROWS_AS(
      shape_to_permutation({2, ShapeVariant::TwoTailIncreasing, {1, 1}}, 5),
      InvalidInputError);
}
