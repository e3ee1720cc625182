#include "parkfn/bs_codec.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "parkfn/enumeration.hpp"
#include "parkfn/stats.hpp"

namespace parkfn {

bool is_admissible(const std::vector<int>& k, const std::vector<int>& l) {
  if (k.size() != l.size())
    throw InvalidInputError("k length " + std::to_string(k.size()) +
                            " does not match l length " +
                            std::to_string(l.size()));
  return detail::admissible_check(k, l);
}

Permutation sigma_from_kl(const std::vector<int>& k, const std::vector<int>& l) {
  if (k.size() != l.size())
    throw InvalidInputError("k length " + std::to_string(k.size()) +
                            " does not match l length " +
                            std::to_string(l.size()));
  int n = static_cast<int>(k.size());
  if (n == 0) throw InvalidInputError("sequences must be nonempty");
  // order[r] is the position holding value-rank r. Position i has c_i
  // earlier larger entries, so it sits c_i slots below the top.
  std::vector<int> order;
  order.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    int c = k[static_cast<size_t>(i)] - l[static_cast<size_t>(i)];
    if (c < 0 || c > i)
      throw InvalidInputError("k_i - l_i must lie in [0, i] at position " +
                              std::to_string(i));
    order.insert(order.begin() + (i - c), i);
  }
  std::vector<int> sigma(static_cast<size_t>(n), 0);
  for (int r = 0; r < n; ++r) sigma[static_cast<size_t>(order[static_cast<size_t>(r)])] = r;
  return Permutation(std::move(sigma));
}

ParkingFunction bs_encode(const AdmissiblePair& pair) {
  Permutation sigma = sigma_from_kl(pair.k(), pair.l());
  int n = pair.size();
  std::vector<int> q(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    q[static_cast<size_t>(sigma(i))] = pair.k()[static_cast<size_t>(i)];
  return ParkingFunction(std::move(q));
}

namespace {

// Forward index for bs_decode: packed parking function -> packed (k, l).
// Entries use 4 bits per value, which covers the n <= 8 envelope.
struct BsIndex {
  std::vector<std::pair<uint64_t, uint64_t>> entries;  // sorted by key
};

uint64_t pack4(const std::vector<int>& v) {
  uint64_t out = 0;
  for (size_t i = 0; i < v.size(); ++i)
    out |= static_cast<uint64_t>(v[i]) << (4 * i);
  return out;
}

std::vector<int> unpack4(uint64_t bits, int n) {
  std::vector<int> out(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    out[static_cast<size_t>(i)] = static_cast<int>((bits >> (4 * i)) & 0xf);
  return out;
}

std::shared_ptr<const BsIndex> bs_index_for(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const BsIndex>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto index = std::make_shared<BsIndex>();
  enumerate_admissible_pairs(n, [&](const AdmissiblePair& pair) {
    uint64_t key = pack4(bs_encode(pair).values());
    uint64_t val = pack4(pair.k()) | (pack4(pair.l()) << 32);
    index->entries.emplace_back(key, val);
  });
  std::sort(index->entries.begin(), index->entries.end());
  cache.emplace(n, index);
  return index;
}

}  // namespace

AdmissiblePair bs_decode(const ParkingFunction& q, int search_bound) {
  int n = q.size();
  int limit = std::min(search_bound, kBsDecodeDefaultBound);
  if (n > limit)
    throw UnsupportedError("decode search bound is " + std::to_string(limit) +
                           ", got n = " + std::to_string(n));
  auto index = bs_index_for(n);
  uint64_t key = pack4(q.values());
  auto it = std::lower_bound(
      index->entries.begin(), index->entries.end(), key,
      [](const std::pair<uint64_t, uint64_t>& e, uint64_t k) { return e.first < k; });
  if (it == index->entries.end() || it->first != key)
    throw InternalError("no admissible preimage found for a parking function");
  return AdmissiblePair(unpack4(it->second & 0xffffffffu, n),
                        unpack4(it->second >> 32, n));
}

namespace {

ShapeDescriptor make_shape(int m, ShapeVariant v, std::vector<int> params) {
  ShapeDescriptor d;
  d.maj_value = m;
  d.variant = v;
  d.params = std::move(params);
  return d;
}

// Ordering constraints per variant; params are the tail values in positional
// order. Returns false instead of throwing so classify can fall through.
bool params_ok(ShapeVariant v, const std::vector<int>& p, int n) {
  auto in_range = [n](int x) { return x >= 0 && x <= n - 1; };
  for (int x : p)
    if (!in_range(x)) return false;
  switch (v) {
    case ShapeVariant::Identity:
      return p.empty();
    case ShapeVariant::OneCycleTail:
      return p.size() == 1 && p[0] <= n - 2;
    case ShapeVariant::TwoTailIncreasing:
      return p.size() == 2 && p[0] < p[1] && p[0] <= n - 3;
    case ShapeVariant::ThreeTailIncreasing:
      return p.size() == 3 && p[0] < p[1] && p[1] < p[2] && p[0] <= n - 4;
    case ShapeVariant::ThreeTail2Inv:
      return p.size() == 2 && p[1] < p[0] && p[0] <= n - 2;
    case ShapeVariant::FourTailIncreasing:
      return p.size() == 4 && p[0] < p[1] && p[1] < p[2] && p[2] < p[3] &&
             p[0] <= n - 5;
    case ShapeVariant::FourTailS1S3S2:
      return p.size() == 3 && p[0] < p[2] && p[2] < p[1] && p[0] <= n - 4;
    case ShapeVariant::FourTailS3S1S2:
      return p.size() == 3 && p[2] < p[0] && p[0] < p[1] && p[0] <= n - 3;
    case ShapeVariant::Unsupported:
      return false;
  }
  return false;
}

int variant_maj(ShapeVariant v) {
  switch (v) {
    case ShapeVariant::Identity: return 0;
    case ShapeVariant::OneCycleTail: return 1;
    case ShapeVariant::TwoTailIncreasing: return 2;
    case ShapeVariant::ThreeTailIncreasing:
    case ShapeVariant::ThreeTail2Inv: return 3;
    case ShapeVariant::FourTailIncreasing:
    case ShapeVariant::FourTailS1S3S2:
    case ShapeVariant::FourTailS3S1S2: return 4;
    case ShapeVariant::Unsupported: break;
  }
  throw UnsupportedError("variant has no defined major index");
}

}  // namespace

Permutation shape_to_permutation(const ShapeDescriptor& shape, int n) {
  if (n < 1) throw InvalidInputError("size must be >= 1");
  if (shape.variant == ShapeVariant::Unsupported)
    throw UnsupportedError("cannot build a permutation for variant unsupported");
  if (!params_ok(shape.variant, shape.params, n))
    throw InvalidInputError("shape params violate the " +
                            variant_name(shape.variant) +
                            " constraints at n = " + std::to_string(n));
  std::vector<char> in_tail(static_cast<size_t>(n), 0);
  for (int x : shape.params) in_tail[static_cast<size_t>(x)] = 1;
  std::vector<int> values;
  values.reserve(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x)
    if (!in_tail[static_cast<size_t>(x)]) values.push_back(x);
  values.insert(values.end(), shape.params.begin(), shape.params.end());
  return Permutation(std::move(values));
}

ShapeDescriptor classify_shape(const Permutation& sigma) {
  int n = sigma.size();
  int m = maj(sigma);
  if (m == 0) return make_shape(0, ShapeVariant::Identity, {});
  if (m > 4) return make_shape(m, ShapeVariant::Unsupported, {});

  std::vector<int> d = descent_set(sigma);
  ShapeVariant variant = ShapeVariant::Unsupported;
  int tail_len = 0;
  if (m == 1 && d == std::vector<int>{n - 1}) {
    variant = ShapeVariant::OneCycleTail;
    tail_len = 1;
  } else if (m == 2 && d == std::vector<int>{n - 2}) {
    variant = ShapeVariant::TwoTailIncreasing;
    tail_len = 2;
  } else if (m == 3 && d == std::vector<int>{n - 3}) {
    variant = ShapeVariant::ThreeTailIncreasing;
    tail_len = 3;
  } else if (m == 3 && d == std::vector<int>{n - 2, n - 1}) {
    variant = ShapeVariant::ThreeTail2Inv;
    tail_len = 2;
  } else if (m == 4 && d == std::vector<int>{n - 4}) {
    variant = ShapeVariant::FourTailIncreasing;
    tail_len = 4;
  } else if (m == 4 && d == std::vector<int>{n - 3, n - 1}) {
    variant = sigma(n - 1) > sigma(n - 3) ? ShapeVariant::FourTailS1S3S2
                                          : ShapeVariant::FourTailS3S1S2;
    tail_len = 3;
  } else {
    return make_shape(m, ShapeVariant::Unsupported, {});
  }

  std::vector<int> params;
  for (int i = n - tail_len; i < n; ++i) params.push_back(sigma(i));
  ShapeDescriptor desc = make_shape(m, variant, params);
  if (!params_ok(variant, params, n) ||
      shape_to_permutation(desc, n) != sigma)
    return make_shape(m, ShapeVariant::Unsupported, {});
  return desc;
}

std::vector<ShapeDescriptor> enumerate_shapes(int n) {
  std::vector<ShapeDescriptor> out;
  auto push = [&](ShapeVariant v, std::vector<int> params) {
    if (params_ok(v, params, n))
      out.push_back(make_shape(variant_maj(v), v, std::move(params)));
  };
  push(ShapeVariant::Identity, {});
  for (int s = 0; s <= n - 2; ++s) push(ShapeVariant::OneCycleTail, {s});
  for (int s1 = 0; s1 <= n - 3; ++s1)
    for (int s2 = s1 + 1; s2 <= n - 1; ++s2)
      push(ShapeVariant::TwoTailIncreasing, {s1, s2});
  for (int s1 = 0; s1 <= n - 4; ++s1)
    for (int s2 = s1 + 1; s2 <= n - 1; ++s2)
      for (int s3 = s2 + 1; s3 <= n - 1; ++s3)
        push(ShapeVariant::ThreeTailIncreasing, {s1, s2, s3});
  for (int s1 = 1; s1 <= n - 2; ++s1)
    for (int s2 = 0; s2 < s1; ++s2) push(ShapeVariant::ThreeTail2Inv, {s1, s2});
  for (int s1 = 0; s1 <= n - 5; ++s1)
    for (int s2 = s1 + 1; s2 <= n - 1; ++s2)
      for (int s3 = s2 + 1; s3 <= n - 1; ++s3)
        for (int s4 = s3 + 1; s4 <= n - 1; ++s4)
          push(ShapeVariant::FourTailIncreasing, {s1, s2, s3, s4});
  // Tails (s1, s2, s3): middle value is the maximum; the variant records
  // whether the last value sits above or below the first.
  for (int s1 = 0; s1 <= n - 4; ++s1)
    for (int s3 = s1 + 1; s3 <= n - 1; ++s3)
      for (int s2 = s3 + 1; s2 <= n - 1; ++s2)
        push(ShapeVariant::FourTailS1S3S2, {s1, s2, s3});
  for (int s3 = 0; s3 <= n - 1; ++s3)
    for (int s1 = s3 + 1; s1 <= n - 3; ++s1)
      for (int s2 = s1 + 1; s2 <= n - 1; ++s2)
        push(ShapeVariant::FourTailS3S1S2, {s1, s2, s3});
  return out;
}

std::vector<int> shape_to_l(const ShapeDescriptor& shape, int n) {
  if (shape.variant == ShapeVariant::Unsupported)
    throw UnsupportedError("no l-sequence for variant unsupported");
  if (!params_ok(shape.variant, shape.params, n))
    throw InvalidInputError("shape params violate the " +
                            variant_name(shape.variant) +
                            " constraints at n = " + std::to_string(n));
  if (shape.variant == ShapeVariant::FourTailS3S1S2)
    throw NoCorrespondenceError(
        "four-tail-s3s1s2 admits no sigma -> l correspondence");
  std::vector<int> l(static_cast<size_t>(n), 0);
  const std::vector<int>& p = shape.params;
  switch (shape.variant) {
    case ShapeVariant::Identity:
      break;
    case ShapeVariant::OneCycleTail:
      l[static_cast<size_t>(n - 1)] = p[0] + 1;
      break;
    case ShapeVariant::TwoTailIncreasing:
      l[static_cast<size_t>(n - 2)] = p[0] + 1;
      l[static_cast<size_t>(n - 1)] = p[1];
      break;
    case ShapeVariant::ThreeTailIncreasing:
      l[static_cast<size_t>(n - 3)] = p[0] + 1;
      l[static_cast<size_t>(n - 2)] = p[1];
      l[static_cast<size_t>(n - 1)] = p[2] - 1;
      break;
    case ShapeVariant::ThreeTail2Inv:
      l[static_cast<size_t>(n - 2)] = p[0];
      l[static_cast<size_t>(n - 1)] = p[1];
      break;
    case ShapeVariant::FourTailIncreasing:
      l[static_cast<size_t>(n - 4)] = p[0] + 1;
      l[static_cast<size_t>(n - 3)] = p[1];
      l[static_cast<size_t>(n - 2)] = p[2] - 1;
      l[static_cast<size_t>(n - 1)] = p[3] - 2;
      break;
    case ShapeVariant::FourTailS1S3S2:
      l[static_cast<size_t>(n - 3)] = p[0] + 1;
      l[static_cast<size_t>(n - 2)] = p[1];
      l[static_cast<size_t>(n - 1)] = p[2];
      break;
    default:
      throw InternalError("unhandled shape variant");
  }
  return l;
}

ShapeDescriptor shape_from_l(const std::vector<int>& l) {
  int n = static_cast<int>(l.size());
  if (n == 0) throw InvalidInputError("l must be nonempty");
  auto outside = [&]() {
    return UnsupportedError("l lies outside every stated family");
  };
  int fz = n;  // first nonzero index
  for (int i = 0; i < n; ++i) {
    if (l[static_cast<size_t>(i)] < 0) throw outside();
    if (l[static_cast<size_t>(i)] != 0) {
      fz = i;
      break;
    }
  }
  if (fz == n) return make_shape(0, ShapeVariant::Identity, {});
  int last = l[static_cast<size_t>(n - 1)];
  if (fz == n - 1) {
    if (last >= 1 && last <= n - 1)
      return make_shape(1, ShapeVariant::OneCycleTail, {last - 1});
    throw outside();
  }
  int prev = l[static_cast<size_t>(n - 2)];
  if (fz == n - 2) {
    if (prev <= last && last <= n - 1 && prev <= n - 2)
      return make_shape(2, ShapeVariant::TwoTailIncreasing, {prev - 1, last});
    if (prev > last && prev <= n - 2)
      return make_shape(3, ShapeVariant::ThreeTail2Inv, {prev, last});
    throw outside();
  }
  if (fz == n - 3) {
    int third = l[static_cast<size_t>(n - 3)];
    if (third <= prev && prev <= last && last <= n - 2 && third <= n - 3)
      return make_shape(3, ShapeVariant::ThreeTailIncreasing,
                        {third - 1, prev, last + 1});
    throw outside();
  }
  throw outside();
}

}  // namespace parkfn
