#include "parkfn/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <utility>

#include "parkfn/bs_codec.hpp"
#include "parkfn/checkpoint.hpp"
#include "parkfn/hl_codec.hpp"
#include "parkfn/serialize.hpp"
#include "parkfn/stats.hpp"

namespace parkfn {

namespace {

void require_positive_n(int n) {
  if (n < 1) throw InvalidInputError("n must be >= 1");
}

}  // namespace

void enumerate_hl_pairs(int n, const std::function<void(const HLPair&)>& yield) {
  require_positive_n(n);
  std::vector<int> values(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) values[static_cast<size_t>(i)] = i;
  do {
    Permutation sigma(values);
    std::vector<int> u = u_vector(sigma);
    std::vector<int> k = u;
    for (;;) {
      yield(HLPair(sigma, k));
      int i = n - 1;
      while (i >= 0) {
        if (k[static_cast<size_t>(i)] < i) {
          ++k[static_cast<size_t>(i)];
          break;
        }
        k[static_cast<size_t>(i)] = u[static_cast<size_t>(i)];
        --i;
      }
      if (i < 0) break;
    }
  } while (std::next_permutation(values.begin(), values.end()));
}

namespace {

// A prefix extends to a parking function iff filling the rest with zeros
// yields one: for every j, (#entries <= j) + (slots left) >= j + 1.
struct ParkingGen {
  int n;
  std::vector<int> prefix;
  std::vector<int> count;  // count[v] = occurrences of v in prefix
  const std::function<void(const ParkingFunction&)>& yield;

  ParkingGen(int n_in, const std::function<void(const ParkingFunction&)>& y)
      : n(n_in), count(static_cast<size_t>(n_in), 0), yield(y) {}

  bool feasible() const {
    int m = static_cast<int>(prefix.size());
    int le = 0;
    for (int j = 0; j < n; ++j) {
      le += count[static_cast<size_t>(j)];
      if (le + (n - m) < j + 1) return false;
    }
    return true;
  }

  void run(int m) {
    if (m == n) {
      yield(ParkingFunction(prefix));
      return;
    }
    for (int v = 0; v < n; ++v) {
      prefix.push_back(v);
      ++count[static_cast<size_t>(v)];
      if (feasible()) run(m + 1);
      --count[static_cast<size_t>(v)];
      prefix.pop_back();
    }
  }
};

}  // namespace

void enumerate_parking_functions(
    int n, const std::function<void(const ParkingFunction&)>& yield) {
  require_positive_n(n);
  ParkingGen gen(n, yield);
  gen.run(0);
}

void enumerate_admissible_pairs(
    int n, const std::function<void(const AdmissiblePair&)>& yield) {
  require_positive_n(n);
  std::vector<int> k(static_cast<size_t>(n), 0);
  for (;;) {
    std::vector<int> l(static_cast<size_t>(n), 0);
    for (;;) {
      if (detail::admissible_check(k, l)) yield(AdmissiblePair(k, l));
      int i = n - 1;
      while (i >= 0) {
        if (l[static_cast<size_t>(i)] < k[static_cast<size_t>(i)]) {
          ++l[static_cast<size_t>(i)];
          break;
        }
        l[static_cast<size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
    }
    int i = n - 1;
    while (i >= 0) {
      if (k[static_cast<size_t>(i)] < i) {
        ++k[static_cast<size_t>(i)];
        break;
      }
      k[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }
}

uint64_t factorial(int n) {
  if (n < 0 || n > 20)
    throw UnsupportedError("factorial supported for 0 <= n <= 20");
  uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
  return f;
}

Permutation permutation_at_rank(int n, uint64_t rank) {
  require_positive_n(n);
  if (rank >= factorial(n))
    throw InvalidInputError("rank out of range for n = " + std::to_string(n));
  std::vector<int> pool(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<size_t>(i)] = i;
  std::vector<int> values;
  values.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    uint64_t f = factorial(n - 1 - i);
    uint64_t d = rank / f;
    rank %= f;
    values.push_back(pool[static_cast<size_t>(d)]);
    pool.erase(pool.begin() + static_cast<long>(d));
  }
  return Permutation(std::move(values));
}

uint64_t block_count(int n) {
  uint64_t blocks = factorial(n) / 64;
  if (blocks < 1) blocks = 1;
  if (blocks > 4096) blocks = 4096;
  return blocks;
}

namespace {

// Sum over the k-box of q^maj t^(N - sum k) for one permutation: the t-side
// factorizes into ones-polynomials of window i - u_i + 1. Coefficients are
// bounded by the box volume <= n!, which fits 64 bits for n <= 20.
void add_sigma_contribution(const Permutation& sigma, BivariatePolynomial& out) {
  std::vector<int> u = u_vector(sigma);
  int m = maj(sigma);
  std::vector<long long> conv{1};
  for (int i = 0; i < sigma.size(); ++i) {
    int w = i - u[static_cast<size_t>(i)] + 1;
    std::vector<long long> next(conv.size() + static_cast<size_t>(w) - 1, 0);
    for (size_t x = 0; x < conv.size(); ++x)
      for (int y = 0; y < w; ++y) next[x + static_cast<size_t>(y)] += conv[x];
    conv = std::move(next);
  }
  for (size_t b = 0; b < conv.size(); ++b)
    out.add(m, static_cast<int>(b), conv[b]);
}

BivariatePolynomial compute_block(int n, uint64_t start_rank,
                                  uint64_t end_rank) {
  BivariatePolynomial out;
  std::vector<int> values = permutation_at_rank(n, start_rank).values();
  for (uint64_t r = start_rank; r < end_rank; ++r) {
    add_sigma_contribution(Permutation(values), out);
    std::next_permutation(values.begin(), values.end());
  }
  return out;
}

}  // namespace

BivariatePolynomial compute_r_polynomial(int n, int partitions,
                                         const std::string& checkpoint_dir) {
  require_positive_n(n);
  if (partitions < 1) throw InvalidInputError("partitions must be >= 1");
  if (n > 20) throw UnsupportedError("n > 20 exceeds the rank arithmetic range");

  uint64_t total = factorial(n);
  uint64_t nblocks = block_count(n);
  uint64_t base = total / nblocks;
  uint64_t rem = total % nblocks;
  auto block_bounds = [&](uint64_t b) {
    uint64_t start = b * base + std::min(b, rem);
    uint64_t end = start + base + (b < rem ? 1 : 0);
    return std::pair<uint64_t, uint64_t>{start, end};
  };

  std::vector<BivariatePolynomial> results(nblocks);
  std::vector<char> done(nblocks, 0);

  const bool checkpointing = !checkpoint_dir.empty();
  CheckpointManifest manifest;
  manifest.n = n;
  if (checkpointing) {
    if (auto loaded = load_manifest(checkpoint_dir, n)) {
      std::map<std::pair<uint64_t, uint64_t>, CompletedBlock> by_range;
      for (const auto& b : loaded->completed_blocks)
        by_range[{b.start_rank, b.end_rank}] = b;
      for (uint64_t b = 0; b < nblocks; ++b) {
        auto [start, end] = block_bounds(b);
        auto it = by_range.find({start, end});
        if (it == by_range.end()) continue;
        if (auto poly = load_block(checkpoint_dir, it->second)) {
          results[b] = std::move(*poly);
          done[b] = 1;
          manifest.completed_blocks.push_back(it->second);
        }
      }
    }
  }

  std::atomic<uint64_t> next{0};
  std::mutex manifest_mu;
  auto worker = [&]() {
    for (;;) {
      uint64_t b = next.fetch_add(1);
      if (b >= nblocks) break;
      if (done[b]) continue;
      auto [start, end] = block_bounds(b);
      BivariatePolynomial poly = compute_block(n, start, end);
      if (checkpointing) {
        save_block(checkpoint_dir, start, end, poly);
        CompletedBlock cb{start, end, polynomial_digest(poly)};
        std::lock_guard<std::mutex> lock(manifest_mu);
        auto pos = std::lower_bound(
            manifest.completed_blocks.begin(), manifest.completed_blocks.end(),
            cb.start_rank, [](const CompletedBlock& x, uint64_t s) {
              return x.start_rank < s;
            });
        manifest.completed_blocks.insert(pos, cb);
        save_manifest(checkpoint_dir, manifest);
      }
      results[b] = std::move(poly);
    }
  };

  int workers = static_cast<int>(
      std::min<uint64_t>(static_cast<uint64_t>(partitions), nblocks));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  BivariatePolynomial out;
  for (uint64_t b = 0; b < nblocks; ++b) out.merge(results[b]);
  return out;
}

BivariatePolynomial compute_r_polynomial(const EnumerationJob& job) {
  if (job.target != EnumerationJob::Target::RPolynomial)
    throw InvalidInputError("job target is not r_polynomial");
  return compute_r_polynomial(job.n, job.partitions, job.checkpoint_path);
}

namespace {

std::string pair_text(const HLPair& p) {
  return canonical_dump(to_json(p));
}

std::string pair_text(const AdmissiblePair& p) {
  return canonical_dump(to_json(p));
}

}  // namespace

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["passed"] = passed;
  j["counts"]["hl_pairs"] = hl_count;
  j["counts"]["parking_functions"] = parking_count;
  j["counts"]["admissible_pairs"] = admissible_count;
  j["counts"]["r_at_one_one"] = r_at_one_one;
  j["round_trip_failures"] = round_trip_failures;
  j["correspondence_failures"] = correspondence_failures;
  j["histograms_match"] = histograms_match;
  j["r_symmetric"] = r_symmetric;
  j["first_counterexample"] = first_counterexample;
  return j;
}

VerificationReport verify_bijections(int n) {
  require_positive_n(n);
  if (n > 7)
    throw UnsupportedError("verification bound is 7, got n = " +
                           std::to_string(n));
  VerificationReport rep;
  auto note_failure = [&](long long& counter, const std::string& what) {
    ++counter;
    if (rep.first_counterexample.empty()) rep.first_counterexample = what;
  };

  std::vector<std::vector<int>> parking;
  enumerate_parking_functions(n, [&](const ParkingFunction& p) {
    parking.push_back(p.values());
  });
  rep.parking_count = static_cast<long long>(parking.size());

  // HL side: encode validity, injectivity, image, both round-trips.
  std::vector<std::vector<int>> hl_images;
  enumerate_hl_pairs(n, [&](const HLPair& pair) {
    ++rep.hl_count;
    ParkingFunction q = hl_encode(pair);
    hl_images.push_back(q.values());
    if (!(hl_decode(q) == pair))
      note_failure(rep.round_trip_failures,
                   "hl_decode(hl_encode(x)) != x for x = " + pair_text(pair));
  });
  std::sort(hl_images.begin(), hl_images.end());
  if (std::adjacent_find(hl_images.begin(), hl_images.end()) !=
      hl_images.end())
    note_failure(rep.round_trip_failures, "hl_encode is not injective");
  if (hl_images != parking)
    note_failure(rep.round_trip_failures,
                 "hl_encode image differs from the parking-function set");
  for (const auto& p : parking) {
    ParkingFunction q(p);
    if (!(hl_encode(hl_decode(q)) == q))
      note_failure(rep.round_trip_failures,
                   "hl_encode(hl_decode(q)) != q for q = " + render_sequence(p));
  }

  // Admissible side.
  std::vector<std::vector<int>> bs_images;
  enumerate_admissible_pairs(n, [&](const AdmissiblePair& pair) {
    ++rep.admissible_count;
    ParkingFunction q = bs_encode(pair);
    bs_images.push_back(q.values());
    if (!(bs_decode(q) == pair))
      note_failure(rep.round_trip_failures,
                   "bs_decode(bs_encode(x)) != x for x = " + pair_text(pair));
  });
  std::sort(bs_images.begin(), bs_images.end());
  if (std::adjacent_find(bs_images.begin(), bs_images.end()) !=
      bs_images.end())
    note_failure(rep.round_trip_failures, "bs_encode is not injective");
  if (bs_images != parking)
    note_failure(rep.round_trip_failures,
                 "bs_encode image differs from the parking-function set");

  BivariatePolynomial r = compute_r_polynomial(n, 1);
  rep.r_at_one_one = r.evaluate(1, 1);
  if (rep.r_at_one_one != rep.parking_count)
    note_failure(rep.round_trip_failures, "R_n(1,1) != parking-function count");
  rep.r_symmetric = true;
  for (const auto& [exps, c] : r.coefficients())
    if (r.coeff(exps.second, exps.first) != c) rep.r_symmetric = false;

  // maj <= 3 correspondence layer: the shape l is admissible against the
  // whole k-box, sigma -> l is injective, shape_from_l inverts shape_to_l,
  // and the (maj, sum k) histograms of the two encodings agree.
  std::map<std::pair<int, int>, long long> hist_hl, hist_adm;
  std::map<std::vector<int>, std::vector<int>> l_owner;
  std::vector<int> values(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) values[static_cast<size_t>(i)] = i;
  do {
    Permutation sigma(values);
    int m = maj(sigma);
    if (m > 3) continue;
    ShapeDescriptor shape = classify_shape(sigma);
    if (shape.variant == ShapeVariant::Unsupported) {
      note_failure(rep.correspondence_failures,
                   "maj <= 3 permutation not classified: " +
                       render_sequence(values));
      continue;
    }
    std::vector<int> l = shape_to_l(shape, n);
    auto [it, inserted] = l_owner.emplace(l, values);
    if (!inserted)
      note_failure(rep.correspondence_failures,
                   "sigma -> l collision at l = " + render_sequence(l));
    if (!(shape_from_l(l) == shape))
      note_failure(rep.correspondence_failures,
                   "shape_from_l does not invert shape_to_l at l = " +
                       render_sequence(l));
    std::vector<int> u = u_vector(sigma);
    std::vector<int> k = u;
    for (;;) {
      if (!is_admissible(k, l))
        note_failure(rep.correspondence_failures,
                     "(k, l) inadmissible for sigma = " +
                         render_sequence(values) + ", k = " +
                         render_sequence(k));
      long long sum = 0;
      for (int x : k) sum += x;
      ++hist_hl[{m, static_cast<int>(sum)}];
      int i = n - 1;
      while (i >= 0) {
        if (k[static_cast<size_t>(i)] < i) {
          ++k[static_cast<size_t>(i)];
          break;
        }
        k[static_cast<size_t>(i)] = u[static_cast<size_t>(i)];
        --i;
      }
      if (i < 0) break;
    }
  } while (std::next_permutation(values.begin(), values.end()));

  enumerate_admissible_pairs(n, [&](const AdmissiblePair& pair) {
    ShapeDescriptor shape;
    try {
      shape = shape_from_l(pair.l());
    } catch (const UnsupportedError&) {
      return;
    }
    if (shape.maj_value > 3) return;
    long long sum = 0;
    for (int x : pair.k()) sum += x;
    ++hist_adm[{shape.maj_value, static_cast<int>(sum)}];
  });
  rep.histograms_match = hist_hl == hist_adm;
  if (!rep.histograms_match && rep.first_counterexample.empty())
    rep.first_counterexample = "(maj, sum k) histograms differ";

  bool counts_ok = rep.hl_count == rep.parking_count &&
                   rep.admissible_count == rep.parking_count &&
                   rep.r_at_one_one == rep.parking_count;
  rep.passed = counts_ok && rep.round_trip_failures == 0 &&
               rep.correspondence_failures == 0 && rep.histograms_match;

  rep.lines.push_back("counts: hl=" + std::to_string(rep.hl_count) +
                      " parking=" + std::to_string(rep.parking_count) +
                      " admissible=" + std::to_string(rep.admissible_count) +
                      " r(1,1)=" + std::to_string(rep.r_at_one_one));
  rep.lines.push_back("round-trips: " +
                      std::to_string(rep.round_trip_failures) + " failures");
  rep.lines.push_back("correspondence(maj<=3): " +
                      std::to_string(rep.correspondence_failures) +
                      " failures");
  rep.lines.push_back(std::string("histograms(maj<=3): ") +
                      (rep.histograms_match ? "match" : "differ"));
  rep.lines.push_back(std::string("observation: R_n(q,t) is ") +
                      (rep.r_symmetric ? "" : "not ") +
                      "symmetric under q<->t");
  rep.lines.push_back(std::string("result: ") +
                      (rep.passed ? "PASS" : "FAIL") +
                      (rep.passed || rep.first_counterexample.empty()
                           ? ""
                           : " (" + rep.first_counterexample + ")"));
  return rep;
}

nlohmann::ordered_json pf_statistics(const ParkingFunction& q) {
  HLPair pair = hl_decode(q);
  int n = pair.sigma().size();
  long long sum = 0;
  for (int x : pair.k()) sum += x;
  nlohmann::ordered_json j;
  j["maj"] = maj(pair.sigma());
  j["t_exponent"] = static_cast<long long>(n) * (n - 1) / 2 - sum;
  return j;
}

}  // namespace parkfn
