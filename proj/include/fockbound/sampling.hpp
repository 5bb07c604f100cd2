#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "fockbound/words.hpp"

namespace fockbound {

// SplitMix64. Chosen over std::mt19937 + distributions because the stream
// must be byte-identical across platforms and standard library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Unbiased uniform draw from [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (next() & 1) != 0; }

 private:
  std::uint64_t state_;
};

// Stable claim-scoped seed derivation (FNV-1a folded into the master seed).
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag);

// Samples semigroup points stratified by (|z|_0, |z|_1): degree and the
// per-letter minima are drawn first, then letters realizing those minima.
// Letter candidates are bucketed per group element from the appropriate
// balls, cached across draws.
class PointSampler {
 public:
  PointSampler(const Action& action, std::int64_t max_degree,
               std::int64_t max_letter_cost, std::int64_t gamma_radius);

  // A point with a nonempty word; anti variants get pairwise distinct
  // letters. Returns nothing when the strata cannot be realized (tiny
  // actions); callers just redraw.
  std::optional<SemigroupPoint> sample(Variant variant, Rng& rng);

  GroupElement sample_group(Rng& rng, std::int64_t radius);
  BasePoint sample_letter_with_cost(const GroupElement& g, std::int64_t cost,
                                    Rng& rng, bool* ok);

  const std::vector<BasePoint>& letters_with_cost(const GroupElement& g,
                                                  std::int64_t cost);

 private:
  struct DataLess {
    bool operator()(const GroupElement& a, const GroupElement& b) const {
      return a.data < b.data;
    }
  };
  const std::vector<std::vector<BasePoint>>& buckets_for(const GroupElement& g);

  const Action* action_;
  std::int64_t max_degree_;
  std::int64_t max_letter_cost_;
  std::vector<GroupElement> gamma_ball_;
  std::map<GroupElement, std::vector<std::vector<BasePoint>>, DataLess> bucket_cache_;
};

// Deterministic parallel sweep: fn(i) for i in [0, n), results merged in
// index order. Each fn call must derive all randomness from its index.
template <typename T>
std::vector<T> parallel_sweep(std::size_t n, const std::function<T(std::size_t)>& fn);

}  // namespace fockbound
