#include "fockbound/sampling.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "fockbound/report.hpp"

namespace fockbound {

std::uint64_t derive_seed(std::uint64_t master, std::string_view tag) {
  std::uint64_t h = 1469598103934665603ULL ^ master;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h ^ (master << 1);
}

PointSampler::PointSampler(const Action& action, std::int64_t max_degree,
                           std::int64_t max_letter_cost, std::int64_t gamma_radius)
    : action_(&action), max_degree_(max_degree), max_letter_cost_(max_letter_cost),
      gamma_ball_(action.group().ball(gamma_radius)) {}

const std::vector<std::vector<BasePoint>>& PointSampler::buckets_for(
    const GroupElement& g) {
  auto it = bucket_cache_.find(g);
  if (it != bucket_cache_.end()) return it->second;
  // A letter of cost m satisfies |x| = m or |pi_{g^-1} x| = m, so the union
  // of ball(max) and g . ball(max) holds every candidate.
  std::vector<std::vector<BasePoint>> buckets(
      static_cast<std::size_t>(max_letter_cost_) + 1);
  auto consider = [&](const BasePoint& x) {
    auto cost = letter_min_length(*action_, g, x);
    if (cost <= max_letter_cost_) {
      auto& bucket = buckets[static_cast<std::size_t>(cost)];
      if (std::find(bucket.begin(), bucket.end(), x) == bucket.end())
        bucket.push_back(x);
    }
  };
  for (const auto& x : action_->ball(max_letter_cost_)) consider(x);
  for (const auto& x : action_->ball(max_letter_cost_)) consider(action_->act(g, x));
  for (auto& bucket : buckets)
    std::sort(bucket.begin(), bucket.end(), PointLess{action_});
  return bucket_cache_.emplace(g, std::move(buckets)).first->second;
}

const std::vector<BasePoint>& PointSampler::letters_with_cost(
    const GroupElement& g, std::int64_t cost) {
  return buckets_for(g)[static_cast<std::size_t>(cost)];
}

GroupElement PointSampler::sample_group(Rng& rng, std::int64_t radius) {
  const auto ball = action_->group().ball(radius);
  return ball[rng.below(ball.size())];
}

BasePoint PointSampler::sample_letter_with_cost(const GroupElement& g,
                                                std::int64_t cost, Rng& rng,
                                                bool* ok) {
  const auto& bucket = buckets_for(g)[static_cast<std::size_t>(cost)];
  if (bucket.empty()) {
    *ok = false;
    return action_->representative(0);
  }
  *ok = true;
  return bucket[rng.below(bucket.size())];
}

std::optional<SemigroupPoint> PointSampler::sample(Variant variant, Rng& rng) {
  const GroupElement g = gamma_ball_[rng.below(gamma_ball_.size())];
  const std::int64_t degree = rng.range(1, max_degree_);

  TupleWord letters;
  for (std::int64_t i = 0; i < degree; ++i) {
    const std::int64_t cost = rng.range(0, max_letter_cost_);
    bool ok = false;
    auto x = sample_letter_with_cost(g, cost, rng, &ok);
    if (!ok) return std::nullopt;
    letters.push_back(std::move(x));
  }

  if (variant == Variant::Full) return make_full_point(std::move(letters), g);
  auto word = quotient(*action_, letters);
  if (variant == Variant::Anti && !word.simple()) return std::nullopt;
  return make_multi_point(variant, std::move(word), g);
}

template <typename T>
std::vector<T> parallel_sweep(std::size_t n, const std::function<T(std::size_t)>& fn) {
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), 8);
  if (n == 0) return {};
  std::vector<T> out(n);
  if (workers <= 1 || n < 64) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::future<void>> futures;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    futures.push_back(std::async(std::launch::async, [&, lo, hi]() {
      for (std::size_t i = lo; i < hi; ++i) out[i] = fn(i);
    }));
  }
  for (auto& f : futures) f.get();
  return out;
}

template std::vector<std::vector<VerificationRecord>> parallel_sweep(
    std::size_t, const std::function<std::vector<VerificationRecord>(std::size_t)>&);

}  // namespace fockbound
