#include "fockbound/measures.hpp"

#include <algorithm>
#include <stdexcept>

#include "fockbound/claims.hpp"
#include "fockbound/serialize.hpp"

namespace fockbound {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

SemigroupPoint group_point(const Action& action, Variant variant,
                           const GroupElement& g) {
  auto z = unit_point(action, variant);
  z.g = g;
  return z;
}

SemigroupPoint letter_point(const Action& action, Variant variant,
                            const BasePoint& x) {
  if (variant == Variant::Full)
    return make_full_point({x}, action.group().identity());
  return make_multi_point(variant, quotient(action, {x}),
                          action.group().identity());
}

std::string instance_text(const Action& action, const SemigroupPoint& z) {
  return to_text(action, z);
}

}  // namespace

WeightVector omega(const Action& action, const SemigroupPoint& z) {
  WeightVector w{PointLess{&action}};
  const auto letters = point_letters(z);
  if (letters.empty()) {
    w[action.representative(0)] = 1;  // vacuum convention
    return w;
  }
  const auto n = static_cast<std::int64_t>(letters.size());
  for (const auto& x : letters)
    w[x] += n + letter_min_length(action, z.g, x);
  return w;
}

std::int64_t weight_l1(const WeightVector& w) {
  std::int64_t s = 0;
  for (const auto& [p, v] : w) s += v;
  return s;
}

ProbVector mu(const Action& action, const SemigroupPoint& z) {
  const auto w = omega(action, z);
  const auto total = weight_l1(w);
  ProbVector p{PointLess{&action}};
  for (const auto& [x, v] : w) p[x] = Rational(v, total);
  return p;
}

Rational prob_l1(const ProbVector& a) {
  Rational s(0);
  for (const auto& [p, v] : a) s += v.abs();
  return s;
}

Rational prob_l1_distance(const Action& action, const ProbVector& a,
                          const ProbVector& b) {
  Rational s(0);
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() ||
        (ia != a.end() && action.compare(ia->first, ib->first) < 0)) {
      s += ia->second.abs();
      ++ia;
    } else if (ia == a.end() || action.compare(ib->first, ia->first) < 0) {
      s += ib->second.abs();
      ++ib;
    } else {
      s += (ia->second - ib->second).abs();
      ++ia;
      ++ib;
    }
  }
  return s;
}

WeightVector push_weight(const Action& action, const GroupElement& g,
                         const WeightVector& w) {
  WeightVector out{PointLess{&action}};
  for (const auto& [x, v] : w) out[action.act(g, x)] += v;
  return out;
}

ProbVector push_prob(const Action& action, const GroupElement& g,
                     const ProbVector& p) {
  ProbVector out{PointLess{&action}};
  for (const auto& [x, v] : p) out[action.act(g, x)] += v;
  return out;
}

Rational mu_star(const Action& action,
                 const std::function<Rational(const BasePoint&)>& phi,
                 const SemigroupPoint& z) {
  Rational s(0);
  for (const auto& [x, v] : mu(action, z)) s += phi(x) * v;
  return s;
}

VerificationRecord verify_omega_identity(const Action& action,
                                         const SemigroupPoint& z) {
  require(word_degree(z) > 0, "the omega identity is for nonempty words");
  const auto n = length0(action, z);
  const auto l1 = length1(action, z);
  const auto lhs = weight_l1(omega(action, z));
  auto dev = Rational(lhs) - Rational(n * n + l1);
  return make_record(claims::kOmegaL1Identity, instance_text(action, z),
                     dev.abs(), Rational(0));
}

std::vector<VerificationRecord> verify_translation_bound(const Action& action,
                                                         const GroupElement& g,
                                                         const GroupElement& h,
                                                         const SemigroupPoint& z) {
  require(word_degree(z) > 0, "translation bounds are for nonempty words");
  const auto& group = action.group();
  std::vector<VerificationRecord> out;
  const auto n = length0(action, z);
  const auto w = omega(action, z);

  const std::string base = "g=" + to_text(group, g) + " h=" + to_text(group, h) +
                           " z=" + instance_text(action, z);

  // ||g.omega(z) - omega(gz)||_1 <= |z|_0 |g|
  const auto gz = multiply(action, group_point(action, z.variant, g), z);
  {
    WeightVector diff = push_weight(action, g, w);
    for (const auto& [x, v] : omega(action, gz)) diff[x] -= v;
    std::int64_t l1 = 0;
    for (const auto& [x, v] : diff) l1 += std::abs(v);
    out.push_back(make_record(claims::kOmegaTranslationBound, "left " + base,
                              Rational(l1), Rational(n * group.length(g))));
  }
  // ||omega(z) - omega(zh)||_1 <= |z|_0 |h|
  const auto zh = multiply(action, z, group_point(action, z.variant, h));
  {
    WeightVector diff = w;
    for (const auto& [x, v] : omega(action, zh)) diff[x] -= v;
    std::int64_t l1 = 0;
    for (const auto& [x, v] : diff) l1 += std::abs(v);
    out.push_back(make_record(claims::kOmegaTranslationBound, "right " + base,
                              Rational(l1), Rational(n * group.length(h))));
  }
  // ||g.mu(z) - mu(gzh)||_1 <= 2(|g|+|h|) |z|_0 / (|z|_0^2 + |z|_1)
  {
    const auto gzh = multiply(action, gz, group_point(action, z.variant, h));
    const auto lhs =
        prob_l1_distance(action, push_prob(action, g, mu(action, z)),
                         mu(action, gzh));
    const Rational bound(2 * (group.length(g) + group.length(h)) * n,
                         n * n + length1(action, z));
    out.push_back(
        make_record(claims::kMuTranslationBound, base, lhs, bound));
  }
  return out;
}

std::vector<VerificationRecord> verify_creation_bound(const Action& action,
                                                      const BasePoint& x,
                                                      const SemigroupPoint& z,
                                                      Side side) {
  require(word_degree(z) > 0, "creation bounds are for nonempty words");
  std::vector<VerificationRecord> out;
  const auto n = length0(action, z);
  const auto base_x = action.base_length(x);
  const std::string base = std::string(side == Side::Left ? "left" : "right") +
                           " x=" + to_text(action, x) +
                           " z=" + instance_text(action, z);

  const auto xpoint = letter_point(action, z.variant, x);
  const auto xz = side == Side::Left ? multiply(action, xpoint, z)
                                     : multiply(action, z, xpoint);

  // ||omega(xz) - omega(z)||_1 <= 2|z|_0 + 1 + |x|_X
  {
    WeightVector diff = omega(action, xz);
    for (const auto& [p, v] : omega(action, z)) diff[p] -= v;
    std::int64_t l1 = 0;
    for (const auto& [p, v] : diff) l1 += std::abs(v);
    out.push_back(make_record(claims::kOmegaCreationBound, base, Rational(l1),
                              Rational(2 * n + 1 + base_x)));
  }

  // Weighted mu-level bound, in squares. The creation coefficient sees the
  // letter the word actually gains: x on the left, pi_g(x) on the right.
  // The anti variant skips the zero-coefficient branch.
  {
    const BasePoint gained =
        side == Side::Left ? x : action.act(z.g, x);
    Rational coeff_sq(1);
    bool skipped = false;
    if (z.variant == Variant::Sym) {
      coeff_sq = Rational(z.multi.multiplicity(action, gained) + 1);
    } else if (z.variant == Variant::Anti) {
      if (z.multi.multiplicity(action, gained) > 0) skipped = true;
    }
    if (skipped) {
      out.push_back(make_record(claims::kMuCreationWeighted,
                                "skipped-zero-coefficient " + base, Rational(0),
                                Rational(0)));
    } else {
      const auto dist = prob_l1_distance(action, mu(action, xz), mu(action, z));
      const Rational bound(2 * (4 * n + 4 + base_x), n * n + length1(action, z));
      out.push_back(make_record(claims::kMuCreationWeighted, base,
                                coeff_sq * dist * dist,
                                Rational(n + 1) * bound * bound));
    }
  }
  return out;
}

VerificationRecord verify_mu_q_compatibility(const Action& action,
                                             const TupleWord& word,
                                             const GroupElement& g) {
  const auto zfull = make_full_point(word, g);
  const auto zsym = make_multi_point(Variant::Sym, quotient(action, word), g);
  const auto dist =
      prob_l1_distance(action, mu(action, zfull), mu(action, zsym));
  return make_record(claims::kMuQCompatibility, instance_text(action, zfull),
                     dist, Rational(0));
}

VerificationRecord verify_omega_involution(const Action& action,
                                           const SemigroupPoint& z) {
  // omega(Iz) = omega(z) relabeled along pi_{g^-1} I.
  const auto iz = involute(action, z);
  WeightVector expected{PointLess{&action}};
  const auto ginv = action.group().inverse(z.g);
  for (const auto& [x, v] : omega(action, z))
    expected[action.act(ginv, action.involute(x))] += v;
  WeightVector diff = omega(action, iz);
  for (const auto& [x, v] : expected) diff[x] -= v;
  std::int64_t l1 = 0;
  for (const auto& [p, v] : diff) l1 += std::abs(v);
  return make_record(claims::kOmegaInvolutionSymmetry, instance_text(action, z),
                     Rational(l1), Rational(0));
}

std::vector<SemigroupPoint> enumerate_shell(const Action& action,
                                            std::int64_t radius,
                                            std::int64_t gamma_radius) {
  require(radius >= 0 && gamma_radius >= 0, "radii must be nonnegative");
  std::vector<SemigroupPoint> shell;
  const auto gamma_ball = action.group().ball(gamma_radius);
  for (const auto& g : gamma_ball) {
    if (radius == 0) {
      shell.push_back(group_point(action, Variant::Sym, g));
      continue;
    }
    // Letters of cost c contribute 1 + c; candidates live in the union of
    // ball(radius - 1) and its g-translate.
    std::vector<BasePoint> candidates;
    for (const auto& x : action.ball(radius - 1)) {
      candidates.push_back(x);
      candidates.push_back(action.act(g, x));
    }
    std::sort(candidates.begin(), candidates.end(), PointLess{&action});
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    std::vector<std::int64_t> weights;
    weights.reserve(candidates.size());
    for (const auto& x : candidates)
      weights.push_back(1 + letter_min_length(action, g, x));

    MultisetWord word;
    auto rec = [&](auto&& self, std::size_t i, std::int64_t remaining) -> void {
      if (remaining == 0) {
        if (!word.entries.empty())
          shell.push_back(make_multi_point(Variant::Sym, word, g));
        return;
      }
      if (i == candidates.size()) return;
      self(self, i + 1, remaining);  // skip letter i
      if (weights[i] <= remaining) {
        word.entries.emplace_back(candidates[i], 0);
        for (std::int64_t k = 1; k * weights[i] <= remaining; ++k) {
          word.entries.back().second = k;
          self(self, i + 1, remaining - k * weights[i]);
        }
        word.entries.pop_back();
      }
    };
    rec(rec, 0, radius);
  }
  return shell;
}

namespace {

struct DecayQuantity {
  Rational value;
  Rational bound;
  bool applicable = true;
};

DecayQuantity decay_quantity(const Action& action, const DecayParams& params,
                             const SemigroupPoint& z) {
  DecayQuantity q;
  const auto n = length0(action, z);
  const auto l1 = length1(action, z);
  if (params.test == DecayTest::Creation) {
    const auto& x = *params.letter;
    if (params.variant == Variant::Anti &&
        (!z.multi.simple() || z.multi.multiplicity(action, x) > 0)) {
      q.applicable = false;
      return q;
    }
    const auto xz =
        multiply(action, letter_point(action, z.variant, x), z);
    q.value = prob_l1_distance(action, mu(action, xz), mu(action, z));
    if (n == 0) {
      q.bound = Rational(2);  // vacuum-convention constant
    } else {
      q.bound = Rational(2 * (4 * n + 4 + action.base_length(x)), n * n + l1);
    }
  } else {
    const auto& g = *params.left;
    const auto& h = *params.right;
    if (n == 0) {
      q.applicable = false;
      return q;
    }
    const auto gzh = multiply(
        action,
        multiply(action, group_point(action, z.variant, g), z),
        group_point(action, z.variant, h));
    q.value = prob_l1_distance(action, push_prob(action, g, mu(action, z)),
                               mu(action, gzh));
    q.bound =
        Rational(2 * (action.group().length(g) + action.group().length(h)) * n,
                 n * n + l1);
  }
  return q;
}

}  // namespace

DecaySweep decay_sweep(const Action& action, const DecayParams& params) {
  require(params.test == DecayTest::Creation ? params.letter.has_value()
                                             : params.left.has_value() &&
                                                   params.right.has_value(),
          "decay test parameters incomplete");
  DecaySweep sweep;
  for (std::int64_t radius = 0; radius <= params.max_radius; ++radius) {
    auto shell = enumerate_shell(action, radius, params.gamma_radius);
    DecayRow row;
    row.radius = radius;
    Rational worst_excess(0);
    bool any = false;
    for (auto& z : shell) {
      z.variant = params.variant == Variant::Full ? Variant::Sym : params.variant;
      auto q = decay_quantity(action, params, z);
      if (!q.applicable) continue;
      ++row.points;
      if (!any || row.sup_value < q.value) row.sup_value = q.value;
      if (!any || row.sup_bound < q.bound) row.sup_bound = q.bound;
      any = true;
      auto excess = q.value - q.bound;
      if (worst_excess < excess) worst_excess = excess;
    }
    row.worst_excess = worst_excess;
    sweep.records.push_back(make_record(
        claims::kDecayEnvelope,
        "pointwise radius=" + std::to_string(radius) + " points=" +
            std::to_string(row.points),
        worst_excess, Rational(0)));
    (void)any;
    sweep.rows.push_back(row);
  }
  return sweep;
}

std::int64_t creation_bound_crossing_radius(std::int64_t letter_length,
                                            const Rational& threshold) {
  require(threshold.sign() > 0, "threshold must be positive");
  for (std::int64_t radius = 1;; ++radius) {
    Rational worst(0);
    for (std::int64_t n = 1; n <= radius; ++n) {
      Rational bound(2 * (4 * n + 4 + letter_length), n * n - n + radius);
      if (worst < bound) worst = bound;
    }
    if (worst <= threshold) return radius;
    require(radius < 1000000, "threshold crossing out of range");
  }
}

VerificationRecord sampled_envelope_record(const Action& action, const BasePoint& x,
                                           std::int64_t radius,
                                           std::int64_t gamma_radius,
                                           std::size_t samples, std::uint64_t seed,
                                           const Rational& threshold) {
  // Stratified by |z|_0: the letter costs partition radius - n across the
  // word. Letters realizing a given cost are drawn from bucketed balls.
  PointSampler sampler(action, 1, radius, gamma_radius);
  Rng rng(seed);
  Rational sup(0);
  std::size_t produced = 0;
  const std::int64_t max_degree = std::min<std::int64_t>(radius, 10);
  while (produced < samples) {
    const std::int64_t n = rng.range(1, max_degree);
    auto g = sampler.sample_group(rng, gamma_radius);
    std::int64_t remaining = radius - n;
    TupleWord letters;
    bool ok = true;
    for (std::int64_t i = 0; i < n && ok; ++i) {
      std::int64_t cost =
          i + 1 == n ? remaining : rng.range(0, remaining);
      remaining -= cost;
      letters.push_back(sampler.sample_letter_with_cost(g, cost, rng, &ok));
    }
    if (!ok) continue;
    auto z = make_multi_point(Variant::Sym, quotient(action, letters), g);
    if (length_star(action, z) != radius) continue;  // collisions can shrink it
    ++produced;
    const auto xz = multiply(action, letter_point(action, Variant::Sym, x), z);
    const auto value = prob_l1_distance(action, mu(action, xz), mu(action, z));
    if (sup < value) sup = value;
  }
  return make_record(claims::kDecayEnvelope,
                     "sampled-envelope x=" + to_text(action, x) + " radius=" +
                         std::to_string(radius) + " samples=" +
                         std::to_string(samples),
                     sup, threshold);
}

}  // namespace fockbound
