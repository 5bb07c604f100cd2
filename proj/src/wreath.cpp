#include "fockbound/wreath.hpp"

#include <algorithm>
#include <stdexcept>

#include "fockbound/claims.hpp"
#include "fockbound/serialize.hpp"

namespace fockbound::wreath {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::int64_t index_cost(const WreathContext& ctx, const GroupElement& g,
                        const BasePoint& i) {
  return letter_min_length(ctx.index_action(), g, i);
}

bool letter_in(const WreathContext& ctx, const std::vector<GroupElement>& set,
               const GroupElement& x) {
  return std::binary_search(set.begin(), set.end(), x,
                            [&](const GroupElement& a, const GroupElement& b) {
                              return ctx.delta().compare(a, b) < 0;
                            });
}

bool index_in(const WreathContext& ctx, const std::vector<BasePoint>& set,
              const BasePoint& i) {
  return std::binary_search(set.begin(), set.end(), i,
                            PointLess{&ctx.index_action()});
}

std::vector<GroupElement> sorted_letters(const WreathContext& ctx,
                                         std::vector<GroupElement> letters) {
  std::sort(letters.begin(), letters.end(),
            [&](const GroupElement& a, const GroupElement& b) {
              return ctx.delta().compare(a, b) < 0;
            });
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  return letters;
}

std::vector<BasePoint> sorted_indices(const WreathContext& ctx,
                                      std::vector<BasePoint> indices) {
  std::sort(indices.begin(), indices.end(), PointLess{&ctx.index_action()});
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return indices;
}

}  // namespace

FreeWord reduce(const WreathContext& ctx, std::vector<Syllable> raw) {
  // Stack merge. After a merge the new top has a different index (stack
  // invariant), so only a cancellation can cascade, and the next incoming
  // syllable handles that on its own turn.
  FreeWord out;
  for (auto& s : raw) {
    if (ctx.delta().is_identity(s.letter)) continue;
    if (!out.syllables.empty() && out.syllables.back().index == s.index) {
      auto merged = ctx.delta().multiply(out.syllables.back().letter, s.letter);
      out.syllables.pop_back();
      if (!ctx.delta().is_identity(merged))
        out.syllables.push_back(Syllable{s.index, std::move(merged)});
    } else {
      out.syllables.push_back(std::move(s));
    }
  }
  return out;
}

bool is_reduced(const WreathContext& ctx, const FreeWord& w) {
  for (std::size_t i = 0; i < w.syllables.size(); ++i) {
    if (ctx.delta().is_identity(w.syllables[i].letter)) return false;
    if (i > 0 && w.syllables[i].index == w.syllables[i - 1].index) return false;
  }
  return true;
}

FreeWord act_word(const WreathContext& ctx, const GroupElement& g,
                  const FreeWord& w) {
  FreeWord out;
  out.syllables.reserve(w.syllables.size());
  for (const auto& s : w.syllables)
    out.syllables.push_back(Syllable{ctx.index_action().act(g, s.index), s.letter});
  return out;
}

FreeWord word_inverse(const WreathContext& ctx, const FreeWord& w) {
  FreeWord out;
  out.syllables.reserve(w.syllables.size());
  for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it)
    out.syllables.push_back(Syllable{it->index, ctx.delta().inverse(it->letter)});
  return out;
}

WreathPoint multiply(const WreathContext& ctx, const WreathPoint& a,
                     const WreathPoint& b) {
  std::vector<Syllable> joined = a.word.syllables;
  auto moved = act_word(ctx, a.g, b.word);
  joined.insert(joined.end(), moved.syllables.begin(), moved.syllables.end());
  return WreathPoint{reduce(ctx, std::move(joined)),
                     ctx.gamma().multiply(a.g, b.g)};
}

WreathPoint inverse(const WreathContext& ctx, const WreathPoint& z) {
  auto ginv = ctx.gamma().inverse(z.g);
  return WreathPoint{act_word(ctx, ginv, word_inverse(ctx, z.word)), ginv};
}

std::vector<BasePoint> support(const WreathContext& ctx, const FreeWord& w) {
  std::vector<BasePoint> out;
  for (const auto& s : w.syllables) out.push_back(s.index);
  return sorted_indices(ctx, std::move(out));
}

std::string to_text(const WreathContext& ctx, const WreathPoint& z) {
  std::string s = "[";
  for (std::size_t i = 0; i < z.word.syllables.size(); ++i) {
    if (i) s += ',';
    s += fockbound::to_text(ctx.index_action(), z.word.syllables[i].index);
    s += ':';
    s += fockbound::to_text(ctx.delta(), z.word.syllables[i].letter);
  }
  return s + "|" + fockbound::to_text(ctx.gamma(), z.g) + "]";
}

AShape make_shape(const WreathContext& ctx, std::vector<GroupElement> letters,
                  std::vector<BasePoint> indices, std::int64_t max_syllables) {
  require(max_syllables >= 0, "syllable cap must be nonnegative");
  return AShape{sorted_letters(ctx, std::move(letters)),
                sorted_indices(ctx, std::move(indices)), max_syllables};
}

bool in_A(const WreathContext& ctx, const WreathPoint& z, const AShape& shape) {
  if (z.word.empty()) return true;
  if (static_cast<std::int64_t>(z.word.syllables.size()) > shape.max_syllables)
    return false;
  for (const auto& s : z.word.syllables)
    if (!letter_in(ctx, shape.letters, s.letter)) return false;
  for (const auto& i : support(ctx, z.word)) {
    if (index_in(ctx, shape.indices, i)) continue;
    auto pulled = ctx.index_action().act(ctx.gamma().inverse(z.g), i);
    if (!index_in(ctx, shape.indices, pulled)) return false;
  }
  return true;
}

AShape shape_union(const WreathContext& ctx, const AShape& a, const AShape& b) {
  auto letters = a.letters;
  letters.insert(letters.end(), b.letters.begin(), b.letters.end());
  auto indices = a.indices;
  indices.insert(indices.end(), b.indices.begin(), b.indices.end());
  return make_shape(ctx, std::move(letters), std::move(indices),
                    std::max(a.max_syllables, b.max_syllables));
}

AShape shape_inverse(const WreathContext& ctx, const AShape& a) {
  std::vector<GroupElement> letters;
  letters.reserve(a.letters.size());
  for (const auto& e : a.letters) letters.push_back(ctx.delta().inverse(e));
  return make_shape(ctx, std::move(letters), a.indices, a.max_syllables);
}

AShape shape_letter(const WreathContext& ctx, const AShape& a, const Syllable& x,
                    Side side) {
  std::vector<GroupElement> letters = a.letters;
  letters.push_back(x.letter);
  for (const auto& e : a.letters)
    letters.push_back(side == Side::Left ? ctx.delta().multiply(x.letter, e)
                                         : ctx.delta().multiply(e, x.letter));
  auto indices = a.indices;
  indices.push_back(x.index);
  return make_shape(ctx, std::move(letters), std::move(indices),
                    a.max_syllables + 1);
}

AShape shape_translate(const WreathContext& ctx, const AShape& a,
                       const GroupElement& g, Side side) {
  auto indices = a.indices;
  const auto shift = side == Side::Left ? g : ctx.gamma().inverse(g);
  for (const auto& i : a.indices)
    indices.push_back(ctx.index_action().act(shift, i));
  return make_shape(ctx, a.letters, std::move(indices), a.max_syllables);
}

std::vector<VerificationRecord> verify_closure_union(const WreathContext& ctx,
                                                     const WreathPoint& z,
                                                     const AShape& a,
                                                     const AShape& b) {
  require(in_A(ctx, z, a) || in_A(ctx, z, b), "z must lie in one of the shapes");
  auto u = shape_union(ctx, a, b);
  return {make_record(claims::kWreathClosureUnion, to_text(ctx, z),
                      Rational(in_A(ctx, z, u) ? 0 : 1), Rational(0))};
}

VerificationRecord verify_closure_inverse(const WreathContext& ctx,
                                          const WreathPoint& z, const AShape& a) {
  require(in_A(ctx, z, a), "z must lie in the shape");
  auto predicted = shape_inverse(ctx, a);
  bool fwd = in_A(ctx, inverse(ctx, z), predicted);
  // equality of families: the double inverse comes back
  bool bwd = in_A(ctx, inverse(ctx, inverse(ctx, z)), a);
  return make_record(claims::kWreathClosureInverse, to_text(ctx, z),
                     Rational(fwd && bwd ? 0 : 1), Rational(0));
}

std::vector<VerificationRecord> verify_closure_letter(const WreathContext& ctx,
                                                      const WreathPoint& z,
                                                      const AShape& a,
                                                      const Syllable& x) {
  require(in_A(ctx, z, a), "z must lie in the shape");
  std::vector<VerificationRecord> out;
  const WreathPoint xp{FreeWord{{x}}, ctx.gamma().identity()};
  auto left = multiply(ctx, xp, z);
  out.push_back(make_record(
      claims::kWreathClosureLetter, "left " + to_text(ctx, z),
      Rational(in_A(ctx, left, shape_letter(ctx, a, x, Side::Left)) ? 0 : 1),
      Rational(0)));
  auto right = multiply(ctx, z, xp);
  // the right-multiplied letter lands at index g . j, covered by gF'
  out.push_back(make_record(
      claims::kWreathClosureLetter, "right " + to_text(ctx, z),
      Rational(in_A(ctx, right, shape_letter(ctx, a, x, Side::Right)) ? 0 : 1),
      Rational(0)));
  return out;
}

std::vector<VerificationRecord> verify_closure_translation(const WreathContext& ctx,
                                                           const WreathPoint& z,
                                                           const AShape& a,
                                                           const GroupElement& g) {
  require(in_A(ctx, z, a), "z must lie in the shape");
  std::vector<VerificationRecord> out;
  const WreathPoint gp{FreeWord{}, g};
  auto left = multiply(ctx, gp, z);
  out.push_back(make_record(
      claims::kWreathClosureTranslation, "left " + to_text(ctx, z),
      Rational(in_A(ctx, left, shape_translate(ctx, a, g, Side::Left)) ? 0 : 1),
      Rational(0)));
  auto right = multiply(ctx, z, gp);
  out.push_back(make_record(
      claims::kWreathClosureTranslation, "right " + to_text(ctx, z),
      Rational(in_A(ctx, right, shape_translate(ctx, a, g, Side::Right)) ? 0 : 1),
      Rational(0)));
  return out;
}

std::int64_t length_free(const WreathContext& ctx, const WreathPoint& z) {
  std::int64_t total = 0;
  for (const auto& i : support(ctx, z.word)) total += index_cost(ctx, z.g, i);
  for (const auto& s : z.word.syllables) total += ctx.delta().length(s.letter);
  return total;
}

WeightVector omega_free_raw(const WreathContext& ctx, const WreathPoint& z) {
  WeightVector w{PointLess{&ctx.index_action()}};
  for (const auto& i : support(ctx, z.word)) w[i] += index_cost(ctx, z.g, i);
  for (const auto& s : z.word.syllables)
    w[s.index] += ctx.delta().length(s.letter);
  // drop explicit zeros (cost-0 indices with no letter mass cannot occur,
  // but keep the map canonical anyway)
  for (auto it = w.begin(); it != w.end();)
    it = it->second == 0 ? w.erase(it) : std::next(it);
  return w;
}

WeightVector omega_free(const WreathContext& ctx, const WreathPoint& z) {
  auto w = omega_free_raw(ctx, z);
  if (w.empty()) w[ctx.index_action().representative(0)] = 1;
  return w;
}

ProbVector mu_free(const WreathContext& ctx, const WreathPoint& z) {
  auto w = omega_free(ctx, z);
  auto total = weight_l1(w);
  ProbVector p{PointLess{&ctx.index_action()}};
  for (const auto& [i, v] : w) p[i] = Rational(v, total);
  return p;
}

std::vector<VerificationRecord> verify_omega_structure(const WreathContext& ctx,
                                                       const WreathPoint& z) {
  std::vector<VerificationRecord> out;
  const auto text = to_text(ctx, z);
  // ||omega(z)||_1 = |z|_free
  out.push_back(make_record(
      claims::kWreathOmegaStructure, "norm " + text,
      (Rational(weight_l1(omega_free_raw(ctx, z))) - Rational(length_free(ctx, z)))
          .abs(),
      Rational(0)));
  // a(y) = sum_k a(y_{i_k}) as vectors
  WeightVector a_direct{PointLess{&ctx.index_action()}};
  for (const auto& s : z.word.syllables)
    a_direct[s.index] += ctx.delta().length(s.letter);
  WeightVector a_sum{PointLess{&ctx.index_action()}};
  for (const auto& s : z.word.syllables) {
    WreathPoint single{FreeWord{{s}}, ctx.gamma().identity()};
    for (const auto& [i, v] : omega_free_raw(ctx, single)) {
      // subtract the m part of the single syllable to isolate a(.)
      a_sum[i] += v - index_cost(ctx, ctx.gamma().identity(), i);
    }
  }
  std::int64_t a_diff = 0;
  {
    WeightVector diff = a_direct;
    for (const auto& [i, v] : a_sum) diff[i] -= v;
    for (const auto& [i, v] : diff) a_diff += std::abs(v);
  }
  out.push_back(make_record(claims::kWreathOmegaStructure, "a-additive " + text,
                            Rational(a_diff), Rational(0)));
  // omega(y^{-1}, g) = omega(y, g): the inverse word under the same g
  WreathPoint same_g{word_inverse(ctx, z.word), z.g};
  std::int64_t inv_diff = 0;
  {
    WeightVector diff = omega_free_raw(ctx, z);
    for (const auto& [i, v] : omega_free_raw(ctx, same_g)) diff[i] -= v;
    for (const auto& [i, v] : diff) inv_diff += std::abs(v);
  }
  out.push_back(make_record(claims::kWreathOmegaStructure, "inverse " + text,
                            Rational(inv_diff), Rational(0)));
  return out;
}

std::vector<VerificationRecord> verify_wreath_bounds(const WreathContext& ctx,
                                                     const GroupElement& g,
                                                     const Syllable& x,
                                                     const WreathPoint& z) {
  require(!z.word.empty(), "omega bounds are stated for nonempty words");
  std::vector<VerificationRecord> out;
  const auto text = "g=" + fockbound::to_text(ctx.gamma(), g) +
                    " x=" + fockbound::to_text(ctx.index_action(), x.index) + ":" +
                    fockbound::to_text(ctx.delta(), x.letter) + " z=" +
                    to_text(ctx, z);
  const auto supp_size =
      static_cast<std::int64_t>(support(ctx, z.word).size());
  const auto glen = ctx.gamma().length(g);
  const auto& idx_action = ctx.index_action();

  auto l1_diff = [&](const WeightVector& a, const WeightVector& b) {
    WeightVector diff = a;
    for (const auto& [i, v] : b) diff[i] -= v;
    std::int64_t s = 0;
    for (const auto& [i, v] : diff) s += std::abs(v);
    return s;
  };

  const WreathPoint gp{FreeWord{}, g};
  // ||g.omega(z) - omega(gz)||_1 <= |g| |supp(y)|
  {
    WeightVector pushed{PointLess{&idx_action}};
    for (const auto& [i, v] : omega_free_raw(ctx, z))
      pushed[idx_action.act(g, i)] += v;
    auto lhs = l1_diff(pushed, omega_free_raw(ctx, multiply(ctx, gp, z)));
    out.push_back(make_record(claims::kWreathOmegaTranslation, "left " + text,
                              Rational(lhs), Rational(glen * supp_size)));
  }
  // ||omega(z) - omega(zg)||_1 <= |g| |supp(y)|
  {
    auto lhs = l1_diff(omega_free_raw(ctx, z),
                       omega_free_raw(ctx, multiply(ctx, z, gp)));
    out.push_back(make_record(claims::kWreathOmegaTranslation, "right " + text,
                              Rational(lhs), Rational(glen * supp_size)));
  }
  // ||omega(xz) - omega(z)||_1 <= ||omega(x)||_1, both sides
  const WreathPoint xp{FreeWord{{x}}, ctx.gamma().identity()};
  const auto x_norm =
      weight_l1(omega_free_raw(ctx, xp));  // |j|_I + |letter|_Delta
  {
    auto lhs = l1_diff(omega_free_raw(ctx, multiply(ctx, xp, z)),
                       omega_free_raw(ctx, z));
    out.push_back(make_record(claims::kWreathOmegaCreation, "left " + text,
                              Rational(lhs), Rational(x_norm)));
  }
  {
    auto lhs = l1_diff(omega_free_raw(ctx, multiply(ctx, z, xp)),
                       omega_free_raw(ctx, z));
    out.push_back(make_record(claims::kWreathOmegaCreation, "right " + text,
                              Rational(lhs), Rational(x_norm)));
  }
  return out;
}

std::int64_t supp_ratio_bound(const WreathContext& ctx, const Rational& C) {
  // |B_{2C}(I)|: integer lengths, so the ball radius is floor(2C).
  const Rational twoC = C * Rational(2);
  std::int64_t radius = twoC.num() / twoC.den();
  auto ball = ctx.index_action().ball(radius);
  Rational bound = Rational(4) * C * Rational(static_cast<std::int64_t>(ball.size()));
  // the claim compares an integer length against 4C|B|; callers use the
  // rational directly, rounded up here for a conservative integer report
  return (bound.num() + bound.den() - 1) / bound.den();
}

std::optional<VerificationRecord> verify_supp_ratio_instance(
    const WreathContext& ctx, const Rational& C, const WreathPoint& z) {
  const auto len = length_free(ctx, z);
  const auto supp_size = static_cast<std::int64_t>(support(ctx, z.word).size());
  if (Rational(len) > C * Rational(supp_size)) return std::nullopt;  // filter
  const Rational twoC = C * Rational(2);
  const std::int64_t radius = twoC.num() / twoC.den();
  const auto ball_size =
      static_cast<std::int64_t>(ctx.index_action().ball(radius).size());
  return make_record(claims::kWreathSuppRatio,
                     "C=" + C.to_string() + " z=" + to_text(ctx, z), Rational(len),
                     Rational(4) * C * Rational(ball_size));
}

VerificationRecord verify_length_shell_membership(const WreathContext& ctx,
                                                  const WreathPoint& z,
                                                  std::int64_t radius) {
  require(length_free(ctx, z) <= radius, "point exceeds the shell radius");
  std::vector<GroupElement> letters;
  for (const auto& e : ctx.delta().ball(radius))
    if (!ctx.delta().is_identity(e)) letters.push_back(e);
  auto shape = make_shape(ctx, std::move(letters),
                          ctx.index_action().ball(radius), radius);
  return make_record(claims::kWreathLengthShell,
                     "radius=" + std::to_string(radius) + " z=" + to_text(ctx, z),
                     Rational(in_A(ctx, z, shape) ? 0 : 1), Rational(0));
}

std::vector<WreathPoint> enumerate_wreath_shell(const WreathContext& ctx,
                                                std::int64_t radius,
                                                std::int64_t gamma_radius) {
  require(radius >= 0 && gamma_radius >= 0, "radii must be nonnegative");
  std::vector<WreathPoint> shell;
  const auto& idx_action = ctx.index_action();
  for (const auto& g : ctx.gamma().ball(gamma_radius)) {
    if (radius == 0) {
      shell.push_back(WreathPoint{FreeWord{}, g});
      continue;
    }
    // candidate indices: every syllable pays at least 1 for its letter
    std::vector<BasePoint> indices;
    for (const auto& i : idx_action.ball(radius - 1)) {
      indices.push_back(i);
      indices.push_back(idx_action.act(g, i));
    }
    indices = sorted_indices(ctx, std::move(indices));
    std::vector<std::int64_t> costs;
    costs.reserve(indices.size());
    for (const auto& i : indices) costs.push_back(index_cost(ctx, g, i));

    std::vector<GroupElement> letters;
    std::vector<std::int64_t> letter_len;
    for (const auto& e : ctx.delta().ball(radius)) {
      if (ctx.delta().is_identity(e)) continue;
      letters.push_back(e);
      letter_len.push_back(ctx.delta().length(e));
    }

    // build words syllable by syllable; an index pays its cost on first use
    std::vector<Syllable> word;
    std::vector<bool> used(indices.size(), false);
    auto rec = [&](auto&& self, std::int64_t remaining,
                   std::size_t last_index) -> void {
      if (remaining == 0) {
        shell.push_back(WreathPoint{FreeWord{word}, g});
        return;
      }
      for (std::size_t ii = 0; ii < indices.size(); ++ii) {
        if (!word.empty() && ii == last_index) continue;
        const std::int64_t entry_cost = used[ii] ? 0 : costs[ii];
        if (entry_cost + 1 > remaining) continue;
        const bool was_used = used[ii];
        used[ii] = true;
        for (std::size_t li = 0; li < letters.size(); ++li) {
          if (entry_cost + letter_len[li] > remaining) continue;
          word.push_back(Syllable{indices[ii], letters[li]});
          self(self, remaining - entry_cost - letter_len[li], ii);
          word.pop_back();
        }
        used[ii] = was_used;
      }
    };
    rec(rec, radius, 0);
  }
  return shell;
}

SuppRatioSweep supp_ratio_shell_sweep(const WreathContext& ctx,
                                      std::int64_t max_radius,
                                      std::int64_t gamma_radius) {
  SuppRatioSweep sweep;
  auto ball_size = [&](const Rational& twoC) {
    const std::int64_t radius = twoC.num() / twoC.den();
    return static_cast<std::int64_t>(ctx.index_action().ball(radius).size());
  };
  for (std::int64_t radius = 1; radius <= max_radius; ++radius) {
    SuppRatioRow row;
    row.radius = radius;
    Rational worst_violation(0);
    for (const auto& z : enumerate_wreath_shell(ctx, radius, gamma_radius)) {
      ++row.points;
      const auto supp_size =
          static_cast<std::int64_t>(support(ctx, z.word).size());
      const Rational ratio(supp_size, radius);
      if (row.max_ratio < ratio) row.max_ratio = ratio;
      // the claim at the tight constant C = |z| / |supp|
      const Rational C(radius, supp_size);
      const Rational bound = Rational(4) * C * Rational(ball_size(C * Rational(2)));
      auto excess = Rational(radius) - bound;
      if (worst_violation < excess) worst_violation = excess;
    }
    sweep.records.push_back(make_record(
        claims::kWreathSuppRatio,
        "shell radius=" + std::to_string(radius) + " points=" +
            std::to_string(row.points),
        worst_violation, Rational(0)));
    // certified envelope: largest grid constant c with 4c|B_{2c}| < radius
    std::optional<Rational> env;
    for (std::int64_t k = 1; k <= 4 * radius; ++k) {
      const Rational c(k, 4);
      if (Rational(4) * c * Rational(ball_size(c * Rational(2))) <
          Rational(radius))
        env = Rational(1) / c;
    }
    row.certified_bound = env;
    if (env)
      sweep.records.push_back(make_record(
          claims::kWreathSuppRatio,
          "envelope radius=" + std::to_string(radius), row.max_ratio, *env));
    sweep.rows.push_back(row);
  }
  return sweep;
}

WreathSampler::WreathSampler(const WreathContext& ctx, std::int64_t max_syllables,
                             std::int64_t index_cost_max, std::int64_t letter_radius,
                             std::int64_t gamma_radius)
    : ctx_(&ctx), max_syllables_(max_syllables), index_cost_max_(index_cost_max),
      gamma_ball_(ctx.gamma().ball(gamma_radius)),
      index_sampler_(ctx.index_action(), 1, index_cost_max, gamma_radius) {
  for (const auto& e : ctx.delta().ball(letter_radius))
    if (!ctx.delta().is_identity(e)) letters_.push_back(e);
  require(!letters_.empty(), "letter group ball has no nontrivial elements");
}

GroupElement WreathSampler::sample_gamma(Rng& rng) {
  return gamma_ball_[rng.below(gamma_ball_.size())];
}

GroupElement WreathSampler::sample_letter(Rng& rng) {
  return letters_[rng.below(letters_.size())];
}

Syllable WreathSampler::sample_syllable(Rng& rng, const GroupElement& g, bool* ok) {
  auto index = index_sampler_.sample_letter_with_cost(
      g, rng.range(0, index_cost_max_), rng, ok);
  return Syllable{std::move(index), sample_letter(rng)};
}

std::optional<WreathPoint> WreathSampler::sample(Rng& rng) {
  const auto g = sample_gamma(rng);
  const auto count = rng.range(1, max_syllables_);
  std::vector<Syllable> raw;
  for (std::int64_t i = 0; i < count; ++i) {
    bool ok = false;
    auto s = sample_syllable(rng, g, &ok);
    if (!ok) return std::nullopt;
    raw.push_back(std::move(s));
  }
  auto word = reduce(*ctx_, std::move(raw));
  if (word.empty()) return std::nullopt;
  return WreathPoint{std::move(word), g};
}

}  // namespace fockbound::wreath
