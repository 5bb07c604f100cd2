#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "fockbound/report.hpp"
#include "fockbound/sampling.hpp"
#include "fockbound/words.hpp"

namespace fockbound {

// Finitely supported integer weights / exact probabilities on X.
using WeightVector = std::map<BasePoint, std::int64_t, PointLess>;
using ProbVector = std::map<BasePoint, Rational, PointLess>;

// omega(x, g) = sum_i (|z|_0 + min{|x_i|_X, |pi_{g^-1}(x_i)|_X}) delta_{x_i};
// the empty word gets the fixed vacuum convention delta_{x_0} with x_0 the
// representative of orbit 0.
WeightVector omega(const Action& action, const SemigroupPoint& z);
std::int64_t weight_l1(const WeightVector& w);

ProbVector mu(const Action& action, const SemigroupPoint& z);
Rational prob_l1(const ProbVector& a);
Rational prob_l1_distance(const Action& action, const ProbVector& a,
                          const ProbVector& b);

WeightVector push_weight(const Action& action, const GroupElement& g,
                         const WeightVector& w);
ProbVector push_prob(const Action& action, const GroupElement& g,
                     const ProbVector& p);

// <phi, mu(z)>, exact and unital: phi == 1 pairs to 1.
Rational mu_star(const Action& action,
                 const std::function<Rational(const BasePoint&)>& phi,
                 const SemigroupPoint& z);

// ---- inequality verifiers (all exact rational arithmetic) -------------

// ||omega(z)||_1 = |z|_0^2 + |z|_1 for nonempty words.
VerificationRecord verify_omega_identity(const Action& action,
                                         const SemigroupPoint& z);

// The translation family: the two omega-level claims
//   ||g.omega(z) - omega(gz)||_1 <= |z|_0 |g|,
//   ||omega(z) - omega(zh)||_1 <= |z|_0 |h|,
// and the mu-level bound with constant 2(|g|+|h|) |z|_0 / (|z|_0^2+|z|_1).
std::vector<VerificationRecord> verify_translation_bound(const Action& action,
                                                         const GroupElement& g,
                                                         const GroupElement& h,
                                                         const SemigroupPoint& z);

// The creation family: ||omega(xz) - omega(z)||_1 <= 2|z|_0 + 1 + |x|_X
// (and the right-handed variant), plus the weighted mu-level bound
//   C_{x,z}^2 ||mu(xz)-mu(z)||_1^2 <= (|z|_0+1) (2(4|z|_0+4+|x|_X)/||omega(z)||_1)^2
// compared in squares. Anti points with x in the support are the
// zero-coefficient branch and are reported as skipped-pass instances.
std::vector<VerificationRecord> verify_creation_bound(const Action& action,
                                                      const BasePoint& x,
                                                      const SemigroupPoint& z,
                                                      Side side);

// mu_sym([x], g) = mu(x, g) across the quotient map.
VerificationRecord verify_mu_q_compatibility(const Action& action,
                                             const TupleWord& word,
                                             const GroupElement& g);

// omega(I z) is omega(z) relabeled along pi_{g^-1} I.
VerificationRecord verify_omega_involution(const Action& action,
                                           const SemigroupPoint& z);

// ---- exact shell machinery ---------------------------------------------

// All sym-variant points (w, g) with length_star == radius and g in the
// given ball. Finite because letter costs bound letters to a ball.
std::vector<SemigroupPoint> enumerate_shell(const Action& action,
                                            std::int64_t radius,
                                            std::int64_t gamma_radius);

enum class DecayTest { Translation, Creation };

struct DecayRow {
  std::int64_t radius = 0;
  std::size_t points = 0;
  Rational sup_value;      // exact sup of the l1 difference over the shell
  Rational sup_bound;      // exact sup of the paper bound over the shell
  Rational worst_excess;   // max(value - bound), must stay <= 0
};

struct DecaySweep {
  std::vector<DecayRow> rows;
  std::vector<VerificationRecord> records;
};

struct DecayParams {
  DecayTest test = DecayTest::Creation;
  Variant variant = Variant::Sym;
  std::int64_t max_radius = 8;
  std::int64_t gamma_radius = 2;
  // Creation test: the left-multiplied letter. Translation test: the pair.
  std::optional<BasePoint> letter;
  std::optional<GroupElement> left;
  std::optional<GroupElement> right;
};

DecaySweep decay_sweep(const Action& action, const DecayParams& params);

// Smallest radius R with sup over the R-shell of the creation bound
// 2(4n+4+|x|)/(n^2 - n + R) at or below the threshold.
std::int64_t creation_bound_crossing_radius(std::int64_t letter_length,
                                            const Rational& threshold);

// Stratified sample of the creation-test value on the exact shell of the
// given radius; used to confirm the envelope past the exactly enumerated
// range. Exact per-sample arithmetic; the sup is over samples.
VerificationRecord sampled_envelope_record(const Action& action, const BasePoint& x,
                                           std::int64_t radius,
                                           std::int64_t gamma_radius,
                                           std::size_t samples, std::uint64_t seed,
                                           const Rational& threshold);

}  // namespace fockbound
