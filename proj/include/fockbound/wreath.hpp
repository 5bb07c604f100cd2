#pragma once

#include <optional>
#include <vector>

#include "fockbound/measures.hpp"
#include "fockbound/report.hpp"
#include "fockbound/sampling.hpp"

namespace fockbound::wreath {

// One syllable of a free-product word: a nontrivial letter sitting at an
// index of the acted set.
struct Syllable {
  BasePoint index;
  GroupElement letter;
  bool operator==(const Syllable&) const = default;
};

// Reduced word: adjacent syllables carry distinct indices, letters are
// never the identity. The empty word is the group unit.
struct FreeWord {
  std::vector<Syllable> syllables;
  bool operator==(const FreeWord&) const = default;
  bool empty() const { return syllables.empty(); }
};

struct WreathPoint {
  FreeWord word;
  GroupElement g;
  bool operator==(const WreathPoint&) const = default;
};

// Bundles the index action (Gamma acting on I, with |.|_I the base length)
// and the letter group Delta with its word length.
class WreathContext {
 public:
  WreathContext(const Action& index_action, const Group& delta)
      : index_(&index_action), delta_(&delta) {}
  const Action& index_action() const { return *index_; }
  const Group& gamma() const { return index_->group(); }
  const Group& delta() const { return *delta_; }

 private:
  const Action* index_;
  const Group* delta_;
};

// Merges same-index neighbors by Delta multiplication, drops identity
// letters, and iterates to the unique normal form.
FreeWord reduce(const WreathContext& ctx, std::vector<Syllable> raw);
bool is_reduced(const WreathContext& ctx, const FreeWord& w);

FreeWord act_word(const WreathContext& ctx, const GroupElement& g, const FreeWord& w);
FreeWord word_inverse(const WreathContext& ctx, const FreeWord& w);
WreathPoint multiply(const WreathContext& ctx, const WreathPoint& a,
                     const WreathPoint& b);
WreathPoint inverse(const WreathContext& ctx, const WreathPoint& z);

std::vector<BasePoint> support(const WreathContext& ctx, const FreeWord& w);

std::string to_text(const WreathContext& ctx, const WreathPoint& z);

// A(E, F, n): at most n syllables, letters inside E, support inside
// F cup gF for the point's own group part.
struct AShape {
  std::vector<GroupElement> letters;  // E, sorted by the Delta order
  std::vector<BasePoint> indices;     // F, sorted canonically
  std::int64_t max_syllables = 0;     // n
};

AShape make_shape(const WreathContext& ctx, std::vector<GroupElement> letters,
                  std::vector<BasePoint> indices, std::int64_t max_syllables);
bool in_A(const WreathContext& ctx, const WreathPoint& z, const AShape& shape);

// Predicted shapes for the four closure laws. The Gamma-translation
// updates follow the semidirect conventions used here: a left translate
// needs F cup gF and a right translate F cup g^{-1}F.
AShape shape_union(const WreathContext& ctx, const AShape& a, const AShape& b);
AShape shape_inverse(const WreathContext& ctx, const AShape& a);
AShape shape_letter(const WreathContext& ctx, const AShape& a, const Syllable& x,
                    Side side);
AShape shape_translate(const WreathContext& ctx, const AShape& a,
                       const GroupElement& g, Side side);

std::vector<VerificationRecord> verify_closure_union(const WreathContext& ctx,
                                                     const WreathPoint& z,
                                                     const AShape& a, const AShape& b);
VerificationRecord verify_closure_inverse(const WreathContext& ctx,
                                          const WreathPoint& z, const AShape& a);
std::vector<VerificationRecord> verify_closure_letter(const WreathContext& ctx,
                                                      const WreathPoint& z,
                                                      const AShape& a,
                                                      const Syllable& x);
std::vector<VerificationRecord> verify_closure_translation(const WreathContext& ctx,
                                                           const WreathPoint& z,
                                                           const AShape& a,
                                                           const GroupElement& g);

// |(y,g)|_free = sum over supp of min{|i|, |g^-1 i|} + sum of |letter|_Delta.
std::int64_t length_free(const WreathContext& ctx, const WreathPoint& z);

// omega = m + a as displayed; the raw form is zero on the identity word
// (that is what the identities and inequalities are stated for), while the
// mu-facing form completes the identity word with the fixed vacuum atom.
WeightVector omega_free_raw(const WreathContext& ctx, const WreathPoint& z);
WeightVector omega_free(const WreathContext& ctx, const WreathPoint& z);
ProbVector mu_free(const WreathContext& ctx, const WreathPoint& z);

// ||omega||_1 = |z|_free, additivity of a, and inverse invariance.
std::vector<VerificationRecord> verify_omega_structure(const WreathContext& ctx,
                                                       const WreathPoint& z);

// ||g.omega(z) - omega(gz)||_1 <= |g| |supp|, the right-translate twin, and
// ||omega(xz) - omega(z)||_1 <= ||omega(x)||_1 on both sides.
std::vector<VerificationRecord> verify_wreath_bounds(const WreathContext& ctx,
                                                     const GroupElement& g,
                                                     const Syllable& x,
                                                     const WreathPoint& z);

// |z|_free <= C |supp| implies |z|_free <= 4C |B_{2C}(I)|.
std::optional<VerificationRecord> verify_supp_ratio_instance(
    const WreathContext& ctx, const Rational& C, const WreathPoint& z);
std::int64_t supp_ratio_bound(const WreathContext& ctx, const Rational& C);

// Every point with |z|_free <= N lies in A(B_N(Delta), B_N(I), N).
VerificationRecord verify_length_shell_membership(const WreathContext& ctx,
                                                  const WreathPoint& z,
                                                  std::int64_t radius);

// Exact shell {z : |z|_free == radius} within the Gamma ball.
std::vector<WreathPoint> enumerate_wreath_shell(const WreathContext& ctx,
                                                std::int64_t radius,
                                                std::int64_t gamma_radius);

// Exact shell sweep for the support ratio |supp(y)| / |z|_free. Each shell
// point is checked against the claim at its own tight constant
// C = |z|_free / |supp|, and the measured shell maximum is compared with
// the envelope the claim certifies: 1/c for the largest grid constant c
// with 4c |B_{2c}(I)| below the radius. The envelope is nonincreasing, the
// measured ratios only oscillate beneath it.
struct SuppRatioRow {
  std::int64_t radius = 0;
  std::size_t points = 0;
  Rational max_ratio;
  std::optional<Rational> certified_bound;
};
struct SuppRatioSweep {
  std::vector<SuppRatioRow> rows;
  std::vector<VerificationRecord> records;
};
SuppRatioSweep supp_ratio_shell_sweep(const WreathContext& ctx,
                                      std::int64_t max_radius,
                                      std::int64_t gamma_radius);

// Random reduced words, stratified by syllable count.
class WreathSampler {
 public:
  WreathSampler(const WreathContext& ctx, std::int64_t max_syllables,
                std::int64_t index_cost_max, std::int64_t letter_radius,
                std::int64_t gamma_radius);
  std::optional<WreathPoint> sample(Rng& rng);
  GroupElement sample_gamma(Rng& rng);
  GroupElement sample_letter(Rng& rng);  // never the identity
  Syllable sample_syllable(Rng& rng, const GroupElement& g, bool* ok);

 private:
  const WreathContext* ctx_;
  std::int64_t max_syllables_;
  std::int64_t index_cost_max_;
  std::vector<GroupElement> gamma_ball_;
  std::vector<GroupElement> letters_;
  PointSampler index_sampler_;
};

}  // namespace fockbound::wreath
