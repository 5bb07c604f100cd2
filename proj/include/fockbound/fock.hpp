#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "fockbound/report.hpp"
#include "fockbound/words.hpp"

namespace fockbound {

// A finitely supported vector over the Fock basis: words with exact
// coefficients. Coefficients are never zero; words are unique.
struct FockTerm {
  TupleWord word;
  ExactScalar coeff;
};
using FockVec = std::vector<FockTerm>;

using ColumnFn = std::function<FockVec(const TupleWord&)>;

// Truncated q-Fock space on ell^2 of the word semigroup of the chosen
// variant. Words are kept in canonical form: arbitrary tuples for Full,
// sorted tuples for Sym, strictly sorted for Anti. The alphabet and level
// bound the enumerated basis; the evaluators themselves are exact on
// arbitrary words, which is what makes covariance checks sound even when
// the group action moves letters outside the alphabet.
class FockSpace {
 public:
  FockSpace(const Action& action, Variant variant, std::int64_t level,
            std::vector<BasePoint> alphabet);

  const Action& action() const { return *action_; }
  Variant variant() const { return variant_; }
  std::int64_t level() const { return level_; }
  const std::vector<BasePoint>& alphabet() const { return alphabet_; }
  int q() const;

  // Graded by degree, then canonical word order; degree <= level.
  const std::vector<TupleWord>& basis() const { return basis_; }
  std::vector<TupleWord> basis_up_to(std::int64_t degree) const;

  bool word_canonical(const TupleWord& w) const;
  // Sorts (Sym) or validates strict sorting (Anti; throws on repeats).
  TupleWord canonical_word(const TupleWord& w) const;

  // Single-letter creation/annihilation. Empty result = zero vector.
  FockVec create(Side side, const BasePoint& x, const TupleWord& w) const;
  FockVec annihilate(Side side, const BasePoint& x, const TupleWord& w) const;

  // Composite labels: l(x1..xn) = l(x1)...l(xn), r(x1..xn) = r(xn)...r(x1),
  // with adjoints reversed. Anti labels must be the canonical section tuple.
  FockVec create_word(Side side, const TupleWord& label, const TupleWord& w) const;
  FockVec annihilate_word(Side side, const TupleWord& label, const TupleWord& w) const;

  FockVec apply_U(const GroupElement& g, const TupleWord& w) const;
  // Anti-linear on the complex span; coefficients here are real.
  FockVec apply_J(const TupleWord& w) const;

  ColumnFn creation_fn(Side side, TupleWord label) const;
  ColumnFn field_fn(const BasePoint& x) const;  // W(x) = l(x) + l(x)*, Sym only

 private:
  const Action* action_;
  Variant variant_;
  std::int64_t level_;
  std::vector<BasePoint> alphabet_;
  std::vector<TupleWord> basis_;
};

// ---- q-inner products ------------------------------------------------

// Dispatches per the operation contract: permutation sum up to degree 7,
// closed forms above. Integer-valued on standard basis tuples.
Rational q_inner(const Action& action, const TupleWord& a, const TupleWord& b, int q);
Rational q_inner_closed(const Action& action, const TupleWord& a,
                        const TupleWord& b, int q);
Rational q_inner_permutation_sum(const Action& action, const TupleWord& a,
                                 const TupleWord& b, int q);

// ---- vector and operator utilities -----------------------------------

bool word_less(const Action& action, const TupleWord& a, const TupleWord& b);
FockVec vec_normalize(const Action& action, FockVec v);  // merge + drop zeros
FockVec vec_scale(const FockVec& v, const ExactScalar& c);
FockVec apply_fn(const ColumnFn& fn, const FockVec& v);
bool vec_equal(const Action& action, const FockVec& a, const FockVec& b);
// 0 when exactly equal; otherwise a positive rational certificate of the
// largest per-word discrepancy (used only for reporting, never verdicts).
Rational vec_deviation(const Action& action, const FockVec& a, const FockVec& b);
ExactScalar vec_coefficient(const FockVec& v, const TupleWord& w);

struct SparseOperator {
  Variant variant = Variant::Full;
  std::int64_t level = 0;
  std::vector<std::pair<TupleWord, FockVec>> columns;  // sorted by word
};

SparseOperator materialize(const FockSpace& space, const ColumnFn& fn,
                           const std::vector<TupleWord>& domain);
SparseOperator creation_operator(const FockSpace& space, Side side,
                                 const TupleWord& label);
SparseOperator modular_conjugation(const FockSpace& space);
SparseOperator representation_unitary(const FockSpace& space, const GroupElement& g);
SparseOperator field_operator(const FockSpace& space, const BasePoint& x);
std::string export_operator_text(const FockSpace& space, const SparseOperator& op,
                                 const std::string& name);

// ---- exact operator checks -------------------------------------------

// ann(eta) cre(xi) - q cre(xi) ann(eta) = <xi,eta> on degrees <= level-1.
VerificationRecord check_q_commutation(const FockSpace& space, const BasePoint& xi,
                                       const BasePoint& eta);
VerificationRecord check_JlJ_equals_r(const FockSpace& space, const TupleWord& label);
VerificationRecord check_JrJ_equals_l(const FockSpace& space, const TupleWord& label);
VerificationRecord check_U_covariance(const FockSpace& space, const GroupElement& g,
                                      const TupleWord& label, Side side);
VerificationRecord check_U_homomorphism(const FockSpace& space,
                                        const GroupElement& g, const GroupElement& h);
VerificationRecord check_U_phase(const FockSpace& space, const GroupElement& g);
VerificationRecord check_J_involution(const FockSpace& space);
VerificationRecord check_composite_creation(const FockSpace& space, const TupleWord& s,
                                            const TupleWord& t, Side side);
VerificationRecord check_adjoint_consistency(const FockSpace& space,
                                             const TupleWord& label, Side side);
std::vector<VerificationRecord> check_sym_coefficients(const FockSpace& space);
std::vector<VerificationRecord> check_anti_coefficients(const FockSpace& space);

// ---- field operators, numerically ------------------------------------

struct FieldNormResult {
  double norm = 0;
  double bound = 0;
  VerificationRecord record;
};
// Spectral norm of W(x) P_{<=m} inside the level-(m+1) truncation, against
// the 2 sqrt(m+1) bound (tolerance 1e-9 absorbed into the record).
FieldNormResult field_operator_norm(const Action& action, const BasePoint& x,
                                    const std::vector<BasePoint>& alphabet,
                                    std::int64_t m);

struct DenseMatrix {
  std::size_t n = 0;
  std::vector<std::complex<double>> a;  // row-major
  std::complex<double>& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const std::complex<double>& at(std::size_t i, std::size_t j) const {
    return a[i * n + j];
  }
};

// exp(i t W(x)) on the truncation by scaled-and-squared Taylor series; the
// series tail is certified with the norm bound above. Throws if the target
// accuracy cannot be certified for the requested truncation.
DenseMatrix exp_field(const FockSpace& space, const BasePoint& x, double t);
double unitarity_defect(const DenseMatrix& m);
DenseMatrix dense_multiply(const DenseMatrix& a, const DenseMatrix& b);
double dense_distance_to_identity(const DenseMatrix& m);

// ---- crossed truncation ell^2(S x| Gamma) ----------------------------

struct CrossedTerm {
  TupleWord word;
  GroupElement g;
  ExactScalar coeff;
};
using CrossedVec = std::vector<CrossedTerm>;

class CrossedSpace {
 public:
  CrossedSpace(const FockSpace& space, std::int64_t gamma_radius);

  const FockSpace& fock() const { return *space_; }
  std::int64_t gamma_radius() const { return gamma_radius_; }
  const std::vector<GroupElement>& gamma_ball() const { return gamma_ball_; }
  std::vector<std::pair<TupleWord, GroupElement>> basis() const;

  // pi_l(a) = a (x) 1
  CrossedVec pi_left(const ColumnFn& a, const TupleWord& w, const GroupElement& h) const;
  // pi_r(a) = sum_h U_h a U_h* (x) e_{h,h}
  CrossedVec pi_right(const ColumnFn& a, const TupleWord& w, const GroupElement& h) const;
  CrossedVec pi_left_group(const GroupElement& g0, const TupleWord& w,
                           const GroupElement& h) const;  // U_g (x) lambda_g
  CrossedVec pi_right_group(const GroupElement& g0, const TupleWord& w,
                            const GroupElement& h) const;  // 1 (x) rho_g

 private:
  const FockSpace* space_;
  std::int64_t gamma_radius_;
  std::vector<GroupElement> gamma_ball_;
};

CrossedVec crossed_normalize(const Action& action, CrossedVec v);
bool crossed_equal(const Action& action, const CrossedVec& a, const CrossedVec& b);

// f pi_l(l(s)) = pi_l(l(s)) f(s .), f a bounded function on S x| Gamma.
using CrossedFunction = std::function<Rational(const TupleWord&, const GroupElement&)>;
VerificationRecord check_intertwining(const CrossedSpace& crossed, const TupleWord& label,
                                      const CrossedFunction& f, const std::string& tag);
// [pi_l(l(x)*), pi_r(r(y))] = sum_h delta_{x, pi_h(y)} P_Omega (x) e_{h,h}.
VerificationRecord check_left_right_commutator(const CrossedSpace& crossed,
                                               const BasePoint& x, const BasePoint& y);

}  // namespace fockbound
