#include "fockbound/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fockbound/claims.hpp"
#include "fockbound/serialize.hpp"

namespace fockbound {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::string word_text(const FockSpace& space, const TupleWord& w) {
  if (space.variant() == Variant::Full)
    return tuple_to_text(space.action(), w);
  return multiset_to_text(space.action(), quotient(space.action(), w));
}

FockVec single(TupleWord w, ExactScalar c) {
  if (c.is_zero()) return {};
  FockVec v;
  v.push_back(FockTerm{std::move(w), std::move(c)});
  return v;
}

// Rational stand-in for a numeric value, for report fields only.
Rational approx_rational(double v) {
  const double scaled = v * 1e12;
  if (std::abs(scaled) > 9e18) throw std::overflow_error("value too large to report");
  return Rational(static_cast<std::int64_t>(std::llround(scaled)), 1000000000000LL);
}

}  // namespace

// ---- FockSpace ---------------------------------------------------------

FockSpace::FockSpace(const Action& action, Variant variant, std::int64_t level,
                     std::vector<BasePoint> alphabet)
    : action_(&action), variant_(variant), level_(level),
      alphabet_(std::move(alphabet)) {
  require(level >= 0, "truncation level must be nonnegative");
  std::sort(alphabet_.begin(), alphabet_.end(), PointLess{&action});
  alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());

  // Graded enumeration: indices into the sorted alphabet, lexicographic per
  // degree. Full takes all sequences, Sym nondecreasing, Anti strictly
  // increasing.
  basis_.push_back(TupleWord{});
  std::vector<std::size_t> idx;
  auto emit = [&]() {
    TupleWord w;
    w.reserve(idx.size());
    for (auto i : idx) w.push_back(alphabet_[i]);
    basis_.push_back(std::move(w));
  };
  auto rec = [&](auto&& self, std::int64_t remaining) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    std::size_t start = 0;
    if (!idx.empty()) {
      if (variant_ == Variant::Sym) start = idx.back();
      if (variant_ == Variant::Anti) start = idx.back() + 1;
    }
    for (std::size_t i = start; i < alphabet_.size(); ++i) {
      idx.push_back(i);
      self(self, remaining - 1);
      idx.pop_back();
    }
  };
  for (std::int64_t d = 1; d <= level_; ++d) rec(rec, d);
}

int FockSpace::q() const {
  switch (variant_) {
    case Variant::Full:
      return 0;
    case Variant::Sym:
      return 1;
    case Variant::Anti:
      return -1;
  }
  return 0;
}

std::vector<TupleWord> FockSpace::basis_up_to(std::int64_t degree) const {
  std::vector<TupleWord> out;
  for (const auto& w : basis_)
    if (static_cast<std::int64_t>(w.size()) <= degree) out.push_back(w);
  return out;
}

bool FockSpace::word_canonical(const TupleWord& w) const {
  if (variant_ == Variant::Full) return true;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    int c = action_->compare(w[i], w[i + 1]);
    if (c > 0) return false;
    if (c == 0 && variant_ == Variant::Anti) return false;
  }
  return true;
}

TupleWord FockSpace::canonical_word(const TupleWord& w) const {
  if (variant_ == Variant::Full) return w;
  TupleWord s = w;
  std::sort(s.begin(), s.end(), PointLess{action_});
  if (variant_ == Variant::Anti)
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
      if (s[i] == s[i + 1])
        throw std::invalid_argument("anti words need pairwise distinct letters");
  return s;
}

FockVec FockSpace::create(Side side, const BasePoint& x, const TupleWord& w) const {
  switch (variant_) {
    case Variant::Full: {
      TupleWord out;
      out.reserve(w.size() + 1);
      if (side == Side::Left) {
        out.push_back(x);
        out.insert(out.end(), w.begin(), w.end());
      } else {
        out = w;
        out.push_back(x);
      }
      return single(std::move(out), ExactScalar(Rational(1)));
    }
    case Variant::Sym: {
      std::int64_t k = 0;
      for (const auto& y : w)
        if (y == x) ++k;
      TupleWord out = w;
      out.insert(std::upper_bound(out.begin(), out.end(), x, PointLess{action_}), x);
      return single(std::move(out), ExactScalar::sqrt_of(k + 1));
    }
    case Variant::Anti: {
      std::int64_t below = 0, above = 0;
      for (const auto& y : w) {
        int c = action_->compare(y, x);
        if (c == 0) return {};  // collision kills the vector
        (c < 0 ? below : above) += 1;
      }
      std::int64_t parity = side == Side::Left ? below : above;
      TupleWord out = w;
      out.insert(std::upper_bound(out.begin(), out.end(), x, PointLess{action_}), x);
      return single(std::move(out),
                    ExactScalar(Rational(parity % 2 == 0 ? 1 : -1)));
    }
  }
  return {};
}

FockVec FockSpace::annihilate(Side side, const BasePoint& x, const TupleWord& w) const {
  if (w.empty()) return {};
  switch (variant_) {
    case Variant::Full: {
      if (side == Side::Left) {
        if (!(w.front() == x)) return {};
        return single(TupleWord(w.begin() + 1, w.end()), ExactScalar(Rational(1)));
      }
      if (!(w.back() == x)) return {};
      return single(TupleWord(w.begin(), w.end() - 1), ExactScalar(Rational(1)));
    }
    case Variant::Sym: {
      std::int64_t k = 0;
      for (const auto& y : w)
        if (y == x) ++k;
      if (k == 0) return {};
      TupleWord out = w;
      out.erase(std::find(out.begin(), out.end(), x));
      return single(std::move(out), ExactScalar::sqrt_of(k));
    }
    case Variant::Anti: {
      auto it = std::find(w.begin(), w.end(), x);
      if (it == w.end()) return {};
      std::int64_t pos = it - w.begin();
      std::int64_t parity =
          side == Side::Left ? pos : static_cast<std::int64_t>(w.size()) - 1 - pos;
      TupleWord out = w;
      out.erase(out.begin() + pos);
      return single(std::move(out),
                    ExactScalar(Rational(parity % 2 == 0 ? 1 : -1)));
    }
  }
  return {};
}

FockVec FockSpace::create_word(Side side, const TupleWord& label,
                               const TupleWord& w) const {
  if (variant_ == Variant::Anti) {
    // Labels follow the fixed section; a label outside the simple words is
    // the zero operator.
    for (std::size_t i = 0; i + 1 < label.size(); ++i) {
      int c = action_->compare(label[i], label[i + 1]);
      if (c > 0) throw std::invalid_argument("anti label must be the section tuple");
      if (c == 0) return {};
    }
  }
  FockVec v = single(w, ExactScalar(Rational(1)));
  if (side == Side::Left) {
    for (auto it = label.rbegin(); it != label.rend(); ++it)
      v = apply_fn([&](const TupleWord& u) { return create(side, *it, u); }, v);
  } else {
    for (const auto& x : label)
      v = apply_fn([&](const TupleWord& u) { return create(side, x, u); }, v);
  }
  return v;
}

FockVec FockSpace::annihilate_word(Side side, const TupleWord& label,
                                   const TupleWord& w) const {
  FockVec v = single(w, ExactScalar(Rational(1)));
  if (side == Side::Left) {
    for (const auto& x : label)
      v = apply_fn([&](const TupleWord& u) { return annihilate(side, x, u); }, v);
  } else {
    for (auto it = label.rbegin(); it != label.rend(); ++it)
      v = apply_fn([&](const TupleWord& u) { return annihilate(side, *it, u); }, v);
  }
  return v;
}

FockVec FockSpace::apply_U(const GroupElement& g, const TupleWord& w) const {
  TupleWord mapped = act_tuple(*action_, g, w);
  if (variant_ == Variant::Full)
    return single(std::move(mapped), ExactScalar(Rational(1)));
  int sign = 1;
  if (variant_ == Variant::Anti) sign = sign_of(*action_, mapped);
  std::sort(mapped.begin(), mapped.end(), PointLess{action_});
  return single(std::move(mapped), ExactScalar(Rational(sign)));
}

FockVec FockSpace::apply_J(const TupleWord& w) const {
  TupleWord mapped = involute_tuple(*action_, w);  // reverse + I
  if (variant_ == Variant::Full)
    return single(std::move(mapped), ExactScalar(Rational(1)));
  int sign = 1;
  if (variant_ == Variant::Anti && !mapped.empty())
    sign = sign_of(*action_, mapped);
  std::sort(mapped.begin(), mapped.end(), PointLess{action_});
  return single(std::move(mapped), ExactScalar(Rational(sign)));
}

ColumnFn FockSpace::creation_fn(Side side, TupleWord label) const {
  return [this, side, label = std::move(label)](const TupleWord& w) {
    return create_word(side, label, w);
  };
}

ColumnFn FockSpace::field_fn(const BasePoint& x) const {
  require(variant_ == Variant::Sym, "field operators live on the symmetric space");
  return [this, x](const TupleWord& w) {
    FockVec v = create(Side::Left, x, w);
    FockVec a = annihilate(Side::Left, x, w);
    v.insert(v.end(), a.begin(), a.end());
    return vec_normalize(*action_, std::move(v));
  };
}

// ---- q-inner products ----------------------------------------------------

Rational q_inner_permutation_sum(const Action& action, const TupleWord& a,
                                 const TupleWord& b, int q) {
  require(q == 0 || q == 1 || q == -1, "q must be one of {0, 1, -1}");
  if (a.size() != b.size()) return Rational(0);
  const std::size_t n = a.size();
  require(n <= 12, "permutation sum is limited to degree 12");
  // Sum over sigma of q^{i(sigma)} prod <a_{sigma(i)}, b_i>: assign to each
  // slot i an unused position j with a[j] == b[i], tracking inversions of
  // the partial permutation.
  Rational total(0);
  std::vector<std::size_t> chosen;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t i, std::int64_t inversions) -> void {
    if (q == 0 && inversions > 0) return;
    if (i == n) {
      Rational weight(1);
      if (q == -1 && inversions % 2 == 1) weight = Rational(-1);
      if (q == 0 && inversions > 0) weight = Rational(0);
      total += weight;
      return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || !(a[j] == b[i])) continue;
      std::int64_t added = 0;
      for (auto k : chosen)
        if (k > j) ++added;
      used[j] = true;
      chosen.push_back(j);
      self(self, i + 1, inversions + added);
      chosen.pop_back();
      used[j] = false;
    }
  };
  rec(rec, 0, 0);
  return total;
}

Rational q_inner_closed(const Action& action, const TupleWord& a,
                        const TupleWord& b, int q) {
  require(q == 0 || q == 1 || q == -1, "q must be one of {0, 1, -1}");
  if (a.size() != b.size()) return Rational(0);
  if (q == 0) return Rational(a == b ? 1 : 0);
  if (!(quotient(action, a) == quotient(action, b))) return Rational(0);
  if (q == 1) {
    // product of multiplicity factorials
    Rational prod(1);
    for (const auto& [p, k] : quotient(action, a).entries)
      for (std::int64_t i = 2; i <= k; ++i) prod *= Rational(i);
    return prod;
  }
  // q = -1: zero on any repeated letter, otherwise the sign of the unique
  // matching permutation, via parities against the common sorted order.
  if (!quotient(action, a).simple()) return Rational(0);
  return Rational(sign_of(action, a) * sign_of(action, b));
}

Rational q_inner(const Action& action, const TupleWord& a, const TupleWord& b, int q) {
  if (a.size() == b.size() && a.size() <= 7)
    return q_inner_permutation_sum(action, a, b, q);
  return q_inner_closed(action, a, b, q);
}

// ---- vector and operator utilities ---------------------------------------

bool word_less(const Action& action, const TupleWord& a, const TupleWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = action.compare(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

FockVec vec_normalize(const Action& action, FockVec v) {
  std::sort(v.begin(), v.end(), [&](const FockTerm& a, const FockTerm& b) {
    return word_less(action, a.word, b.word);
  });
  FockVec out;
  for (auto& t : v) {
    if (t.coeff.is_zero()) continue;
    if (!out.empty() && out.back().word == t.word) {
      auto sum = out.back().coeff.try_add(t.coeff);
      if (!sum)
        throw std::logic_error("colliding terms with mixed radicands");
      if (sum->is_zero())
        out.pop_back();
      else
        out.back().coeff = *sum;
    } else {
      out.push_back(std::move(t));
    }
  }
  return out;
}

FockVec vec_scale(const FockVec& v, const ExactScalar& c) {
  if (c.is_zero()) return {};
  FockVec out;
  out.reserve(v.size());
  for (const auto& t : v) out.push_back(FockTerm{t.word, t.coeff * c});
  return out;
}

FockVec apply_fn(const ColumnFn& fn, const FockVec& v) {
  FockVec out;
  for (const auto& t : v)
    for (auto& u : vec_scale(fn(t.word), t.coeff)) out.push_back(std::move(u));
  return out;
}

bool vec_equal(const Action& action, const FockVec& a, const FockVec& b) {
  auto na = vec_normalize(action, a);
  auto nb = vec_normalize(action, b);
  if (na.size() != nb.size()) return false;
  for (std::size_t i = 0; i < na.size(); ++i)
    if (!(na[i].word == nb[i].word) || na[i].coeff != nb[i].coeff) return false;
  return true;
}

Rational vec_deviation(const Action& action, const FockVec& a, const FockVec& b) {
  auto na = vec_normalize(action, a);
  auto nb = vec_normalize(action, b);
  Rational worst(0);
  std::size_t i = 0, j = 0;
  auto bump = [&](const ExactScalar& x, const ExactScalar& y) {
    Rational d;
    if (x.radicand() == y.radicand()) {
      Rational diff = x.coeff() - y.coeff();
      d = diff.abs() * diff.abs() * Rational(x.radicand());
    } else {
      d = x.square().abs() + y.square().abs();
    }
    if (worst < d) worst = d;
  };
  const ExactScalar zero{Rational(0)};
  while (i < na.size() || j < nb.size()) {
    if (j == nb.size() ||
        (i < na.size() && word_less(action, na[i].word, nb[j].word))) {
      bump(na[i].coeff, zero);
      ++i;
    } else if (i == na.size() || word_less(action, nb[j].word, na[i].word)) {
      bump(zero, nb[j].coeff);
      ++j;
    } else {
      if (na[i].coeff != nb[j].coeff) bump(na[i].coeff, nb[j].coeff);
      ++i;
      ++j;
    }
  }
  return worst;
}

ExactScalar vec_coefficient(const FockVec& v, const TupleWord& w) {
  for (const auto& t : v)
    if (t.word == w) return t.coeff;
  return ExactScalar(Rational(0));
}

SparseOperator materialize(const FockSpace& space, const ColumnFn& fn,
                           const std::vector<TupleWord>& domain) {
  SparseOperator op;
  op.variant = space.variant();
  op.level = space.level();
  for (const auto& w : domain)
    op.columns.emplace_back(w, vec_normalize(space.action(), fn(w)));
  std::sort(op.columns.begin(), op.columns.end(),
            [&](const auto& a, const auto& b) {
              return word_less(space.action(), a.first, b.first);
            });
  return op;
}

SparseOperator creation_operator(const FockSpace& space, Side side,
                                 const TupleWord& label) {
  auto domain =
      space.basis_up_to(space.level() - static_cast<std::int64_t>(label.size()));
  return materialize(space, space.creation_fn(side, label), domain);
}

SparseOperator modular_conjugation(const FockSpace& space) {
  return materialize(
      space, [&](const TupleWord& w) { return space.apply_J(w); }, space.basis());
}

SparseOperator representation_unitary(const FockSpace& space, const GroupElement& g) {
  return materialize(
      space, [&](const TupleWord& w) { return space.apply_U(g, w); }, space.basis());
}

SparseOperator field_operator(const FockSpace& space, const BasePoint& x) {
  return materialize(space, space.field_fn(x),
                     space.basis_up_to(space.level() - 1));
}

std::string export_operator_text(const FockSpace& space, const SparseOperator& op,
                                 const std::string& name) {
  std::size_t entries = 0;
  for (const auto& [w, col] : op.columns) entries += col.size();
  std::string out = "%%fockbound operator\n";
  out += "% name " + name + "\n";
  out += "% variant " + std::string(variant_name(op.variant)) + "\n";
  out += "% truncation " + std::to_string(op.level) + "\n";
  out += "% columns " + std::to_string(op.columns.size()) + " entries " +
         std::to_string(entries) + "\n";
  for (const auto& [w, col] : op.columns)
    for (const auto& t : col)
      out += word_text(space, w) + " " + word_text(space, t.word) + " " +
             t.coeff.to_string() + "\n";
  return out;
}

// ---- exact operator checks ------------------------------------------------

namespace {

// Reduces a family of per-word comparisons to one record: the maximal
// deviation over the domain, which must be exactly zero.
VerificationRecord deviation_record(
    const FockSpace& space, std::string_view claim, std::string instance,
    const std::vector<TupleWord>& domain,
    const std::function<FockVec(const TupleWord&)>& lhs,
    const std::function<FockVec(const TupleWord&)>& rhs) {
  Rational worst(0);
  std::string witness;
  for (const auto& w : domain) {
    Rational d = vec_deviation(space.action(), lhs(w), rhs(w));
    if (worst < d) {
      worst = d;
      witness = word_text(space, w);
    }
  }
  if (!witness.empty()) instance += " counterexample=" + witness;
  return make_record(claim, std::move(instance), worst, Rational(0));
}

}  // namespace

VerificationRecord check_q_commutation(const FockSpace& space, const BasePoint& xi,
                                       const BasePoint& eta) {
  require(space.variant() != Variant::Sym,
          "bounded creations require q in {0, -1}");
  const int q = space.q();
  const bool same = xi == eta;
  auto domain = space.basis_up_to(space.level() - 1);
  auto lhs = [&](const TupleWord& w) {
    FockVec created = space.create(Side::Left, xi, w);
    FockVec v = apply_fn(
        [&](const TupleWord& u) { return space.annihilate(Side::Left, eta, u); },
        created);
    FockVec ann = space.annihilate(Side::Left, eta, w);
    FockVec cross = apply_fn(
        [&](const TupleWord& u) { return space.create(Side::Left, xi, u); }, ann);
    for (auto& t : vec_scale(cross, ExactScalar(Rational(-q))))
      v.push_back(std::move(t));
    return vec_normalize(space.action(), std::move(v));
  };
  auto rhs = [&](const TupleWord& w) -> FockVec {
    if (!same) return {};
    FockVec v;
    v.push_back(FockTerm{w, ExactScalar(Rational(1))});
    return v;
  };
  std::string instance = "variant=" + std::string(variant_name(space.variant())) +
                         " xi=" + to_text(space.action(), xi) +
                         " eta=" + to_text(space.action(), eta) +
                         " q=" + std::to_string(q) +
                         " N=" + std::to_string(space.level());
  return deviation_record(space, claims::kQCommutation, std::move(instance), domain,
                          lhs, rhs);
}

namespace {

// Composite anti labels transform only up to the section phase. The target
// label is the sorted image, and the section predicts the sign as the
// inversion parity of the raw image tuple. Full and Sym have no phase.
struct RelabeledTarget {
  TupleWord label;
  int sign = 1;
};

RelabeledTarget section_target(const FockSpace& space, const TupleWord& raw) {
  RelabeledTarget t;
  if (space.variant() == Variant::Full) {
    t.label = raw;
    return t;
  }
  if (space.variant() == Variant::Anti && !raw.empty())
    t.sign = sign_of(space.action(), raw);
  t.label = space.canonical_word(raw);
  return t;
}

}  // namespace

VerificationRecord check_JlJ_equals_r(const FockSpace& space, const TupleWord& label) {
  auto domain =
      space.basis_up_to(space.level() - static_cast<std::int64_t>(label.size()));
  // J l(s1)...l(sn) J = r(I s1)...r(I sn); the section relates that product
  // to r(I[s]) with the parity of (I s1, ..., I sn).
  auto target = section_target(space, involute_tuple(space.action(), label));
  auto lhs = [&](const TupleWord& w) {
    FockVec v = space.apply_J(w);
    v = apply_fn([&](const TupleWord& u) { return space.create_word(Side::Left, label, u); }, v);
    return apply_fn([&](const TupleWord& u) { return space.apply_J(u); }, v);
  };
  auto rhs = [&](const TupleWord& w) {
    return vec_scale(space.create_word(Side::Right, target.label, w),
                     ExactScalar(Rational(target.sign)));
  };
  std::string instance = "variant=" + std::string(variant_name(space.variant())) +
                         " s=" + word_text(space, label);
  return deviation_record(space, claims::kCovarianceJlJ, std::move(instance), domain,
                          lhs, rhs);
}

VerificationRecord check_JrJ_equals_l(const FockSpace& space, const TupleWord& label) {
  auto domain =
      space.basis_up_to(space.level() - static_cast<std::int64_t>(label.size()));
  auto target = section_target(space, involute_tuple(space.action(), label));
  auto lhs = [&](const TupleWord& w) {
    FockVec v = space.apply_J(w);
    v = apply_fn([&](const TupleWord& u) { return space.create_word(Side::Right, label, u); }, v);
    return apply_fn([&](const TupleWord& u) { return space.apply_J(u); }, v);
  };
  auto rhs = [&](const TupleWord& w) {
    return vec_scale(space.create_word(Side::Left, target.label, w),
                     ExactScalar(Rational(target.sign)));
  };
  std::string instance = "variant=" + std::string(variant_name(space.variant())) +
                         " s=" + word_text(space, label);
  return deviation_record(space, claims::kCovarianceJrJ, std::move(instance), domain,
                          lhs, rhs);
}

VerificationRecord check_U_covariance(const FockSpace& space, const GroupElement& g,
                                      const TupleWord& label, Side side) {
  auto domain =
      space.basis_up_to(space.level() - static_cast<std::int64_t>(label.size()));
  const GroupElement ginv = space.action().group().inverse(g);
  auto target = section_target(space, act_tuple(space.action(), g, label));
  auto lhs = [&](const TupleWord& w) {
    FockVec v = space.apply_U(ginv, w);
    v = apply_fn([&](const TupleWord& u) { return space.create_word(side, label, u); }, v);
    return apply_fn([&](const TupleWord& u) { return space.apply_U(g, u); }, v);
  };
  auto rhs = [&](const TupleWord& w) {
    return vec_scale(space.create_word(side, target.label, w),
                     ExactScalar(Rational(target.sign)));
  };
  std::string instance = "variant=" + std::string(variant_name(space.variant())) +
                         " side=" + (side == Side::Left ? "l" : "r") +
                         " g=" + to_text(space.action().group(), g) +
                         " s=" + word_text(space, label);
  return deviation_record(space,
                          side == Side::Left ? claims::kCovarianceULeft
                                             : claims::kCovarianceURight,
                          std::move(instance), domain, lhs, rhs);
}

VerificationRecord check_U_homomorphism(const FockSpace& space,
                                        const GroupElement& g, const GroupElement& h) {
  auto gh = space.action().group().multiply(g, h);
  auto lhs = [&](const TupleWord& w) {
    return apply_fn([&](const TupleWord& u) { return space.apply_U(g, u); },
                    space.apply_U(h, w));
  };
  auto rhs = [&](const TupleWord& w) { return space.apply_U(gh, w); };
  std::string instance = "variant=" + std::string(variant_name(space.variant())) +
                         " g=" + to_text(space.action().group(), g) +
                         " h=" + to_text(space.action().group(), h);
  return deviation_record(space, claims::kRepUHomomorphism, std::move(instance),
                          space.basis(), lhs, rhs);
}

VerificationRecord check_U_phase(const FockSpace& space, const GroupElement& g) {
  // U_g delta_w must be a single basis vector with a unimodular coefficient
  // aimed at the canonical image word.
  Rational worst(0);
  std::string witness;
  for (const auto& w : space.basis()) {
    FockVec v = space.apply_U(g, w);
    TupleWord expected = act_tuple(space.action(), g, w);
    if (space.variant() != Variant::Full)
      expected = space.canonical_word(expected);
    Rational d(0);
    if (v.size() != 1 || !(v[0].word == expected))
      d = Rational(1);
    else if (v[0].coeff.square() != Rational(1))
      d = (v[0].coeff.square() - Rational(1)).abs();
    if (worst < d) {
      worst = d;
      witness = word_text(space, w);
    }
  }
  std::string instance = "variant=" + std::string(variant_name(space.variant())) +
                         " g=" + to_text(space.action().group(), g);
  if (!witness.empty()) instance += " counterexample=" + witness;
  return make_record(claims::kRepUPhase, std::move(instance), worst, Rational(0));
}

VerificationRecord check_J_involution(const FockSpace& space) {
  auto lhs = [&](const TupleWord& w) {
    return apply_fn([&](const TupleWord& u) { return space.apply_J(u); },
                    space.apply_J(w));
  };
  auto rhs = [&](const TupleWord& w) {
    FockVec v;
    v.push_back(FockTerm{w, ExactScalar(Rational(1))});
    return v;
  };
  std::string instance =
      "variant=" + std::string(variant_name(space.variant())) +
      " N=" + std::to_string(space.level());
  return deviation_record(space, claims::kModularInvolution, std::move(instance),
                          space.basis(), lhs, rhs);
}

VerificationRecord check_composite_creation(const FockSpace& space, const TupleWord& s,
                                            const TupleWord& t, Side side) {
  auto degree =
      static_cast<std::int64_t>(s.size()) + static_cast<std::int64_t>(t.size());
  auto domain = space.basis_up_to(space.level() - degree);

  TupleWord st;
  int predicted_sign = 1;
  bool vanishes = false;
  if (space.variant() == Variant::Full) {
    st = side == Side::Left ? concat(s, t) : concat(t, s);
  } else {
    TupleWord joined = side == Side::Left ? concat(s, t) : concat(t, s);
    if (space.variant() == Variant::Anti &&
        !quotient(space.action(), joined).simple()) {
      vanishes = true;  // shared letters: both sides are the zero operator
    } else {
      if (space.variant() == Variant::Anti && !joined.empty())
        predicted_sign = sign_of(space.action(), joined);
      st = space.canonical_word(joined);
    }
  }

  auto lhs = [&](const TupleWord& w) {
    FockVec inner = space.create_word(side, t, w);
    return apply_fn([&](const TupleWord& u) { return space.create_word(side, s, u); },
                    inner);
  };
  auto rhs = [&](const TupleWord& w) -> FockVec {
    if (vanishes) return {};
    return vec_scale(space.create_word(side, st, w),
                     ExactScalar(Rational(predicted_sign)));
  };
  std::string instance = "variant=" + std::string(variant_name(space.variant())) +
                         " side=" + (side == Side::Left ? "l" : "r") +
                         " s=" + word_text(space, s) + " t=" + word_text(space, t);
  return deviation_record(space, claims::kCreationCompositeLaw, std::move(instance),
                          domain, lhs, rhs);
}

VerificationRecord check_adjoint_consistency(const FockSpace& space,
                                             const TupleWord& label, Side side) {
  // <l(s)u, v> = <u, l(s)*v> for basis u, v: every nonzero entry of either
  // side is matched against the other, which covers all pairs.
  Rational worst(0);
  std::string witness;
  auto bump = [&](const Rational& d, const TupleWord& w) {
    if (worst < d) {
      worst = d;
      witness = word_text(space, w);
    }
  };
  auto mismatch = [](const ExactScalar& a, const ExactScalar& b) {
    auto d = (a.square() - b.square()).abs();
    return d == Rational(0) ? Rational(1) : d;  // sign flips still count
  };
  const std::int64_t cap = space.level();
  for (const auto& u : space.basis()) {
    for (const auto& t : space.create_word(side, label, u)) {
      if (static_cast<std::int64_t>(t.word.size()) > cap) continue;
      auto back = vec_coefficient(space.annihilate_word(side, label, t.word), u);
      if (back != t.coeff) bump(mismatch(back, t.coeff), u);
    }
  }
  for (const auto& v : space.basis()) {
    for (const auto& t : space.annihilate_word(side, label, v)) {
      auto fwd = vec_coefficient(space.create_word(side, label, t.word), v);
      if (fwd != t.coeff) bump(mismatch(fwd, t.coeff), v);
    }
  }
  std::string instance = "variant=" + std::string(variant_name(space.variant())) +
                         " side=" + (side == Side::Left ? "l" : "r") +
                         " s=" + word_text(space, label);
  if (!witness.empty()) instance += " counterexample=" + witness;
  return make_record(claims::kAdjointConsistency, std::move(instance), worst,
                     Rational(0));
}

std::vector<VerificationRecord> check_sym_coefficients(const FockSpace& space) {
  require(space.variant() == Variant::Sym, "symmetric coefficients only");
  std::vector<VerificationRecord> out;
  for (const auto& x : space.alphabet()) {
    Rational increment_dev(0);  // |C^2 - (k+1)| must vanish
    Rational upper_excess(0);   // C^2 - (n+1) must stay <= 0
    Rational min_square(1);     // C^2 must stay >= 1
    for (const auto& w : space.basis_up_to(space.level() - 1)) {
      FockVec v = space.create(Side::Left, x, w);
      if (v.empty()) {
        increment_dev = Rational(1);
        break;
      }
      Rational c2 = v[0].coeff.square();
      std::int64_t k = 0;
      for (const auto& y : w)
        if (y == x) ++k;
      auto dev = (c2 - Rational(k + 1)).abs();
      if (increment_dev < dev) increment_dev = dev;
      auto n = static_cast<std::int64_t>(w.size());
      auto excess = c2 - Rational(n + 1);
      if (upper_excess < excess) upper_excess = excess;
      if (c2 < min_square) min_square = c2;
    }
    std::string x_text = to_text(space.action(), x);
    out.push_back(make_record(claims::kCreationCoeffSym,
                              "increment x=" + x_text, increment_dev, Rational(0)));
    out.push_back(make_record(claims::kCreationCoeffSym, "upper x=" + x_text,
                              upper_excess, Rational(0)));
    out.push_back(make_record(claims::kCreationCoeffSym, "lower x=" + x_text,
                              Rational(1), min_square));
  }
  return out;
}

std::vector<VerificationRecord> check_anti_coefficients(const FockSpace& space) {
  require(space.variant() == Variant::Anti, "antisymmetric coefficients only");
  std::vector<VerificationRecord> out;
  for (const auto& x : space.alphabet()) {
    Rational dev(0);
    for (const auto& w : space.basis_up_to(space.level() - 1)) {
      bool collision = std::find(w.begin(), w.end(), x) != w.end();
      for (Side side : {Side::Left, Side::Right}) {
        FockVec v = space.create(side, x, w);
        Rational d(0);
        if (collision) {
          if (!v.empty()) d = Rational(1);
        } else if (v.size() != 1) {
          d = Rational(1);
        } else {
          // sign must match the inversion parity of prepending/appending x
          TupleWord tuple = side == Side::Left
                                ? concat(TupleWord{x}, w)
                                : concat(w, TupleWord{x});
          int expected = sign_of(space.action(), tuple);
          if (v[0].coeff != ExactScalar(Rational(expected))) d = Rational(1);
        }
        if (dev < d) dev = d;
      }
    }
    out.push_back(make_record(claims::kCreationCoeffAnti,
                              "x=" + to_text(space.action(), x), dev, Rational(0)));
  }
  return out;
}

// ---- field operators, numerically ------------------------------------------

namespace {

// Largest eigenvalue of a dense symmetric PSD matrix by cyclic Jacobi.
double jacobi_max_eigenvalue(std::vector<double> a, std::size_t n) {
  if (n == 0) return 0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i * n + j] * a[i * n + j];
    if (off < 1e-28) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = a[p * n + q];
        if (std::abs(apq) < 1e-18) continue;
        double app = a[p * n + p], aqq = a[q * n + q];
        double theta = 0.5 * std::atan2(2 * apq, aqq - app);
        double c = std::cos(theta), s = std::sin(theta);
        for (std::size_t k = 0; k < n; ++k) {
          double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
      }
    }
  }
  double best = 0;
  for (std::size_t i = 0; i < n; ++i) best = std::max(best, a[i * n + i]);
  return best;
}

}  // namespace

FieldNormResult field_operator_norm(const Action& action, const BasePoint& x,
                                    const std::vector<BasePoint>& alphabet,
                                    std::int64_t m) {
  std::vector<BasePoint> letters = alphabet;
  letters.push_back(x);
  FockSpace space(action, Variant::Sym, m + 1, std::move(letters));
  auto cols = space.basis_up_to(m);
  const auto& rows = space.basis();
  auto fn = space.field_fn(x);

  // Gram matrix of the columns of W(x) P_{<=m}: G = B^T B. Coefficient
  // products across different columns mix radicands, so this is a numeric
  // computation (the claim carries a numeric tolerance anyway).
  std::vector<FockVec> images;
  images.reserve(cols.size());
  for (const auto& w : cols) images.push_back(fn(w));
  (void)rows;
  const std::size_t n = cols.size();
  std::vector<double> gram(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double dot = 0;
      for (const auto& ti : images[i]) {
        auto cj = vec_coefficient(images[j], ti.word);
        if (!cj.is_zero()) dot += ti.coeff.to_double() * cj.to_double();
      }
      gram[i * n + j] = gram[j * n + i] = dot;
    }
  FieldNormResult result;
  result.norm = std::sqrt(std::max(0.0, jacobi_max_eigenvalue(std::move(gram), n)));
  result.bound = 2.0 * std::sqrt(static_cast<double>(m + 1));
  std::string instance = "x=" + to_text(action, x) + " m=" + std::to_string(m);
  result.record =
      make_record(claims::kFieldNormBound, std::move(instance),
                  approx_rational(result.norm),
                  approx_rational(result.bound + 1e-9));
  return result;
}

DenseMatrix exp_field(const FockSpace& space, const BasePoint& x, double t) {
  require(space.variant() == Variant::Sym, "exp_field lives on the symmetric space");
  const auto& basis = space.basis();
  const std::size_t n = basis.size();
  auto fn = space.field_fn(x);

  // W compressed to the truncation (P W P), still symmetric.
  std::vector<double> w(n * n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& term : fn(basis[j])) {
      for (std::size_t i = 0; i < n; ++i)
        if (basis[i] == term.word) w[i * n + j] = term.coeff.to_double();
    }
  }

  // Scale so that ||t W / 2^s|| <= 1/2, using ||W P_{<=N}|| <= 2 sqrt(N+1).
  const double norm_bound =
      2.0 * std::sqrt(static_cast<double>(space.level() + 1)) * std::abs(t);
  int s = 0;
  while ((norm_bound / std::pow(2.0, s)) > 0.5) ++s;
  if (s > 60)
    throw std::runtime_error("exp_field cannot certify the tolerance at this size");
  const double scale = t / std::pow(2.0, s);

  DenseMatrix result;
  result.n = n;
  result.a.assign(n * n, {0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) result.at(i, i) = 1.0;

  // Taylor series of exp(i * scale * W); the ratio test against the norm
  // bound certifies the tail below 1e-16.
  std::vector<std::complex<double>> term(n * n, {0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) term[i * n + i] = 1.0;
  double term_bound = 1.0;
  for (int k = 1; k <= 64; ++k) {
    std::vector<std::complex<double>> next(n * n, {0.0, 0.0});
    const std::complex<double> factor(0.0, scale / k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (term[i * n + l] == std::complex<double>(0.0, 0.0)) continue;
        for (std::size_t j = 0; j < n; ++j)
          next[i * n + j] += term[i * n + l] * factor * w[l * n + j];
      }
    term = std::move(next);
    for (std::size_t i = 0; i < n * n; ++i) result.a[i] += term[i];
    term_bound *= 0.5 / k;
    if (term_bound < 1e-18) break;
  }
  for (int r = 0; r < s; ++r) result = dense_multiply(result, result);
  return result;
}

double unitarity_defect(const DenseMatrix& m) {
  // max |(M* M - I)_{ij}|
  double worst = 0;
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) {
      std::complex<double> dot(0.0, 0.0);
      for (std::size_t k = 0; k < m.n; ++k)
        dot += std::conj(m.at(k, i)) * m.at(k, j);
      if (i == j) dot -= 1.0;
      worst = std::max(worst, std::abs(dot));
    }
  return worst;
}

DenseMatrix dense_multiply(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix c;
  c.n = a.n;
  c.a.assign(a.n * a.n, {0.0, 0.0});
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t k = 0; k < a.n; ++k) {
      auto aik = a.at(i, k);
      if (aik == std::complex<double>(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < a.n; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

double dense_distance_to_identity(const DenseMatrix& m) {
  double worst = 0;
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t j = 0; j < m.n; ++j) {
      auto v = m.at(i, j);
      if (i == j) v -= 1.0;
      worst = std::max(worst, std::abs(v));
    }
  return worst;
}

// ---- crossed truncation ----------------------------------------------------

CrossedSpace::CrossedSpace(const FockSpace& space, std::int64_t gamma_radius)
    : space_(&space), gamma_radius_(gamma_radius),
      gamma_ball_(space.action().group().ball(gamma_radius)) {}

std::vector<std::pair<TupleWord, GroupElement>> CrossedSpace::basis() const {
  std::vector<std::pair<TupleWord, GroupElement>> out;
  for (const auto& w : space_->basis())
    for (const auto& g : gamma_ball_) out.emplace_back(w, g);
  return out;
}

CrossedVec CrossedSpace::pi_left(const ColumnFn& a, const TupleWord& w,
                                 const GroupElement& h) const {
  CrossedVec out;
  for (auto& t : a(w)) out.push_back(CrossedTerm{std::move(t.word), h, t.coeff});
  return out;
}

CrossedVec CrossedSpace::pi_right(const ColumnFn& a, const TupleWord& w,
                                  const GroupElement& h) const {
  const auto& group = space_->action().group();
  FockVec v = space_->apply_U(group.inverse(h), w);
  v = apply_fn(a, v);
  v = apply_fn([&](const TupleWord& u) { return space_->apply_U(h, u); }, v);
  CrossedVec out;
  for (auto& t : v) out.push_back(CrossedTerm{std::move(t.word), h, t.coeff});
  return out;
}

CrossedVec CrossedSpace::pi_left_group(const GroupElement& g0, const TupleWord& w,
                                       const GroupElement& h) const {
  const auto& group = space_->action().group();
  CrossedVec out;
  for (auto& t : space_->apply_U(g0, w))
    out.push_back(CrossedTerm{std::move(t.word), group.multiply(g0, h), t.coeff});
  return out;
}

CrossedVec CrossedSpace::pi_right_group(const GroupElement& g0, const TupleWord& w,
                                        const GroupElement& h) const {
  const auto& group = space_->action().group();
  CrossedVec out;
  out.push_back(CrossedTerm{w, group.multiply(h, group.inverse(g0)),
                            ExactScalar(Rational(1))});
  return out;
}

CrossedVec crossed_normalize(const Action& action, CrossedVec v) {
  std::sort(v.begin(), v.end(), [&](const CrossedTerm& a, const CrossedTerm& b) {
    if (!(a.g == b.g)) return action.group().compare(a.g, b.g) < 0;
    return word_less(action, a.word, b.word);
  });
  CrossedVec out;
  for (auto& t : v) {
    if (t.coeff.is_zero()) continue;
    if (!out.empty() && out.back().g == t.g && out.back().word == t.word) {
      auto sum = out.back().coeff.try_add(t.coeff);
      if (!sum) throw std::logic_error("colliding crossed terms with mixed radicands");
      if (sum->is_zero())
        out.pop_back();
      else
        out.back().coeff = *sum;
    } else {
      out.push_back(std::move(t));
    }
  }
  return out;
}

bool crossed_equal(const Action& action, const CrossedVec& a, const CrossedVec& b) {
  auto na = crossed_normalize(action, a);
  auto nb = crossed_normalize(action, b);
  if (na.size() != nb.size()) return false;
  for (std::size_t i = 0; i < na.size(); ++i)
    if (!(na[i].word == nb[i].word) || !(na[i].g == nb[i].g) ||
        na[i].coeff != nb[i].coeff)
      return false;
  return true;
}

VerificationRecord check_intertwining(const CrossedSpace& crossed,
                                      const TupleWord& label,
                                      const CrossedFunction& f,
                                      const std::string& tag) {
  const auto& space = crossed.fock();
  const auto& action = space.action();
  auto cre = space.creation_fn(Side::Left, label);

  auto left_mult_word = [&](const TupleWord& w) {
    // word of s*z for z = (w, h): the group part is untouched.
    if (space.variant() == Variant::Full) return concat(label, w);
    TupleWord joined = concat(label, w);
    if (space.variant() == Variant::Anti &&
        !quotient(action, joined).simple())
      return joined;  // f is still evaluated; creation will vanish anyway
    return space.canonical_word(joined);
  };

  Rational worst(0);
  std::string witness;
  auto domain = space.basis_up_to(space.level() -
                                  static_cast<std::int64_t>(label.size()));
  for (const auto& w : domain) {
    for (const auto& h : crossed.gamma_ball()) {
      // f . pi_l(l(s)) delta_(w,h)
      CrossedVec lhs = crossed.pi_left(cre, w, h);
      for (auto& t : lhs) t.coeff = t.coeff * ExactScalar(f(t.word, t.g));
      // pi_l(l(s)) . f(s .) delta_(w,h)
      Rational shifted = f(left_mult_word(w), h);
      CrossedVec rhs = crossed.pi_left(cre, w, h);
      for (auto& t : rhs) t.coeff = t.coeff * ExactScalar(shifted);
      if (!crossed_equal(action, lhs, rhs)) {
        worst = Rational(1);
        witness = word_text(space, w) + "," + to_text(action.group(), h);
      }
    }
  }
  std::string instance = "variant=" + std::string(variant_name(space.variant())) +
                         " s=" + word_text(space, label) + " f=" + tag;
  if (!witness.empty()) instance += " counterexample=" + witness;
  return make_record(claims::kIntertwineLeftMult, std::move(instance), worst,
                     Rational(0));
}

VerificationRecord check_left_right_commutator(const CrossedSpace& crossed,
                                               const BasePoint& x,
                                               const BasePoint& y) {
  const auto& space = crossed.fock();
  const auto& action = space.action();
  require(space.variant() == Variant::Full,
          "the compact-commutator identity is stated on the full space");

  ColumnFn ann_x = [&](const TupleWord& w) {
    return space.annihilate(Side::Left, x, w);
  };
  ColumnFn cre_y = [&](const TupleWord& w) {
    return space.create(Side::Right, y, w);
  };

  Rational worst(0);
  std::string witness;
  for (const auto& w : space.basis_up_to(space.level() - 1)) {
    for (const auto& h : crossed.gamma_ball()) {
      CrossedVec ab;
      for (const auto& t : crossed.pi_right(cre_y, w, h))
        for (auto& u : crossed.pi_left(ann_x, t.word, t.g)) {
          u.coeff = u.coeff * t.coeff;
          ab.push_back(std::move(u));
        }
      CrossedVec ba;
      for (const auto& t : crossed.pi_left(ann_x, w, h))
        for (auto& u : crossed.pi_right(cre_y, t.word, t.g)) {
          u.coeff = u.coeff * ExactScalar(Rational(-1)) * t.coeff;
          ba.push_back(std::move(u));
        }
      for (auto& t : ba) ab.push_back(std::move(t));
      CrossedVec expected;
      if (w.empty() && action.act(h, y) == x)
        expected.push_back(CrossedTerm{TupleWord{}, h, ExactScalar(Rational(1))});
      if (!crossed_equal(action, ab, expected)) {
        worst = Rational(1);
        witness = word_text(space, w) + "," + to_text(action.group(), h);
      }
    }
  }
  std::string instance = "x=" + to_text(action, x) + " y=" + to_text(action, y);
  if (!witness.empty()) instance += " counterexample=" + witness;
  return make_record(claims::kCommutatorCompact, std::move(instance), worst,
                     Rational(0));
}

}  // namespace fockbound
