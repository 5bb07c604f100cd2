#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "fockbound/fock.hpp"
#include "fockbound/serialize.hpp"

using namespace fockbound;

namespace {

ActionDescriptor z_on_z() {
  ActionDescriptor d;
  d.group = {GroupKind::FreeAbelian, 1, {}};
  d.orbits.resize(1);
  return d;
}

ActionDescriptor z_on_z_flip() {
  ActionDescriptor d = z_on_z();
  d.orbits.resize(2);
  InvolutionPair p;
  p.a = 0;
  p.b = 1;
  d.involution.push_back(p);
  return d;
}

BasePoint zp(const Action& a, std::int64_t n, std::uint32_t orbit = 0) {
  GroupElement g = a.group().identity();
  g.data = {n};
  return a.canonical(orbit, g);
}

GroupElement ze(const Action& a, std::int64_t n) {
  GroupElement g = a.group().identity();
  g.data = {n};
  return g;
}

// Test-side oracle, independent of the library path: enumerate all n!
// permutations with std::next_permutation and count inversions explicitly.
Rational oracle_q_inner(const Action& action, const TupleWord& a,
                        const TupleWord& b, int q) {
  if (a.size() != b.size()) return Rational(0);
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total(0);
  do {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i)
      if (!(a[perm[i]] == b[i])) match = false;
    if (!match) continue;
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    if (q == 0)
      total += Rational(inversions == 0 ? 1 : 0);
    else if (q == 1)
      total += Rational(1);
    else
      total += Rational(inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

FockVec unit_vec(const TupleWord& w) {
  return FockVec{FockTerm{w, ExactScalar(Rational(1))}};
}

}  // namespace

TEST_CASE("q-inner product on standard tuples, frozen values") {
  Action act(z_on_z());
  auto a = zp(act, 0), b = zp(act, 1);
  TupleWord ab{a, b}, ba{b, a}, aa{a, a};
  // full Fock: tuples are orthonormal
  CHECK(q_inner(act, ab, ab, 0) == Rational(1));
  CHECK(q_inner(act, ab, ba, 0) == Rational(0));
  // symmetric: ||delta_a (x) delta_a||^2 = 2! = 2
  CHECK(q_inner(act, aa, aa, 1) == Rational(2));
  // antisymmetric: repeated letters collapse; transposition gives -1
  CHECK(q_inner(act, aa, aa, -1) == Rational(0));
  CHECK(q_inner(act, ab, ba, -1) == Rational(-1));
  // mixed degrees vanish
  CHECK(q_inner(act, ab, TupleWord{a}, 1) == Rational(0));
}

TEST_CASE("closed form equals the permutation-sum oracle exhaustively at small degree") {
  Action act(z_on_z());
  std::vector<BasePoint> letters{zp(act, -1), zp(act, 0), zp(act, 1)};
  std::vector<TupleWord> words{{}};
  for (int d = 0; d < 4; ++d) {
    std::vector<TupleWord> next;
    for (const auto& w : words)
      if (static_cast<int>(w.size()) == d)
        for (const auto& p : letters) {
          auto e = w;
          e.push_back(p);
          next.push_back(std::move(e));
        }
    words.insert(words.end(), next.begin(), next.end());
  }
  for (int q : {0, 1, -1})
    for (const auto& x : words)
      for (const auto& y : words) {
        auto expected = oracle_q_inner(act, x, y, q);
        CHECK(q_inner_closed(act, x, y, q) == expected);
        CHECK(q_inner_permutation_sum(act, x, y, q) == expected);
      }
}

TEST_CASE("creation coefficients, frozen instances") {
  Action act(z_on_z());
  auto a = zp(act, 0), b = zp(act, 1);

  FockSpace sym(act, Variant::Sym, 4, {a, b});
  // l(x) delta_[x] = sqrt(2) delta_[x,x]
  auto v = sym.create(Side::Left, a, {a});
  REQUIRE(v.size() == 1);
  CHECK(v[0].coeff == ExactScalar::sqrt_of(2));
  CHECK(v[0].word == TupleWord{a, a});
  // left and right creations agree on the symmetric space
  CHECK(vec_equal(act, sym.create(Side::Right, a, {a}), v));

  FockSpace anti(act, Variant::Anti, 4, {a, b});
  // collision annihilates
  CHECK(anti.create(Side::Left, a, {a, b}).empty());
  // with a < b canonical: l(b) delta_[a] = -delta_[a,b]
  auto w = anti.create(Side::Left, b, {a});
  REQUIRE(w.size() == 1);
  CHECK(w[0].coeff == ExactScalar(Rational(-1)));
  CHECK(w[0].word == TupleWord{a, b});
  // and l(a) delta_[b] = +delta_[a,b]
  auto u = anti.create(Side::Left, a, {b});
  REQUIRE(u.size() == 1);
  CHECK(u[0].coeff == ExactScalar(Rational(1)));

  FockSpace full(act, Variant::Full, 4, {a, b});
  auto f = full.create(Side::Left, a, {b});
  REQUIRE(f.size() == 1);
  CHECK(f[0].word == TupleWord{a, b});
  auto r = full.create(Side::Right, a, {b});
  REQUIRE(r.size() == 1);
  CHECK(r[0].word == TupleWord{b, a});
}

TEST_CASE("coefficient lemma sweeps pass on truncations") {
  Action act(z_on_z());
  std::vector<BasePoint> ball;
  for (std::int64_t i = -2; i <= 2; ++i) ball.push_back(zp(act, i));
  FockSpace sym(act, Variant::Sym, 4, ball);
  for (const auto& rec : check_sym_coefficients(sym)) CHECK(rec.pass);
  FockSpace anti(act, Variant::Anti, 4, ball);
  for (const auto& rec : check_anti_coefficients(anti)) CHECK(rec.pass);
}

TEST_CASE("modular conjugation: vacuum fixed, J^2 = id, flip rule") {
  Action act(z_on_z_flip());
  auto a0 = zp(act, 5, 0), b1 = zp(act, 7, 1);
  FockSpace full(act, Variant::Full, 3, {a0, b1, zp(act, 5, 1), zp(act, 7, 0)});
  // J delta_* = delta_*
  auto vac = full.apply_J({});
  REQUIRE(vac.size() == 1);
  CHECK(vac[0].word.empty());
  // J delta_{(i1(a), i2(b))} = delta_{(i1(b), i2(a))}
  auto v = full.apply_J({a0, b1});
  REQUIRE(v.size() == 1);
  CHECK(v[0].word == TupleWord{zp(act, 7, 0), zp(act, 5, 1)});
  CHECK(check_J_involution(full).pass);

  FockSpace anti(act, Variant::Anti, 3, {a0, b1, zp(act, 5, 1), zp(act, 7, 0)});
  CHECK(check_J_involution(anti).pass);
  FockSpace sym(act, Variant::Sym, 3, {a0, b1});
  CHECK(check_J_involution(sym).pass);
}

TEST_CASE("representation U: identity, homomorphism, phase") {
  Action act(z_on_z());
  std::vector<BasePoint> ball{zp(act, -1), zp(act, 0), zp(act, 1), zp(act, 2)};
  for (Variant variant : {Variant::Full, Variant::Sym, Variant::Anti}) {
    FockSpace space(act, variant, 3, ball);
    auto e = act.group().identity();
    for (const auto& w : space.basis()) {
      auto v = space.apply_U(e, w);
      REQUIRE(v.size() == 1);
      CHECK(v[0].word == w);
      CHECK(v[0].coeff == ExactScalar(Rational(1)));
    }
    CHECK(check_U_homomorphism(space, ze(act, 2), ze(act, -3)).pass);
    CHECK(check_U_phase(space, ze(act, 3)).pass);
  }
}

TEST_CASE("q-commutation relation holds exactly on the degree-safe block") {
  Action act(z_on_z());
  std::vector<BasePoint> ball{zp(act, -1), zp(act, 0), zp(act, 1)};
  FockSpace full(act, Variant::Full, 4, ball);
  FockSpace anti(act, Variant::Anti, 4, ball);
  for (const auto& xi : ball)
    for (const auto& eta : ball) {
      CHECK(check_q_commutation(full, xi, eta).pass);
      CHECK(check_q_commutation(anti, xi, eta).pass);
    }
  CHECK_THROWS(check_q_commutation(FockSpace(act, Variant::Sym, 3, ball),
                                   ball[0], ball[1]));
}

TEST_CASE("covariance suite on all three variants") {
  Action act(z_on_z_flip());
  std::vector<BasePoint> ball;
  for (std::uint32_t orbit = 0; orbit < 2; ++orbit)
    for (std::int64_t i = -1; i <= 1; ++i) ball.push_back(zp(act, i, orbit));
  auto g = ze(act, 2);
  for (Variant variant : {Variant::Full, Variant::Sym, Variant::Anti}) {
    FockSpace space(act, variant, 4, ball);
    std::vector<TupleWord> labels{{},
                                  {zp(act, 0, 0)},
                                  {zp(act, -1, 1)},
                                  {zp(act, 0, 0), zp(act, 1, 0)},
                                  {zp(act, 0, 1), zp(act, 1, 0)}};
    for (auto label : labels) {
      label = space.canonical_word(label);
      CHECK(check_U_covariance(space, g, label, Side::Left).pass);
      CHECK(check_U_covariance(space, g, label, Side::Right).pass);
      CHECK(check_JlJ_equals_r(space, label).pass);
      CHECK(check_JrJ_equals_l(space, label).pass);
      CHECK(check_adjoint_consistency(space, label, Side::Left).pass);
      CHECK(check_adjoint_consistency(space, label, Side::Right).pass);
    }
  }
}

TEST_CASE("composite creations match the section-predicted sign") {
  Action act(z_on_z());
  std::vector<BasePoint> ball{zp(act, -1), zp(act, 0), zp(act, 1), zp(act, 2)};
  for (Variant variant : {Variant::Full, Variant::Sym, Variant::Anti}) {
    FockSpace space(act, variant, 5, ball);
    TupleWord s{zp(act, 1)}, t{zp(act, -1), zp(act, 0)};
    t = space.canonical_word(t);
    CHECK(check_composite_creation(space, s, t, Side::Left).pass);
    CHECK(check_composite_creation(space, s, t, Side::Right).pass);
    // overlapping anti labels: both sides vanish
    TupleWord u{zp(act, 1), zp(act, 0)};
    u = space.canonical_word(u);
    CHECK(check_composite_creation(space, s, u, Side::Left).pass);
  }
}

TEST_CASE("field operator norm bound and exponential unitarity") {
  Action act(z_on_z());
  auto x = zp(act, 0);
  std::vector<BasePoint> ball{zp(act, -1), x, zp(act, 1)};
  for (std::int64_t m = 0; m <= 4; ++m) {
    auto res = field_operator_norm(act, x, ball, m);
    CHECK(res.record.pass);
    CHECK(res.norm <= res.bound + 1e-9);
  }

  FockSpace sym(act, Variant::Sym, 4, {x, zp(act, 1)});
  auto at0 = exp_field(sym, x, 0.0);
  CHECK(dense_distance_to_identity(at0) <= 1e-12);
  auto fwd = exp_field(sym, x, 0.7);
  CHECK(unitarity_defect(fwd) <= 1e-8);
  auto bwd = exp_field(sym, x, -0.7);
  CHECK(dense_distance_to_identity(dense_multiply(fwd, bwd)) <= 1e-8);
}

TEST_CASE("crossed representations: units, intertwining, compact commutator") {
  Action act(z_on_z());
  std::vector<BasePoint> ball{zp(act, -1), zp(act, 0), zp(act, 1)};
  FockSpace full(act, Variant::Full, 3, ball);
  CrossedSpace crossed(full, 2);

  // pi_l(id) and pi_r(id) act as the identity on the crossed truncation
  ColumnFn ident = [](const TupleWord& w) { return unit_vec(w); };
  for (const auto& [w, h] : crossed.basis()) {
    auto l = crossed.pi_left(ident, w, h);
    REQUIRE(l.size() == 1);
    CHECK((l[0].word == w && l[0].g == h));
    auto r = crossed.pi_right(ident, w, h);
    REQUIRE(r.size() == 1);
    CHECK((r[0].word == w && r[0].g == h));
  }

  // intertwining with the indicator of a word-length shell
  CrossedFunction f = [&](const TupleWord& w, const GroupElement&) {
    return Rational(w.size() <= 1 ? 1 : 0);
  };
  CHECK(check_intertwining(crossed, {zp(act, 1)}, f, "shell-indicator").pass);

  // [pi_l(l(x)*), pi_r(r(y))] = sum_h [x = pi_h(y)] P_Omega (x) e_{h,h}
  for (const auto& x : ball)
    for (const auto& y : ball)
      CHECK(check_left_right_commutator(crossed, x, y).pass);
}

TEST_CASE("sparse operator export uses the exact entry grammar") {
  Action act(z_on_z());
  auto a = zp(act, 0);
  FockSpace sym(act, Variant::Sym, 2, {a, zp(act, 1)});
  auto op = creation_operator(sym, Side::Left, {a});
  auto text = export_operator_text(sym, op, "l(o0)");
  CHECK(text.find("%%fockbound operator") == 0);
  CHECK(text.find("% variant sym") != std::string::npos);
  CHECK(text.find("{o0:1} {o0:2} 1*sqrt(2)") != std::string::npos);
  CHECK(text.find("{} {o0:1} 1") != std::string::npos);
}

TEST_CASE("basis enumeration is graded and canonical") {
  Action act(z_on_z());
  std::vector<BasePoint> ball{zp(act, -1), zp(act, 0), zp(act, 1)};
  FockSpace full(act, Variant::Full, 2, ball);
  CHECK(full.basis().size() == 1 + 3 + 9);
  FockSpace sym(act, Variant::Sym, 2, ball);
  CHECK(sym.basis().size() == 1 + 3 + 6);
  FockSpace anti(act, Variant::Anti, 2, ball);
  CHECK(anti.basis().size() == 1 + 3 + 3);
  for (std::size_t i = 0; i + 1 < sym.basis().size(); ++i)
    CHECK(word_less(act, sym.basis()[i], sym.basis()[i + 1]));
}
