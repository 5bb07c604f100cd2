#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "fockbound/serialize.hpp"
#include "fockbound/words.hpp"

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

// Independent inversion-parity oracle: apply the permutation explicitly and
// count inversions of positions.
int permutation_parity(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("concat is a monoid with the empty word as unit") {
  Action a(z_on_z());
  TupleWord w{zp(a, 1), zp(a, 2)};
  CHECK(concat({}, w) == w);
  CHECK(concat(w, {}) == w);
  TupleWord x{zp(a, 0)};
  CHECK(concat(x, w) == TupleWord{zp(a, 0), zp(a, 1), zp(a, 2)});
  TupleWord y{zp(a, 3)};
  CHECK(concat(concat(x, w), y) == concat(x, concat(w, y)));
}

TEST_CASE("concat is cancellative on small words, exhaustively") {
  Action a(z_on_z());
  std::vector<BasePoint> alphabet{zp(a, 0), zp(a, 1), zp(a, 2), zp(a, -1)};
  std::vector<TupleWord> words{{}};
  for (int len = 1; len <= 3; ++len) {
    std::vector<TupleWord> next;
    for (const auto& w : words)
      if (static_cast<int>(w.size()) == len - 1)
        for (const auto& p : alphabet) {
          auto e = w;
          e.push_back(p);
          next.push_back(e);
        }
    words.insert(words.end(), next.begin(), next.end());
  }
  for (const auto& s : words)
    for (const auto& x : words)
      for (const auto& y : words) {
        if (concat(s, x) == concat(s, y)) CHECK(x == y);
        if (concat(x, s) == concat(y, s)) CHECK(x == y);
      }
}

TEST_CASE("quotient counts multiplicities and kills order") {
  Action a(z_on_z());
  auto pa = zp(a, 1), pb = zp(a, 2);
  auto q = quotient(a, {pa, pb, pa});
  CHECK(q.degree() == 3);
  CHECK(q.multiplicity(a, pa) == 2);
  CHECK(q.multiplicity(a, pb) == 1);
  CHECK(quotient(a, {}).empty());
  CHECK(quotient(a, {pa, pb, pa}) == quotient(a, {pb, pa, pa}));
  // Q is multiplicative into the multiset monoid.
  TupleWord u{pb, pa}, v{pa};
  CHECK(quotient(a, concat(u, v)) ==
        multiset_sum(a, quotient(a, u), quotient(a, v)));
}

TEST_CASE("section emits letters in canonical order and splits Q") {
  Action a(z_on_z());
  auto pa = zp(a, -1), pb = zp(a, 2);
  auto q = quotient(a, {pb, pa});
  auto s = section(q);
  REQUIRE(s.size() == 2);
  CHECK(a.compare(s[0], s[1]) < 0);
  CHECK(quotient(a, s) == q);
  CHECK(section(MultisetWord{}).empty());
  // idempotent on canonical tuples
  CHECK(section(quotient(a, s)) == s);
}

TEST_CASE("sign_of matches the inversion-parity oracle") {
  Action a(z_on_z());
  auto pa = zp(a, 0), pb = zp(a, 1);
  CHECK(sign_of(a, {pa, pb}) == 1);   // canonical tuple
  CHECK(sign_of(a, {pb, pa}) == -1);  // one inversion
  CHECK_THROWS(sign_of(a, TupleWord{pa, pa}));
}

TEST_CASE("sign_of obeys the permutation law for all of S_4 and sampled S_7") {
  Action a(z_on_z());
  std::vector<BasePoint> letters;
  for (int i = 0; i < 7; ++i) letters.push_back(zp(a, i - 3));
  std::sort(letters.begin(), letters.end(),
            [&](const BasePoint& x, const BasePoint& y) { return a.less(x, y); });

  for (int n : {4, 7}) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int checked = 0;
    do {
      TupleWord w;
      for (int i = 0; i < n; ++i) w.push_back(letters[perm[i]]);
      CHECK(sign_of(a, w) == permutation_parity(perm));
      ++checked;
    } while (std::next_permutation(perm.begin(), perm.end()) &&
             (n == 4 || checked < 5040));
    if (n == 4) CHECK(checked == 24);
  }
}

TEST_CASE("semidirect multiplication matches the twisted law") {
  Action a(z_on_z());
  // ((3), 1) * ((0), 0) = ((3, pi_1(0)), 1) = ((3,1), 1)
  auto lhs = multiply(a, make_full_point({zp(a, 3)}, ze(a, 1)),
                      make_full_point({zp(a, 0)}, ze(a, 0)));
  CHECK(lhs == make_full_point({zp(a, 3), zp(a, 1)}, ze(a, 1)));

  auto unit = unit_point(a, Variant::Full);
  auto z = make_full_point({zp(a, 2), zp(a, -1)}, ze(a, 4));
  CHECK(multiply(a, unit, z) == z);
  CHECK(multiply(a, z, unit) == z);

  // associativity on sampled points
  auto w = make_full_point({zp(a, 1)}, ze(a, -2));
  CHECK(multiply(a, multiply(a, z, w), lhs) ==
        multiply(a, z, multiply(a, w, lhs)));
}

TEST_CASE("involution is an order-2 anti-homomorphism on points") {
  Action a(z_on_z_flip());
  auto z1 = make_full_point({zp(a, 2, 0), zp(a, -1, 1)}, ze(a, 3));
  auto z2 = make_full_point({zp(a, 0, 1)}, ze(a, -1));
  CHECK(involute(a, involute(a, z1)) == z1);
  CHECK(involute(a, multiply(a, z1, z2)) ==
        multiply(a, involute(a, z2), involute(a, z1)));
  // tuple-level anti-multiplicativity: I(xy) = I(y)I(x)
  TupleWord x{zp(a, 1, 0)}, y{zp(a, 2, 1), zp(a, 5, 0)};
  CHECK(involute_tuple(a, concat(x, y)) ==
        concat(involute_tuple(a, y), involute_tuple(a, x)));
}

TEST_CASE("length functions match the min formula") {
  Action a(z_on_z());
  // z = ((3), 2): |z|_1 = min{3, |3-2|} = 1, |z|_0 = 1, |z|_* = 2
  auto z = make_full_point({zp(a, 3)}, ze(a, 2));
  CHECK(length0(a, z) == 1);
  CHECK(length1(a, z) == 1);
  CHECK(length_star(a, z) == 2);
  // vacuum word has both lengths zero for every g
  auto vac = make_full_point({}, ze(a, 17));
  CHECK(length0(a, vac) == 0);
  CHECK(length1(a, vac) == 0);
}

TEST_CASE("length_star is Q-invariant") {
  Action a(z_on_z());
  auto tuple = TupleWord{zp(a, 3), zp(a, -1), zp(a, 3)};
  auto zfull = make_full_point(tuple, ze(a, 2));
  auto zsym = make_multi_point(Variant::Sym, quotient(a, tuple), ze(a, 2));
  CHECK(length_star(a, zfull) == length_star(a, zsym));
  CHECK(length0(a, zfull) == length0(a, zsym));
  CHECK(length1(a, zfull) == length1(a, zsym));
}

TEST_CASE("involution preserves length_star when lengths are I-compatible") {
  Action a(z_on_z_flip());
  auto z = make_full_point({zp(a, 2, 0), zp(a, -3, 1)}, ze(a, 1));
  CHECK(length_star(a, involute(a, z)) == length_star(a, z));
}

TEST_CASE("canonical text round trip for words and points") {
  Action a(z_on_z_flip());
  auto z = make_full_point({zp(a, 3, 0), zp(a, -1, 1)}, ze(a, 2));
  auto text = to_text(a, z);
  CHECK(point_from_text(a, Variant::Full, text) == z);

  auto m = make_multi_point(Variant::Sym,
                            quotient(a, {zp(a, 3, 0), zp(a, 3, 0), zp(a, 0, 1)}),
                            ze(a, -2));
  CHECK(point_from_text(a, Variant::Sym, to_text(a, m)) == m);

  auto unit = unit_point(a, Variant::Full);
  CHECK(point_from_text(a, Variant::Full, to_text(a, unit)) == unit);

  CHECK(to_text(ExactScalar(Rational(-3, 2), 2)) == "-3/2*sqrt(2)");
  CHECK(scalar_from_text("-3/2*sqrt(2)") == ExactScalar(Rational(-3, 2), 2));
  CHECK(scalar_from_text("7") == ExactScalar(Rational(7)));
}
