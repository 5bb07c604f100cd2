#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fockbound/measures.hpp"
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

}  // namespace

TEST_CASE("omega on the single-letter example: ((3), 2) -> {3 -> 2}") {
  Action act(z_on_z());
  auto z = make_full_point({zp(act, 3)}, ze(act, 2));
  auto w = omega(act, z);
  REQUIRE(w.size() == 1);
  CHECK(w.begin()->first == zp(act, 3));
  // coefficient = |z|_0 + min{3, |3-2|} = 1 + 1 = 2
  CHECK(w.begin()->second == 2);
  CHECK(weight_l1(w) == 2);
}

TEST_CASE("vacuum convention pins omega of the empty word") {
  Action act(z_on_z());
  auto vac = make_full_point({}, ze(act, 7));
  auto w = omega(act, vac);
  REQUIRE(w.size() == 1);
  CHECK(w.begin()->first == act.representative(0));
  CHECK(w.begin()->second == 1);
}

TEST_CASE("omega l1 identity over stratified samples") {
  Action act(z_on_z());
  PointSampler sampler(act, 6, 5, 3);
  Rng rng(derive_seed(7, "omega-identity"));
  int produced = 0;
  while (produced < 2000) {
    auto z = sampler.sample(Variant::Full, rng);
    if (!z) continue;
    ++produced;
    CHECK(verify_omega_identity(act, *z).pass);
  }
}

TEST_CASE("mu of a single-letter point is a point mass; mu_star is unital") {
  Action act(z_on_z());
  auto z = make_full_point({zp(act, 3)}, ze(act, 2));
  auto p = mu(act, z);
  REQUIRE(p.size() == 1);
  CHECK(p.begin()->second == Rational(1));
  CHECK(prob_l1(p) == Rational(1));
  CHECK(mu_star(act, [](const BasePoint&) { return Rational(1); }, z) ==
        Rational(1));
  // indicator pairing stays in [0, 1]
  auto ind = [&](const BasePoint& x) {
    return Rational(act.base_length(x) <= 2 ? 1 : 0);
  };
  auto zz = make_full_point({zp(act, 1), zp(act, 4)}, ze(act, 0));
  auto val = mu_star(act, ind, zz);
  CHECK(val >= Rational(0));
  CHECK(val <= Rational(1));
  CHECK(prob_l1(mu(act, zz)) == Rational(1));
}

TEST_CASE("translation bounds: identity translations give zero slack on both sides") {
  Action act(z_on_z());
  auto z = make_full_point({zp(act, 2), zp(act, -1)}, ze(act, 1));
  auto recs =
      verify_translation_bound(act, act.group().identity(), act.group().identity(), z);
  for (const auto& r : recs) {
    CHECK(r.pass);
    CHECK(r.lhs == Rational(0));
  }
}

TEST_CASE("translation and creation bounds hold over stratified samples") {
  Action act(z_on_z());
  PointSampler sampler(act, 6, 6, 3);
  Rng rng(derive_seed(11, "bounds"));
  int produced = 0;
  while (produced < 1500) {
    auto z = sampler.sample(Variant::Full, rng);
    if (!z) continue;
    ++produced;
    auto g = sampler.sample_group(rng, 3);
    auto h = sampler.sample_group(rng, 3);
    for (const auto& r : verify_translation_bound(act, g, h, *z)) CHECK(r.pass);
    bool ok = false;
    auto x = sampler.sample_letter_with_cost(g, rng.range(0, 3), rng, &ok);
    if (!ok) continue;
    for (const auto& r : verify_creation_bound(act, x, *z, Side::Left)) CHECK(r.pass);
    for (const auto& r : verify_creation_bound(act, x, *z, Side::Right)) CHECK(r.pass);
  }
}

TEST_CASE("weighted creation bound exercises sym and anti variants") {
  Action act(z_on_z());
  PointSampler sampler(act, 5, 4, 2);
  Rng rng(derive_seed(13, "weighted"));
  int produced = 0;
  while (produced < 800) {
    auto variant = rng.coin() ? Variant::Sym : Variant::Anti;
    auto z = sampler.sample(variant, rng);
    if (!z) continue;
    ++produced;
    bool ok = false;
    auto x = sampler.sample_letter_with_cost(z->g, rng.range(0, 3), rng, &ok);
    if (!ok) continue;
    for (const auto& r : verify_creation_bound(act, x, *z, Side::Left)) CHECK(r.pass);
  }
}

TEST_CASE("anti zero-coefficient branch is reported as skipped") {
  Action act(z_on_z());
  auto x = zp(act, 1);
  auto z = make_multi_point(Variant::Anti, quotient(act, {x, zp(act, 2)}),
                            ze(act, 0));
  auto recs = verify_creation_bound(act, x, z, Side::Left);
  bool found = false;
  for (const auto& r : recs)
    if (r.claim == "mu-creation-weighted") {
      CHECK(r.instance.find("skipped-zero-coefficient") != std::string::npos);
      CHECK(r.pass);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("mu is Q-compatible across the quotient") {
  Action act(z_on_z());
  PointSampler sampler(act, 5, 4, 2);
  Rng rng(derive_seed(17, "qcompat"));
  int produced = 0;
  while (produced < 1000) {
    auto z = sampler.sample(Variant::Full, rng);
    if (!z) continue;
    ++produced;
    CHECK(verify_mu_q_compatibility(act, z->tuple, z->g).pass);
  }
}

TEST_CASE("omega is I-symmetric under the flip involution") {
  Action act(z_on_z_flip());
  PointSampler sampler(act, 5, 4, 2);
  Rng rng(derive_seed(19, "involution"));
  int produced = 0;
  while (produced < 1000) {
    auto z = sampler.sample(Variant::Full, rng);
    if (!z) continue;
    ++produced;
    CHECK(verify_omega_involution(act, *z).pass);
  }
}

TEST_CASE("exact shells are finite, graded, and exhaustive at small radius") {
  Action act(z_on_z());
  for (std::int64_t radius = 0; radius <= 4; ++radius) {
    auto shell = enumerate_shell(act, radius, 2);
    CHECK(!shell.empty());
    for (const auto& z : shell) CHECK(length_star(act, z) == radius);
  }
  // spot check: the radius-1 shell with g = 0 holds exactly the cost-zero
  // letters {0} with multiplicity one, so (|z|_0, |z|_1) = (1, 0).
  auto shell1 = enumerate_shell(act, 1, 0);
  REQUIRE(shell1.size() == 1);
  CHECK(shell1[0].multi.degree() == 1);
}

TEST_CASE("decay sweep: pointwise bound certification and shrinking envelope") {
  Action act(z_on_z());
  DecayParams params;
  params.test = DecayTest::Creation;
  params.variant = Variant::Sym;
  params.max_radius = 7;
  params.gamma_radius = 2;
  params.letter = zp(act, 1);
  auto sweep = decay_sweep(act, params);
  REQUIRE(sweep.rows.size() == 8);
  for (const auto& r : sweep.records) CHECK(r.pass);
  // the measured envelope at the largest exact radius sits well below the
  // vacuum-scale values
  CHECK(sweep.rows.back().sup_value < sweep.rows[1].sup_bound);

  DecayParams tparams;
  tparams.test = DecayTest::Translation;
  tparams.variant = Variant::Sym;
  tparams.max_radius = 6;
  tparams.gamma_radius = 2;
  tparams.left = ze(act, 1);
  tparams.right = ze(act, 1);
  auto tsweep = decay_sweep(act, tparams);
  for (const auto& r : tsweep.records) CHECK(r.pass);
  // 4R/R^2 envelope: sup at the last exact shell is at most 4/R
  const auto& last = tsweep.rows.back();
  CHECK(last.sup_value <= Rational(4, last.radius));
}

TEST_CASE("predicted crossing radius and sampled envelope below threshold") {
  Action act(z_on_z());
  auto x = zp(act, 1);
  const Rational threshold(1, 4);  // small radius keeps the unit test quick
  auto radius = creation_bound_crossing_radius(act.base_length(x), threshold);
  CHECK(radius > 0);
  // the bound max at the crossing radius is at or under the threshold
  Rational worst(0);
  for (std::int64_t n = 1; n <= radius; ++n) {
    Rational b(2 * (4 * n + 4 + 1), n * n - n + radius);
    if (worst < b) worst = b;
  }
  CHECK(worst <= threshold);
  auto rec = sampled_envelope_record(act, x, radius, 2, 300,
                                     derive_seed(23, "envelope"), threshold);
  CHECK(rec.pass);
}

TEST_CASE("sampler determinism: same seed, same stream") {
  Action act(z_on_z());
  PointSampler s1(act, 5, 4, 2), s2(act, 5, 4, 2);
  Rng r1(derive_seed(99, "det")), r2(derive_seed(99, "det"));
  for (int i = 0; i < 200; ++i) {
    auto a = s1.sample(Variant::Full, r1);
    auto b = s2.sample(Variant::Full, r2);
    CHECK(a.has_value() == b.has_value());
    if (a && b) CHECK(*a == *b);
  }
}
