#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fockbound/group.hpp"

using namespace fockbound;

namespace {

GroupDescriptor free2() { return {GroupKind::Free, 2, {}}; }
GroupDescriptor z2() { return {GroupKind::FreeAbelian, 2, {}}; }

// Cyclic group of order 3.
GroupDescriptor c3() {
  GroupDescriptor d;
  d.kind = GroupKind::Finite;
  d.rank = 1;
  d.table = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  return d;
}

}  // namespace

TEST_CASE("identity has length zero, and only it") {
  for (auto desc : {free2(), z2(), c3()}) {
    Group g(desc);
    CHECK(g.length(g.identity()) == 0);
    CHECK(g.is_identity(g.identity()));
    for (const auto& a : g.ball(2))
      CHECK((g.length(a) == 0) == (a == g.identity()));
  }
}

TEST_CASE("free group reduced word length") {
  Group g(free2());
  // a b a^-1 stays reduced: length 3
  auto w = g.from_letters(std::vector<std::int64_t>{1, 2, -1});
  CHECK(g.length(w) == 3);
  // a a^-1 cancels
  auto e = g.from_letters(std::vector<std::int64_t>{1, -1});
  CHECK(g.is_identity(e));
  // cancellation across the seam: (a b)(b^-1 a) = a a
  auto ab = g.from_letters(std::vector<std::int64_t>{1, 2});
  auto Ba = g.from_letters(std::vector<std::int64_t>{-2, 1});
  CHECK(g.length(g.multiply(ab, Ba)) == 2);
}

TEST_CASE("free-abelian length is l1 of exponents") {
  Group g(z2());
  GroupElement v = g.identity();
  v.data = {3, -2};
  CHECK(g.length(v) == 5);
  CHECK(g.length(g.inverse(v)) == 5);
}

TEST_CASE("group laws on balls") {
  for (auto desc : {free2(), z2(), c3()}) {
    Group g(desc);
    auto ball = g.ball(2);
    for (const auto& a : ball) {
      CHECK(g.multiply(a, g.identity()) == a);
      CHECK(g.multiply(g.identity(), a) == a);
      CHECK(g.is_identity(g.multiply(a, g.inverse(a))));
      CHECK(g.length(a) == g.length(g.inverse(a)));
      for (const auto& b : ball)
        CHECK(g.length(g.multiply(a, b)) <= g.length(a) + g.length(b));
    }
  }
}

TEST_CASE("ball sizes are exact for the standard kinds") {
  Group f(free2());
  // 1 + 4 + 12 + 36 reduced words
  CHECK(f.ball(3).size() == 53);
  Group z(z2());
  // l1 ball in Z^2: 1 + 4 + 8 = 13
  CHECK(z.ball(2).size() == 13);
  Group c(c3());
  CHECK(c.ball(0).size() == 1);
  CHECK(c.ball(1).size() == 3);
  CHECK(c.order() == std::size_t{3});
}

TEST_CASE("ball ordering is a strict total order and monotone in radius") {
  Group g(free2());
  auto b2 = g.ball(2);
  auto b3 = g.ball(3);
  CHECK(b2.size() <= b3.size());
  for (std::size_t i = 0; i + 1 < b3.size(); ++i)
    CHECK(g.compare(b3[i], b3[i + 1]) < 0);
}

TEST_CASE("finite table validation rejects a non-associative table") {
  GroupDescriptor d;
  d.kind = GroupKind::Finite;
  d.rank = 1;
  d.table = {{0, 1}, {1, 1}};  // 1*1 = 1 but then no inverse / broken structure
  CHECK_THROWS(Group{d});
}
