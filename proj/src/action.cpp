#include "fockbound/action.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace fockbound {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

constexpr std::size_t kStabilizerCap = 20000;
constexpr std::int64_t kInvolutionCheckRadius = 4;

}  // namespace

Action::Action(ActionDescriptor d) : desc_(std::move(d)), group_(desc_.group) {
  require(!desc_.orbits.empty(), "action needs at least one orbit");

  // A default-constructed element (empty data) reads as the identity.
  auto normalize = [this](GroupElement& g) {
    if (g.data.empty()) g = group_.identity();
  };
  for (auto& orbit : desc_.orbits)
    for (auto& g : orbit.stabilizer_generators) normalize(g);
  for (auto& p : desc_.involution) normalize(p.shift);

  auto elem_less = [this](const GroupElement& a, const GroupElement& b) {
    return group_.compare(a, b) < 0;
  };

  // Close each stabilizer generator set into the full finite subgroup.
  for (const auto& orbit : desc_.orbits) {
    std::set<GroupElement, decltype(elem_less)> closed(elem_less);
    closed.insert(group_.identity());
    std::vector<GroupElement> frontier{group_.identity()};
    for (const auto& g : orbit.stabilizer_generators) {
      group_.validate(g);
      if (closed.insert(g).second) frontier.push_back(g);
      auto inv = group_.inverse(g);
      if (closed.insert(inv).second) frontier.push_back(inv);
    }
    while (!frontier.empty()) {
      std::vector<GroupElement> next;
      for (const auto& a : frontier) {
        for (const auto& g : orbit.stabilizer_generators) {
          for (const auto& h : {group_.multiply(a, g),
                                group_.multiply(a, group_.inverse(g))}) {
            if (closed.insert(h).second) next.push_back(h);
          }
        }
        require(closed.size() <= kStabilizerCap,
                "stabilizer closure exceeds the finiteness cap");
      }
      frontier = std::move(next);
    }
    stabilizers_.emplace_back(closed.begin(), closed.end());
  }

  // Involution tables. An absent spec is the identity involution.
  const auto n = orbit_count();
  pair_orbit_.resize(n);
  pair_shift_.assign(n, group_.identity());
  for (std::uint32_t o = 0; o < n; ++o) pair_orbit_[o] = o;
  if (!desc_.involution.empty()) {
    std::vector<bool> seen(n, false);
    for (const auto& p : desc_.involution) {
      require(p.a < n && p.b < n, "involution pair orbit out of range");
      require(!seen[p.a] && (p.a == p.b || !seen[p.b]),
              "orbit appears in two involution pairs");
      group_.validate(p.shift);
      seen[p.a] = seen[p.b] = true;
      pair_orbit_[p.a] = p.b;
      pair_shift_[p.a] = p.shift;
      if (p.a != p.b) {
        pair_orbit_[p.b] = p.a;
        pair_shift_[p.b] = group_.inverse(p.shift);
      }
    }
    for (std::uint32_t o = 0; o < n; ++o)
      require(seen[o], "involution spec must cover every orbit");

    // Well-definedness on cosets: h^-1 Stab_a h must land in Stab_b.
    for (std::uint32_t o = 0; o < n; ++o) {
      const auto& h = pair_shift_[o];
      const auto hinv = group_.inverse(h);
      const auto& target = stabilizers_[pair_orbit_[o]];
      for (const auto& s : stabilizers_[o]) {
        auto conj = group_.multiply(hinv, group_.multiply(s, h));
        bool found = std::any_of(target.begin(), target.end(),
                                 [&](const GroupElement& t) { return t == conj; });
        require(found, "involution shift does not intertwine the stabilizers");
      }
    }
    for (std::uint32_t o = 0; o < n; ++o) {
      auto r = representative(o);
      require(involute(involute(r)) == r, "involution does not square to identity");
    }
    // Length compatibility |Ix| = |x|, needed for shell symmetry downstream.
    for (const auto& x : ball(kInvolutionCheckRadius))
      require(base_length(involute(x)) == base_length(x),
              "involution is not length-compatible on the check ball");
  }
}

BasePoint Action::representative(std::uint32_t orbit) const {
  require(orbit < orbit_count(), "orbit index out of range");
  return BasePoint{orbit, group_.identity()};
}

BasePoint Action::canonical(std::uint32_t orbit, const GroupElement& shift) const {
  require(orbit < orbit_count(), "orbit index out of range");
  const auto& stab = stabilizers_[orbit];
  if (stab.size() == 1) return BasePoint{orbit, shift};
  GroupElement best = shift;
  bool have = false;
  for (const auto& s : stab) {
    auto cand = group_.multiply(shift, s);
    if (!have || group_.compare(cand, best) < 0) {
      best = std::move(cand);
      have = true;
    }
  }
  return BasePoint{orbit, best};
}

BasePoint Action::act(const GroupElement& g, const BasePoint& x) const {
  return canonical(x.orbit, group_.multiply(g, x.shift));
}

std::int64_t Action::base_length(const BasePoint& x) const {
  return group_.length(x.shift);
}

std::vector<BasePoint> Action::ball(std::int64_t radius) const {
  std::set<BasePoint, PointLess> points(PointLess{this});
  const auto shifts = group_.ball(radius);
  for (std::uint32_t o = 0; o < orbit_count(); ++o)
    for (const auto& g : shifts) points.insert(canonical(o, g));
  return {points.begin(), points.end()};
}

BasePoint Action::involute(const BasePoint& x) const {
  return canonical(pair_orbit_[x.orbit],
                   group_.multiply(x.shift, pair_shift_[x.orbit]));
}

bool Action::involution_is_identity() const { return desc_.involution.empty(); }

const std::vector<GroupElement>& Action::stabilizer(std::uint32_t orbit) const {
  require(orbit < orbit_count(), "orbit index out of range");
  return stabilizers_[orbit];
}

std::optional<Rational> Action::weight_tag(std::uint32_t orbit) const {
  require(orbit < orbit_count(), "orbit index out of range");
  return desc_.orbits[orbit].weight;
}

int Action::compare(const BasePoint& a, const BasePoint& b) const {
  if (a.orbit != b.orbit) return a.orbit < b.orbit ? -1 : 1;
  return group_.compare(a.shift, b.shift);
}

}  // namespace fockbound
