#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fockbound/group.hpp"
#include "fockbound/rational.hpp"

namespace fockbound {

// A point of the acted set X, stored as (orbit, canonical coset shift):
// the point is shift * rep(orbit), where the shift is the minimal-length
// element of its stabilizer coset, ties broken lexicographically. With
// that normalization, structural equality is set-element equality.
struct BasePoint {
  std::uint32_t orbit = 0;
  GroupElement shift;
  bool operator==(const BasePoint&) const = default;
};

struct OrbitSpec {
  std::vector<GroupElement> stabilizer_generators;  // of a finite subgroup
  std::optional<Rational> weight;                   // Araki-Woods weight tag
};

// I(rep(a)) = shift * rep(b); the reverse direction is induced.
struct InvolutionPair {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  GroupElement shift;
};

struct ActionDescriptor {
  GroupDescriptor group;
  std::vector<OrbitSpec> orbits;
  std::vector<InvolutionPair> involution;  // empty = identity involution
};

class Action {
 public:
  explicit Action(ActionDescriptor d);

  const Group& group() const { return group_; }
  const ActionDescriptor& descriptor() const { return desc_; }
  std::uint32_t orbit_count() const {
    return static_cast<std::uint32_t>(desc_.orbits.size());
  }

  BasePoint representative(std::uint32_t orbit) const;
  // Canonical point shift*rep(orbit) for an arbitrary shift.
  BasePoint canonical(std::uint32_t orbit, const GroupElement& shift) const;

  BasePoint act(const GroupElement& g, const BasePoint& x) const;

  // |x|_X = min{ |g| : g * rep(orbit(x)) = x }; the canonical shift attains it.
  std::int64_t base_length(const BasePoint& x) const;

  // { x : |x|_X <= radius }, sorted canonically.
  std::vector<BasePoint> ball(std::int64_t radius) const;

  BasePoint involute(const BasePoint& x) const;
  bool involution_is_identity() const;

  const std::vector<GroupElement>& stabilizer(std::uint32_t orbit) const;
  std::optional<Rational> weight_tag(std::uint32_t orbit) const;

  // Strict total order on points: (orbit, shift length, shift lexicographic).
  int compare(const BasePoint& a, const BasePoint& b) const;
  bool less(const BasePoint& a, const BasePoint& b) const {
    return compare(a, b) < 0;
  }

 private:
  ActionDescriptor desc_;
  Group group_;
  std::vector<std::vector<GroupElement>> stabilizers_;  // closed element sets
  std::vector<std::uint32_t> pair_orbit_;
  std::vector<GroupElement> pair_shift_;
};

// Comparator usable with ordered standard containers.
struct PointLess {
  const Action* action = nullptr;
  bool operator()(const BasePoint& a, const BasePoint& b) const {
    return action->compare(a, b) < 0;
  }
};

}  // namespace fockbound
