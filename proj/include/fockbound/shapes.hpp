#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fockbound/words.hpp"

namespace fockbound {

// One generator of a finite union of sets s Gamma t, with s, t multiset
// words. The full variant reads the union pulled back through Q, the anti
// variant intersected with the simple words.
struct ShapeGenerator {
  MultisetWord left, right;
  bool operator==(const ShapeGenerator&) const = default;
};

// A member of the smallness family: finitely many (s, t) generators.
// Generators are interned into a flat code table so that shell covers with
// hundreds of thousands of pairs stay cheap to hold and query.
class SmallFamilyShape {
 public:
  SmallFamilyShape(const Action& action, Variant variant,
                   std::vector<ShapeGenerator> generators);

  // Streaming construction for large families: `produce` is called once and
  // emits each (left, right) generator pair through its argument. Every
  // letter used must be listed in `letters`.
  using EmitFn = std::function<void(const MultisetWord&, const MultisetWord&)>;
  SmallFamilyShape(const Action& action, Variant variant,
                   std::vector<BasePoint> letters,
                   const std::function<void(const EmitFn&)>& produce);

  Variant variant() const { return variant_; }
  std::size_t generator_count() const { return offsets_.size(); }
  ShapeGenerator generator(std::size_t i) const;
  std::vector<ShapeGenerator> generators() const;

  // Exact membership of z in the represented union. The group component of
  // z pins the free Gamma factor, so membership reduces to checking the
  // multiset splits of the word of z against the generator table.
  bool contains(const Action& action, const SemigroupPoint& z) const;

 private:
  std::string encode(const Action& action, const MultisetWord& left,
                     const MultisetWord& right, bool* ok) const;
  void finalize(std::vector<std::string> codes);

  Variant variant_;
  std::vector<BasePoint> points_;   // interned letters, canonically sorted
  std::vector<char> arena_;         // concatenated generator codes
  std::vector<std::uint32_t> offsets_;  // sorted by code
  std::vector<std::uint32_t> lengths_;
};

bool is_in_shape(const Action& action, const SemigroupPoint& z,
                 const SmallFamilyShape& shape);

// Finite generator family covering every point with length_star <= radius:
// all pairs (s, t) of multiset words over ball_X(radius) with combined
// degree <= radius.
SmallFamilyShape shell_cover(const Action& action, Variant variant,
                             std::int64_t radius);

// The closed-form bound M = n + m + sum |x_i|_X + sum |y_j|_X dominating
// length_star on all of s Gamma t.
std::int64_t generator_length_bound(const Action& action,
                                    const ShapeGenerator& gen);

}  // namespace fockbound
