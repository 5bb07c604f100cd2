#include "fockbound/shapes.hpp"

#include <algorithm>
#include <cstring>
#include <set>
#include <stdexcept>

namespace fockbound {

namespace {

MultisetWord word_of(const Action& action, const SemigroupPoint& z) {
  return z.variant == Variant::Full ? quotient(action, z.tuple) : z.multi;
}

void push_u16(std::string& s, std::uint32_t v) {
  if (v > 0xffff) throw std::invalid_argument("shape generator too large to encode");
  s.push_back(static_cast<char>(v & 0xff));
  s.push_back(static_cast<char>((v >> 8) & 0xff));
}

}  // namespace

SmallFamilyShape::SmallFamilyShape(const Action& action, Variant variant,
                                   std::vector<ShapeGenerator> generators)
    : variant_(variant) {
  std::set<BasePoint, PointLess> letters{PointLess{&action}};
  for (const auto& g : generators) {
    for (const auto& [p, k] : g.left.entries) letters.insert(p);
    for (const auto& [p, k] : g.right.entries) letters.insert(p);
  }
  points_.assign(letters.begin(), letters.end());

  std::vector<std::string> codes;
  codes.reserve(generators.size());
  for (const auto& g : generators) {
    bool ok = true;
    codes.push_back(encode(action, g.left, g.right, &ok));
    if (!ok) throw std::logic_error("interning of own generators cannot fail");
  }
  finalize(std::move(codes));
}

SmallFamilyShape::SmallFamilyShape(
    const Action& action, Variant variant, std::vector<BasePoint> letters,
    const std::function<void(const EmitFn&)>& produce)
    : variant_(variant) {
  std::sort(letters.begin(), letters.end(), PointLess{&action});
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  points_ = std::move(letters);

  std::vector<std::string> codes;
  produce([&](const MultisetWord& left, const MultisetWord& right) {
    bool ok = true;
    codes.push_back(encode(action, left, right, &ok));
    if (!ok)
      throw std::invalid_argument("emitted generator uses an unlisted letter");
  });
  finalize(std::move(codes));
}

void SmallFamilyShape::finalize(std::vector<std::string> codes) {
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  std::size_t total = 0;
  for (const auto& c : codes) total += c.size();
  arena_.reserve(total);
  for (const auto& c : codes) {
    offsets_.push_back(static_cast<std::uint32_t>(arena_.size()));
    lengths_.push_back(static_cast<std::uint32_t>(c.size()));
    arena_.insert(arena_.end(), c.begin(), c.end());
  }
}

std::string SmallFamilyShape::encode(const Action& action,
                                     const MultisetWord& left,
                                     const MultisetWord& right, bool* ok) const {
  std::string code;
  auto put = [&](const MultisetWord& w) {
    push_u16(code, static_cast<std::uint32_t>(w.entries.size()));
    for (const auto& [p, k] : w.entries) {
      auto it = std::lower_bound(points_.begin(), points_.end(), p,
                                 PointLess{&action});
      if (it == points_.end() || !(*it == p)) {
        *ok = false;
        return;
      }
      push_u16(code, static_cast<std::uint32_t>(it - points_.begin()));
      push_u16(code, static_cast<std::uint32_t>(k));
    }
  };
  put(left);
  if (*ok) put(right);
  return code;
}

ShapeGenerator SmallFamilyShape::generator(std::size_t i) const {
  if (i >= offsets_.size()) throw std::out_of_range("generator index");
  const char* p = arena_.data() + offsets_[i];
  auto read_u16 = [&]() {
    std::uint32_t v = static_cast<unsigned char>(p[0]) |
                      (static_cast<std::uint32_t>(static_cast<unsigned char>(p[1])) << 8);
    p += 2;
    return v;
  };
  ShapeGenerator g;
  for (MultisetWord* side : {&g.left, &g.right}) {
    auto n = read_u16();
    for (std::uint32_t k = 0; k < n; ++k) {
      auto id = read_u16();
      auto mult = read_u16();
      side->entries.emplace_back(points_[id], mult);
    }
  }
  return g;
}

std::vector<ShapeGenerator> SmallFamilyShape::generators() const {
  std::vector<ShapeGenerator> out;
  out.reserve(generator_count());
  for (std::size_t i = 0; i < generator_count(); ++i) out.push_back(generator(i));
  return out;
}

bool SmallFamilyShape::contains(const Action& action,
                                const SemigroupPoint& z) const {
  if (z.variant != variant_)
    throw std::invalid_argument("shape and point variants differ");
  // Membership in E cap Z requires a simple word to begin with.
  if (variant_ == Variant::Anti && !z.multi.simple()) return false;

  const MultisetWord w = word_of(action, z);
  const GroupElement ginv = action.group().inverse(z.g);

  auto code_less_than = [&](std::size_t idx, const std::string& needle) {
    const char* a = arena_.data() + offsets_[idx];
    std::size_t na = lengths_[idx];
    std::size_t common = std::min(na, needle.size());
    int c = common == 0 ? 0 : std::memcmp(a, needle.data(), common);
    if (c != 0) return c < 0;
    return na < needle.size();
  };
  auto lookup = [&](const MultisetWord& left, const MultisetWord& right) {
    bool ok = true;
    std::string code = encode(action, left, right, &ok);
    if (!ok) return false;
    std::size_t lo = 0, hi = offsets_.size();
    while (lo < hi) {
      std::size_t mid = lo + (hi - lo) / 2;
      if (code_less_than(mid, code))
        lo = mid + 1;
      else
        hi = mid;
    }
    return lo < offsets_.size() && lengths_[lo] == code.size() &&
           std::memcmp(arena_.data() + offsets_[lo], code.data(), code.size()) == 0;
  };

  // z = (w, g) lies in s Gamma t iff w = s + pi_g(t): enumerate the splits
  // of w into (s, u) and look up (s, pi_{g^-1}(u)).
  const auto& entries = w.entries;
  std::vector<std::int64_t> take(entries.size(), 0);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == entries.size()) {
      MultisetWord left, rest;
      for (std::size_t k = 0; k < entries.size(); ++k) {
        if (take[k] > 0) left.entries.emplace_back(entries[k].first, take[k]);
        if (take[k] < entries[k].second)
          rest.entries.emplace_back(entries[k].first,
                                    entries[k].second - take[k]);
      }
      return lookup(left, act_multiset(action, ginv, rest));
    }
    for (std::int64_t c = 0; c <= entries[i].second; ++c) {
      take[i] = c;
      if (self(self, i + 1)) return true;
    }
    take[i] = 0;
    return false;
  };
  return rec(rec, 0);
}

bool is_in_shape(const Action& action, const SemigroupPoint& z,
                 const SmallFamilyShape& shape) {
  return shape.contains(action, z);
}

SmallFamilyShape shell_cover(const Action& action, Variant variant,
                             std::int64_t radius) {
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  const auto alphabet = action.ball(radius);

  return SmallFamilyShape(
      action, variant, alphabet,
      [&](const SmallFamilyShape::EmitFn& emit) {
        // All multisets over the alphabet, grouped by degree.
        std::vector<std::vector<MultisetWord>> by_degree(
            static_cast<std::size_t>(radius) + 1);
        MultisetWord cur;
        by_degree[0].push_back(cur);
        auto rec = [&](auto&& self, std::size_t first,
                       std::int64_t degree) -> void {
          if (degree > 0)
            by_degree[static_cast<std::size_t>(degree)].push_back(cur);
          if (degree == radius) return;
          for (std::size_t i = first; i < alphabet.size(); ++i) {
            cur.entries.emplace_back(alphabet[i], 1);
            for (std::int64_t k = 1; degree + k <= radius; ++k) {
              cur.entries.back().second = k;
              self(self, i + 1, degree + k);
            }
            cur.entries.pop_back();
          }
        };
        rec(rec, 0, 0);
        for (std::int64_t dl = 0; dl <= radius; ++dl)
          for (std::int64_t dr = 0; dl + dr <= radius; ++dr)
            for (const auto& left : by_degree[static_cast<std::size_t>(dl)])
              for (const auto& right : by_degree[static_cast<std::size_t>(dr)])
                emit(left, right);
      });
}

std::int64_t generator_length_bound(const Action& action,
                                    const ShapeGenerator& gen) {
  std::int64_t bound = gen.left.degree() + gen.right.degree();
  for (const auto& [p, k] : gen.left.entries) bound += k * action.base_length(p);
  for (const auto& [p, k] : gen.right.entries) bound += k * action.base_length(p);
  return bound;
}

}  // namespace fockbound
