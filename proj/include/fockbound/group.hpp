#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace fockbound {

enum class GroupKind { Free, FreeAbelian, Finite };

struct GroupDescriptor {
  GroupKind kind = GroupKind::FreeAbelian;
  // Free / FreeAbelian: rank. Finite: number of designated generators
  // (elements 1..rank of the table); 0 means every non-identity element.
  std::int64_t rank = 1;
  // Finite only: row-major multiplication table, element 0 = identity.
  std::vector<std::vector<std::int64_t>> table;
};

// Canonical element of a configured group. `data` is kind-specific:
//   Free        reduced word of signed 1-based generator indices
//   FreeAbelian exponent vector, one entry per generator
//   Finite      a single element index into the table
// Elements are only meaningful relative to the Group that produced them.
struct GroupElement {
  std::vector<std::int64_t> data;
  bool operator==(const GroupElement&) const = default;
};

class Group {
 public:
  explicit Group(GroupDescriptor d);

  const GroupDescriptor& descriptor() const { return desc_; }
  GroupKind kind() const { return desc_.kind; }
  std::int64_t rank() const { return desc_.rank; }

  GroupElement identity() const;
  bool is_identity(const GroupElement& a) const;
  GroupElement generator(std::int64_t i) const;  // 1-based; negative = inverse
  GroupElement from_letters(std::span<const std::int64_t> letters) const;

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;

  // Proper symmetric word length: |g| = |g^-1|, |gh| <= |g|+|h|, |g|=0 iff g=e.
  std::int64_t length(const GroupElement& a) const;

  // Strict total order: (length, data lexicographic). Used for all
  // canonical tie-breaking.
  int compare(const GroupElement& a, const GroupElement& b) const;

  // All elements of length <= radius, sorted by compare().
  std::vector<GroupElement> ball(std::int64_t radius) const;

  std::optional<std::size_t> order() const;  // finite groups only

  void validate(const GroupElement& a) const;

 private:
  GroupDescriptor desc_;
  std::vector<std::int64_t> fin_inverse_;
  std::vector<std::int64_t> fin_length_;
  std::int64_t fin_gen_count_ = 0;
};

}  // namespace fockbound
