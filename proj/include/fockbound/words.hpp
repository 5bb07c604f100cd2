#pragma once

#include <cstdint>
#include <vector>

#include "fockbound/action.hpp"

namespace fockbound {

enum class Variant { Full, Sym, Anti };
enum class Side { Left, Right };

const char* variant_name(Variant v);
Variant variant_from_name(const std::string& name);

// Ordered word over X; the empty tuple is the semigroup unit.
using TupleWord = std::vector<BasePoint>;

// Finitely supported multiset over X, entries sorted canonically with
// positive multiplicities.
struct MultisetWord {
  std::vector<std::pair<BasePoint, std::int64_t>> entries;
  bool operator==(const MultisetWord&) const = default;

  std::int64_t degree() const;
  bool empty() const { return entries.empty(); }
  bool simple() const;  // all multiplicities 1, i.e. an element of the simple sets
  std::int64_t multiplicity(const Action& action, const BasePoint& x) const;
};

// One point of S x| Gamma: a word of the chosen flavor and a group element.
// The represented element is (s, g) = s*g = g * pi_{g^-1}(s).
struct SemigroupPoint {
  Variant variant = Variant::Full;
  TupleWord tuple;     // Full only
  MultisetWord multi;  // Sym / Anti only
  GroupElement g;
  bool operator==(const SemigroupPoint&) const = default;
};

SemigroupPoint make_full_point(TupleWord word, GroupElement g);
SemigroupPoint make_multi_point(Variant v, MultisetWord word, GroupElement g);
SemigroupPoint unit_point(const Action& action, Variant v);

TupleWord concat(const TupleWord& a, const TupleWord& b);

MultisetWord quotient(const Action& action, const TupleWord& x);
MultisetWord multiset_sum(const Action& action, const MultisetWord& a,
                          const MultisetWord& b);
// Fixed section: letters emitted in the global canonical point order.
TupleWord section(const MultisetWord& y);

// Sign of the permutation sorting x into section(quotient(x)).
// Precondition: letters pairwise distinct.
int sign_of(const Action& action, const TupleWord& x);

TupleWord act_tuple(const Action& action, const GroupElement& g, const TupleWord& w);
MultisetWord act_multiset(const Action& action, const GroupElement& g,
                          const MultisetWord& w);
// I(x1,...,xn) = (I xn, ..., I x1); on multisets order is immaterial.
TupleWord involute_tuple(const Action& action, const TupleWord& w);
MultisetWord involute_multiset(const Action& action, const MultisetWord& w);

// Semidirect product law (s,g)(t,h) = (s * pi_g(t), gh).
SemigroupPoint multiply(const Action& action, const SemigroupPoint& a,
                        const SemigroupPoint& b);
// I(s,g) = (pi_{g^-1}(I s), g^-1).
SemigroupPoint involute(const Action& action, const SemigroupPoint& z);

std::int64_t word_degree(const SemigroupPoint& z);
// Letters of the word expanded with multiplicity (tuple order for Full,
// canonical order otherwise).
std::vector<BasePoint> point_letters(const SemigroupPoint& z);

std::int64_t length0(const Action& action, const SemigroupPoint& z);
std::int64_t length1(const Action& action, const SemigroupPoint& z);
std::int64_t length_star(const Action& action, const SemigroupPoint& z);

// min{ |x|_X, |pi_{g^-1}(x)|_X }, the per-letter contribution to length1.
std::int64_t letter_min_length(const Action& action, const GroupElement& g,
                               const BasePoint& x);

}  // namespace fockbound
