#pragma once

#include <string>
#include <string_view>

#include "fockbound/rational.hpp"
#include "fockbound/words.hpp"

namespace fockbound {

// Canonical text forms. Printing is deterministic; parsing accepts exactly
// the printed grammar and re-canonicalizes, so parse(print(v)) == v.
//
//   group element   e | abA (free) | (3;-2) (free-abelian) | #4 (finite)
//   base point      o0 | o1@(3;-2)
//   tuple word      (p1,p2,...)         empty: ()
//   multiset word   {p:2,q:1}           empty: {}
//   semigroup point (p1,p2|g)  {p:2|g}  empty word: (|g) {|g}
//   scalar          -3/2*sqrt(2) | 5/3 | 2*sqrt(7) | 0

std::string to_text(const Group& group, const GroupElement& g);
GroupElement group_element_from_text(const Group& group, std::string_view text);

std::string to_text(const Action& action, const BasePoint& p);
BasePoint base_point_from_text(const Action& action, std::string_view text);

std::string tuple_to_text(const Action& action, const TupleWord& w);
TupleWord tuple_from_text(const Action& action, std::string_view text);

std::string multiset_to_text(const Action& action, const MultisetWord& w);
MultisetWord multiset_from_text(const Action& action, std::string_view text);

std::string to_text(const Action& action, const SemigroupPoint& z);
SemigroupPoint point_from_text(const Action& action, Variant variant,
                               std::string_view text);

std::string to_text(const Rational& r);
Rational rational_from_text(std::string_view text);

std::string to_text(const ExactScalar& s);
ExactScalar scalar_from_text(std::string_view text);

}  // namespace fockbound
