#include "fockbound/words.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fockbound {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::Full:
      return "full";
    case Variant::Sym:
      return "sym";
    case Variant::Anti:
      return "anti";
  }
  return "?";
}

Variant variant_from_name(const std::string& name) {
  if (name == "full") return Variant::Full;
  if (name == "sym") return Variant::Sym;
  if (name == "anti") return Variant::Anti;
  throw std::invalid_argument("unknown variant: " + name);
}

std::int64_t MultisetWord::degree() const {
  std::int64_t d = 0;
  for (const auto& [p, k] : entries) d += k;
  return d;
}

bool MultisetWord::simple() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const auto& e) { return e.second == 1; });
}

std::int64_t MultisetWord::multiplicity(const Action& action,
                                        const BasePoint& x) const {
  for (const auto& [p, k] : entries)
    if (p == x) return k;
  (void)action;
  return 0;
}

SemigroupPoint make_full_point(TupleWord word, GroupElement g) {
  SemigroupPoint z;
  z.variant = Variant::Full;
  z.tuple = std::move(word);
  z.g = std::move(g);
  return z;
}

SemigroupPoint make_multi_point(Variant v, MultisetWord word, GroupElement g) {
  if (v == Variant::Full)
    throw std::invalid_argument("full points carry tuple words");
  SemigroupPoint z;
  z.variant = v;
  z.multi = std::move(word);
  z.g = std::move(g);
  return z;
}

SemigroupPoint unit_point(const Action& action, Variant v) {
  SemigroupPoint z;
  z.variant = v;
  z.g = action.group().identity();
  return z;
}

TupleWord concat(const TupleWord& a, const TupleWord& b) {
  TupleWord r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

MultisetWord quotient(const Action& action, const TupleWord& x) {
  TupleWord sorted = x;
  std::sort(sorted.begin(), sorted.end(), PointLess{&action});
  MultisetWord y;
  for (const auto& p : sorted) {
    if (!y.entries.empty() && y.entries.back().first == p)
      ++y.entries.back().second;
    else
      y.entries.emplace_back(p, 1);
  }
  return y;
}

MultisetWord multiset_sum(const Action& action, const MultisetWord& a,
                          const MultisetWord& b) {
  MultisetWord r;
  std::size_t i = 0, j = 0;
  while (i < a.entries.size() || j < b.entries.size()) {
    if (j == b.entries.size() ||
        (i < a.entries.size() &&
         action.compare(a.entries[i].first, b.entries[j].first) < 0)) {
      r.entries.push_back(a.entries[i++]);
    } else if (i == a.entries.size() ||
               action.compare(b.entries[j].first, a.entries[i].first) < 0) {
      r.entries.push_back(b.entries[j++]);
    } else {
      r.entries.emplace_back(a.entries[i].first,
                             a.entries[i].second + b.entries[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

TupleWord section(const MultisetWord& y) {
  TupleWord t;
  for (const auto& [p, k] : y.entries)
    for (std::int64_t i = 0; i < k; ++i) t.push_back(p);
  return t;
}

int sign_of(const Action& action, const TupleWord& x) {
  std::int64_t inversions = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      int c = action.compare(x[i], x[j]);
      if (c == 0) throw std::invalid_argument("sign_of needs pairwise distinct letters");
      if (c > 0) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

TupleWord act_tuple(const Action& action, const GroupElement& g, const TupleWord& w) {
  TupleWord r;
  r.reserve(w.size());
  for (const auto& p : w) r.push_back(action.act(g, p));
  return r;
}

MultisetWord act_multiset(const Action& action, const GroupElement& g,
                          const MultisetWord& w) {
  MultisetWord r;
  r.entries.reserve(w.entries.size());
  for (const auto& [p, k] : w.entries) r.entries.emplace_back(action.act(g, p), k);
  std::sort(r.entries.begin(), r.entries.end(),
            [&](const auto& a, const auto& b) {
              return action.compare(a.first, b.first) < 0;
            });
  return r;
}

TupleWord involute_tuple(const Action& action, const TupleWord& w) {
  TupleWord r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(action.involute(*it));
  return r;
}

MultisetWord involute_multiset(const Action& action, const MultisetWord& w) {
  MultisetWord r;
  r.entries.reserve(w.entries.size());
  for (const auto& [p, k] : w.entries) r.entries.emplace_back(action.involute(p), k);
  std::sort(r.entries.begin(), r.entries.end(),
            [&](const auto& a, const auto& b) {
              return action.compare(a.first, b.first) < 0;
            });
  return r;
}

SemigroupPoint multiply(const Action& action, const SemigroupPoint& a,
                        const SemigroupPoint& b) {
  if (a.variant != b.variant)
    throw std::invalid_argument("cannot multiply points of different variants");
  SemigroupPoint r;
  r.variant = a.variant;
  r.g = action.group().multiply(a.g, b.g);
  if (a.variant == Variant::Full)
    r.tuple = concat(a.tuple, act_tuple(action, a.g, b.tuple));
  else
    r.multi = multiset_sum(action, a.multi, act_multiset(action, a.g, b.multi));
  return r;
}

SemigroupPoint involute(const Action& action, const SemigroupPoint& z) {
  SemigroupPoint r;
  r.variant = z.variant;
  r.g = action.group().inverse(z.g);
  if (z.variant == Variant::Full)
    r.tuple = act_tuple(action, r.g, involute_tuple(action, z.tuple));
  else
    r.multi = act_multiset(action, r.g, involute_multiset(action, z.multi));
  return r;
}

std::int64_t word_degree(const SemigroupPoint& z) {
  return z.variant == Variant::Full ? static_cast<std::int64_t>(z.tuple.size())
                                    : z.multi.degree();
}

std::vector<BasePoint> point_letters(const SemigroupPoint& z) {
  if (z.variant == Variant::Full) return z.tuple;
  return section(z.multi);
}

std::int64_t letter_min_length(const Action& action, const GroupElement& g,
                               const BasePoint& x) {
  auto moved = action.act(action.group().inverse(g), x);
  return std::min(action.base_length(x), action.base_length(moved));
}

std::int64_t length0(const Action& action, const SemigroupPoint& z) {
  (void)action;
  return word_degree(z);
}

std::int64_t length1(const Action& action, const SemigroupPoint& z) {
  std::int64_t s = 0;
  if (z.variant == Variant::Full) {
    for (const auto& x : z.tuple) s += letter_min_length(action, z.g, x);
  } else {
    for (const auto& [x, k] : z.multi.entries)
      s += k * letter_min_length(action, z.g, x);
  }
  return s;
}

std::int64_t length_star(const Action& action, const SemigroupPoint& z) {
  return length0(action, z) + length1(action, z);
}

}  // namespace fockbound
