#include "fockbound/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>
#include <vector>

namespace fockbound {

namespace {

[[noreturn]] void fail(std::string_view text, const char* what) {
  throw std::invalid_argument("cannot parse '" + std::string(text) + "': " + what);
}

std::int64_t parse_int(std::string_view s, std::string_view ctx) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(ctx, "bad integer");
  return v;
}

// Split at top level by `sep`, ignoring separators nested in () or {}.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

}  // namespace

std::string to_text(const Group& group, const GroupElement& g) {
  if (group.is_identity(g)) return "e";
  switch (group.kind()) {
    case GroupKind::Free: {
      std::string s;
      for (auto l : g.data) {
        std::int64_t idx = l > 0 ? l : -l;
        if (idx > 26) fail("", "free rank beyond 26 has no letter form");
        s += static_cast<char>((l > 0 ? 'a' : 'A') + idx - 1);
      }
      return s;
    }
    case GroupKind::FreeAbelian: {
      std::string s = "(";
      for (std::size_t i = 0; i < g.data.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(g.data[i]);
      }
      return s + ")";
    }
    case GroupKind::Finite:
      return "#" + std::to_string(g.data[0]);
  }
  return "e";
}

GroupElement group_element_from_text(const Group& group, std::string_view text) {
  if (text == "e") return group.identity();
  switch (group.kind()) {
    case GroupKind::Free: {
      std::vector<std::int64_t> letters;
      for (char c : text) {
        if (c >= 'a' && c <= 'z')
          letters.push_back(c - 'a' + 1);
        else if (c >= 'A' && c <= 'Z')
          letters.push_back(-(c - 'A' + 1));
        else
          fail(text, "expected generator letters");
      }
      return group.from_letters(letters);
    }
    case GroupKind::FreeAbelian: {
      if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        fail(text, "expected (e1;e2;...)");
      auto parts = split_top(text.substr(1, text.size() - 2), ';');
      if (static_cast<std::int64_t>(parts.size()) != group.rank())
        fail(text, "wrong number of exponents");
      GroupElement g = group.identity();
      for (std::size_t i = 0; i < parts.size(); ++i)
        g.data[i] = parse_int(parts[i], text);
      return g;
    }
    case GroupKind::Finite: {
      if (text.empty() || text.front() != '#') fail(text, "expected #index");
      GroupElement g;
      g.data.assign(1, parse_int(text.substr(1), text));
      group.validate(g);
      return g;
    }
  }
  fail(text, "unknown group kind");
}

std::string to_text(const Action& action, const BasePoint& p) {
  std::string s = "o" + std::to_string(p.orbit);
  if (!action.group().is_identity(p.shift))
    s += "@" + to_text(action.group(), p.shift);
  return s;
}

BasePoint base_point_from_text(const Action& action, std::string_view text) {
  if (text.empty() || text.front() != 'o') fail(text, "expected o<orbit>");
  auto at = text.find('@');
  auto orbit_str = text.substr(1, at == std::string_view::npos ? at : at - 1);
  auto orbit = static_cast<std::uint32_t>(parse_int(orbit_str, text));
  GroupElement shift =
      at == std::string_view::npos
          ? action.group().identity()
          : group_element_from_text(action.group(), text.substr(at + 1));
  return action.canonical(orbit, shift);
}

std::string tuple_to_text(const Action& action, const TupleWord& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += to_text(action, w[i]);
  }
  return s + ")";
}

TupleWord tuple_from_text(const Action& action, std::string_view text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    fail(text, "expected (p1,p2,...)");
  auto body = text.substr(1, text.size() - 2);
  TupleWord w;
  if (body.empty()) return w;
  for (auto part : split_top(body, ','))
    w.push_back(base_point_from_text(action, part));
  return w;
}

std::string multiset_to_text(const Action& action, const MultisetWord& w) {
  std::string s = "{";
  for (std::size_t i = 0; i < w.entries.size(); ++i) {
    if (i) s += ',';
    s += to_text(action, w.entries[i].first);
    s += ':';
    s += std::to_string(w.entries[i].second);
  }
  return s + "}";
}

MultisetWord multiset_from_text(const Action& action, std::string_view text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    fail(text, "expected {p:k,...}");
  auto body = text.substr(1, text.size() - 2);
  MultisetWord w;
  if (body.empty()) return w;
  TupleWord letters;
  for (auto part : split_top(body, ',')) {
    auto fields = split_top(part, ':');
    if (fields.size() != 2) fail(text, "expected point:multiplicity");
    auto p = base_point_from_text(action, fields[0]);
    auto k = parse_int(fields[1], text);
    if (k <= 0) fail(text, "multiplicity must be positive");
    for (std::int64_t i = 0; i < k; ++i) letters.push_back(p);
  }
  return quotient(action, letters);
}

std::string to_text(const Action& action, const SemigroupPoint& z) {
  std::string g = to_text(action.group(), z.g);
  if (z.variant == Variant::Full) {
    std::string s = "(";
    for (std::size_t i = 0; i < z.tuple.size(); ++i) {
      if (i) s += ',';
      s += to_text(action, z.tuple[i]);
    }
    return s + "|" + g + ")";
  }
  std::string s = "{";
  for (std::size_t i = 0; i < z.multi.entries.size(); ++i) {
    if (i) s += ',';
    s += to_text(action, z.multi.entries[i].first);
    s += ':';
    s += std::to_string(z.multi.entries[i].second);
  }
  return s + "|" + g + "}";
}

SemigroupPoint point_from_text(const Action& action, Variant variant,
                               std::string_view text) {
  char open = variant == Variant::Full ? '(' : '{';
  char close = variant == Variant::Full ? ')' : '}';
  if (text.size() < 3 || text.front() != open || text.back() != close)
    fail(text, "expected (word|g) or {word|g}");
  auto body = text.substr(1, text.size() - 2);
  auto parts = split_top(body, '|');
  if (parts.size() != 2) fail(text, "expected word|group");
  auto g = group_element_from_text(action.group(), parts[1]);
  if (variant == Variant::Full) {
    TupleWord w;
    if (!parts[0].empty())
      for (auto part : split_top(parts[0], ','))
        w.push_back(base_point_from_text(action, part));
    return make_full_point(std::move(w), std::move(g));
  }
  MultisetWord w = multiset_from_text(
      action, "{" + std::string(parts[0]) + "}");
  return make_multi_point(variant, std::move(w), std::move(g));
}

std::string to_text(const Rational& r) { return r.to_string(); }

Rational rational_from_text(std::string_view text) {
  auto parts = split_top(text, '/');
  if (parts.size() == 1) return Rational(parse_int(parts[0], text));
  if (parts.size() == 2)
    return Rational(parse_int(parts[0], text), parse_int(parts[1], text));
  fail(text, "expected p or p/q");
}

std::string to_text(const ExactScalar& s) { return s.to_string(); }

ExactScalar scalar_from_text(std::string_view text) {
  auto star = text.find("*sqrt(");
  if (star == std::string_view::npos) return ExactScalar(rational_from_text(text));
  if (text.back() != ')') fail(text, "expected *sqrt(k)");
  auto coeff = rational_from_text(text.substr(0, star));
  auto k = parse_int(text.substr(star + 6, text.size() - star - 7), text);
  return ExactScalar(coeff, k);
}

}  // namespace fockbound
