#include "fockbound/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <string>

namespace fockbound {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Group::Group(GroupDescriptor d) : desc_(std::move(d)) {
  switch (desc_.kind) {
    case GroupKind::Free:
    case GroupKind::FreeAbelian:
      require(desc_.rank >= 1, "group rank must be positive");
      require(desc_.table.empty(), "free kinds take no multiplication table");
      break;
    case GroupKind::Finite: {
      const auto& t = desc_.table;
      require(!t.empty(), "finite group needs a multiplication table");
      const std::int64_t n = static_cast<std::int64_t>(t.size());
      for (const auto& row : t) {
        require(static_cast<std::int64_t>(row.size()) == n, "table must be square");
        for (auto v : row) require(v >= 0 && v < n, "table entry out of range");
      }
      for (std::int64_t i = 0; i < n; ++i)
        require(t[0][i] == i && t[i][0] == i, "element 0 must be the identity");
      for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b)
          for (std::int64_t c = 0; c < n; ++c)
            require(t[t[a][b]][c] == t[a][t[b][c]], "table is not associative");

      fin_inverse_.assign(n, -1);
      for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b)
          if (t[a][b] == 0) fin_inverse_[a] = b;
      for (auto v : fin_inverse_) require(v >= 0, "table element has no inverse");

      fin_gen_count_ = desc_.rank > 0 ? desc_.rank : n - 1;
      require(fin_gen_count_ <= n - 1, "generator count exceeds group size");

      // Word length = distance in the Cayley graph over the generators.
      fin_length_.assign(n, -1);
      fin_length_[0] = 0;
      std::deque<std::int64_t> queue{0};
      while (!queue.empty()) {
        std::int64_t a = queue.front();
        queue.pop_front();
        for (std::int64_t g = 1; g <= fin_gen_count_; ++g) {
          for (std::int64_t next : {t[a][g], t[a][fin_inverse_[g]]}) {
            if (fin_length_[next] < 0) {
              fin_length_[next] = fin_length_[a] + 1;
              queue.push_back(next);
            }
          }
        }
      }
      for (auto v : fin_length_)
        require(v >= 0, "designated generators do not generate the group");
      break;
    }
  }
}

GroupElement Group::identity() const {
  GroupElement e;
  switch (desc_.kind) {
    case GroupKind::Free:
      break;
    case GroupKind::FreeAbelian:
      e.data.assign(static_cast<std::size_t>(desc_.rank), 0);
      break;
    case GroupKind::Finite:
      e.data.assign(1, 0);
      break;
  }
  return e;
}

bool Group::is_identity(const GroupElement& a) const { return length(a) == 0; }

GroupElement Group::generator(std::int64_t i) const {
  const std::int64_t max_gen =
      desc_.kind == GroupKind::Finite ? fin_gen_count_ : desc_.rank;
  require(i != 0 && std::llabs(i) <= max_gen, "generator index out of range");
  GroupElement g = identity();
  switch (desc_.kind) {
    case GroupKind::Free:
      g.data.push_back(i);
      break;
    case GroupKind::FreeAbelian:
      g.data[static_cast<std::size_t>(std::llabs(i)) - 1] = i > 0 ? 1 : -1;
      break;
    case GroupKind::Finite:
      g.data[0] = i > 0 ? i : fin_inverse_[static_cast<std::size_t>(-i)];
      break;
  }
  return g;
}

GroupElement Group::from_letters(std::span<const std::int64_t> letters) const {
  GroupElement acc = identity();
  for (auto l : letters) acc = multiply(acc, generator(l));
  return acc;
}

GroupElement Group::multiply(const GroupElement& a, const GroupElement& b) const {
  GroupElement r;
  switch (desc_.kind) {
    case GroupKind::Free: {
      r.data = a.data;
      for (auto l : b.data) {
        if (!r.data.empty() && r.data.back() == -l)
          r.data.pop_back();
        else
          r.data.push_back(l);
      }
      break;
    }
    case GroupKind::FreeAbelian: {
      r.data.resize(a.data.size());
      for (std::size_t i = 0; i < a.data.size(); ++i)
        r.data[i] = a.data[i] + b.data[i];
      break;
    }
    case GroupKind::Finite:
      r.data.assign(1, desc_.table[static_cast<std::size_t>(a.data[0])]
                                  [static_cast<std::size_t>(b.data[0])]);
      break;
  }
  return r;
}

GroupElement Group::inverse(const GroupElement& a) const {
  GroupElement r;
  switch (desc_.kind) {
    case GroupKind::Free:
      r.data.reserve(a.data.size());
      for (auto it = a.data.rbegin(); it != a.data.rend(); ++it)
        r.data.push_back(-*it);
      break;
    case GroupKind::FreeAbelian:
      r.data.resize(a.data.size());
      for (std::size_t i = 0; i < a.data.size(); ++i) r.data[i] = -a.data[i];
      break;
    case GroupKind::Finite:
      r.data.assign(1, fin_inverse_[static_cast<std::size_t>(a.data[0])]);
      break;
  }
  return r;
}

std::int64_t Group::length(const GroupElement& a) const {
  switch (desc_.kind) {
    case GroupKind::Free:
      return static_cast<std::int64_t>(a.data.size());
    case GroupKind::FreeAbelian: {
      std::int64_t s = 0;
      for (auto e : a.data) s += std::llabs(e);
      return s;
    }
    case GroupKind::Finite:
      return fin_length_[static_cast<std::size_t>(a.data[0])];
  }
  return 0;
}

int Group::compare(const GroupElement& a, const GroupElement& b) const {
  std::int64_t la = length(a), lb = length(b);
  if (la != lb) return la < lb ? -1 : 1;
  if (a.data != b.data)
    return std::lexicographical_compare(a.data.begin(), a.data.end(),
                                        b.data.begin(), b.data.end())
               ? -1
               : 1;
  return 0;
}

std::vector<GroupElement> Group::ball(std::int64_t radius) const {
  require(radius >= 0, "ball radius must be nonnegative");
  std::vector<GroupElement> out;
  switch (desc_.kind) {
    case GroupKind::Free: {
      // Non-backtracking extension enumerates each reduced word once.
      std::vector<GroupElement> frontier{identity()};
      out.push_back(identity());
      for (std::int64_t r = 1; r <= radius; ++r) {
        std::vector<GroupElement> next;
        for (const auto& w : frontier) {
          for (std::int64_t g = 1; g <= desc_.rank; ++g) {
            for (std::int64_t l : {g, -g}) {
              if (!w.data.empty() && w.data.back() == -l) continue;
              GroupElement e = w;
              e.data.push_back(l);
              next.push_back(std::move(e));
            }
          }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
      }
      break;
    }
    case GroupKind::FreeAbelian: {
      GroupElement cur = identity();
      auto rec = [&](auto&& self, std::size_t i, std::int64_t budget) -> void {
        if (i + 1 == cur.data.size()) {
          for (std::int64_t v = -budget; v <= budget; ++v) {
            cur.data[i] = v;
            out.push_back(cur);
          }
          return;
        }
        for (std::int64_t v = -budget; v <= budget; ++v) {
          cur.data[i] = v;
          self(self, i + 1, budget - std::llabs(v));
        }
      };
      if (cur.data.empty())
        out.push_back(cur);
      else
        rec(rec, 0, radius);
      break;
    }
    case GroupKind::Finite: {
      for (std::size_t i = 0; i < desc_.table.size(); ++i) {
        if (fin_length_[i] <= radius) {
          GroupElement e;
          e.data.assign(1, static_cast<std::int64_t>(i));
          out.push_back(std::move(e));
        }
      }
      break;
    }
  }
  std::sort(out.begin(), out.end(),
            [this](const GroupElement& a, const GroupElement& b) {
              return compare(a, b) < 0;
            });
  return out;
}

std::optional<std::size_t> Group::order() const {
  if (desc_.kind == GroupKind::Finite) return desc_.table.size();
  return std::nullopt;
}

void Group::validate(const GroupElement& a) const {
  switch (desc_.kind) {
    case GroupKind::Free:
      for (std::size_t i = 0; i < a.data.size(); ++i) {
        require(a.data[i] != 0 && std::llabs(a.data[i]) <= desc_.rank,
                "letter out of range");
        require(i == 0 || a.data[i] != -a.data[i - 1], "word is not reduced");
      }
      break;
    case GroupKind::FreeAbelian:
      require(static_cast<std::int64_t>(a.data.size()) == desc_.rank,
              "exponent vector has wrong rank");
      break;
    case GroupKind::Finite:
      require(a.data.size() == 1 && a.data[0] >= 0 &&
                  a.data[0] < static_cast<std::int64_t>(desc_.table.size()),
              "element index out of range");
      break;
  }
}

}  // namespace fockbound
