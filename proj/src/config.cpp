#include "fockbound/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fockbound/serialize.hpp"

namespace fockbound {

namespace {

[[noreturn]] void config_error(const std::string& origin, int line,
                               const std::string& msg) {
  throw std::invalid_argument(origin + ":" + std::to_string(line) + ": " + msg);
}

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::int64_t to_int(const std::string& s, const std::string& origin, int line) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    config_error(origin, line, "expected an integer, got '" + s + "'");
  return v;
}

}  // namespace

KeyValueFile KeyValueFile::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path);
}

KeyValueFile KeyValueFile::parse_text(const std::string& text,
                                      const std::string& origin) {
  KeyValueFile kv;
  kv.origin_ = origin;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      config_error(origin, lineno, "expected 'key = value'");
    Entry e{trim(line.substr(0, eq)), trim(line.substr(eq + 1)), lineno};
    if (e.key.empty()) config_error(origin, lineno, "empty key");
    kv.entries_.push_back(std::move(e));
  }
  return kv;
}

bool KeyValueFile::has(const std::string& key) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const Entry& e) { return e.key == key; });
}

const std::string& KeyValueFile::get(const std::string& key) const {
  for (const auto& e : entries_)
    if (e.key == key) return e.value;
  throw std::invalid_argument(origin_ + ": missing required key '" + key + "'");
}

std::string KeyValueFile::get_or(const std::string& key,
                                 const std::string& fallback) const {
  return has(key) ? get(key) : fallback;
}

std::vector<std::string> KeyValueFile::get_all(const std::string& key) const {
  std::vector<std::string> out;
  for (const auto& e : entries_)
    if (e.key == key) out.push_back(e.value);
  return out;
}

int KeyValueFile::line_of(const std::string& key) const {
  for (const auto& e : entries_)
    if (e.key == key) return e.line;
  return 0;
}

std::vector<std::string> KeyValueFile::keys() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) out.push_back(e.key);
  return out;
}

ActionDescriptor action_descriptor_from_config(const KeyValueFile& kv) {
  const auto& origin = kv.origin();
  ActionDescriptor d;

  auto group_fields = split_ws(kv.get("group"));
  int group_line = kv.line_of("group");
  if (group_fields.empty()) config_error(origin, group_line, "empty group spec");
  const auto& kind = group_fields[0];
  if (kind == "free" || kind == "free-abelian") {
    d.group.kind = kind == "free" ? GroupKind::Free : GroupKind::FreeAbelian;
    if (group_fields.size() != 2)
      config_error(origin, group_line, "expected 'group = " + kind + " <rank>'");
    d.group.rank = to_int(group_fields[1], origin, group_line);
  } else if (kind == "finite") {
    d.group.kind = GroupKind::Finite;
    if (!kv.has("table"))
      config_error(origin, group_line, "finite group needs 'table = ...'");
    int table_line = kv.line_of("table");
    std::istringstream rows(kv.get("table"));
    std::string row;
    while (std::getline(rows, row, ',')) {
      std::vector<std::int64_t> r;
      for (const auto& tok : split_ws(row)) r.push_back(to_int(tok, origin, table_line));
      if (!r.empty()) d.group.table.push_back(std::move(r));
    }
    d.group.rank = kv.has("generators")
                       ? to_int(kv.get("generators"), origin, kv.line_of("generators"))
                       : 0;
  } else {
    config_error(origin, group_line, "unknown group kind '" + kind + "'");
  }

  Group group(d.group);  // validates; reused below for word parsing

  auto orbit_count = to_int(kv.get("orbits"), origin, kv.line_of("orbits"));
  if (orbit_count <= 0)
    config_error(origin, kv.line_of("orbits"), "orbit count must be positive");
  d.orbits.resize(static_cast<std::size_t>(orbit_count));

  for (std::int64_t o = 0; o < orbit_count; ++o) {
    auto stab_key = "stabilizer." + std::to_string(o);
    if (kv.has(stab_key)) {
      int line = kv.line_of(stab_key);
      for (const auto& tok : split_ws(kv.get(stab_key))) {
        try {
          d.orbits[static_cast<std::size_t>(o)].stabilizer_generators.push_back(
              group_element_from_text(group, tok));
        } catch (const std::exception& e) {
          config_error(origin, line, e.what());
        }
      }
    }
    auto weight_key = "weight." + std::to_string(o);
    if (kv.has(weight_key)) {
      int line = kv.line_of(weight_key);
      try {
        auto w = rational_from_text(kv.get(weight_key));
        if (w.sign() <= 0) config_error(origin, line, "weight must be positive");
        d.orbits[static_cast<std::size_t>(o)].weight = w;
      } catch (const std::invalid_argument&) {
        config_error(origin, line, "bad weight value");
      }
    }
  }

  auto involution = kv.get_or("involution", "identity");
  if (involution == "pairs") {
    auto pair_lines = kv.get_all("pair");
    if (pair_lines.empty())
      config_error(origin, kv.line_of("involution"),
                   "involution = pairs needs at least one 'pair = a b shift'");
    for (const auto& value : pair_lines) {
      int line = kv.line_of("pair");
      auto fields = split_ws(value);
      if (fields.size() != 3)
        config_error(origin, line, "expected 'pair = <orbit> <orbit> <shift>'");
      InvolutionPair p;
      p.a = static_cast<std::uint32_t>(to_int(fields[0], origin, line));
      p.b = static_cast<std::uint32_t>(to_int(fields[1], origin, line));
      try {
        p.shift = group_element_from_text(group, fields[2]);
      } catch (const std::exception& e) {
        config_error(origin, line, e.what());
      }
      d.involution.push_back(std::move(p));
    }
  } else if (involution != "identity") {
    config_error(origin, kv.line_of("involution"),
                 "involution must be 'identity' or 'pairs'");
  }
  return d;
}

ActionDescriptor load_action_descriptor(const std::string& path) {
  return action_descriptor_from_config(KeyValueFile::parse_file(path));
}

}  // namespace fockbound
