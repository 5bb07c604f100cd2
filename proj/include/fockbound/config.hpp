#pragma once

#include <map>
#include <string>
#include <vector>

#include "fockbound/action.hpp"

namespace fockbound {

// Line-oriented `key = value` file with '#' comments. Keys keep their
// first-seen order; repeated keys accumulate (used by `pair` entries).
class KeyValueFile {
 public:
  static KeyValueFile parse_file(const std::string& path);
  static KeyValueFile parse_text(const std::string& text, const std::string& origin);

  bool has(const std::string& key) const;
  const std::string& get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& fallback) const;
  std::vector<std::string> get_all(const std::string& key) const;
  int line_of(const std::string& key) const;
  const std::string& origin() const { return origin_; }
  std::vector<std::string> keys() const;

 private:
  struct Entry {
    std::string key, value;
    int line;
  };
  std::vector<Entry> entries_;
  std::string origin_;
};

// Action config grammar (documented in the README):
//   group = free 2 | free-abelian 1 | finite
//   table = 0 1 2, 1 2 0, 2 0 1        (finite only; row-major)
//   generators = 1                     (finite only; optional)
//   orbits = 2
//   stabilizer.<k> = <word> <word>     (optional; words in group-element text)
//   weight.<k> = 2/1                   (optional Araki-Woods weight tag)
//   involution = identity | pairs
//   pair = <orbit a> <orbit b> <shift word>   (repeatable, when pairs)
ActionDescriptor action_descriptor_from_config(const KeyValueFile& kv);
ActionDescriptor load_action_descriptor(const std::string& path);

}  // namespace fockbound
