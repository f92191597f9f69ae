#pragma once

#include <optional>

#include "nil2/builtins.hpp"

// Group description files:
//   group NAME { gens: a b c  rels: WORD WORD ... }
//   group NAME = builtin(args)
// '#' comments; relators are separated by whitespace.

namespace nil2 {

struct GroupDef {
  std::string name;
  std::optional<BuiltinRef> builtin;
  Presentation presentation;  // empty when builtin is set
  std::size_t line = 0;
};

struct GroupFile {
  std::vector<GroupDef> defs;

  const GroupDef* find(const std::string& name) const;
};

class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

GroupFile parse_group_file(std::string_view text);
GroupFile read_group_file(const std::string& path);
std::string print_group_file(const GroupFile& f);

Nil2Group instantiate(const GroupDef& d);

/// FILE = "builtins" resolves NAME as a builtin expression; otherwise NAME
/// is looked up in the file, falling back to a builtin expression.
Nil2Group resolve_group(const std::string& file, const std::string& name);

}  // namespace nil2
