#pragma once

#include "nil2/group.hpp"

namespace nil2 {

/// Builtin constructor reference such as "cyclic(6)" or "paper.zsquared".
struct BuiltinRef {
  std::string name;
  std::vector<Integer> args;
  std::string to_string() const;
};

BuiltinRef parse_builtin(std::string_view text);
BuiltinRef parse_builtin(Scanner& s);
bool is_builtin_name(const std::string& name);
const std::vector<std::string>& builtin_names();

/// Presentation text of the builtin, in group-file relator syntax.
Presentation builtin_presentation(const BuiltinRef& ref);
Nil2Group builtin_group(const BuiltinRef& ref);
Nil2Group builtin_group(std::string_view text);

}  // namespace nil2
