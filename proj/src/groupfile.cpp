#include "nil2/groupfile.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace nil2 {

namespace {

bool reserved(const std::string& s) { return s == "gens" || s == "rels" || s == "group"; }

GroupDef parse_def(Scanner& s) {
  GroupDef d;
  d.line = s.line();
  if (!s.consume_keyword("group")) s.fail("expected 'group'");
  const std::size_t nl = s.line(), nc = s.column();
  d.name = s.identifier(true);
  if (reserved(d.name)) throw ParseError("reserved group name '" + d.name + "'", nl, nc);
  if (s.consume('=')) {
    d.builtin = parse_builtin(s);
    return d;
  }
  s.expect('{');
  if (!s.consume_keyword("gens")) s.fail("expected 'gens:'");
  s.expect(':');
  auto& gens = d.presentation.generators;
  bool rels = false;
  while (s.peek_identifier()) {
    if (s.consume_keyword("rels")) {
      rels = true;
      break;
    }
    const std::size_t gl = s.line(), gc = s.column();
    auto g = s.identifier();
    if (reserved(g)) throw ParseError("reserved generator name '" + g + "'", gl, gc);
    if (std::find(gens.begin(), gens.end(), g) != gens.end())
      throw ParseError("duplicate generator '" + g + "'", gl, gc);
    gens.push_back(g);
  }
  if (rels) {
    s.expect(':');
    while (s.peek() != '}' && !s.at_end()) d.presentation.relators.push_back(parse_word(s, gens));
  }
  s.expect('}');
  return d;
}

}  // namespace

const GroupDef* GroupFile::find(const std::string& name) const {
  for (const auto& d : defs)
    if (d.name == name) return &d;
  return nullptr;
}

GroupFile parse_group_file(std::string_view text) {
  Scanner s(text);
  GroupFile f;
  std::set<std::string> names;
  while (!s.at_end()) {
    const std::size_t line = s.line(), col = s.column();
    auto d = parse_def(s);
    if (!names.insert(d.name).second)
      throw ParseError("duplicate group name '" + d.name + "'", line, col);
    f.defs.push_back(std::move(d));
  }
  return f;
}

GroupFile read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group_file(ss.str());
}

std::string print_group_file(const GroupFile& f) {
  std::ostringstream out;
  for (const auto& d : f.defs) {
    out << "group " << d.name;
    if (d.builtin) {
      out << " = " << d.builtin->to_string() << "\n";
      continue;
    }
    const auto& p = d.presentation;
    out << " {\n  gens:";
    for (const auto& g : p.generators) out << ' ' << g;
    out << "\n  rels:";
    for (const auto& r : p.relators) out << ' ' << format_word(r, p.generators);
    out << "\n}\n";
  }
  return out.str();
}

Nil2Group instantiate(const GroupDef& d) {
  if (d.builtin) {
    auto p = builtin_presentation(*d.builtin);
    return build_group(p, d.name);
  }
  return build_group(d.presentation, d.name);
}

Nil2Group resolve_group(const std::string& file, const std::string& name) {
  if (file == "builtins") return builtin_group(name);
  auto f = read_group_file(file);
  if (const auto* d = f.find(name)) return instantiate(*d);
  try {
    return builtin_group(name);
  } catch (const ParseError&) {
  }
  throw std::invalid_argument("no group named '" + name + "' in " + file);
}

}  // namespace nil2
