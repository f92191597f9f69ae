#include "nil2/builtins.hpp"

namespace nil2 {

namespace {

struct Spec {
  const char* name;
  int min_args;
  int max_args;  // -1: unbounded
};

const Spec kSpecs[] = {
    {"cyclic", 1, 1},
    {"free_abelian", 1, 1},
    {"abelian", 1, -1},
    {"dihedral8", 0, 0},
    {"quaternion8", 0, 0},
    {"heisenberg", 1, 1},
    {"paper.zsquared", 0, 0},
    {"paper.finitetwocyc", 3, 3},
    {"paper.zpluscyclic", 2, 2},
    {"paper.counterextofour", 0, 0},
    {"paper.counterexfinal", 0, 0},
    {"paper.generalized", 2, 2},
};

const Spec* find_spec(const std::string& name) {
  for (const auto& s : kSpecs)
    if (name == s.name) return &s;
  return nullptr;
}

std::string pw(const std::string& base, const Integer& e) {
  return base + "^" + e.get_str();
}

Integer ipow(const Integer& p, const Integer& a) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), a.get_ui());
  return r;
}

bool is_prime(const Integer& p) {
  return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 30) > 0;
}

void require(bool ok, const BuiltinRef& ref, const std::string& why) {
  if (!ok)
    throw std::invalid_argument("builtin " + ref.to_string() + ": " + why);
}

std::vector<std::string> numbered(const std::string& stem, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

}  // namespace

std::string BuiltinRef::to_string() const {
  std::string s = name;
  if (!args.empty()) {
    s += '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) s += ',';
      s += args[i].get_str();
    }
    s += ')';
  }
  return s;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : kSpecs) v.push_back(s.name);
    return v;
  }();
  return names;
}

bool is_builtin_name(const std::string& name) { return find_spec(name) != nullptr; }

BuiltinRef parse_builtin(Scanner& s) {
  const std::size_t line = s.line(), col = s.column();
  BuiltinRef ref;
  ref.name = s.identifier(true);
  const Spec* spec = find_spec(ref.name);
  if (!spec) throw ParseError("unknown builtin '" + ref.name + "'", line, col);
  if (s.consume('(')) {
    if (!s.consume(')')) {
      do {
        ref.args.push_back(s.integer());
      } while (s.consume(','));
      s.expect(')');
    }
  }
  const int n = static_cast<int>(ref.args.size());
  if (n < spec->min_args || (spec->max_args >= 0 && n > spec->max_args))
    throw ParseError("wrong number of arguments for builtin '" + ref.name + "'",
                     line, col);
  return ref;
}

BuiltinRef parse_builtin(std::string_view text) {
  Scanner s(text);
  auto ref = parse_builtin(s);
  if (!s.at_end()) s.fail("trailing input after builtin reference");
  return ref;
}

Presentation builtin_presentation(const BuiltinRef& ref) {
  const auto& a = ref.args;
  const std::string& n = ref.name;
  std::vector<std::string> gens;
  std::vector<std::string> rels;
  auto all_commute = [&] {
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        rels.push_back("[" + gens[i] + "," + gens[j] + "]");
  };
  if (n == "cyclic") {
    require(a[0] >= 0, ref, "order must be >= 0 (0 means infinite)");
    gens = {"x"};
    if (a[0] != 0) rels.push_back(pw("x", a[0]));
  } else if (n == "free_abelian") {
    require(a[0] >= 0 && a[0] <= 64, ref, "rank must be in 0..64");
    gens = numbered("x", a[0].get_ui());
    all_commute();
  } else if (n == "abelian") {
    gens = numbered("x", a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      require(a[i] >= 0, ref, "factors must be >= 0 (0 means free)");
      if (a[i] != 0) rels.push_back(pw(gens[i], a[i]));
    }
    all_commute();
  } else if (n == "dihedral8") {
    gens = {"x", "y"};
    rels = {"x^4", "y^2", "[x,y]*x^-2"};
  } else if (n == "quaternion8") {
    gens = {"i", "j"};
    rels = {"i^4", "i^2*j^-2", "[i,j]*i^-2"};
  } else if (n == "heisenberg") {
    require(is_prime(a[0]), ref, "p must be prime");
    gens = {"x", "y"};
    rels = {pw("x", a[0]), pw("y", a[0]), pw("[x,y]", a[0])};
  } else if (n == "paper.zsquared") {
    gens = {"x", "y"};
    rels = {"[x,y]^4"};
  } else if (n == "paper.finitetwocyc") {
    require(is_prime(a[0]) && a[1] >= 1 && a[2] >= 1 && a[1] <= 16 && a[2] <= 16,
            ref, "need prime p and 1 <= a1, a2 <= 16");
    gens = {"x", "y"};
    rels = {pw("x", ipow(a[0], a[1] + 1)), pw("y", ipow(a[0], a[2] + 1)),
            pw("[x,y]", a[0] * a[0])};
  } else if (n == "paper.zpluscyclic") {
    require(is_prime(a[0]) && a[1] >= 1 && a[1] <= 16, ref,
            "need prime p and 1 <= a <= 16");
    gens = {"x", "y"};
    rels = {pw("y", ipow(a[0], a[1] + 1)), pw("[x,y]", a[0] * a[0])};
  } else if (n == "paper.counterextofour") {
    gens = {"x", "y", "z"};
    rels = {"x^4", "y^2", "z^2", "[x,y]^2", "[x,z]^2", "[y,z]"};
  } else if (n == "paper.counterexfinal") {
    gens = {"x", "y", "z"};
    rels = {"x^3", "y^3", "z^3", "[x,y]^3", "[x,z]", "[y,z]"};
  } else if (n == "paper.generalized") {
    require(is_prime(a[0]) && a[1] >= 1 && a[1] <= 16, ref,
            "need prime p and 1 <= n <= 16");
    gens = {"x", "y", "z"};
    rels = {pw("x", ipow(a[0], a[1])), pw("y", a[0]), pw("z", a[0]), "[y,z]",
            pw("[x,y]", a[0]), pw("[x,z]", a[0])};
  } else {
    throw std::invalid_argument("unknown builtin '" + n + "'");
  }
  Presentation p;
  p.generators = gens;
  for (const auto& r : rels) p.relators.push_back(parse_word(r, gens));
  return p;
}

Nil2Group builtin_group(const BuiltinRef& ref) {
  return build_group(builtin_presentation(ref), ref.to_string());
}

Nil2Group builtin_group(std::string_view text) {
  return builtin_group(parse_builtin(text));
}

}  // namespace nil2
