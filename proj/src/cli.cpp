#include "nil2/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <iostream>
#include <json.hpp>

#include "nil2/dominion.hpp"
#include "nil2/groupfile.hpp"
#include "nil2/regression.hpp"
#include "nil2/witness.hpp"

namespace nil2::cli {

namespace {

using nlohmann::ordered_json;
using Json = ordered_json;

constexpr const char* kSchema = "nil2-report/1";

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json num(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Json opt_num(const std::optional<Integer>& v) { return v ? num(*v) : Json(nullptr); }

Json nums(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(num(x));
  return a;
}

Json abelian(const AbelianQuotient& a) {
  return {{"free_rank", a.free_rank()}, {"invariant_factors", nums(a.invariant_factors())}};
}

Json words(const std::vector<GroupElement>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

Json summary(const Nil2Group& g) {
  Json rels = Json::array();
  for (const auto& r : g.relator_words()) rels.push_back(format_word(r, g.generator_names()));
  return {{"name", g.name()},
          {"generators", g.generator_names()},
          {"relators", rels},
          {"finite", g.is_finite()},
          {"order", opt_num(g.order())},
          {"exponent", opt_num(g.exponent())}};
}

Json verdict_json(const Verdict& v) {
  Json j = {{"verdict", verdict_name(v.kind)}, {"method", v.method}};
  if (v.certificate)
    j["certificate"] = {{"x", v.certificate->x.to_string()},
                        {"y", v.certificate->y.to_string()},
                        {"n", num(v.certificate->n)}};
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.budget)
    j["budget"] = {{"radius", v.budget->radius},
                   {"multipliers", nums(v.budget->multipliers)},
                   {"candidates", v.budget->candidates},
                   {"checked", v.budget->checked},
                   {"truncated", v.budget->truncated}};
  return j;
}

Json witness_json(const std::optional<PairWitness>& w) {
  if (!w) return nullptr;
  return {{"a", num(w->a)}, {"b", num(w->b)}, {"c", num(w->c)},
          {"g1", w->g1.to_string()}, {"g2", w->g2.to_string()}};
}

// Text rendering of a report: one "key: value" line per scalar.
void render(const Json& j, std::ostream& out, int depth) {
  const std::string pad(2 * depth, ' ');
  auto scalar = [](const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return std::string("-");
    return v.dump();
  };
  auto flat = [&](const Json& v) {
    return std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object()) {
      out << pad << it.key() << ":\n";
      render(v, out, depth + 1);
    } else if (v.is_array() && flat(v)) {
      out << pad << it.key() << ": ";
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
      out << "\n";
    } else if (v.is_array()) {
      out << pad << it.key() << ":\n";
      for (const auto& x : v) {
        if (x.is_object()) {
          out << pad << "  -\n";
          render(x, out, depth + 2);
        } else {
          out << pad << "  - " << scalar(x) << "\n";
        }
      }
    } else {
      out << pad << it.key() << ": " << scalar(v) << "\n";
    }
  }
}

Integer parse_integer(const std::string& text, const std::string& what) {
  Scanner s(text);
  Integer v;
  try {
    v = s.integer();
    if (!s.at_end()) s.fail("trailing input");
  } catch (const ParseError& e) {
    throw InputError(what + ": " + e.message() + " at column " + std::to_string(e.column()));
  }
  return v;
}

std::vector<Integer> parse_integers(const std::string& text, const std::string& what) {
  std::vector<Integer> out;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      out.push_back(parse_integer(cur, what));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

std::vector<GroupElement> parse_elements(const Nil2Group& g, const std::string& text,
                                         const std::string& what) {
  std::vector<GroupElement> out;
  try {
    for (const auto& w : parse_word_list(text, g.generator_names(), ';'))
      out.push_back(g.element(w));
  } catch (const ParseError& e) {
    throw InputError(what + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                     ": " + e.message());
  }
  return out;
}

GroupElement parse_element(const Nil2Group& g, const std::string& text,
                           const std::string& what) {
  try {
    return g.element(parse_word(text, g.generator_names()));
  } catch (const ParseError& e) {
    throw InputError(what + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                     ": " + e.message());
  }
}

Nil2Group load(const std::string& file, const std::string& name) {
  try {
    return resolve_group(file, name);
  } catch (const ParseError& e) {
    const std::string where = file == "builtins" ? "--group" : file;
    throw InputError(where + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                     ": " + e.message());
  } catch (const FileError& e) {
    throw InputError(e.what());
  }
}

struct Args {
  std::string file, group, format = "text";
  bool strict = false;
  std::string subgroup, contains, elements, orders, x, y, n;
};

struct Outcome {
  Json body;
  bool unknown = false;
  bool failed = false;
};

Outcome cmd_info(const Args& a) {
  auto g = load(a.file, a.group);
  auto inv = group_invariants(g);
  Json j = {{"group", summary(g)},
            {"abelian", inv.is_abelian},
            {"abelianization", abelian(inv.abelianization)},
            {"commutator_subgroup", abelian(inv.commutator_subgroup)},
            {"center_mod_commutator", abelian(inv.center_mod_commutator)}};
  return {j};
}

Outcome cmd_dominion(const Args& a) {
  auto g = load(a.file, a.group);
  auto gens = parse_elements(g, a.subgroup, "--subgroup");
  auto h = subgroup_generated(g, gens);
  auto d = dominion(g, h);
  auto gap = dominion_gap(g, h);
  Json j = {{"group", summary(g)},
            {"subgroup", {{"generators", words(gens)}, {"order", opt_num(h.order())}}},
            {"dominion", {{"generators", words(d.generators())}, {"order", opt_num(d.order())}}},
            {"gap", abelian(gap)},
            {"closed_in_group", gap.is_trivial()}};
  if (!a.contains.empty()) {
    auto x = parse_element(g, a.contains, "--contains");
    j["query"] = {{"element", x.to_string()},
                  {"in_dominion", d.contains(x)},
                  {"in_subgroup", h.contains(x)}};
  }
  return {j};
}

Outcome cmd_closed(const Args& a) {
  auto g = load(a.file, a.group);
  ClosureOptions opts;
  try {
    opts = ClosureOptions::from_env();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  auto v = is_absolutely_closed(g, opts);
  Json j = {{"group", summary(g)}, {"closure", verdict_json(v)}};
  return {j, v.kind == Verdict::Kind::Unknown};
}

Outcome cmd_amalbase(const Args& a) {
  auto g = load(a.file, a.group);
  auto v = is_strong_amalg_base(g);
  Json r = {{"base", tri_name(v.base)}, {"method", v.method}};
  if (v.g) r["g"] = v.g->to_string();
  if (v.n) r["n"] = num(*v.n);
  if (!v.reason.empty()) r["reason"] = v.reason;
  return {{{"group", summary(g)}, {"amalgamation_base", r}}, v.base == Tri::Unknown};
}

Outcome cmd_roots(const Args& a) {
  auto g = load(a.file, a.group);
  auto elems = parse_elements(g, a.elements, "--elements");
  auto orders = parse_integers(a.orders, "--orders");
  if (elems.size() != orders.size())
    throw InputError("--elements and --orders differ in length");
  RootAdjunction r;
  try {
    r = can_adjoin_roots(g, elems, orders);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  Json j = {{"group", summary(g)},
            {"elements", words(elems)},
            {"orders", nums(orders)},
            {"possible", r.possible}};
  if (r.refutation) {
    Json c = Json::array();
    for (const auto& row : r.refutation->c) c.push_back(nums(row));
    j["refutation"] = {{"c", c}, {"y", words(r.refutation->y)}};
  }
  return {j};
}

Outcome cmd_witness(const Args& a) {
  auto g = load(a.file, a.group);
  auto x = parse_element(g, a.x, "--x");
  auto y = parse_element(g, a.y, "--y");
  auto n = parse_integer(a.n, "--n");
  if (n < 1) throw InputError("--n must be positive");
  auto pr = check_pair(g, x, y, n);
  auto rep = verify_nonclosure_certificate(g, x, y, n);
  Json j = {{"group", summary(g)},
            {"pair", {{"x", x.to_string()}, {"y", y.to_string()}, {"n", num(n)}}},
            {"conditions",
             {{"condtwo", witness_json(pr.condtwo)}, {"condthree", witness_json(pr.condthree)}}},
            {"extension",
             {{"group", summary(rep.k)},
              {"r", rep.r.to_string()},
              {"s", rep.s.to_string()},
              {"commutator_power", commutator(rep.r, rep.s).pow(n).to_string()},
              {"embeds", tri_name(rep.embeds)},
              {"in_dominion", rep.commutator_power_in_dominion},
              {"in_group", rep.commutator_power_in_g},
              {"certifies_nonclosure", rep.certifies_nonclosure()}}}};
  return {j, rep.embeds == Tri::Unknown};
}

Outcome cmd_corpus() {
  auto checks = run_regression_corpus();
  Json list = Json::array();
  std::size_t passed = 0;
  for (const auto& c : checks) {
    Json e = {{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    list.push_back(e);
    passed += c.passed;
  }
  Json j = {{"checks", list}, {"passed", passed}, {"total", checks.size()}};
  return {j, false, passed != checks.size()};
}

void render_corpus(const Json& body, std::ostream& out) {
  std::size_t width = 4;
  for (const auto& c : body["checks"]) width = std::max(width, c["name"].get<std::string>().size());
  for (const auto& c : body["checks"]) {
    const auto name = c["name"].get<std::string>();
    out << name << std::string(width - name.size() + 2, ' ')
        << (c["passed"].get<bool>() ? "PASS" : "FAIL");
    if (c.contains("detail")) out << "  " << c["detail"].get<std::string>();
    out << "\n";
  }
  out << body["passed"].get<std::size_t>() << "/" << body["total"].get<std::size_t>()
      << " passed\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in finitely presented nil-2 groups", "nil2"};
  app.require_subcommand(1);
  app.fallthrough();
  Args a;
  app.add_option("--format", a.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--strict", a.strict, "Exit with code 3 on an Unknown result");

  auto with_group = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_option("FILE", a.file, "Group file, or 'builtins'")->required();
    s->add_option("--group", a.group, "Group name or builtin expression")->required();
    return s;
  };
  auto* info = with_group("info", "Order, exponent and structure invariants");
  auto* dom = with_group("dominion", "Dominion of a subgroup");
  dom->add_option("--subgroup", a.subgroup, "Generators, separated by ';'")->required();
  dom->add_option("--contains", a.contains, "Element to test");
  auto* closed = with_group("closed", "Absolute closure decision");
  auto* amal = with_group("amalbase", "Strong amalgamation base decision");
  auto* roots = with_group("roots", "Simultaneous root adjunction");
  roots->add_option("--elements", a.elements, "Elements, separated by ';'")->required();
  roots->add_option("--orders", a.orders, "Root orders, separated by ','")->required();
  auto* wit = with_group("witness", "Root extension for a triple (x, y, n)");
  wit->add_option("--x", a.x)->required();
  wit->add_option("--y", a.y)->required();
  wit->add_option("--n", a.n)->required();
  auto* corpus = app.add_subcommand("corpus", "Run the worked-example suite");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  std::string command;
  try {
    if (info->parsed()) o = cmd_info(a), command = "info";
    else if (dom->parsed()) o = cmd_dominion(a), command = "dominion";
    else if (closed->parsed()) o = cmd_closed(a), command = "closed";
    else if (amal->parsed()) o = cmd_amalbase(a), command = "amalbase";
    else if (roots->parsed()) o = cmd_roots(a), command = "roots";
    else if (wit->parsed()) o = cmd_witness(a), command = "witness";
    else if (corpus->parsed()) o = cmd_corpus(), command = "corpus";
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    err << "error: " << e.line() << ":" << e.column() << ": " << e.message() << "\n";
    return kInputError;
  } catch (const OwnerMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  Json report = {{"schema", kSchema}, {"command", command}, {"argv", args}};
  report.update(o.body);
  if (a.format == "json") {
    out << report.dump(2) << "\n";
  } else if (command == "corpus") {
    render_corpus(o.body, out);
    out << "time: " << static_cast<long>(ms) << " ms\n";
  } else {
    render(report, out, 0);
    out << "time: " << static_cast<long>(ms) << " ms\n";
  }
  if (o.failed) return kCorpusFailure;
  if (a.strict && o.unknown) return kUnknown;
  return kOk;
}

}  // namespace nil2::cli
