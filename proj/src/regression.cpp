#include "nil2/regression.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "nil2/builtins.hpp"
#include "nil2/dominion.hpp"
#include "nil2/witness.hpp"

namespace nil2 {

namespace {

struct Case {
  std::string name;
  std::function<std::string()> run;  // empty string on success
};

std::string expect(bool ok, const std::string& what) { return ok ? "" : what; }

std::string show(const std::optional<Integer>& v) {
  return v ? v->get_str() : std::string("infinite");
}

std::string factors(const AbelianQuotient& a) {
  std::ostringstream o;
  o << "rank " << a.free_rank() << " factors (";
  for (std::size_t i = 0; i < a.invariant_factors().size(); ++i)
    o << (i ? "," : "") << a.invariant_factors()[i];
  o << ")";
  return o.str();
}

Case order_case(const std::string& g, long order) {
  return {"structure/" + g + "/order", [=] {
            auto o = builtin_group(g).order();
            return expect(o && *o == order, "order " + show(o));
          }};
}

Case dominion_case(const std::string& g) {
  return {"dominion/" + g, [=]() -> std::string {
            auto G = builtin_group(g);
            auto h = subgroup_generated(G, {G.element("x^2"), G.element("y^2")});
            auto c = G.element("[x,y]^2");
            if (!dominion(G, h).contains(c)) return "[x,y]^2 not in the dominion";
            if (h.contains(c)) return "[x,y]^2 already in <x^2,y^2>";
            if (g == "paper.zsquared") {
              auto gap = dominion_gap(G, h);
              if (gap.free_rank() != 0 || gap.invariant_factors() != std::vector<Integer>{2})
                return "gap " + factors(gap);
            }
            return "";
          }};
}

Case closed_case(const std::string& g) {
  return {"closed/" + g, [=] {
            auto v = is_absolutely_closed(builtin_group(g));
            return expect(v.closed(), std::string(verdict_name(v.kind)) + " via " + v.method);
          }};
}

Case not_closed_case(const std::string& g) {
  return {"not-closed/" + g, [=]() -> std::string {
            auto G = builtin_group(g);
            auto v = is_absolutely_closed(G);
            if (!v.not_closed()) return std::string(verdict_name(v.kind)) + " via " + v.method;
            if (!v.certificate) return "no certificate";
            const auto& c = *v.certificate;
            if (check_pair(G, c.x, c.y, c.n).satisfied()) return "certificate pair is satisfied";
            auto rep = verify_nonclosure_certificate(G, c);
            return expect(rep.certifies_nonclosure(), "extension does not certify");
          }};
}

Case amalbase_case(const std::string& g, Tri want) {
  return {"amalbase/" + g, [=] {
            auto v = is_strong_amalg_base(builtin_group(g));
            return expect(v.base == want, std::string(tri_name(v.base)) + " via " + v.method);
          }};
}

std::vector<Case> cases() {
  std::vector<Case> cs;
  cs.push_back(order_case("dihedral8", 8));
  cs.push_back(order_case("quaternion8", 8));
  cs.push_back(order_case("heisenberg(3)", 27));
  cs.push_back({"structure/paper.counterextofour/exponent", [] {
                  auto e = builtin_group("paper.counterextofour").exponent();
                  return expect(e && *e == 4, "exponent " + show(e));
                }});
  cs.push_back({"structure/paper.counterextofour/abelianization", [] {
                  const auto g = builtin_group("paper.counterextofour");
                  const auto& a = g.abelianization();
                  return expect(a.free_rank() == 0 &&
                                    a.invariant_factors() == std::vector<Integer>{2, 2, 4},
                                factors(a));
                }});
  cs.push_back({"structure/paper.counterextofour/center-mod-commutator", [] {
                  auto inv = group_invariants(builtin_group("paper.counterextofour"));
                  return expect(inv.center_mod_commutator.is_cyclic(),
                                factors(inv.center_mod_commutator));
                }});
  for (auto g : {"paper.zsquared", "paper.finitetwocyc(2,1,1)", "paper.zpluscyclic(2,1)"})
    cs.push_back(dominion_case(g));
  for (int n = 1; n <= 12; ++n) cs.push_back(closed_case("cyclic(" + std::to_string(n) + ")"));
  for (auto g : {"cyclic(0)", "paper.counterexfinal", "dihedral8", "quaternion8",
                 "heisenberg(3)"})
    cs.push_back(closed_case(g));
  for (auto g : {"free_abelian(2)", "abelian(2,4)", "abelian(0,2)", "paper.counterextofour",
                 "paper.generalized(3,2)"})
    cs.push_back(not_closed_case(g));
  for (auto g : {"dihedral8", "quaternion8", "heisenberg(3)", "heisenberg(5)"})
    cs.push_back(amalbase_case(g, Tri::Yes));
  for (auto g : {"cyclic(2)", "cyclic(6)", "cyclic(0)", "free_abelian(2)", "abelian(2,4)",
                 "abelian(0,2)", "abelian(3,3)"})
    cs.push_back(amalbase_case(g, Tri::No));
  std::sort(cs.begin(), cs.end(), [](const Case& a, const Case& b) { return a.name < b.name; });
  return cs;
}

}  // namespace

std::vector<RegressionCheck> run_regression_corpus() {
  const auto cs = cases();
  std::vector<RegressionCheck> out(cs.size());
  const long count = static_cast<long>(cs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    auto& r = out[i];
    r.name = cs[i].name;
    try {
      r.detail = cs[i].run();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
  }
  return out;
}

}  // namespace nil2
