#include <catch_amalgamated.hpp>

#include <random>

#include "corpus.hpp"
#include "nil2/builtins.hpp"
#include "nil2/dominion.hpp"
#include "oracles.hpp"

using namespace nil2;

namespace {

SubgroupData sub(const Nil2Group& g, const std::vector<std::string>& words) {
  std::vector<GroupElement> gens;
  for (const auto& w : words) gens.push_back(g.element(w));
  return subgroup_generated(g, gens);
}

std::vector<GroupElement> random_gens(std::mt19937& rng,
                                      const std::vector<GroupElement>& elems,
                                      int count) {
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  std::vector<GroupElement> out;
  for (int i = 0; i < count; ++i) out.push_back(elems[pick(rng)]);
  return out;
}

}  // namespace

TEST_CASE("dominion of the squares in the two-generator examples") {
  auto g = builtin_group("paper.zsquared");
  auto h = sub(g, {"x^2", "y^2"});
  auto d = dominion(g, h);
  REQUIRE(d.contains(g.element("[x,y]^2")));
  REQUIRE_FALSE(h.contains(g.element("[x,y]^2")));
  REQUIRE_FALSE(d.contains(g.element("[x,y]")));
  REQUIRE(d == sub(g, {"x^2", "y^2", "[x,y]^2"}));
  auto gap = dominion_gap(g, h);
  REQUIRE(gap.invariant_factors() == std::vector<Integer>{2});
  REQUIRE(gap.free_rank() == 0);

  auto f = builtin_group("paper.finitetwocyc(2,1,1)");
  auto hf = sub(f, {"x^2", "y^2"});
  REQUIRE(dominion(f, hf).contains(f.element("[x,y]^2")));
  REQUIRE_FALSE(hf.contains(f.element("[x,y]^2")));

  auto z = builtin_group("paper.zpluscyclic(2,1)");
  auto hz = sub(z, {"x^2", "y^2"});
  REQUIRE(dominion(z, hz).contains(z.element("[x,y]^2")));
  REQUIRE_FALSE(hz.contains(z.element("[x,y]^2")));
  auto gz = dominion_gap(z, hz);
  REQUIRE_FALSE(gz.is_trivial());
}

TEST_CASE("dominion of the whole group and in abelian groups") {
  for (const auto& name : {"dihedral8", "paper.zsquared", "heisenberg(3)"}) {
    auto g = builtin_group(name);
    REQUIRE(dominion(g, whole_group(g)) == whole_group(g));
    REQUIRE(dominion_gap(g, whole_group(g)).is_trivial());
  }
  std::mt19937 rng(9);
  for (const auto& name : {"abelian(2,4)", "abelian(0,2)", "free_abelian(2)",
                           "abelian(2,2,2)"}) {
    auto g = builtin_group(name);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int t = 0; t < 10; ++t) {
      FreeCoords c = FreeCoords::identity(g.rank());
      for (auto& x : c.e) x = d(rng);
      auto h = subgroup_generated(g, {g.element(c)});
      REQUIRE(dominion(g, h) == h);
    }
  }
}

TEST_CASE("dominion in the three-generator exponent-four overgroup") {
  // F = <a,b,c | a^4, b^4, c^4, [a,b]^4, [a,c]^4, [b,c]^4>, G = <a, b^2, c^2>
  Presentation p{{"a", "b", "c"}, {}};
  for (const char* r : {"a^4", "b^4", "c^4", "[a,b]^4", "[a,c]^4", "[b,c]^4"})
    p.relators.push_back(parse_word(r, p.generators));
  auto f = build_group(p, "F");
  auto h = sub(f, {"a", "b^2", "c^2"});
  REQUIRE(h.order() == Integer(64));
  REQUIRE(dominion(f, h).contains(f.element("[b,c]^2")));
  REQUIRE_FALSE(h.contains(f.element("[b,c]^2")));
  // G is isomorphic to the exponent-four example
  auto iso = presentation_of_subgroup(h, {"x", "y", "z"}, "G");
  auto e4 = builtin_group("paper.counterextofour");
  REQUIRE(iso.group.order() == e4.order());
  REQUIRE(iso.group.exponent() == e4.exponent());
  REQUIRE(iso.group.abelianization().invariant_factors() ==
          e4.abelianization().invariant_factors());
}

TEST_CASE("dominion errors") {
  auto g = builtin_group("dihedral8");
  auto h = whole_group(builtin_group("quaternion8"));
  REQUIRE_THROWS_AS(dominion(g, h), OwnerMismatch);
  REQUIRE_THROWS_AS(dominion_gap(g, h), OwnerMismatch);
}

TEST_CASE("closed form equals the q-enumeration") {
  std::mt19937 rng(31337);
  std::size_t checked = 0;
  for (const auto& g : corpus::finite_groups(64)) {
    const auto elems = oracle::all_elements(g);
    for (int s = 0; s < 5; ++s) {
      auto gens = random_gens(rng, elems, 1 + s % 3);
      auto h = subgroup_generated(g, gens);
      auto d = dominion(g, h);
      INFO(g.name() << " subgroup " << s);
      REQUIRE(oracle::members(d) == oracle::naive_dominion(g, gens));
      ++checked;
    }
  }
  REQUIRE(checked >= 100);
}

TEST_CASE("dominion is extensive, idempotent and monotone") {
  std::mt19937 rng(4242);
  std::vector<Nil2Group> groups = corpus::finite_groups(128);
  for (const auto& n : corpus::infinite_names()) groups.push_back(builtin_group(n));
  for (const auto& g : groups) {
    std::uniform_int_distribution<int> d(-3, 3);
    auto random_elem = [&] {
      FreeCoords c = FreeCoords::identity(g.rank());
      for (auto& x : c.e) x = d(rng);
      for (auto& x : c.f) x = d(rng);
      return g.element(c);
    };
    for (int t = 0; t < 4; ++t) {
      std::vector<GroupElement> g1{random_elem()};
      std::vector<GroupElement> g2 = g1;
      g2.push_back(random_elem());
      auto h1 = subgroup_generated(g, g1);
      auto h2 = subgroup_generated(g, g2);
      auto d1 = dominion(g, h1);
      auto d2 = dominion(g, h2);
      INFO(g.name());
      REQUIRE(d1.contains(h1));
      REQUIRE(dominion(g, d1) == d1);
      REQUIRE(h2.contains(h1));
      REQUIRE(d2.contains(d1));
      // the added generators are central, so E stays the same
      REQUIRE(d1.lattice().top() == h1.lattice().top());
    }
  }
}
