#include "nil2/witness.hpp"

#include <algorithm>

#include "nil2/dominion.hpp"

namespace nil2 {

namespace {

std::string fresh_name(const std::vector<std::string>& taken, std::string base) {
  auto used = [&](const std::string& s) {
    return std::find(taken.begin(), taken.end(), s) != taken.end();
  };
  if (!used(base)) return base;
  for (int i = 1;; ++i) {
    auto c = base + std::to_string(i);
    if (!used(c)) return c;
  }
}

}  // namespace

ExtensionReport build_root_extension(const Nil2Group& g, const GroupElement& x,
                                     const GroupElement& y, const Integer& n) {
  check_owner(g, x);
  check_owner(g, y);
  if (n < 1) throw std::invalid_argument("root extension: n must be positive");
  const std::size_t k = g.rank();

  Presentation p;
  p.generators = g.generator_names();
  p.generators.push_back(fresh_name(p.generators, "r"));
  p.generators.push_back(fresh_name(p.generators, "s"));
  for (const auto& r : g.relators()) p.relators.push_back(coords_word(r));
  auto root_rel = [&](std::size_t gen, const GroupElement& target) {
    return Word::product({Word::power(Word::generator(gen), n),
                          Word::power(coords_word(target.coords()), -1)});
  };
  p.relators.push_back(root_rel(k, x));
  p.relators.push_back(root_rel(k + 1, y));
  auto kg = build_group(p, g.name().empty() ? "K" : "K(" + g.name() + ")");

  std::vector<GroupElement> images;
  for (std::size_t i = 0; i < k; ++i) images.push_back(kg.generator(i));
  auto inc = induced_hom(g, kg, images);
  if (!inc.well_defined) throw std::logic_error("root extension: inclusion not defined");
  if (g.is_finite() && !kg.is_finite())
    throw std::logic_error("root extension of a finite group is infinite");

  ExtensionReport rep{kg, inc, kg.generator(k), kg.generator(k + 1), n};
  rep.embeds = inc.injective;
  return rep;
}

ExtensionReport verify_nonclosure_certificate(const Nil2Group& g,
                                              const GroupElement& x,
                                              const GroupElement& y,
                                              const Integer& n) {
  auto rep = build_root_extension(g, x, y, n);
  const auto& img = *rep.inclusion.image;
  const auto target = commutator(rep.r, rep.s).pow(n);
  rep.commutator_power_in_dominion = dominion(rep.k, img).contains(target);
  rep.commutator_power_in_g = img.contains(target);
  rep.verified = true;
  return rep;
}

}  // namespace nil2
