#include "nil2/dominion.hpp"

namespace nil2 {

SubgroupData dominion(const Nil2Group& g, const SubgroupData& h) {
  if (!g.same(h.group())) throw OwnerMismatch("dominion: subgroup of another group");
  const std::size_t k = g.rank(), m = g.pair_dim();
  const LatticeBasis& top = h.lattice().top();
  const Integer et = quotient_structure(k, top).torsion_exponent();

  std::vector<IntVector> central(h.lattice().central().rows());
  std::vector<GroupElement> elems(h.generators());
  IntMatrix scalar(k, zero_vector(k));
  for (const Integer& d : divisors(et)) {
    for (std::size_t i = 0; i < k; ++i) scalar[i][i] = d;
    const LatticeBasis sd =
        affine_solution_set(scalar, k, zero_vector(k), top).homogeneous;
    const auto& rows = sd.rows();
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = a + 1; b < rows.size(); ++b) {
        IntVector v = scaled(bracket(rows[a], rows[b]), d);
        if (h.lattice().central().contains(v)) continue;
        elems.push_back(g.central(v));
        central.push_back(std::move(v));
      }
  }
  const auto gens = h.lattice().generators();
  return SubgroupData(g, std::move(elems),
                      SubgroupLattice::generated(k, gens, hnf_basis(m, central)));
}

AbelianQuotient dominion_gap(const Nil2Group& g, const SubgroupData& h) {
  const SubgroupData d = dominion(g, h);
  return relative_quotient(d.lattice().central(), h.lattice().central());
}

}  // namespace nil2
