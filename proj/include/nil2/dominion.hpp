#pragma once

#include "nil2/group.hpp"

namespace nil2 {

/// Dominion of H in G within the nil-2 variety: H together with the
/// central elements d*B(S_d, S_d), where d runs over the divisors of the
/// torsion exponent of G^ab / image(H) and S_d is the preimage of its
/// d-torsion.
SubgroupData dominion(const Nil2Group& g, const SubgroupData& h);

/// D/H for D = dominion(G, H); H is normal in D since the added generators
/// are central. Trivial iff H is closed in G.
AbelianQuotient dominion_gap(const Nil2Group& g, const SubgroupData& h);

}  // namespace nil2
