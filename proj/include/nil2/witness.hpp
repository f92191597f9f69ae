#pragma once

#include "nil2/closure.hpp"

namespace nil2 {

/// K = <G, r, s | rels(G), r^n x^-1, s^n y^-1> in the nil-2 variety, with
/// the dominion test for [r,s]^n against the image of G. The dominion and
/// membership fields are filled by verify_nonclosure_certificate only.
struct ExtensionReport {
  Nil2Group k;
  Homomorphism inclusion;
  GroupElement r, s;
  Integer n;
  Tri embeds = Tri::Unknown;
  bool commutator_power_in_dominion = false;
  bool commutator_power_in_g = false;
  bool verified = false;

  /// embeds, in the dominion and outside G.
  bool certifies_nonclosure() const {
    return verified && embeds == Tri::Yes && commutator_power_in_dominion &&
           !commutator_power_in_g;
  }
};

ExtensionReport build_root_extension(const Nil2Group& g, const GroupElement& x,
                                     const GroupElement& y, const Integer& n);

ExtensionReport verify_nonclosure_certificate(const Nil2Group& g,
                                              const GroupElement& x,
                                              const GroupElement& y,
                                              const Integer& n);
inline ExtensionReport verify_nonclosure_certificate(const Nil2Group& g,
                                                     const Certificate& c) {
  return verify_nonclosure_certificate(g, c.x, c.y, c.n);
}

}  // namespace nil2
