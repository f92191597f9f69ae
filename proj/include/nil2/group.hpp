#pragma once

#include <memory>
#include <optional>

#include "nil2/words.hpp"

namespace nil2 {

class OwnerMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
};

class GroupElement;
namespace detail {
struct GroupData;
struct GroupFactory;
}

/// A finitely presented nil-2 group F/N. Immutable and cheap to copy;
/// copies share identity (element ownership is by construction, not by
/// presentation).
class Nil2Group {
 public:
  std::size_t rank() const;
  std::size_t pair_dim() const { return pair_count(rank()); }
  const std::string& name() const;
  const std::vector<std::string>& generator_names() const;
  const std::vector<Word>& relator_words() const;
  const std::vector<FreeCoords>& relators() const;

  /// N as a canonical subgroup triple of the free nil-2 group.
  const SubgroupLattice& relations() const;
  /// G^ab = Z^k / (e-projection of N).
  const AbelianQuotient& abelianization() const;
  /// G' = Z^{k(k-1)/2} / (N ∩ F').
  const AbelianQuotient& commutator_quotient() const;

  bool is_abelian() const;
  bool is_finite() const;
  std::optional<Integer> order() const;
  std::optional<Integer> exponent() const;

  FreeCoords reduce(FreeCoords c) const;
  GroupElement identity() const;
  GroupElement generator(std::size_t i) const;
  GroupElement element(FreeCoords c) const;
  GroupElement element(const Word& w) const;
  GroupElement element(std::string_view word) const;
  /// Central element with the given commutator coordinates.
  GroupElement central(IntVector f) const;

  std::string format(const FreeCoords& c) const;
  Word parse(std::string_view word) const;

  bool same(const Nil2Group& o) const { return d_ == o.d_; }
  explicit operator bool() const { return d_ != nullptr; }

 private:
  friend struct detail::GroupFactory;
  std::shared_ptr<const detail::GroupData> d_;
};

class GroupElement {
 public:
  GroupElement(Nil2Group g, FreeCoords c) : g_(std::move(g)), c_(std::move(c)) {}

  const Nil2Group& group() const { return g_; }
  const FreeCoords& coords() const { return c_; }
  bool is_identity() const { return c_.is_identity(); }
  std::string to_string() const { return g_.format(c_); }

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  GroupElement pow(const Integer& t) const;

  /// Throws OwnerMismatch for elements of different groups.
  bool operator==(const GroupElement& o) const;

 private:
  Nil2Group g_;
  FreeCoords c_;
};

GroupElement commutator(const GroupElement& a, const GroupElement& b);
void check_owner(const Nil2Group& g, const GroupElement& x);

/// Subgroup of G, stored as a canonical triple containing N.
class SubgroupData {
 public:
  SubgroupData(Nil2Group g, std::vector<GroupElement> gens, SubgroupLattice s);

  const Nil2Group& group() const { return g_; }
  const std::vector<GroupElement>& generators() const { return gens_; }
  const SubgroupLattice& lattice() const { return s_; }

  bool contains(const GroupElement& x) const;
  bool contains(const SubgroupData& h) const;
  bool operator==(const SubgroupData& h) const;

  bool is_trivial() const;
  bool is_whole() const;
  /// E_S / E_N: image of the subgroup in G^ab.
  AbelianQuotient abelian_image() const;
  /// C_S / C_N: the subgroup's intersection with G'.
  AbelianQuotient commutator_part() const;
  std::optional<Integer> order() const;

 private:
  Nil2Group g_;
  std::vector<GroupElement> gens_;
  SubgroupLattice s_;
};

Nil2Group build_group(const Presentation& p, std::string name = "");
Nil2Group build_group_from_coords(std::vector<std::string> names,
                                  std::vector<FreeCoords> relators,
                                  std::string name = "");

FreeCoords word_to_coords(std::size_t rank, const Word& w);
GroupElement canonical_element(const Nil2Group& g, const Word& w);
GroupElement canonical_element(const Nil2Group& g, const FreeCoords& c);

/// nullopt means infinite order.
std::optional<Integer> element_order(const Nil2Group& g, const GroupElement& x);

struct GroupInvariants {
  std::optional<Integer> order;
  std::optional<Integer> exponent;
  AbelianQuotient abelianization;
  AbelianQuotient commutator_subgroup;
  /// { e : B(e, δ_j) ∈ N ∩ F' for all j }, the e-projection of Z(G).
  LatticeBasis center_radical;
  SubgroupData center;
  AbelianQuotient center_mod_commutator;
  bool is_abelian = false;
  bool is_finite = false;
};
GroupInvariants group_invariants(const Nil2Group& g);
/// Radical of the commutator pairing on G^ab, as a lattice in Z^k.
LatticeBasis center_radical(const Nil2Group& g);

SubgroupData subgroup_generated(const Nil2Group& g,
                                const std::vector<GroupElement>& elements);
SubgroupData whole_group(const Nil2Group& g);
/// Subgroup generated by all t-th powers.
SubgroupData power_subgroup(const Nil2Group& g, const Integer& t);
/// [A,B] for subgroups A, B (central, generated by commutators of generators).
SubgroupData commutator_subgroup(const SubgroupData& a, const SubgroupData& b);

enum class Tri { No, Yes, Unknown };
const char* tri_name(Tri t);

struct Homomorphism {
  Nil2Group source;
  Nil2Group target;
  std::vector<GroupElement> images;
  bool well_defined = false;
  std::optional<SubgroupData> image;
  Tri injective = Tri::Unknown;
  std::string injectivity_method;

  GroupElement apply(const FreeCoords& c) const;
  GroupElement apply(const GroupElement& x) const;
};
Homomorphism induced_hom(const Nil2Group& source, const Nil2Group& target,
                         const std::vector<GroupElement>& gen_images);

/// Kernel of the map F_s -> G sending the i-th free generator to images[i],
/// as a subgroup of the free nil-2 group of rank s.
SubgroupLattice kernel_lattice(const Nil2Group& target,
                               const std::vector<FreeCoords>& images);

struct SubgroupPresentation {
  Nil2Group group;
  Homomorphism inclusion;
};
/// Standalone presentation of H on one generator per generator of H.
SubgroupPresentation presentation_of_subgroup(
    const SubgroupData& h, std::vector<std::string> names, std::string name);

/// Sylow p-subgroup of a finite G, with its inclusion.
SubgroupPresentation p_part(const Nil2Group& g, const Integer& p);

Nil2Group direct_sum(const Nil2Group& a, const Nil2Group& b,
                     std::string name = "");
Nil2Group coproduct(const Nil2Group& a, const Nil2Group& b,
                    std::string name = "");

}  // namespace nil2
