#pragma once

#include <span>

#include "nil2/exactlin.hpp"

// Coordinates of the free nil-2 group of rank k: an element is
// x_1^{e_1} ... x_k^{e_k} * prod_{i<j} [x_i,x_j]^{f_ij}, with pairs (i,j)
// ordered lexicographically.

namespace nil2 {

inline std::size_t pair_count(std::size_t k) { return k * (k - 1) / 2; }
inline std::size_t pair_index(std::size_t i, std::size_t j, std::size_t k) {
  return i * k - i * (i + 1) / 2 + (j - i - 1);
}

struct FreeCoords {
  IntVector e;
  IntVector f;

  FreeCoords() = default;
  FreeCoords(IntVector e_, IntVector f_) : e(std::move(e_)), f(std::move(f_)) {}
  static FreeCoords identity(std::size_t k) {
    return {zero_vector(k), zero_vector(pair_count(k))};
  }
  static FreeCoords generator(std::size_t k, std::size_t i);
  static FreeCoords central(std::size_t k, IntVector f);

  std::size_t rank() const { return e.size(); }
  bool is_identity() const { return is_zero(e) && is_zero(f); }
  bool operator==(const FreeCoords&) const = default;
  auto operator<=>(const FreeCoords& o) const {
    if (auto c = e <=> o.e; c != 0) return c;
    return f <=> o.f;
  }
};

class RankError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// B(u,v)_ij = u_i v_j - u_j v_i.
IntVector bracket(const IntVector& u, const IntVector& v);
/// Collection cocycle beta(u,v)_ij = -u_j v_i.
IntVector cocycle(const IntVector& u, const IntVector& v);

FreeCoords multiply(const FreeCoords& a, const FreeCoords& b);
FreeCoords inverse(const FreeCoords& a);
FreeCoords power(const FreeCoords& a, const Integer& t);
/// [u,v] = u^-1 v^-1 u v, which is (0, B(e_u, e_v)).
FreeCoords free_commutator(const FreeCoords& u, const FreeCoords& v);

/// Re-index into rank `new_rank` by an increasing map of generator indices.
FreeCoords embed_coords(const FreeCoords& c, std::size_t new_rank,
                        std::span<const std::size_t> index_map);

/// A subgroup S of the free nil-2 group in canonical form:
///   top      HNF basis of the projection of S to Z^k;
///   sections f-parts of fixed lifts of the top rows, reduced mod central;
///   central  HNF basis of S ∩ F' inside Z^{k(k-1)/2}.
/// Equal subgroups have equal triples.
class SubgroupLattice {
 public:
  SubgroupLattice() = default;
  explicit SubgroupLattice(std::size_t k)
      : k_(k), top_(k), central_(pair_count(k)) {}

  /// Subgroup generated by `gens` together with the central lattice `extra`.
  static SubgroupLattice generated(std::size_t k,
                                   std::span<const FreeCoords> gens,
                                   const LatticeBasis& extra);

  std::size_t rank() const { return k_; }
  const LatticeBasis& top() const { return top_; }
  const std::vector<IntVector>& sections() const { return sections_; }
  const LatticeBasis& central() const { return central_; }
  FreeCoords section_element(std::size_t i) const {
    return {top_.rows()[i], sections_[i]};
  }
  /// Section elements followed by central basis elements; generates S.
  std::vector<FreeCoords> generators() const;

  /// Canonical representative of the left coset g*S.
  FreeCoords reduce(FreeCoords g) const;
  bool contains(const FreeCoords& g) const { return reduce(g).is_identity(); }
  bool contains(const SubgroupLattice& other) const;

  bool operator==(const SubgroupLattice&) const = default;

 private:
  std::size_t k_ = 0;
  LatticeBasis top_;
  std::vector<IntVector> sections_;
  LatticeBasis central_;
};

}  // namespace nil2
