#pragma once

#include <optional>
#include <span>
#include <stdexcept>

#include "nil2/integer.hpp"

// Exact integer linear algebra: Hermite and Smith normal forms, lattices
// inside a fixed ambient Z^n, finitely generated abelian quotients and
// congruence solving. All values are immutable once built.

namespace nil2 {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integer lattice in Z^ambient_dim, stored as its row-style Hermite normal
/// form: row echelon, positive pivots, entries above a pivot in [0, pivot).
/// Two lattices are equal iff their bases are equal.
class LatticeBasis {
 public:
  explicit LatticeBasis(std::size_t ambient_dim = 0) : dim_(ambient_dim) {}

  static LatticeBasis full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  bool is_full() const;
  const std::vector<IntVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const IntVector& v) const;
  /// Canonical representative of v + L: pivot coordinates reduced into
  /// [0, pivot). Constant on cosets.
  IntVector residue(IntVector v) const;
  /// residue() that also reports the row multiples removed:
  /// v = residue + sum(quotients[i] * rows[i]).
  IntVector residue(IntVector v, IntVector& quotients) const;

  bool operator==(const LatticeBasis&) const = default;

 private:
  friend LatticeBasis hnf_basis(std::size_t, std::span<const IntVector>);
  std::size_t dim_ = 0;
  std::vector<IntVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Canonical HNF basis of the lattice spanned by the generators.
LatticeBasis hnf_basis(std::size_t ambient_dim,
                       std::span<const IntVector> generators);

/// Row reduction with transform: transform * generators = [hnf; 0].
/// Rows of `transform` past `rank` form a basis of the integer relations
/// among the generators.
struct HermiteTransform {
  std::vector<IntVector> hnf;
  IntMatrix transform;
  std::size_t rank = 0;
};
HermiteTransform hermite_with_transform(std::size_t ambient_dim,
                                        std::span<const IntVector> generators);

struct Membership {
  bool member = false;
  IntVector coefficients;  // integer combination of rows when member
};
Membership lattice_contains(const LatticeBasis& L, const IntVector& v);

LatticeBasis lattice_join(const LatticeBasis& a, const LatticeBasis& b);
bool is_sublattice(const LatticeBasis& inner, const LatticeBasis& outer);

/// left * M * right = diag(d_1, ..., d_r, 0, ...), d_1 | d_2 | ... | d_r > 0.
/// `factors` holds the r nonzero diagonal entries, units included.
struct SmithForm {
  std::vector<Integer> factors;
  IntMatrix left;
  IntMatrix right;
  IntMatrix right_inverse;
  std::size_t rows = 0;
  std::size_t cols = 0;
};
SmithForm smith_decomposition(const IntMatrix& m, std::size_t cols);

/// outer / inner for lattices inner ⊆ outer, as Z^free_rank ⊕ ⊕ Z/d_i.
/// Unit factors are dropped; invariant factors are >= 2 and form a
/// divisibility chain. Coordinates are ordered torsion first (moduli d_i),
/// then free (modulus 0).
class AbelianQuotient {
 public:
  AbelianQuotient() = default;

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& invariant_factors() const { return factors_; }
  /// One entry per coordinate: d_i for torsion, 0 for free.
  const std::vector<Integer>& moduli() const { return moduli_; }
  std::size_t num_components() const { return moduli_.size(); }

  bool is_trivial() const { return moduli_.empty(); }
  bool is_cyclic() const { return moduli_.size() <= 1; }
  bool is_finite() const { return free_rank_ == 0; }
  std::optional<Integer> order() const;
  std::optional<Integer> exponent() const;
  /// Exponent of the torsion subgroup (1 when torsion-free).
  Integer torsion_exponent() const;

  std::size_t ambient_dim() const { return outer_.ambient_dim(); }
  const LatticeBasis& outer() const { return outer_; }
  const LatticeBasis& inner() const { return inner_; }

  /// Canonical coordinates of v ∈ outer (torsion entries in [0, d_i)).
  IntVector coordinates(const IntVector& v) const;
  /// Ambient vector representing the coordinate tuple.
  IntVector lift(const IntVector& coords) const;
  /// Canonical ambient representative of v + inner.
  IntVector residue(const IntVector& v) const { return lift(coordinates(v)); }
  /// Ambient lift of the generator of component i.
  const IntVector& generator(std::size_t i) const { return lifts_[i]; }
  /// Reduce a coordinate tuple (torsion entries into [0, d_i)).
  IntVector normalize(IntVector coords) const;
  /// Order of the element with these coordinates; nullopt if infinite.
  std::optional<Integer> element_order(const IntVector& coords) const;

  std::string describe() const;

 private:
  friend AbelianQuotient relative_quotient(const LatticeBasis&,
                                           const LatticeBasis&);
  LatticeBasis outer_;
  LatticeBasis inner_;
  std::size_t free_rank_ = 0;
  std::vector<Integer> factors_;
  std::vector<Integer> moduli_;
  // coordinates: outer-coefficients * transform_, restricted to kept_.
  IntMatrix transform_;
  std::vector<std::size_t> kept_;
  std::vector<IntVector> lifts_;
};

AbelianQuotient quotient_structure(std::size_t ambient_dim,
                                   const LatticeBasis& L);
/// outer / inner; throws DimensionError unless inner ⊆ outer.
AbelianQuotient relative_quotient(const LatticeBasis& outer,
                                  const LatticeBasis& inner);

/// { u ∈ Z^unknowns : coeff * u ≡ rhs (mod modulus) }.
struct SolutionSet {
  bool empty = true;
  IntVector particular;       // canonical residue modulo `homogeneous`
  LatticeBasis homogeneous;   // in Z^unknowns
};
SolutionSet affine_solution_set(const IntMatrix& coeff, std::size_t unknowns,
                                const IntVector& rhs,
                                const LatticeBasis& modulus);

/// Modulus lattice diag(moduli) in Z^moduli.size(); 0 entries contribute
/// nothing (the coordinate is an exact equation).
LatticeBasis diagonal_lattice(const std::vector<Integer>& moduli);

}  // namespace nil2
