#include "nil2/exactlin.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace nil2 {

std::string to_string(const IntVector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i].get_str();
  }
  out << ')';
  return out.str();
}

std::vector<std::pair<Integer, unsigned>> factorize(Integer n) {
  if (n == 0) throw std::invalid_argument("factorize: zero");
  n = abs(n);
  std::vector<std::pair<Integer, unsigned>> out;
  for (Integer p = 2; p * p <= n; ++p) {
    unsigned k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (k) out.emplace_back(p, k);
  }
  if (n > 1) out.emplace_back(n, 1u);
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> ds{Integer(1)};
  for (const auto& [p, k] : factorize(n)) {
    const std::size_t base = ds.size();
    Integer pk = 1;
    for (unsigned e = 1; e <= k; ++e) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

namespace {

void check_dims(std::size_t dim, std::span<const IntVector> vs,
                const char* what) {
  for (const auto& v : vs)
    if (v.size() != dim)
      throw DimensionError(std::string(what) + ": vector of length " +
                           std::to_string(v.size()) + ", expected " +
                           std::to_string(dim));
}

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, zero_vector(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// row_i -= q * row_j
void row_sub(IntMatrix& m, std::size_t i, std::size_t j, const Integer& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < m[i].size(); ++c) m[i][c] -= q * m[j][c];
}

void col_sub(IntMatrix& m, std::size_t i, std::size_t j, const Integer& q) {
  if (q == 0) return;
  for (auto& row : m) row[i] -= q * row[j];
}

void col_swap(IntMatrix& m, std::size_t i, std::size_t j) {
  for (auto& row : m) std::swap(row[i], row[j]);
}

}  // namespace

HermiteTransform hermite_with_transform(std::size_t dim,
                                        std::span<const IntVector> gens) {
  check_dims(dim, gens, "hnf");
  const std::size_t s = gens.size();
  IntMatrix a(gens.begin(), gens.end());
  IntMatrix u = identity(s);
  std::size_t p = 0;
  for (std::size_t c = 0; c < dim && p < s; ++c) {
    bool has_pivot = false;
    for (;;) {
      std::size_t best = s;
      for (std::size_t i = p; i < s; ++i)
        if (a[i][c] != 0 && (best == s || abs(a[i][c]) < abs(a[best][c])))
          best = i;
      if (best == s) break;
      has_pivot = true;
      std::swap(a[p], a[best]);
      std::swap(u[p], u[best]);
      bool clean = true;
      for (std::size_t i = p + 1; i < s; ++i) {
        if (a[i][c] == 0) continue;
        Integer q = floor_div(a[i][c], a[p][c]);
        row_sub(a, i, p, q);
        row_sub(u, i, p, q);
        if (a[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (!has_pivot) continue;
    if (a[p][c] < 0) {
      for (auto& x : a[p]) x = -x;
      for (auto& x : u[p]) x = -x;
    }
    for (std::size_t j = 0; j < p; ++j) {
      Integer q = floor_div(a[j][c], a[p][c]);
      row_sub(a, j, p, q);
      row_sub(u, j, p, q);
    }
    ++p;
  }
  HermiteTransform out;
  out.rank = p;
  out.hnf.assign(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(p));
  out.transform = std::move(u);
  return out;
}

LatticeBasis hnf_basis(std::size_t dim, std::span<const IntVector> gens) {
  check_dims(dim, gens, "hnf_basis");
  std::vector<IntVector> nonzero;
  for (const auto& g : gens)
    if (!is_zero(g)) nonzero.push_back(g);
  LatticeBasis L(dim);
  if (nonzero.empty()) return L;
  auto ht = hermite_with_transform(dim, nonzero);
  L.rows_ = std::move(ht.hnf);
  for (const auto& row : L.rows_) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    L.pivots_.push_back(c);
  }
  return L;
}

LatticeBasis LatticeBasis::full(std::size_t dim) {
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < dim; ++i) {
    rows.push_back(zero_vector(dim));
    rows.back()[i] = 1;
  }
  return hnf_basis(dim, rows);
}

bool LatticeBasis::is_full() const {
  if (rows_.size() != dim_) return false;
  for (std::size_t i = 0; i < dim_; ++i)
    if (rows_[i][pivots_[i]] != 1) return false;
  return true;
}

IntVector LatticeBasis::residue(IntVector v) const {
  IntVector q;
  return residue(std::move(v), q);
}

IntVector LatticeBasis::residue(IntVector v, IntVector& quotients) const {
  if (v.size() != dim_) throw DimensionError("residue: dimension mismatch");
  quotients.assign(rows_.size(), Integer(0));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t c = pivots_[i];
    Integer q = floor_div(v[c], rows_[i][c]);
    if (q != 0) {
      for (std::size_t j = c; j < dim_; ++j) v[j] -= q * rows_[i][j];
      quotients[i] = q;
    }
  }
  return v;
}

bool LatticeBasis::contains(const IntVector& v) const {
  return nil2::is_zero(residue(v));
}

Membership lattice_contains(const LatticeBasis& L, const IntVector& v) {
  Membership m;
  IntVector r = L.residue(v, m.coefficients);
  m.member = is_zero(r);
  if (!m.member) m.coefficients.clear();
  return m;
}

LatticeBasis lattice_join(const LatticeBasis& a, const LatticeBasis& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionError("lattice_join: dimension mismatch");
  std::vector<IntVector> gens(a.rows());
  gens.insert(gens.end(), b.rows().begin(), b.rows().end());
  return hnf_basis(a.ambient_dim(), gens);
}

bool is_sublattice(const LatticeBasis& inner, const LatticeBasis& outer) {
  if (inner.ambient_dim() != outer.ambient_dim()) return false;
  for (const auto& r : inner.rows())
    if (!outer.contains(r)) return false;
  return true;
}

SmithForm smith_decomposition(const IntMatrix& m, std::size_t cols) {
  const std::size_t rows = m.size();
  for (const auto& r : m)
    if (r.size() != cols) throw DimensionError("smith: ragged matrix");
  IntMatrix a = m;
  SmithForm out;
  out.rows = rows;
  out.cols = cols;
  out.left = identity(rows);
  out.right = identity(cols);
  out.right_inverse = identity(cols);
  auto& L = out.left;
  auto& R = out.right;
  auto& Ri = out.right_inverse;

  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    col_swap(a, i, j);
    col_swap(R, i, j);
    std::swap(Ri[i], Ri[j]);
  };
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    std::swap(L[i], L[j]);
  };

  const std::size_t n = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < n; ++t) {
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (bi == rows || abs(a[i][j]) < abs(a[bi][bj]))) {
          bi = i;
          bj = j;
        }
    if (bi == rows) break;
    swap_rows(t, bi);
    swap_cols(t, bj);
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Integer q = floor_div(a[i][t], a[t][t]);
        row_sub(a, i, t, q);
        row_sub(L, i, t, q);
        if (a[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Integer q = floor_div(a[t][j], a[t][t]);
        col_sub(a, j, t, q);
        col_sub(R, j, t, q);
        for (std::size_t c = 0; c < cols; ++c) Ri[t][c] += q * Ri[j][c];
        if (a[t][j] != 0) dirty = true;
      }
      if (dirty) {
        // smallest remaining entry of row t / column t becomes the pivot
        std::size_t mi = t, mj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a[i][t] != 0 && abs(a[i][t]) < abs(a[mi][mj])) {
            mi = i;
            mj = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[t][j] != 0 && abs(a[t][j]) < abs(a[mi][mj])) {
            mi = t;
            mj = j;
          }
        swap_rows(t, mi);
        swap_cols(t, mj);
        continue;
      }
      std::size_t fi = rows;
      for (std::size_t i = t + 1; i < rows && fi == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            fi = i;
            break;
          }
      if (fi == rows) break;
      for (std::size_t c = 0; c < cols; ++c) a[t][c] += a[fi][c];
      for (std::size_t c = 0; c < rows; ++c) L[t][c] += L[fi][c];
    }
    if (a[t][t] < 0) {
      for (auto& x : a[t]) x = -x;
      for (auto& x : L[t]) x = -x;
    }
  }
  for (std::size_t i = 0; i < t; ++i) out.factors.push_back(a[i][i]);
  return out;
}

std::optional<Integer> AbelianQuotient::order() const {
  if (free_rank_ > 0) return std::nullopt;
  Integer o = 1;
  for (const auto& d : factors_) o *= d;
  return o;
}

std::optional<Integer> AbelianQuotient::exponent() const {
  if (free_rank_ > 0) return std::nullopt;
  return torsion_exponent();
}

Integer AbelianQuotient::torsion_exponent() const {
  return factors_.empty() ? Integer(1) : factors_.back();
}

IntVector AbelianQuotient::coordinates(const IntVector& v) const {
  auto mem = lattice_contains(outer_, v);
  if (!mem.member)
    throw DimensionError("coordinates: vector outside the outer lattice");
  const auto& w = mem.coefficients;
  IntVector out;
  out.reserve(kept_.size());
  for (std::size_t k = 0; k < kept_.size(); ++k) {
    const std::size_t j = kept_[k];
    Integer y = 0;
    for (std::size_t i = 0; i < w.size(); ++i) y += w[i] * transform_[i][j];
    out.push_back(floor_mod(y, moduli_[k]));
  }
  return out;
}

IntVector AbelianQuotient::normalize(IntVector coords) const {
  if (coords.size() != moduli_.size())
    throw DimensionError("normalize: coordinate length mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i)
    coords[i] = floor_mod(coords[i], moduli_[i]);
  return coords;
}

IntVector AbelianQuotient::lift(const IntVector& coords) const {
  if (coords.size() != lifts_.size())
    throw DimensionError("lift: coordinate length mismatch");
  IntVector v = zero_vector(ambient_dim());
  for (std::size_t i = 0; i < coords.size(); ++i) axpy(v, coords[i], lifts_[i]);
  return v;
}

std::optional<Integer> AbelianQuotient::element_order(
    const IntVector& coords) const {
  Integer o = 1;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Integer c = floor_mod(coords[i], moduli_[i]);
    if (c == 0) continue;
    if (moduli_[i] == 0) return std::nullopt;
    o = lcm(o, moduli_[i] / gcd(c, moduli_[i]));
  }
  return o;
}

std::string AbelianQuotient::describe() const {
  if (moduli_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) s += " + ";
    s += moduli_[i] == 0 ? std::string("Z") : "Z/" + moduli_[i].get_str();
  }
  return s;
}

AbelianQuotient relative_quotient(const LatticeBasis& outer,
                                  const LatticeBasis& inner) {
  if (outer.ambient_dim() != inner.ambient_dim())
    throw DimensionError("relative_quotient: dimension mismatch");
  const std::size_t ro = outer.rank();
  IntMatrix x;
  for (const auto& r : inner.rows()) {
    auto mem = lattice_contains(outer, r);
    if (!mem.member)
      throw DimensionError("relative_quotient: inner lattice not contained");
    x.push_back(std::move(mem.coefficients));
  }
  auto sf = smith_decomposition(x, ro);
  AbelianQuotient q;
  q.outer_ = outer;
  q.inner_ = inner;
  q.transform_ = sf.right;
  for (std::size_t j = 0; j < ro; ++j) {
    Integer d = j < sf.factors.size() ? sf.factors[j] : Integer(0);
    if (d == 1) continue;
    q.kept_.push_back(j);
    q.moduli_.push_back(d);
    if (d == 0)
      ++q.free_rank_;
    else
      q.factors_.push_back(d);
    IntVector lift = zero_vector(outer.ambient_dim());
    for (std::size_t i = 0; i < ro; ++i)
      axpy(lift, sf.right_inverse[j][i], outer.rows()[i]);
    q.lifts_.push_back(std::move(lift));
  }
  return q;
}

AbelianQuotient quotient_structure(std::size_t dim, const LatticeBasis& L) {
  return relative_quotient(LatticeBasis::full(dim), L);
}

LatticeBasis diagonal_lattice(const std::vector<Integer>& moduli) {
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (moduli[i] == 0) continue;
    rows.push_back(zero_vector(moduli.size()));
    rows.back()[i] = moduli[i];
  }
  return hnf_basis(moduli.size(), rows);
}

SolutionSet affine_solution_set(const IntMatrix& coeff, std::size_t unknowns,
                                const IntVector& rhs,
                                const LatticeBasis& modulus) {
  const std::size_t p = coeff.size();
  if (rhs.size() != p || modulus.ambient_dim() != p)
    throw DimensionError("affine_solution_set: dimension mismatch");
  for (const auto& row : coeff)
    if (row.size() != unknowns)
      throw DimensionError("affine_solution_set: ragged coefficient matrix");

  std::vector<IntVector> gens;
  gens.reserve(unknowns + modulus.rank());
  for (std::size_t j = 0; j < unknowns; ++j) {
    IntVector col(p);
    for (std::size_t i = 0; i < p; ++i) col[i] = coeff[i][j];
    gens.push_back(std::move(col));
  }
  for (const auto& r : modulus.rows()) gens.push_back(r);

  SolutionSet out;
  out.homogeneous = LatticeBasis(unknowns);
  if (gens.empty()) {
    out.empty = !is_zero(rhs);
    if (!out.empty) return out;
    out.particular = {};
    return out;
  }
  auto ht = hermite_with_transform(p, gens);

  std::vector<IntVector> kernel;
  for (std::size_t i = ht.rank; i < gens.size(); ++i)
    kernel.emplace_back(ht.transform[i].begin(),
                        ht.transform[i].begin() +
                            static_cast<std::ptrdiff_t>(unknowns));
  out.homogeneous = hnf_basis(unknowns, kernel);

  // rhs in the span of the echelon rows?
  IntVector r = rhs;
  IntVector mu = zero_vector(ht.rank);
  for (std::size_t i = 0; i < ht.rank; ++i) {
    std::size_t c = 0;
    while (ht.hnf[i][c] == 0) ++c;
    for (std::size_t j = 0; j < c; ++j)
      if (r[j] != 0) return out;
    if (r[c] % ht.hnf[i][c] != 0) return out;
    mu[i] = r[c] / ht.hnf[i][c];
    for (std::size_t j = c; j < p; ++j) r[j] -= mu[i] * ht.hnf[i][j];
  }
  if (!is_zero(r)) return out;

  IntVector u = zero_vector(unknowns);
  for (std::size_t i = 0; i < ht.rank; ++i)
    for (std::size_t j = 0; j < unknowns; ++j)
      u[j] += mu[i] * ht.transform[i][j];
  out.empty = false;
  out.particular = out.homogeneous.residue(std::move(u));
  return out;
}

}  // namespace nil2
