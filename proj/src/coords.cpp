#include "nil2/coords.hpp"

namespace nil2 {

FreeCoords FreeCoords::generator(std::size_t k, std::size_t i) {
  FreeCoords c = identity(k);
  c.e.at(i) = 1;
  return c;
}

FreeCoords FreeCoords::central(std::size_t k, IntVector f) {
  if (f.size() != pair_count(k)) throw RankError("central: wrong length");
  return {zero_vector(k), std::move(f)};
}

IntVector bracket(const IntVector& u, const IntVector& v) {
  if (u.size() != v.size()) throw RankError("bracket: rank mismatch");
  const std::size_t k = u.size();
  IntVector out(pair_count(k));
  std::size_t idx = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) out[idx++] = u[i] * v[j] - u[j] * v[i];
  return out;
}

IntVector cocycle(const IntVector& u, const IntVector& v) {
  if (u.size() != v.size()) throw RankError("cocycle: rank mismatch");
  const std::size_t k = u.size();
  IntVector out(pair_count(k));
  std::size_t idx = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) out[idx++] = -u[j] * v[i];
  return out;
}

FreeCoords multiply(const FreeCoords& a, const FreeCoords& b) {
  if (a.rank() != b.rank()) throw RankError("multiply: rank mismatch");
  FreeCoords r{add(a.e, b.e), add(a.f, b.f)};
  const std::size_t k = a.rank();
  std::size_t idx = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) r.f[idx++] -= a.e[j] * b.e[i];
  return r;
}

FreeCoords inverse(const FreeCoords& a) {
  FreeCoords r{scaled(a.e, -1), scaled(a.f, -1)};
  r.f = add(r.f, cocycle(a.e, a.e));
  return r;
}

FreeCoords power(const FreeCoords& a, const Integer& t) {
  FreeCoords r{scaled(a.e, t), scaled(a.f, t)};
  const Integer c2 = t * (t - 1) / 2;
  axpy(r.f, c2, cocycle(a.e, a.e));
  return r;
}

FreeCoords free_commutator(const FreeCoords& u, const FreeCoords& v) {
  if (u.rank() != v.rank()) throw RankError("commutator: rank mismatch");
  return {zero_vector(u.rank()), bracket(u.e, v.e)};
}

FreeCoords embed_coords(const FreeCoords& c, std::size_t new_rank,
                        std::span<const std::size_t> index_map) {
  const std::size_t k = c.rank();
  if (index_map.size() != k) throw RankError("embed: map length mismatch");
  FreeCoords r = FreeCoords::identity(new_rank);
  for (std::size_t i = 0; i < k; ++i) {
    if (index_map[i] >= new_rank || (i && index_map[i] <= index_map[i - 1]))
      throw RankError("embed: index map must be increasing and in range");
    r.e[index_map[i]] = c.e[i];
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      r.f[pair_index(index_map[i], index_map[j], new_rank)] =
          c.f[pair_index(i, j, k)];
  return r;
}

SubgroupLattice SubgroupLattice::generated(std::size_t k,
                                           std::span<const FreeCoords> gens,
                                           const LatticeBasis& extra) {
  const std::size_t m = pair_count(k);
  if (extra.ambient_dim() != m) throw RankError("generated: central dim");
  for (const auto& g : gens)
    if (g.rank() != k || g.f.size() != m)
      throw RankError("generated: rank mismatch");

  std::vector<IntVector> central_gens(extra.rows());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      auto b = bracket(gens[i].e, gens[j].e);
      if (!is_zero(b)) central_gens.push_back(std::move(b));
    }

  std::vector<IntVector> tops;
  for (const auto& g : gens) tops.push_back(g.e);
  auto ht = hermite_with_transform(k, tops);

  auto combine = [&](const IntVector& coeffs) {
    FreeCoords p = FreeCoords::identity(k);
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (coeffs[j] != 0) p = multiply(p, power(gens[j], coeffs[j]));
    return p;
  };

  for (std::size_t i = ht.rank; i < gens.size(); ++i) {
    auto p = combine(ht.transform[i]);
    if (!is_zero(p.f)) central_gens.push_back(std::move(p.f));
  }

  SubgroupLattice s(k);
  s.central_ = hnf_basis(m, central_gens);
  s.top_ = hnf_basis(k, ht.hnf);
  for (std::size_t i = 0; i < ht.rank; ++i) {
    auto p = combine(ht.transform[i]);
    s.sections_.push_back(s.central_.residue(std::move(p.f)));
  }
  return s;
}

std::vector<FreeCoords> SubgroupLattice::generators() const {
  std::vector<FreeCoords> out;
  for (std::size_t i = 0; i < top_.rank(); ++i) out.push_back(section_element(i));
  for (const auto& r : central_.rows()) out.push_back({zero_vector(k_), r});
  return out;
}

FreeCoords SubgroupLattice::reduce(FreeCoords g) const {
  if (g.rank() != k_ || g.f.size() != pair_count(k_))
    throw RankError("reduce: rank mismatch");
  for (std::size_t i = 0; i < top_.rank(); ++i) {
    const std::size_t c = top_.pivots()[i];
    Integer t = floor_div(g.e[c], top_.rows()[i][c]);
    if (t != 0) g = multiply(g, power(section_element(i), -t));
  }
  g.f = central_.residue(std::move(g.f));
  return g;
}

bool SubgroupLattice::contains(const SubgroupLattice& other) const {
  if (other.k_ != k_) return false;
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

}  // namespace nil2
