#include "nil2/group.hpp"

#include <set>

namespace nil2 {

namespace detail {
struct GroupData {
  std::string name;
  std::vector<std::string> names;
  std::vector<Word> relator_words;
  std::vector<FreeCoords> relators;
  SubgroupLattice relations;
  AbelianQuotient ab;
  AbelianQuotient comm;
  bool abelian = false;
  bool finite = false;
  std::optional<Integer> order;
  std::optional<Integer> exponent;
};
}  // namespace detail

namespace {

LatticeBasis full_lattice(std::size_t dim) { return LatticeBasis::full(dim); }

// <x_i^t> (G')^m N with m = t (odd t) or t/2 (even t).
SubgroupLattice power_lattice(std::size_t k, const SubgroupLattice& n,
                              const Integer& t) {
  std::vector<FreeCoords> gens = n.generators();
  for (std::size_t i = 0; i < k; ++i)
    gens.push_back(power(FreeCoords::generator(k, i), t));
  const Integer m = t % 2 == 0 ? Integer(t / 2) : t;
  std::vector<IntVector> extra(n.central().rows());
  for (std::size_t i = 0; i < pair_count(k); ++i) {
    extra.push_back(zero_vector(pair_count(k)));
    extra.back()[i] = m;
  }
  return SubgroupLattice::generated(k, gens, hnf_basis(pair_count(k), extra));
}

std::vector<IntVector> normality_rows(std::size_t k,
                                      const std::vector<FreeCoords>& rels) {
  std::vector<IntVector> out;
  for (const auto& r : rels)
    for (std::size_t j = 0; j < k; ++j) {
      auto b = bracket(r.e, FreeCoords::generator(k, j).e);
      if (!is_zero(b)) out.push_back(std::move(b));
    }
  return out;
}

}  // namespace

namespace detail {
struct GroupFactory {
  static Nil2Group make(std::vector<std::string> names,
                        std::optional<std::vector<Word>> words,
                        std::vector<FreeCoords> relators, std::string name) {
    std::set<std::string> seen;
    for (const auto& n : names)
      if (!seen.insert(n).second)
        throw std::invalid_argument("duplicate generator name '" + n + "'");
    const std::size_t k = names.size();
    for (const auto& r : relators)
      if (r.rank() != k || r.f.size() != pair_count(k))
        throw RankError("relator rank does not match generator count");

    auto d = std::make_shared<GroupData>();
    d->name = std::move(name);
    d->names = std::move(names);
    if (words) {
      d->relator_words = std::move(*words);
    } else {
      for (const auto& r : relators) d->relator_words.push_back(coords_word(r));
    }
    d->relations = SubgroupLattice::generated(
        k, relators, hnf_basis(pair_count(k), normality_rows(k, relators)));
    d->relators = std::move(relators);
    d->ab = quotient_structure(k, d->relations.top());
    d->comm = quotient_structure(pair_count(k), d->relations.central());
    d->abelian = d->comm.is_trivial();
    d->finite = d->ab.is_finite() && d->comm.is_finite();
    if (d->finite) {
      d->order = *d->ab.order() * *d->comm.order();
      const Integer bound = *d->ab.exponent() * *d->comm.exponent();
      for (const auto& t : divisors(bound))
        if (power_lattice(k, d->relations, t) == d->relations) {
          d->exponent = t;
          break;
        }
    }
    Nil2Group g;
    g.d_ = std::move(d);
    return g;
  }
};
}  // namespace detail

Nil2Group build_group_from_coords(std::vector<std::string> names,
                                  std::vector<FreeCoords> relators,
                                  std::string name) {
  return detail::GroupFactory::make(std::move(names), std::nullopt,
                                    std::move(relators), std::move(name));
}

Nil2Group build_group(const Presentation& p, std::string name) {
  std::vector<FreeCoords> rels;
  for (const auto& w : p.relators)
    rels.push_back(evaluate(w, p.generators.size()));
  return detail::GroupFactory::make(p.generators, p.relators, std::move(rels),
                                    std::move(name));
}

std::size_t Nil2Group::rank() const { return d_->names.size(); }
const std::string& Nil2Group::name() const { return d_->name; }
const std::vector<std::string>& Nil2Group::generator_names() const {
  return d_->names;
}
const std::vector<Word>& Nil2Group::relator_words() const {
  return d_->relator_words;
}
const std::vector<FreeCoords>& Nil2Group::relators() const {
  return d_->relators;
}
const SubgroupLattice& Nil2Group::relations() const { return d_->relations; }
const AbelianQuotient& Nil2Group::abelianization() const { return d_->ab; }
const AbelianQuotient& Nil2Group::commutator_quotient() const {
  return d_->comm;
}
bool Nil2Group::is_abelian() const { return d_->abelian; }
bool Nil2Group::is_finite() const { return d_->finite; }
std::optional<Integer> Nil2Group::order() const { return d_->order; }
std::optional<Integer> Nil2Group::exponent() const { return d_->exponent; }

FreeCoords Nil2Group::reduce(FreeCoords c) const {
  return d_->relations.reduce(std::move(c));
}
GroupElement Nil2Group::identity() const {
  return {*this, FreeCoords::identity(rank())};
}
GroupElement Nil2Group::generator(std::size_t i) const {
  if (i >= rank()) throw RankError("generator index out of range");
  return element(FreeCoords::generator(rank(), i));
}
GroupElement Nil2Group::element(FreeCoords c) const {
  return {*this, reduce(std::move(c))};
}
GroupElement Nil2Group::element(const Word& w) const {
  return element(evaluate(w, rank()));
}
GroupElement Nil2Group::element(std::string_view word) const {
  return element(parse(word));
}
GroupElement Nil2Group::central(IntVector f) const {
  return element(FreeCoords::central(rank(), std::move(f)));
}
std::string Nil2Group::format(const FreeCoords& c) const {
  return format_coords(c, d_->names);
}
Word Nil2Group::parse(std::string_view word) const {
  return parse_word(word, d_->names);
}

void check_owner(const Nil2Group& g, const GroupElement& x) {
  if (!g.same(x.group()))
    throw OwnerMismatch("element does not belong to group '" + g.name() + "'");
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  check_owner(g_, o);
  return g_.element(multiply(c_, o.c_));
}
GroupElement GroupElement::inverse() const { return g_.element(nil2::inverse(c_)); }
GroupElement GroupElement::pow(const Integer& t) const {
  return g_.element(power(c_, t));
}
bool GroupElement::operator==(const GroupElement& o) const {
  check_owner(g_, o);
  return c_ == o.c_;
}

GroupElement commutator(const GroupElement& a, const GroupElement& b) {
  check_owner(a.group(), b);
  return a.group().element(free_commutator(a.coords(), b.coords()));
}

SubgroupData::SubgroupData(Nil2Group g, std::vector<GroupElement> gens,
                           SubgroupLattice s)
    : g_(std::move(g)), gens_(std::move(gens)), s_(std::move(s)) {}

bool SubgroupData::contains(const GroupElement& x) const {
  check_owner(g_, x);
  return s_.contains(x.coords());
}
bool SubgroupData::contains(const SubgroupData& h) const {
  if (!g_.same(h.g_)) throw OwnerMismatch("subgroups of different groups");
  return s_.contains(h.s_);
}
bool SubgroupData::operator==(const SubgroupData& h) const {
  if (!g_.same(h.g_)) throw OwnerMismatch("subgroups of different groups");
  return s_ == h.s_;
}
bool SubgroupData::is_trivial() const { return s_ == g_.relations(); }
bool SubgroupData::is_whole() const {
  return s_.top().is_full() && s_.central().is_full();
}
AbelianQuotient SubgroupData::abelian_image() const {
  return relative_quotient(s_.top(), g_.relations().top());
}
AbelianQuotient SubgroupData::commutator_part() const {
  return relative_quotient(s_.central(), g_.relations().central());
}
std::optional<Integer> SubgroupData::order() const {
  auto a = abelian_image().order();
  auto c = commutator_part().order();
  if (!a || !c) return std::nullopt;
  return *a * *c;
}

FreeCoords word_to_coords(std::size_t rank, const Word& w) {
  return evaluate(w, rank);
}
GroupElement canonical_element(const Nil2Group& g, const Word& w) {
  return g.element(w);
}
GroupElement canonical_element(const Nil2Group& g, const FreeCoords& c) {
  if (c.rank() != g.rank()) throw RankError("canonical_element: rank mismatch");
  return g.element(c);
}

std::optional<Integer> element_order(const Nil2Group& g, const GroupElement& x) {
  check_owner(g, x);
  const auto& ab = g.abelianization();
  auto t0 = ab.element_order(ab.coordinates(x.coords().e));
  if (!t0) return std::nullopt;
  FreeCoords h = g.reduce(power(x.coords(), *t0));
  const auto& cq = g.commutator_quotient();
  auto t1 = cq.element_order(cq.coordinates(h.f));
  if (!t1) return std::nullopt;
  return *t0 * *t1;
}

LatticeBasis center_radical(const Nil2Group& g) {
  const std::size_t k = g.rank(), m = g.pair_dim();
  if (k == 0) return LatticeBasis(0);
  // rows indexed by (j, pair); B(e, δ_j)_{ab} = e_a [b == j] - e_b [a == j]
  IntMatrix coeff(k * m, zero_vector(k));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b) {
        const std::size_t row = j * m + pair_index(a, b, k);
        if (b == j) coeff[row][a] += 1;
        if (a == j) coeff[row][b] -= 1;
      }
  std::vector<IntVector> mod;
  for (std::size_t j = 0; j < k; ++j)
    for (const auto& r : g.relations().central().rows()) {
      IntVector v = zero_vector(k * m);
      for (std::size_t i = 0; i < m; ++i) v[j * m + i] = r[i];
      mod.push_back(std::move(v));
    }
  auto sol = affine_solution_set(coeff, k, zero_vector(k * m),
                                 hnf_basis(k * m, mod));
  return sol.homogeneous;
}

GroupInvariants group_invariants(const Nil2Group& g) {
  const std::size_t k = g.rank(), m = g.pair_dim();
  GroupInvariants inv{g.order(),
                      g.exponent(),
                      g.abelianization(),
                      g.commutator_quotient(),
                      center_radical(g),
                      whole_group(g),
                      {},
                      g.is_abelian(),
                      g.is_finite()};
  std::vector<FreeCoords> gens = g.relations().generators();
  std::vector<GroupElement> elems;
  for (const auto& r : inv.center_radical.rows()) {
    gens.push_back({r, zero_vector(m)});
    elems.push_back(g.element(gens.back()));
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      elems.push_back(commutator(g.generator(a), g.generator(b)));
  inv.center = SubgroupData(
      g, std::move(elems),
      SubgroupLattice::generated(k, gens, full_lattice(m)));
  inv.center_mod_commutator =
      relative_quotient(inv.center_radical, g.relations().top());
  return inv;
}

SubgroupData subgroup_generated(const Nil2Group& g,
                                const std::vector<GroupElement>& elements) {
  std::vector<FreeCoords> gens = g.relations().generators();
  for (const auto& x : elements) {
    check_owner(g, x);
    gens.push_back(x.coords());
  }
  return SubgroupData(
      g, elements,
      SubgroupLattice::generated(g.rank(), gens, g.relations().central()));
}

SubgroupData whole_group(const Nil2Group& g) {
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < g.rank(); ++i) gens.push_back(g.generator(i));
  return subgroup_generated(g, gens);
}

SubgroupData power_subgroup(const Nil2Group& g, const Integer& t) {
  if (t < 1) throw std::invalid_argument("power_subgroup: t must be >= 1");
  const std::size_t k = g.rank();
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(g.generator(i).pow(t));
  const Integer m = t % 2 == 0 ? Integer(t / 2) : t;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      gens.push_back(commutator(g.generator(a), g.generator(b)).pow(m));
  return SubgroupData(g, std::move(gens), power_lattice(k, g.relations(), t));
}

SubgroupData commutator_subgroup(const SubgroupData& a, const SubgroupData& b) {
  const Nil2Group& g = a.group();
  if (!g.same(b.group())) throw OwnerMismatch("subgroups of different groups");
  std::vector<IntVector> extra(g.relations().central().rows());
  std::vector<GroupElement> elems;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) {
      auto c = commutator(x, y);
      extra.push_back(bracket(x.coords().e, y.coords().e));
      elems.push_back(c);
    }
  return SubgroupData(
      g, std::move(elems),
      SubgroupLattice::generated(g.rank(), g.relations().generators(),
                                 hnf_basis(g.pair_dim(), extra)));
}

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::No:
      return "no";
    case Tri::Yes:
      return "yes";
    case Tri::Unknown:
      break;
  }
  return "unknown";
}

namespace {

FreeCoords apply_coords(const Nil2Group& target,
                        const std::vector<FreeCoords>& images,
                        const FreeCoords& c) {
  const std::size_t k = c.rank();
  FreeCoords out = FreeCoords::identity(target.rank());
  for (std::size_t i = 0; i < k; ++i)
    if (c.e[i] != 0) out = multiply(out, power(images[i], c.e[i]));
  std::size_t idx = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j, ++idx)
      if (c.f[idx] != 0)
        out = multiply(out, power(free_commutator(images[i], images[j]), c.f[idx]));
  return target.reduce(std::move(out));
}

}  // namespace

GroupElement Homomorphism::apply(const FreeCoords& c) const {
  if (c.rank() != source.rank()) throw RankError("apply: rank mismatch");
  std::vector<FreeCoords> imgs;
  for (const auto& x : images) imgs.push_back(x.coords());
  return GroupElement(target, apply_coords(target, imgs, c));
}

GroupElement Homomorphism::apply(const GroupElement& x) const {
  check_owner(source, x);
  return apply(x.coords());
}

SubgroupLattice kernel_lattice(const Nil2Group& target,
                               const std::vector<FreeCoords>& images) {
  const std::size_t s = images.size();
  const std::size_t ms = pair_count(s);
  const std::size_t k = target.rank(), m = target.pair_dim();
  const SubgroupLattice& n = target.relations();

  // λ with Σ λ_j e_j ∈ E_N
  IntMatrix ecoef(k, zero_vector(s));
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t i = 0; i < k; ++i) ecoef[i][j] = images[j].e[i];
  auto ke = affine_solution_set(ecoef, s, zero_vector(k), n.top()).homogeneous;

  auto ordered = [&](const IntVector& lambda) {
    FreeCoords p = FreeCoords::identity(k);
    for (std::size_t j = 0; j < s; ++j)
      if (lambda[j] != 0) p = multiply(p, power(images[j], lambda[j]));
    p = n.reduce(std::move(p));
    if (!is_zero(p.e)) throw std::logic_error("kernel_lattice: e-part not in N");
    return p.f;
  };

  // M: commutator coordinates of F_s -> G'
  IntMatrix mcoef(m, zero_vector(ms));
  std::vector<IntVector> image_gens(n.central().rows());
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = a + 1; b < s; ++b) {
      auto col = bracket(images[a].e, images[b].e);
      for (std::size_t i = 0; i < m; ++i) mcoef[i][pair_index(a, b, s)] = col[i];
      image_gens.push_back(std::move(col));
    }
  const LatticeBasis q = hnf_basis(m, image_gens);

  const auto& kappa = ke.rows();
  const std::size_t r = kappa.size();
  IntMatrix vcoef(m, zero_vector(r));
  for (std::size_t i = 0; i < r; ++i) {
    auto z = ordered(kappa[i]);
    for (std::size_t c = 0; c < m; ++c) vcoef[c][i] = z[c];
  }
  auto tl = affine_solution_set(vcoef, r, zero_vector(m), q).homogeneous;

  std::vector<FreeCoords> rels;
  for (const auto& t : tl.rows()) {
    IntVector lambda = zero_vector(s);
    for (std::size_t i = 0; i < r; ++i) axpy(lambda, t[i], kappa[i]);
    auto z = ordered(lambda);
    auto sol = affine_solution_set(mcoef, ms, scaled(z, -1), n.central());
    if (sol.empty) throw std::logic_error("kernel_lattice: unsolvable lift");
    rels.push_back({lambda, sol.particular});
  }
  auto cent = affine_solution_set(mcoef, ms, zero_vector(m), n.central());
  for (const auto& f : cent.homogeneous.rows())
    rels.push_back({zero_vector(s), f});
  return SubgroupLattice::generated(s, rels, LatticeBasis(ms));
}

Homomorphism induced_hom(const Nil2Group& source, const Nil2Group& target,
                         const std::vector<GroupElement>& gen_images) {
  if (gen_images.size() != source.rank())
    throw std::invalid_argument("induced_hom: one image per generator required");
  for (const auto& x : gen_images) check_owner(target, x);
  Homomorphism h;
  h.source = source;
  h.target = target;
  h.images = gen_images;
  std::vector<FreeCoords> imgs;
  for (const auto& x : gen_images) imgs.push_back(x.coords());
  h.well_defined = true;
  for (const auto& r : source.relators())
    if (!apply_coords(target, imgs, r).is_identity()) {
      h.well_defined = false;
      break;
    }
  h.image = subgroup_generated(target, gen_images);
  if (!h.well_defined) {
    h.injective = Tri::Unknown;
    h.injectivity_method = "not well-defined";
  } else if (source.is_finite()) {
    h.injective = h.image->order() == source.order() ? Tri::Yes : Tri::No;
    h.injectivity_method = "order";
  } else {
    h.injective = kernel_lattice(target, imgs) == source.relations() ? Tri::Yes
                                                                     : Tri::No;
    h.injectivity_method = "kernel";
  }
  return h;
}

SubgroupPresentation presentation_of_subgroup(const SubgroupData& h,
                                              std::vector<std::string> names,
                                              std::string name) {
  const auto& gens = h.generators();
  if (names.empty())
    for (std::size_t i = 0; i < gens.size(); ++i)
      names.push_back("h" + std::to_string(i + 1));
  if (names.size() != gens.size())
    throw std::invalid_argument("presentation_of_subgroup: name count");
  std::vector<FreeCoords> imgs;
  for (const auto& x : gens) imgs.push_back(x.coords());
  auto k = kernel_lattice(h.group(), imgs);
  Nil2Group g = build_group_from_coords(std::move(names), k.generators(),
                                        std::move(name));
  auto inc = induced_hom(g, h.group(), gens);
  return {g, std::move(inc)};
}

SubgroupPresentation p_part(const Nil2Group& g, const Integer& p) {
  if (!g.is_finite()) throw std::invalid_argument("p_part: infinite group");
  if (p < 2 || factorize(p).size() != 1 || factorize(p)[0].second != 1)
    throw std::invalid_argument("p_part: p must be prime");
  const Integer ex = *g.exponent();
  Integer pv = 1;
  while (ex % (pv * p) == 0) pv *= p;
  const Integer cof = ex / pv;
  Integer alpha = 0;
  if (pv > 1) {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), cof.get_mpz_t(), pv.get_mpz_t());
    alpha = cof * inv;
  }
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < g.rank(); ++i) gens.push_back(g.generator(i).pow(alpha));
  auto h = subgroup_generated(g, gens);
  return presentation_of_subgroup(h, g.generator_names(),
                                  g.name() + "[" + p.get_str() + "]");
}

namespace {

std::vector<std::string> merged_names(const Nil2Group& a, const Nil2Group& b) {
  std::vector<std::string> names = a.generator_names();
  std::set<std::string> used(names.begin(), names.end());
  for (std::string n : b.generator_names()) {
    while (used.count(n)) n += "_b";
    used.insert(n);
    names.push_back(n);
  }
  return names;
}

std::vector<FreeCoords> merged_relators(const Nil2Group& a, const Nil2Group& b) {
  const std::size_t ka = a.rank(), kb = b.rank(), k = ka + kb;
  std::vector<std::size_t> ma(ka), mb(kb);
  for (std::size_t i = 0; i < ka; ++i) ma[i] = i;
  for (std::size_t i = 0; i < kb; ++i) mb[i] = ka + i;
  std::vector<FreeCoords> rels;
  for (const auto& r : a.relators()) rels.push_back(embed_coords(r, k, ma));
  for (const auto& r : b.relators()) rels.push_back(embed_coords(r, k, mb));
  return rels;
}

}  // namespace

Nil2Group direct_sum(const Nil2Group& a, const Nil2Group& b, std::string name) {
  auto rels = merged_relators(a, b);
  const std::size_t ka = a.rank(), k = ka + b.rank();
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t j = ka; j < k; ++j) {
      IntVector f = zero_vector(pair_count(k));
      f[pair_index(i, j, k)] = 1;
      rels.push_back(FreeCoords::central(k, std::move(f)));
    }
  if (name.empty()) name = a.name() + "+" + b.name();
  return build_group_from_coords(merged_names(a, b), std::move(rels),
                                 std::move(name));
}

Nil2Group coproduct(const Nil2Group& a, const Nil2Group& b, std::string name) {
  if (name.empty()) name = a.name() + "*" + b.name();
  return build_group_from_coords(merged_names(a, b), merged_relators(a, b),
                                 std::move(name));
}

}  // namespace nil2
