#include "nil2/closure.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>

#include <omp.h>

namespace nil2 {

namespace detail {

// Everything the pair conditions need, in Smith coordinates of G^ab.
struct PairContext {
  Nil2Group g;
  const AbelianQuotient* ab = nullptr;
  const AbelianQuotient* comm = nullptr;
  std::size_t s = 0;
  std::vector<Integer> d;
  // omega[i][j] = [l_i, l_j] in G' coordinates, l_i the i-th generator lift.
  std::vector<std::vector<IntVector>> omega;

  explicit PairContext(const Nil2Group& grp)
      : g(grp), ab(&grp.abelianization()), comm(&grp.commutator_quotient()) {
    s = ab->num_components();
    d = ab->moduli();
    omega.assign(s, std::vector<IntVector>(s));
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j)
        omega[i][j] =
            comm->coordinates(bracket(ab->generator(i), ab->generator(j)));
  }

  bool has_commutators() const { return !comm->is_trivial(); }

  // [u, v] in G' coordinates, normalized.
  IntVector pairing(const IntVector& u, const IntVector& v) const {
    IntVector r = zero_vector(comm->num_components());
    for (std::size_t i = 0; i < s; ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < s; ++j) {
        if (v[j] == 0) continue;
        axpy(r, u[i] * v[j], omega[i][j]);
      }
    }
    return comm->normalize(std::move(r));
  }

  bool central(const IntVector& u) const {
    for (std::size_t j = 0; j < s; ++j)
      if (!is_zero(pairing(u, unit(j)))) return false;
    return true;
  }

  IntVector unit(std::size_t j) const {
    IntVector e = zero_vector(s);
    e[j] = 1;
    return e;
  }

  std::vector<Integer> gcds(const Integer& n) const {
    std::vector<Integer> m(s);
    for (std::size_t i = 0; i < s; ++i) m[i] = gcd(n, d[i]);
    return m;
  }

  // x ∈ nA
  static bool divisible(const IntVector& x, const std::vector<Integer>& m) {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (floor_mod(x[i], m[i]) != 0) return false;
    return true;
  }

  // Least nonnegative solution of n*g = r in A (r must lie in nA).
  IntVector root(const IntVector& r, const Integer& n) const {
    IntVector out(s);
    for (std::size_t i = 0; i < s; ++i) {
      if (d[i] == 0) {
        out[i] = r[i] / n;
        continue;
      }
      const Integer h = gcd(n, d[i]);
      const Integer dd = d[i] / h;
      if (dd == 1) {
        out[i] = 0;
        continue;
      }
      Integer inv;
      const Integer nn = floor_mod(n / h, dd);
      mpz_invert(inv.get_mpz_t(), nn.get_mpz_t(), dd.get_mpz_t());
      out[i] = floor_mod((r[i] / h) * inv, dd);
    }
    return out;
  }

  IntVector coords(const GroupElement& x) const {
    return ab->coordinates(x.coords().e);
  }
  GroupElement element(const IntVector& c) const {
    return g.element(FreeCoords{ab->lift(c), zero_vector(g.pair_dim())});
  }
};

struct RawWitness {
  Integer a, b, c;
  IntVector g1, g2;
};

IntVector combine(const Integer& a, const IntVector& x, const Integer& b,
                  const IntVector& y) {
  IntVector r = scaled(x, a);
  axpy(r, b, y);
  return r;
}

// Congruences a*x_i + b*y_i = 0 and (b+shift)*x_i + c*y_i = 0 mod m_i.
void pair_system(const IntVector& x, const IntVector& y,
                 const std::vector<Integer>& m, long shift, IntMatrix& coeff,
                 IntVector& rhs, std::vector<Integer>& mods) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (m[i] == 1) continue;
    coeff.push_back({x[i], y[i], Integer(0)});
    rhs.emplace_back(0);
    mods.push_back(m[i]);
    coeff.push_back({Integer(0), x[i], y[i]});
    rhs.push_back(-shift * x[i]);
    mods.push_back(m[i]);
  }
}

SolutionSet solve(const IntMatrix& coeff, std::size_t unknowns,
                  const IntVector& rhs, const std::vector<Integer>& mods) {
  if (coeff.empty()) {
    return {false, zero_vector(unknowns), LatticeBasis::full(unknowns)};
  }
  return affine_solution_set(coeff, unknowns, rhs, diagonal_lattice(mods));
}

std::optional<RawWitness> condthree(const PairContext& ctx, const IntVector& x,
                                    const IntVector& y, const Integer& n) {
  const auto m = ctx.gcds(n);
  IntMatrix coeff;
  IntVector rhs;
  std::vector<Integer> mods;
  pair_system(x, y, m, 1, coeff, rhs, mods);
  const SolutionSet sol = solve(coeff, 3, rhs, mods);
  if (sol.empty && !coeff.empty()) return std::nullopt;
  const IntVector& t = sol.particular;
  RawWitness w{t[0], t[1], t[2], {}, {}};
  w.g1 = ctx.root(combine(w.a, x, w.b, y), n);
  w.g2 = ctx.root(combine(w.b + 1, x, w.c, y), n);
  return w;
}

std::optional<RawWitness> condtwo(const PairContext& ctx, const IntVector& x,
                                  const IntVector& y, const Integer& n) {
  if (!ctx.has_commutators()) return std::nullopt;
  const auto m = ctx.gcds(n);
  IntMatrix coeff;
  IntVector rhs;
  std::vector<Integer> mods;
  pair_system(x, y, m, 0, coeff, rhs, mods);
  const SolutionSet sol = solve(coeff, 3, rhs, mods);
  for (const auto& v : sol.homogeneous.rows()) {
    RawWitness w{v[0], v[1], v[2], {}, {}};
    w.g1 = ctx.root(combine(w.a, x, w.b, y), n);
    w.g2 = ctx.root(combine(w.b, x, w.c, y), n);
    if (!is_zero(ctx.comm->normalize(add(ctx.pairing(w.g1, x),
                                         ctx.pairing(w.g2, y)))))
      return w;
  }
  // n-torsion of A: roots of the identity in either slot
  const IntVector zero = zero_vector(ctx.s);
  for (int slot = 0; slot < 2; ++slot)
    for (std::size_t i = 0; i < ctx.s; ++i) {
      if (ctx.d[i] == 0 || m[i] == 1) continue;
      IntVector t = zero;
      t[i] = ctx.d[i] / m[i];
      if (!is_zero(ctx.pairing(t, slot == 0 ? x : y))) {
        RawWitness w{0, 0, 0, zero, zero};
        (slot == 0 ? w.g1 : w.g2) = t;
        return w;
      }
    }
  return std::nullopt;
}

// Boolean form used by the enumerations.
bool pair_ok(const PairContext& ctx, const IntVector& x, const IntVector& y,
             const Integer& n) {
  const auto m = ctx.gcds(n);
  if (PairContext::divisible(x, m) || PairContext::divisible(y, m)) return true;
  if (condthree(ctx, x, y, n)) return true;
  if (!ctx.has_commutators() || (ctx.central(x) && ctx.central(y))) return false;
  return condtwo(ctx, x, y, n).has_value();
}

PairWitness to_witness(const PairContext& ctx, const RawWitness& w) {
  return {w.a, w.b, w.c, ctx.element(w.g1), ctx.element(w.g2)};
}

}  // namespace detail

using detail::PairContext;

PairResult check_pair(const Nil2Group& g, const GroupElement& x,
                      const GroupElement& y, const Integer& n) {
  check_owner(g, x);
  check_owner(g, y);
  if (n < 1) throw std::invalid_argument("check_pair: n must be >= 1");
  const PairContext ctx(g);
  const IntVector xc = ctx.coords(x), yc = ctx.coords(y);
  PairResult r;
  if (auto w = detail::condtwo(ctx, xc, yc, n)) r.condtwo = detail::to_witness(ctx, *w);
  if (auto w = detail::condthree(ctx, xc, yc, n))
    r.condthree = detail::to_witness(ctx, *w);
  return r;
}

namespace {

bool congruent_mod_commutator(const Nil2Group& g, const GroupElement& u,
                              const GroupElement& v) {
  return g.relations().top().contains((u * v.inverse()).coords().e);
}

bool root_equations(const Nil2Group& g, const GroupElement& x,
                    const GroupElement& y, const Integer& n,
                    const PairWitness& w, long shift) {
  check_owner(g, w.g1);
  check_owner(g, w.g2);
  return congruent_mod_commutator(g, w.g1.pow(n), x.pow(w.a) * y.pow(w.b)) &&
         congruent_mod_commutator(g, w.g2.pow(n),
                                  x.pow(w.b + shift) * y.pow(w.c));
}

}  // namespace

bool verify_condtwo(const Nil2Group& g, const GroupElement& x,
                    const GroupElement& y, const Integer& n,
                    const PairWitness& w) {
  if (!root_equations(g, x, y, n, w, 0)) return false;
  return !(commutator(w.g1, x) * commutator(w.g2, y)).is_identity();
}

bool verify_condthree(const Nil2Group& g, const GroupElement& x,
                      const GroupElement& y, const Integer& n,
                      const PairWitness& w) {
  return root_equations(g, x, y, n, w, 1);
}

const char* verdict_name(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Closed:
      return "Closed";
    case Verdict::Kind::NotClosed:
      return "NotClosed";
    case Verdict::Kind::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

ClosureOptions ClosureOptions::from_env() {
  ClosureOptions o;
  if (const char* b = std::getenv("NIL2_BUDGET")) {
    char* end = nullptr;
    const long r = std::strtol(b, &end, 10);
    if (end == b || *end != '\0' || r < 0)
      throw std::invalid_argument("NIL2_BUDGET must be a nonnegative integer");
    o.radius = r;
  }
  return o;
}

// ---------------------------------------------------------------------------
// Finite enumeration

namespace {

// { p^a : a >= 1 } up to repetition of residues mod e, per prime p | e.
std::vector<Integer> prime_power_multipliers(const Integer& e) {
  std::vector<Integer> out;
  if (e <= 1) return out;
  for (const auto& [p, mult] : factorize(e)) {
    std::vector<Integer> seen;
    Integer q = p;
    for (;;) {
      const Integer r = q % e;
      if (std::find(seen.begin(), seen.end(), r) != seen.end()) break;
      seen.push_back(r);
      out.push_back(q);
      q *= p;
    }
  }
  return out;
}

std::size_t pairs_before(std::size_t i, std::size_t n) {
  return i * (n - 1) - i * (i - 1) / 2;
}

}  // namespace

PairEnumeration::PairEnumeration(const Nil2Group& g)
    : ctx_(std::make_shared<const PairContext>(g)) {
  if (!g.is_finite())
    throw PreconditionError("pair enumeration needs a finite group");
  for (const auto& d : ctx_->d) elements_ *= d.get_ui();
  mults_ = prime_power_multipliers(*ctx_->ab->exponent());
  for (const auto& n : mults_) {
    Block b{n, ctx_->gcds(n)};
    for (const auto& m : b.m) b.classes *= m.get_ui();
    b.offset = tasks_;
    tasks_ += b.classes * (b.classes - 1) / 2;
    blocks_.push_back(std::move(b));
  }
}

IntVector PairEnumeration::element(const Block& b, std::size_t index) const {
  IntVector c(ctx_->s);
  for (std::size_t i = ctx_->s; i-- > 0;) {
    const unsigned long m = b.m[i].get_ui();
    c[i] = index % m;
    index /= m;
  }
  return c;
}

bool PairEnumeration::task_ok(const Block& b, std::size_t i, std::size_t j) const {
  return detail::pair_ok(*ctx_, element(b, i), element(b, j), b.n);
}

std::optional<std::size_t> PairEnumeration::first_failure_serial() const {
  for (const auto& b : blocks_)
    for (std::size_t i = 0; i < b.classes; ++i)
      for (std::size_t j = i + 1; j < b.classes; ++j)
        if (!task_ok(b, i, j)) return b.offset + pairs_before(i, b.classes) + (j - i - 1);
  return std::nullopt;
}

std::optional<std::size_t> PairEnumeration::first_failure_parallel() const {
  // one row per (block, x); rows are in task order
  std::vector<std::pair<std::size_t, std::size_t>> rows;
  for (std::size_t k = 0; k < blocks_.size(); ++k)
    for (std::size_t i = 0; i + 1 < blocks_[k].classes; ++i) rows.emplace_back(k, i);
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::atomic<std::size_t> best{none};
  const long nrows = static_cast<long>(rows.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long r = 0; r < nrows; ++r) {
    const Block& b = blocks_[rows[r].first];
    const std::size_t i = rows[r].second;
    const std::size_t base = b.offset + pairs_before(i, b.classes);
    for (std::size_t j = i + 1; j < b.classes; ++j) {
      const std::size_t t = base + (j - i - 1);
      if (t >= best.load(std::memory_order_relaxed)) break;
      if (!task_ok(b, i, j)) {
        std::size_t cur = best.load();
        while (t < cur && !best.compare_exchange_weak(cur, t)) {
        }
        break;
      }
    }
  }
  if (best.load() == none) return std::nullopt;
  return best.load();
}

Certificate PairEnumeration::certificate(std::size_t task) const {
  if (task >= tasks_) throw std::out_of_range("PairEnumeration::certificate");
  std::size_t k = blocks_.size() - 1;
  while (blocks_[k].offset > task) --k;
  const Block& b = blocks_[k];
  const std::size_t pair = task - b.offset;
  std::size_t i = 0;
  while (pairs_before(i + 1, b.classes) <= pair) ++i;
  const std::size_t j = i + 1 + (pair - pairs_before(i, b.classes));
  return {ctx_->element(element(b, i)), ctx_->element(element(b, j)), b.n};
}

// ---------------------------------------------------------------------------
// Verdicts

namespace {

Verdict closed(std::string method) {
  Verdict v;
  v.kind = Verdict::Kind::Closed;
  v.method = std::move(method);
  return v;
}

Verdict not_closed(std::string method, Certificate c) {
  Verdict v;
  v.kind = Verdict::Kind::NotClosed;
  v.method = std::move(method);
  v.certificate = std::move(c);
  return v;
}

// G/(pG)G' cyclic for every prime p.
bool cyclic_mod_primes(const AbelianQuotient& a) {
  if (a.free_rank() >= 2) return false;
  const Integer et = a.torsion_exponent();
  if (et == 1) return true;
  for (const auto& [p, mult] : factorize(et)) {
    std::size_t count = a.free_rank();
    for (const auto& d : a.invariant_factors())
      if (d % p == 0) ++count;
    if (count > 1) return false;
  }
  return true;
}

Verdict enumerate_finite(const Nil2Group& g, const ClosureOptions& opts) {
  const PairEnumeration e(g);
  const auto fail =
      opts.parallel ? e.first_failure_parallel() : e.first_failure_serial();
  if (!fail) return closed("enumeration");
  return not_closed("enumeration", e.certificate(*fail));
}

// Box search for failing triples in an infinite group.
Verdict search_infinite(const Nil2Group& g, const ClosureOptions& opts) {
  const PairContext ctx(g);
  const AbelianQuotient& a = *ctx.ab;
  SearchBudget budget;
  budget.radius = opts.radius;

  // primes <= 7 and the torsion primes
  const Integer et = a.torsion_exponent();
  std::vector<std::pair<Integer, unsigned>> primes{{2, 0}, {3, 0}, {5, 0}, {7, 0}};
  if (et > 1)
    for (const auto& [p, v] : factorize(et)) {
      auto it = std::find_if(primes.begin(), primes.end(),
                             [&](const auto& q) { return q.first == p; });
      if (it == primes.end())
        primes.emplace_back(p, v);
      else
        it->second = v;
    }
  std::sort(primes.begin(), primes.end());
  for (const auto& [p, v] : primes) {
    Integer q = p;
    for (unsigned t = 1; t <= std::max(2u, v + 1); ++t, q *= p)
      budget.multipliers.push_back(q);
  }

  // candidate coordinates, small first; order 0, 1, -1, 2, -2, ...
  std::vector<IntVector> cands{IntVector{}};
  for (std::size_t i = 0; i < ctx.s; ++i) {
    std::vector<Integer> range;
    if (ctx.d[i] == 0) {
      range.emplace_back(0);
      for (long r = 1; r <= opts.radius; ++r) {
        range.emplace_back(r);
        range.emplace_back(-r);
      }
    } else {
      for (Integer r = 0; r < ctx.d[i]; ++r) range.push_back(r);
    }
    std::vector<IntVector> next;
    for (const auto& c : cands)
      for (const auto& r : range) {
        IntVector v = c;
        v.push_back(r);
        next.push_back(std::move(v));
      }
    cands = std::move(next);
  }
  auto key = [&](const IntVector& v) {
    Integer size = 0;
    std::vector<Integer> rank;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (ctx.d[i] == 0) size = std::max<Integer>(size, abs(v[i]));
      rank.push_back(v[i] > 0 ? Integer(2 * v[i] - 1) : Integer(-2 * v[i]));
    }
    std::reverse(rank.begin(), rank.end());
    return std::make_pair(size, rank);
  };
  std::stable_sort(cands.begin(), cands.end(),
                   [&](const IntVector& u, const IntVector& v) {
                     return key(u) < key(v);
                   });
  budget.candidates = cands.size();

  for (std::size_t i = 0; i < cands.size(); ++i)
    for (std::size_t j = i + 1; j < cands.size(); ++j)
      for (const auto& n : budget.multipliers) {
        if (budget.checked >= opts.max_checks) {
          budget.truncated = true;
          goto done;
        }
        ++budget.checked;
        if (!detail::pair_ok(ctx, cands[i], cands[j], n)) {
          Verdict v = not_closed(
              "search", {ctx.element(cands[i]), ctx.element(cands[j]), n});
          v.budget = budget;
          return v;
        }
      }
done:
  Verdict v;
  v.kind = Verdict::Kind::Unknown;
  v.method = "search";
  v.reason = budget.truncated
                 ? "check budget exhausted before the box was covered"
                 : "no failing triple in the search box; infinite non-abelian "
                   "groups have no complete decision procedure";
  v.budget = budget;
  return v;
}

}  // namespace

Verdict is_absolutely_closed(const Nil2Group& g, const ClosureOptions& opts) {
  if (g.is_abelian() && opts.abelian_shortcut) return is_ac_abelian(g);
  if (g.is_finite()) return enumerate_finite(g, opts);
  if (cyclic_mod_primes(g.abelianization())) return closed("cyclic-quotient");
  return search_infinite(g, opts);
}

Verdict is_ac_abelian(const Nil2Group& g) {
  if (!g.is_abelian()) throw PreconditionError("is_ac_abelian: group is not abelian");
  const AbelianQuotient& a = g.abelianization();
  if (a.num_components() <= 1) return closed("cyclic");
  // a prime p with two components divisible by p; free components count
  const auto& d = a.moduli();
  std::optional<Integer> best;
  std::vector<Integer> candidates;
  if (a.free_rank() >= 1) candidates.emplace_back(2);
  for (const auto& f : a.invariant_factors())
    for (const auto& [p, m] : factorize(f)) candidates.push_back(p);
  std::sort(candidates.begin(), candidates.end());
  for (const auto& p : candidates) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < d.size(); ++i)
      if (d[i] == 0 || d[i] % p == 0) idx.push_back(i);
    if (idx.size() >= 2) {
      const PairContext ctx(g);
      return not_closed("abelian-classification",
                        {ctx.element(ctx.unit(idx[0])),
                         ctx.element(ctx.unit(idx[1])), p});
    }
  }
  throw std::logic_error("is_ac_abelian: no prime with a non-cyclic quotient");
}

Verdict is_ac_abelian(const AbelianQuotient& a) {
  std::vector<std::string> names;
  std::vector<FreeCoords> rels;
  const std::size_t s = a.num_components();
  for (std::size_t i = 0; i < s; ++i) names.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < s; ++i) {
    FreeCoords r = FreeCoords::generator(s, i);
    r.e[i] = a.moduli()[i];
    if (a.moduli()[i] != 0) rels.push_back(r);
    for (std::size_t j = i + 1; j < s; ++j) {
      IntVector f = zero_vector(pair_count(s));
      f[pair_index(i, j, s)] = 1;
      rels.push_back(FreeCoords::central(s, f));
    }
  }
  return is_ac_abelian(build_group_from_coords(names, rels, a.describe()));
}

Verdict is_ac_exponent_p(const Nil2Group& g) {
  if (!g.is_finite()) throw PreconditionError("is_ac_exponent_p: group is infinite");
  const Integer e = *g.exponent();
  if (e > 1)
    for (const auto& [p, m] : factorize(e))
      if (m > 1)
        throw PreconditionError(
            "is_ac_exponent_p: exponent " + e.get_str() +
            " is not squarefree; use is_absolutely_closed");
  if (e > 1)
    for (const auto& [p, m] : factorize(e)) {
      const SubgroupPresentation part = p_part(g, p);
      const GroupInvariants inv = group_invariants(part.group);
      const AbelianQuotient& zq = inv.center_mod_commutator;
      if (zq.is_cyclic()) continue;
      auto lift = [&](std::size_t i) {
        return part.inclusion.apply(
            FreeCoords{zq.generator(i), zero_vector(part.group.pair_dim())});
      };
      return not_closed("exponent-p", {lift(0), lift(1), p});
    }
  return closed("exponent-p");
}

AmalgVerdict is_strong_amalg_base(const Nil2Group& g) {
  AmalgVerdict v;
  const LatticeBasis radical = center_radical(g);
  const LatticeBasis& en = g.relations().top();
  if (radical != en) {
    v.base = Tri::No;
    v.method = "center";
    v.reason = "Z(G) is strictly larger than G'";
    for (const auto& r : radical.rows())
      if (!en.contains(r)) {
        v.g = g.element(FreeCoords{r, zero_vector(g.pair_dim())});
        break;
      }
    return v;
  }
  if (!g.is_finite()) {
    v.method = "center";
    v.reason = "Z(G) = G' holds; the root condition is only decided for finite groups";
    return v;
  }
  const PairContext ctx(g);
  const std::size_t s = ctx.s;
  std::size_t count = 1;
  for (const auto& d : ctx.d) count *= d.get_ui();
  const Integer e = g.abelianization().exponent().value_or(1);
  for (std::size_t idx = 0; idx < count; ++idx) {
    IntVector gc(s);
    {
      std::size_t t = idx;
      for (std::size_t i = s; i-- > 0;) {
        gc[i] = t % ctx.d[i].get_ui();
        t /= ctx.d[i].get_ui();
      }
    }
    for (Integer n = 1; n <= e; ++n) {
      const auto m = ctx.gcds(n);
      if (PairContext::divisible(gc, m)) continue;
      // { (y, k) : n y = k g }
      IntMatrix coeff;
      std::vector<Integer> mods;
      for (std::size_t i = 0; i < s; ++i) {
        IntVector row = zero_vector(s + 1);
        row[i] = n;
        row[s] = -gc[i];
        coeff.push_back(std::move(row));
        mods.push_back(ctx.d[i]);
      }
      const SolutionSet sol =
          affine_solution_set(coeff, s + 1, zero_vector(s), diagonal_lattice(mods));
      bool found = false;
      for (const auto& r : sol.homogeneous.rows()) {
        const IntVector y(r.begin(), r.begin() + static_cast<long>(s));
        if (!is_zero(ctx.pairing(y, gc))) {
          found = true;
          break;
        }
      }
      if (!found) {
        v.base = Tri::No;
        v.method = "root-condition";
        v.reason = "g has no n-th root mod G' and no y with y^n = g^k, [y,g] != e";
        v.g = ctx.element(gc);
        v.n = n;
        return v;
      }
    }
  }
  v.base = Tri::Yes;
  v.method = "root-condition";
  return v;
}

RootAdjunction can_adjoin_roots(const Nil2Group& g,
                                const std::vector<GroupElement>& elems,
                                const std::vector<Integer>& orders) {
  const std::size_t m = elems.size();
  if (m == 0) throw std::invalid_argument("can_adjoin_roots: no elements");
  if (orders.size() != m)
    throw std::invalid_argument("can_adjoin_roots: one order per element");
  for (const auto& x : elems) check_owner(g, x);
  for (const auto& n : orders)
    if (n < 1) throw std::invalid_argument("can_adjoin_roots: orders must be >= 1");

  const PairContext ctx(g);
  const std::size_t s = ctx.s, unknowns = m * m + m * s;
  std::vector<IntVector> gc;
  for (const auto& x : elems) gc.push_back(ctx.coords(x));
  auto cidx = [&](std::size_t i, std::size_t j) { return i * m + j; };
  auto yidx = [&](std::size_t j, std::size_t l) { return m * m + j * s + l; };

  IntMatrix coeff;
  std::vector<Integer> mods;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      IntVector row = zero_vector(unknowns);
      row[cidx(i, j)] = orders[i];
      row[cidx(j, i)] = -orders[j];
      coeff.push_back(std::move(row));
      mods.emplace_back(0);
    }
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t l = 0; l < s; ++l) {
      IntVector row = zero_vector(unknowns);
      row[yidx(j, l)] = orders[j];
      for (std::size_t i = 0; i < m; ++i) row[cidx(i, j)] = -gc[i][l];
      coeff.push_back(std::move(row));
      mods.push_back(ctx.d[l]);
    }
  const SolutionSet sol =
      detail::solve(coeff, unknowns, zero_vector(coeff.size()), mods);

  RootAdjunction out;
  out.possible = true;
  for (const auto& r : sol.homogeneous.rows()) {
    IntVector total = zero_vector(g.commutator_quotient().num_components());
    std::vector<IntVector> ys;
    for (std::size_t j = 0; j < m; ++j) {
      IntVector y(r.begin() + static_cast<long>(yidx(j, 0)),
                  r.begin() + static_cast<long>(yidx(j, 0) + s));
      total = add(total, ctx.pairing(y, gc[j]));
      ys.push_back(std::move(y));
    }
    if (is_zero(g.commutator_quotient().normalize(total))) continue;
    RootRefutation ref;
    ref.c.assign(m, zero_vector(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) ref.c[i][j] = r[cidx(i, j)];
    for (const auto& y : ys) ref.y.push_back(ctx.element(y));
    out.possible = false;
    out.refutation = std::move(ref);
    break;
  }
  return out;
}

bool verify_root_refutation(const Nil2Group& g,
                            const std::vector<GroupElement>& elems,
                            const std::vector<Integer>& orders,
                            const RootRefutation& r) {
  const std::size_t m = elems.size();
  if (orders.size() != m || r.c.size() != m || r.y.size() != m) return false;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (orders[i] * r.c[i][j] != orders[j] * r.c[j][i]) return false;
  GroupElement prod = g.identity();
  for (std::size_t j = 0; j < m; ++j) {
    check_owner(g, r.y[j]);
    GroupElement rhs = g.identity();
    for (std::size_t i = 0; i < m; ++i) rhs = rhs * elems[i].pow(r.c[i][j]);
    if (!congruent_mod_commutator(g, r.y[j].pow(orders[j]), rhs)) return false;
    prod = prod * commutator(r.y[j], elems[j]);
  }
  return !prod.is_identity();
}

ReductionReport reduction_suite(const Nil2Group& g) {
  if (!g.is_finite()) throw PreconditionError("reduction_suite: group is infinite");
  ReductionReport rep;
  rep.whole = is_absolutely_closed(g);
  bool all_closed = true;
  const Integer order = *g.order();
  if (order > 1)
    for (const auto& [p, m] : factorize(order)) {
      auto part = p_part(g, p).group;
      Verdict v = is_absolutely_closed(part);
      all_closed = all_closed && v.closed();
      rep.parts.push_back({p, part, std::move(v)});
    }
  rep.parts_agree = all_closed == rep.whole.closed();
  rep.sufficient_condition = cyclic_mod_primes(g.abelianization());
  rep.necessary_condition =
      group_invariants(g).center_mod_commutator.is_cyclic();

  if (!rep.parts_agree)
    throw std::logic_error(g.name() + ": p-part verdicts disagree with the whole group");
  if (rep.sufficient_condition && !rep.whole.closed())
    throw std::logic_error(g.name() + ": cyclic quotients but not closed");
  if (rep.whole.closed() && !rep.necessary_condition)
    throw std::logic_error(g.name() + ": closed but Z(G)/G' is not cyclic");
  bool squarefree = true;
  if (*g.exponent() > 1)
    for (const auto& [p, m] : factorize(*g.exponent())) squarefree = squarefree && m == 1;
  if (squarefree && is_ac_exponent_p(g).closed() != rep.whole.closed())
    throw std::logic_error(g.name() + ": exponent-p criterion disagrees");
  return rep;
}

}  // namespace nil2
