#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "nil2/exactlin.hpp"

using namespace nil2;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Points of the box [-b,b]^2 reachable as c1*g1 + c2*g2 (+ c3*g3) with small
// coefficients.
std::set<std::pair<long, long>> box_points(const std::vector<IntVector>& gens,
                                           long b) {
  std::set<std::pair<long, long>> out;
  const long R = 40;
  std::vector<long> c(gens.size(), -R);
  for (;;) {
    long x = 0, y = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      x += c[i] * gens[i][0].get_si();
      y += c[i] * gens[i][1].get_si();
    }
    if (std::abs(x) <= b && std::abs(y) <= b) out.emplace(x, y);
    std::size_t i = 0;
    while (i < c.size() && c[i] == R) c[i++] = -R;
    if (i == c.size()) break;
    ++c[i];
  }
  return out;
}

Integer det(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && m[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(m[k], m[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// gcd of all k x k minors
Integer minor_gcd(const IntMatrix& m, std::size_t cols, std::size_t k) {
  const std::size_t rows = m.size();
  Integer g = 0;
  std::vector<std::size_t> ri(k), ci(k);
  std::function<void(std::size_t, std::size_t)> pick_cols;
  std::function<void(std::size_t, std::size_t)> pick_rows =
      [&](std::size_t start, std::size_t depth) {
        if (depth == k) {
          pick_cols(0, 0);
          return;
        }
        for (std::size_t r = start; r < rows; ++r) {
          ri[depth] = r;
          pick_rows(r + 1, depth + 1);
        }
      };
  pick_cols = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      IntMatrix sub(k, IntVector(k));
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) sub[a][b] = m[ri[a]][ci[b]];
      g = gcd(g, det(sub));
      return;
    }
    for (std::size_t c = start; c < cols; ++c) {
      ci[depth] = c;
      pick_cols(c + 1, depth + 1);
    }
  };
  pick_rows(0, 0);
  return g;
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b, std::size_t inner,
              std::size_t cols) {
  IntMatrix r(a.size(), zero_vector(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

std::vector<IntVector> random_vectors(std::mt19937& rng, std::size_t count,
                                      std::size_t dim, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<IntVector> out(count, zero_vector(dim));
  for (auto& v : out)
    for (auto& x : v) x = d(rng);
  return out;
}

}  // namespace

TEST_CASE("hnf basis examples") {
  std::vector<IntVector> g1{iv({1, 0}), iv({0, 1}), iv({5, 7})};
  auto L1 = hnf_basis(2, g1);
  REQUIRE(L1.rows() == std::vector<IntVector>{iv({1, 0}), iv({0, 1})});
  REQUIRE(L1.is_full());

  auto L0 = hnf_basis(2, {});
  REQUIRE(L0.is_zero());
  REQUIRE(L0.ambient_dim() == 2);

  std::vector<IntVector> g2{iv({2, 4}), iv({0, 6})};
  auto L2 = hnf_basis(2, g2);
  REQUIRE(L2.rows() == g2);
  REQUIRE(box_points(g2, 12) == box_points(L2.rows(), 12));

  // a different generating set of the same lattice
  std::vector<IntVector> g3{iv({2, -2}), iv({4, 2}), iv({-2, 14})};
  REQUIRE(box_points(g3, 12) == box_points(g2, 12));
  REQUIRE(hnf_basis(2, g3) == L2);
}

TEST_CASE("hnf rejects ragged input") {
  std::vector<IntVector> g{iv({1, 2}), iv({1})};
  REQUIRE_THROWS_AS(hnf_basis(2, g), DimensionError);
}

TEST_CASE("smith examples") {
  auto s1 = smith_decomposition({iv({4})}, 1);
  REQUIRE(s1.factors == std::vector<Integer>{4});
  auto s0 = smith_decomposition({iv({0})}, 1);
  REQUIRE(s0.factors.empty());
  IntMatrix m{iv({2, 0}), iv({0, 3})};
  auto s2 = smith_decomposition(m, 2);
  REQUIRE(s2.factors == std::vector<Integer>{1, 6});
  REQUIRE(minor_gcd(m, 2, 1) == 1);
  REQUIRE(minor_gcd(m, 2, 2) == 6);
  auto empty = smith_decomposition({}, 3);
  REQUIRE(empty.factors.empty());
  REQUIRE(empty.right.size() == 3);
}

TEST_CASE("smith decomposition on random matrices") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> size(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = size(rng), c = size(rng);
    IntMatrix m = random_vectors(rng, r, c, -9, 9);
    auto s = smith_decomposition(m, c);
    auto d = mul(mul(s.left, m, r, c), s.right, c, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        if (i == j && i < s.factors.size())
          REQUIRE(d[i][j] == s.factors[i]);
        else
          REQUIRE(d[i][j] == 0);
      }
    REQUIRE(abs(det(s.left)) == 1);
    REQUIRE(abs(det(s.right)) == 1);
    auto id = mul(s.right, s.right_inverse, c, c);
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = 0; j < c; ++j) REQUIRE(id[i][j] == (i == j ? 1 : 0));
    for (std::size_t i = 0; i < s.factors.size(); ++i) {
      REQUIRE(s.factors[i] > 0);
      if (i) REQUIRE(s.factors[i] % s.factors[i - 1] == 0);
    }
    if (r <= 4 && c <= 4) {
      // d_1 * ... * d_k = gcd of k x k minors
      Integer prod = 1;
      for (std::size_t k = 1; k <= std::min(r, c); ++k) {
        Integer g = minor_gcd(m, c, k);
        if (k <= s.factors.size()) {
          prod *= s.factors[k - 1];
          REQUIRE(g == prod);
        } else {
          REQUIRE(g == 0);
        }
      }
    }
  }
}

TEST_CASE("lattice membership") {
  auto L = hnf_basis(2, std::vector<IntVector>{iv({2, 4}), iv({0, 6})});
  auto m = lattice_contains(L, iv({2, 10}));
  REQUIRE(m.member);
  REQUIRE(m.coefficients == iv({1, 1}));
  REQUIRE_FALSE(lattice_contains(L, iv({1, 2})).member);
  REQUIRE(lattice_contains(L, iv({0, 0})).member);
  REQUIRE(lattice_contains(LatticeBasis(2), iv({0, 0})).member);
  REQUIRE_THROWS_AS(lattice_contains(L, iv({1})), DimensionError);
}

TEST_CASE("lattice join") {
  auto L = hnf_basis(2, std::vector<IntVector>{iv({2, 4}), iv({0, 6})});
  REQUIRE(lattice_join(L, LatticeBasis(2)) == L);
  auto a = hnf_basis(2, std::vector<IntVector>{iv({2, 0})});
  auto b = hnf_basis(2, std::vector<IntVector>{iv({0, 2})});
  REQUIRE(lattice_join(a, b).rows() ==
          std::vector<IntVector>{iv({2, 0}), iv({0, 2})});
  auto c = hnf_basis(2, std::vector<IntVector>{iv({2, 4})});
  auto d = hnf_basis(2, std::vector<IntVector>{iv({0, 6})});
  auto j = lattice_join(c, d);
  REQUIRE(j.rows() == std::vector<IntVector>{iv({2, 4}), iv({0, 6})});
  REQUIRE(box_points(j.rows(), 12) ==
          box_points({iv({2, 4}), iv({0, 6})}, 12));
  REQUIRE_THROWS_AS(lattice_join(a, LatticeBasis(3)), DimensionError);
}

TEST_CASE("hnf canonicity on random lattices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> cnt(0, 5), dimd(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = dimd(rng);
    auto gens = random_vectors(rng, cnt(rng), dim, -6, 6);
    auto L = hnf_basis(dim, gens);
    REQUIRE(hnf_basis(dim, L.rows()) == L);
    for (const auto& g : gens) REQUIRE(L.contains(g));
    // a unimodular shuffle of the generators spans the same lattice
    std::vector<IntVector> other = gens;
    std::uniform_int_distribution<int> mult(-3, 3);
    for (std::size_t i = 0; i + 1 < other.size(); ++i)
      axpy(other[i], Integer(mult(rng)), other[i + 1]);
    std::shuffle(other.begin(), other.end(), rng);
    REQUIRE(hnf_basis(dim, other) == L);
    for (std::size_t i = 0; i < L.rank(); ++i) {
      const auto c = L.pivots()[i];
      REQUIRE(L.rows()[i][c] > 0);
      for (std::size_t j = 0; j < i; ++j) {
        REQUIRE(L.rows()[j][c] >= 0);
        REQUIRE(L.rows()[j][c] < L.rows()[i][c]);
      }
    }
  }
}

TEST_CASE("quotient structure examples") {
  auto q0 = quotient_structure(2, LatticeBasis::full(2));
  REQUIRE(q0.is_trivial());
  REQUIRE(q0.free_rank() == 0);
  auto q1 = quotient_structure(2, hnf_basis(2, std::vector<IntVector>{iv({2, 0})}));
  REQUIRE(q1.free_rank() == 1);
  REQUIRE(q1.invariant_factors() == std::vector<Integer>{2});
  REQUIRE(q1.moduli() == std::vector<Integer>{2, 0});
  auto q2 = quotient_structure(
      2, hnf_basis(2, std::vector<IntVector>{iv({2, 4}), iv({0, 6})}));
  REQUIRE(q2.invariant_factors() == std::vector<Integer>{2, 6});
  REQUIRE(q2.order() == Integer(12));
  REQUIRE(q2.exponent() == Integer(6));
  REQUIRE(q2.describe() == "Z/2 + Z/6");
}

TEST_CASE("quotient residues on random lattices") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> cnt(0, 4), dimd(1, 3), small(-20, 20);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t dim = dimd(rng);
    auto L = hnf_basis(dim, random_vectors(rng, cnt(rng), dim, -5, 5));
    auto q = quotient_structure(dim, L);
    REQUIRE(q.free_rank() == dim - L.rank());
    for (int s = 0; s < 10; ++s) {
      auto u = random_vectors(rng, 1, dim, -20, 20)[0];
      auto v = random_vectors(rng, 1, dim, -20, 20)[0];
      auto ru = q.residue(u);
      REQUIRE(L.contains(add(u, scaled(ru, -1))));
      IntVector shifted = u;
      for (const auto& row : L.rows()) axpy(shifted, Integer(small(rng)), row);
      REQUIRE(q.residue(shifted) == ru);
      REQUIRE(q.residue(add(u, v)) == q.residue(add(ru, q.residue(v))));
      auto c = q.coordinates(u);
      REQUIRE(q.coordinates(q.lift(c)) == c);
    }
    for (std::size_t i = 0; i < q.num_components(); ++i) {
      auto o = q.element_order(q.coordinates(q.generator(i)));
      if (q.moduli()[i] == 0)
        REQUIRE_FALSE(o.has_value());
      else
        REQUIRE(*o == q.moduli()[i]);
    }
  }
}

TEST_CASE("relative quotient") {
  auto outer = hnf_basis(2, std::vector<IntVector>{iv({2, 0}), iv({0, 1})});
  auto inner = hnf_basis(2, std::vector<IntVector>{iv({4, 0}), iv({0, 3})});
  auto q = relative_quotient(outer, inner);
  REQUIRE(q.invariant_factors() == std::vector<Integer>{6});
  REQUIRE_THROWS_AS(relative_quotient(inner, outer), DimensionError);
  REQUIRE_THROWS_AS(q.coordinates(iv({1, 0})), DimensionError);
}

TEST_CASE("affine solution set examples") {
  auto mod4 = hnf_basis(1, std::vector<IntVector>{iv({4})});
  auto s1 = affine_solution_set({iv({2})}, 1, iv({0}), mod4);
  REQUIRE_FALSE(s1.empty);
  REQUIRE(s1.particular == iv({0}));
  REQUIRE(s1.homogeneous.rows() == std::vector<IntVector>{iv({2})});
  REQUIRE(affine_solution_set({iv({2})}, 1, iv({1}), mod4).empty);
  auto s3 = affine_solution_set({iv({3})}, 1, iv({1}), mod4);
  REQUIRE_FALSE(s3.empty);
  REQUIRE(s3.particular == iv({3}));
  REQUIRE(s3.homogeneous.rows() == std::vector<IntVector>{iv({4})});
  REQUIRE_THROWS_AS(affine_solution_set({iv({3})}, 1, iv({1, 2}), mod4),
                    DimensionError);
}

TEST_CASE("affine solution set against enumeration") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> pd(1, 3), nd(1, 2);
  int checked = 0;
  while (checked < 120) {
    const std::size_t p = pd(rng), n = nd(rng);
    auto mod_gens = random_vectors(rng, p, p, -4, 4);
    IntMatrix mm(mod_gens.begin(), mod_gens.end());
    Integer D = abs(det(mm));
    if (D == 0 || D > 24) continue;
    auto M = hnf_basis(p, mod_gens);
    auto coeff = random_vectors(rng, p, n, -5, 5);
    auto rhs = random_vectors(rng, 1, p, -5, 5)[0];
    auto sol = affine_solution_set(coeff, n, rhs, M);
    const long period = D.get_si();
    std::vector<long> u(n, 0);
    bool any = false;
    for (;;) {
      IntVector uv(n);
      for (std::size_t j = 0; j < n; ++j) uv[j] = u[j];
      IntVector lhs = zero_vector(p);
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < n; ++j) lhs[i] += coeff[i][j] * uv[j];
      const bool solves = M.contains(add(lhs, scaled(rhs, -1)));
      any = any || solves;
      const bool described =
          !sol.empty &&
          sol.homogeneous.contains(add(uv, scaled(sol.particular, -1)));
      REQUIRE(solves == described);
      std::size_t j = 0;
      while (j < n && u[j] == period - 1) u[j++] = 0;
      if (j == n) break;
      ++u[j];
    }
    REQUIRE(any == !sol.empty);
    ++checked;
  }
}

TEST_CASE("integer helpers") {
  REQUIRE(divisors(12) == std::vector<Integer>{1, 2, 3, 4, 6, 12});
  REQUIRE(divisors(1) == std::vector<Integer>{1});
  auto f = factorize(360);
  REQUIRE(f.size() == 3);
  REQUIRE(f[0] == std::pair<Integer, unsigned>{2, 3});
  REQUIRE(f[2] == std::pair<Integer, unsigned>{5, 1});
  REQUIRE(floor_mod(-1, 4) == 3);
  REQUIRE(floor_mod(5, 0) == 5);
  REQUIRE(to_string(iv({1, -2})) == "(1,-2)");
}
