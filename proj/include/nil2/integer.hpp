#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace nil2 {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;
// Row-major; every row has the same length.
using IntMatrix = std::vector<IntVector>;

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Result in [0, |b|) for b != 0; a itself for b == 0 (reduction modulo 0 is
// the identity, which is how free components are treated throughout).
inline Integer floor_mod(const Integer& a, const Integer& b) {
  if (b == 0) return a;
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r < 0) r += abs(b);
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline IntVector zero_vector(std::size_t n) { return IntVector(n, Integer(0)); }

inline bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline IntVector add(const IntVector& a, const IntVector& b) {
  IntVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline IntVector scaled(const IntVector& a, const Integer& t) {
  IntVector r(a);
  for (auto& x : r) x *= t;
  return r;
}

// r += t * a
inline void axpy(IntVector& r, const Integer& t, const IntVector& a) {
  if (t == 0) return;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += t * a[i];
}

std::string to_string(const IntVector& v);

// Prime factorization of |n| (n != 0), ascending primes with multiplicity.
std::vector<std::pair<Integer, unsigned>> factorize(Integer n);
// All positive divisors of |n| (n != 0), ascending.
std::vector<Integer> divisors(const Integer& n);

}  // namespace nil2
