#pragma once

// Group families for the oracle sweeps.

#include <functional>

#include "nil2/builtins.hpp"

namespace sweeps {

// Divisor chains d_1 | d_2 | ... with d_i >= 2 and product <= bound.
inline void chains(long bound, std::vector<long>& cur,
                   std::vector<std::vector<long>>& out) {
  out.push_back(cur);
  long prod = 1;
  for (long d : cur) prod *= d;
  const long last = cur.empty() ? 0 : cur.back();
  for (long d = cur.empty() ? 2 : last; prod * d <= bound; d += cur.empty() ? 1 : last) {
    cur.push_back(d);
    chains(bound, cur, out);
    cur.pop_back();
  }
}

struct AbelianShape {
  long free_rank = 0;
  std::vector<long> factors;
  std::string builtin() const {
    if (factors.empty()) return free_rank ? "cyclic(0)" : "cyclic(1)";
    std::string s = "abelian(";
    for (std::size_t i = 0; i < factors.size(); ++i)
      s += (i ? "," : "") + std::to_string(factors[i]);
    if (free_rank) s += ",0";
    return s + ")";
  }
  bool cyclic() const { return free_rank + factors.size() <= 1; }
};

inline std::vector<AbelianShape> abelian_shapes(long bound = 64) {
  std::vector<std::vector<long>> cs;
  std::vector<long> cur;
  chains(bound, cur, cs);
  std::vector<AbelianShape> out;
  for (long r = 0; r <= 1; ++r)
    for (const auto& c : cs) out.push_back({r, c});
  return out;
}

// Exponent-3 groups on x_1..x_k and a central c of order 3 with
// [x_i, x_j] = c^{s_ij}, k <= 3.
inline std::vector<nil2::Nil2Group> exponent_three_groups() {
  std::vector<nil2::Nil2Group> out;
  for (std::size_t k = 0; k <= 3; ++k) {
    const std::size_t pairs = k < 2 ? 0 : k * (k - 1) / 2;
    std::size_t combos = 1;
    for (std::size_t i = 0; i < pairs; ++i) combos *= 3;
    for (std::size_t code = 0; code < combos; ++code) {
      nil2::Presentation p;
      for (std::size_t i = 0; i < k; ++i) p.generators.push_back("x" + std::to_string(i + 1));
      p.generators.push_back("c");
      std::vector<std::string> rels{"c^3"};
      std::string tag;
      std::size_t rest = code;
      for (std::size_t i = 0; i < k; ++i) {
        const std::string xi = "x" + std::to_string(i + 1);
        rels.push_back(xi + "^3");
        rels.push_back("[" + xi + ",c]");
        for (std::size_t j = i + 1; j < k; ++j) {
          const long s = static_cast<long>(rest % 3);
          rest /= 3;
          tag += std::to_string(s);
          rels.push_back("[" + xi + ",x" + std::to_string(j + 1) + "]*c^" +
                         std::to_string(-s));
        }
      }
      for (const auto& r : rels) p.relators.push_back(nil2::parse_word(r, p.generators));
      out.push_back(nil2::build_group(
          p, "exp3(k=" + std::to_string(k) + (tag.empty() ? "" : ";" + tag) + ")"));
    }
  }
  return out;
}

}  // namespace sweeps
