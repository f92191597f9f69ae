#pragma once

#include <memory>

#include "nil2/group.hpp"

// Absolute closure in the nil-2 variety. For x, y in G and n > 0:
//   condtwo:   g1^n = x^a y^b, g2^n = x^b y^c (mod G') and [g1,x][g2,y] != e
//   condthree: g1^n = x^a y^b, g2^n = x^{b+1} y^c (mod G')
// G is absolutely closed iff every triple satisfies one of them, and it
// suffices to let n run over prime powers.

namespace nil2 {

namespace detail {
struct PairContext;
}

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct PairWitness {
  Integer a, b, c;
  GroupElement g1, g2;
};

struct PairResult {
  std::optional<PairWitness> condtwo;
  std::optional<PairWitness> condthree;
  bool satisfied() const { return condtwo || condthree; }
};

/// Exact for finite and infinite G. Witnesses: condthree takes the canonical
/// particular solution (a,b,c) with least nonnegative roots; condtwo takes
/// the first generator of the solution lattice with a nontrivial commutator.
PairResult check_pair(const Nil2Group& g, const GroupElement& x,
                      const GroupElement& y, const Integer& n);

/// Direct re-check of a witness by evaluation in G.
bool verify_condtwo(const Nil2Group& g, const GroupElement& x,
                    const GroupElement& y, const Integer& n,
                    const PairWitness& w);
bool verify_condthree(const Nil2Group& g, const GroupElement& x,
                      const GroupElement& y, const Integer& n,
                      const PairWitness& w);

struct Certificate {
  GroupElement x, y;
  Integer n;
};

struct SearchBudget {
  long radius = 0;
  std::vector<Integer> multipliers;
  std::size_t candidates = 0;
  std::size_t checked = 0;
  bool truncated = false;
};

struct Verdict {
  enum class Kind { Closed, NotClosed, Unknown };
  Kind kind = Kind::Unknown;
  std::string method;
  std::optional<Certificate> certificate;
  std::string reason;
  std::optional<SearchBudget> budget;

  bool closed() const { return kind == Kind::Closed; }
  bool not_closed() const { return kind == Kind::NotClosed; }
};
const char* verdict_name(Verdict::Kind k);

struct ClosureOptions {
  bool abelian_shortcut = true;
  bool parallel = true;
  /// Box radius on free coordinates for the infinite search.
  long radius = 3;
  /// Cap on pair checks in the infinite search.
  std::size_t max_checks = 200000;

  /// Defaults, with the radius taken from NIL2_BUDGET when set.
  static ClosureOptions from_env();
};

Verdict is_absolutely_closed(const Nil2Group& g, const ClosureOptions& opts = {});

/// f.g. abelian groups: closed iff free rank + number of invariant factors
/// is at most 1.
Verdict is_ac_abelian(const Nil2Group& g);
Verdict is_ac_abelian(const AbelianQuotient& a);

/// Finite G of squarefree exponent: closed iff Z(G)/G' is cyclic.
Verdict is_ac_exponent_p(const Nil2Group& g);

struct AmalgVerdict {
  Tri base = Tri::Unknown;
  std::string method;
  std::optional<GroupElement> g;
  std::optional<Integer> n;
  std::string reason;
};
AmalgVerdict is_strong_amalg_base(const Nil2Group& g);

struct RootRefutation {
  IntMatrix c;
  std::vector<GroupElement> y;
};
struct RootAdjunction {
  bool possible = false;
  std::optional<RootRefutation> refutation;
};
/// Whether some nil-2 overgroup has an n_i-th root of g_i for every i.
RootAdjunction can_adjoin_roots(const Nil2Group& g,
                                const std::vector<GroupElement>& elems,
                                const std::vector<Integer>& orders);
bool verify_root_refutation(const Nil2Group& g,
                            const std::vector<GroupElement>& elems,
                            const std::vector<Integer>& orders,
                            const RootRefutation& r);

struct PartReport {
  Integer p;
  Nil2Group part;
  Verdict verdict;
};
struct ReductionReport {
  std::vector<PartReport> parts;
  Verdict whole;
  bool parts_agree = false;
  bool sufficient_condition = false;  // G/(pG)G' cyclic for all p
  bool necessary_condition = false;   // Z(G)/G' cyclic
};
/// Throws std::logic_error if the theorems' consequences disagree.
ReductionReport reduction_suite(const Nil2Group& g);

/// Pair/multiplier enumeration for finite G. For a multiplier n both
/// conditions depend on x and y only modulo nA (A = G^ab), so each n
/// contributes the pairs x < y of classes in A/nA. Tasks are ordered by
/// multiplier, then x, then y; failures are reported by least task index, so
/// both kernels agree.
class PairEnumeration {
 public:
  explicit PairEnumeration(const Nil2Group& g);

  std::size_t elements() const { return elements_; }
  const std::vector<Integer>& multipliers() const { return mults_; }
  std::size_t tasks() const { return tasks_; }

  std::optional<std::size_t> first_failure_serial() const;
  std::optional<std::size_t> first_failure_parallel() const;
  Certificate certificate(std::size_t task) const;

 private:
  struct Block {
    Integer n;
    std::vector<Integer> m;  // gcd(n, d_i)
    std::size_t classes = 1;
    std::size_t offset = 0;
  };
  IntVector element(const Block& b, std::size_t index) const;
  bool task_ok(const Block& b, std::size_t i, std::size_t j) const;
  std::shared_ptr<const detail::PairContext> ctx_;
  std::size_t elements_ = 1;
  std::size_t tasks_ = 0;
  std::vector<Integer> mults_;
  std::vector<Block> blocks_;
};

}  // namespace nil2
