#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace k3 {

int euler_phi(int n);
int moebius(int n);
std::vector<int> divisors(int n);

/// Eigenvalues of a finite-order isometry stored as whole Galois orbits:
/// `blocks[d] = c` means c copies of the primitive d-th roots of unity (the
/// roots of Phi_d), plus explicitly listed +1 / -1 eigenvalues. Traces are
/// therefore always rational integers.
struct CyclotomicMultiset {
  std::map<int, int> blocks;
  int plus_units = 0;
  int minus_units = 0;

  static CyclotomicMultiset units(int plus, int minus) { return {{}, plus, minus}; }
  static CyclotomicMultiset block(int d, int count = 1) { return {{{d, count}}, 0, 0}; }

  int rank() const;
  /// sum count * mu(d) + plus - minus.
  int trace() const;
  /// Number of eigenvalues equal to 1 (Phi_1 blocks plus +1 units).
  int invariant_rank() const;
  /// Eigenvalue multiset of the k-th power: a Phi_d block becomes
  /// phi(d) / phi(d') blocks of Phi_d' with d' = d / gcd(d, k).
  CyclotomicMultiset power(int k) const;
  /// Units folded into Phi_1 / Phi_2 blocks, zero counts dropped.
  CyclotomicMultiset normalized() const;

  /// Pattern literal: "[1*4, -1*8]", "[Phi(11)]", "[Phi(1)*2, Phi(11)]".
  std::string to_string() const;

  CyclotomicMultiset operator+(const CyclotomicMultiset& o) const;
  friend bool operator==(const CyclotomicMultiset&, const CyclotomicMultiset&) = default;
};

/// Action on S_X (x) C and T_X (x) C.
struct IsometryPattern {
  CyclotomicMultiset algebraic;
  CyclotomicMultiset transcendental;
  int rank() const { return algebraic.rank() + transcendental.rank(); }
  std::string to_string() const;
};

/// Topological Lefschetz number on a K3 surface: 2 + trace on H^2.
/// DomainError unless the pattern has rank 22.
int lefschetz_number(const IsometryPattern& pattern);

struct DecompositionConstraints {
  bool forbid_one = false;         // no Phi_1 block
  bool require_primitive = false;  // at least one Phi_n block
  std::set<int> allowed;           // empty: every divisor of n
  std::map<int, int> fixed_counts;
  std::map<int, int> min_counts;
  /// Total rank carried by the listed divisors must equal the given value.
  std::vector<std::pair<std::set<int>, int>> subset_ranks;
};

/// Every multiset of Phi_d (d | order) blocks of total rank `rank` meeting
/// the constraints. Ordered by descending block counts, Phi_1 first
/// (so (2, 2) gives Phi_1^2, Phi_1 Phi_2, Phi_2^2).
std::vector<CyclotomicMultiset> char_poly_decompositions(int order, int rank,
                                                         const DecompositionConstraints& constraints = {});

/// Weights (p, q) of a cyclic quotient singularity 1/order(p, q).
struct LocalAction {
  int order = 1;
  int p = 0, q = 0;
  /// (p + q) mod order: the weight of the action on the 2-form.
  int two_form_weight() const;
  std::string to_string() const;
};

/// True iff some a in w1, b in w2 has a + b = 0 mod `modulus`: the condition
/// for one smooth invariant curve through both fixed points.
bool local_curve_possible(const std::set<int>& w1, const std::set<int>& w2, int modulus);

}  // namespace k3
