#pragma once

#include <string>
#include <vector>

#include "k3/exact_linalg.hpp"

namespace k3 {

using SignaturePair = Inertia;

/// L*/L as a list of invariant factors >= 2, each dividing the next.
struct DiscGroup {
  std::vector<Integer> invariant_factors;

  Integer order() const;
  bool is_trivial() const noexcept { return invariant_factors.empty(); }
  /// "(Z/11)^2 + Z/3" style; "0" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const DiscGroup&, const DiscGroup&) = default;
};

/// Integral lattice given by a symmetric integer Gram matrix.
class Lattice {
 public:
  /// DomainError unless the matrix is square and symmetric.
  explicit Lattice(IntMatrix gram);

  const IntMatrix& gram() const noexcept { return gram_; }
  Eigen::Index rank() const noexcept { return gram_.rows(); }
  bool is_even() const;

  /// Orthogonal sum.
  Lattice operator+(const Lattice& o) const;
  /// Twist L(m): Gram scaled by m (m != 0).
  Lattice twisted(const Integer& m) const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.gram_ == b.gram_; }

 private:
  IntMatrix gram_;
};

/// Standard lattices. A/D/E follow the negative definite Dynkin convention:
/// diagonal -2, +1 for each edge.
Lattice hyperbolic_plane();
Lattice root_lattice_a(int n);  // n >= 1
Lattice root_lattice_d(int n);  // n >= 4
Lattice root_lattice_e(int n);  // n in {6, 7, 8}

/// Parses and builds a lattice expression:
///
///   sum     := summand ('+' summand)*
///   summand := atom ('(' int ')')*          twist by each integer
///   atom    := 'U' | ('A'|'D'|'E') (int | '(' int ')') | '(' sum ')'
///
/// so "U(11)", "U + A10", "A(2)(3)" and "(U + E8)(2)" are all accepted.
/// Throws ParseError on malformed text and DomainError on bad indices or a
/// zero twist.
Lattice build_lattice(const std::string& expr);

struct DetSignature {
  Integer det;
  SignaturePair signature;
  bool degenerate() const { return det == 0; }
};

/// Exact determinant (Bareiss) and signature (rational congruence
/// diagonalization). Degenerate Gram matrices report det = 0 and a nonzero
/// zero count rather than throwing.
DetSignature determinant_and_signature(const Lattice& lattice);

/// Invariant factors of the Smith normal form of the Gram matrix, 1's
/// omitted. DomainError when degenerate.
DiscGroup discriminant_group(const Lattice& lattice);

/// Every invariant factor equals p (vacuously true for unimodular lattices).
/// DomainError when p is not prime or the lattice is degenerate.
bool is_p_elementary(const Lattice& lattice, const Integer& p);

/// Gram matrix of the dual basis, i.e. the exact inverse of the Gram matrix.
RatMatrix dual_gram(const Lattice& lattice);

/// Whether an even unimodular lattice of signature (p, q) exists:
/// iff p - q = 0 mod 8. DomainError when p + q < 1.
bool even_unimodular_exists(int p, int q);

struct DotConstraint {
  IntVector w;     // v . Gram . w^T = value
  Integer value;
};

struct DivisorClassResult {
  std::vector<IntVector> solutions;  // lexicographic order
  /// True when the solution set is proven complete independently of the
  /// search bound (rank <= 2 with a nondegenerate linear constraint).
  bool certified_complete = false;
};

/// Integer vectors v with v.G.w = value for every constraint and v.G.v = norm.
/// In rank <= 2 with a usable linear constraint the set is solved exactly
/// (parametrize the line, then solve the quadratic in the parameter);
/// otherwise the box |v_i| <= bound is searched and the result is not
/// certified.
DivisorClassResult divisor_class_solve(const IntMatrix& gram, const std::vector<DotConstraint>& constraints,
                                       const Integer& norm, int bound);

/// All Gram matrices [[2a, b], [b, 2c]] with |a|, |b|, |c| <= bound and
/// determinant det_target, ordered lexicographically by (a, b, c).
std::vector<Lattice> brute_force_even_rank2(const Integer& det_target, int entry_bound);

bool is_prime(const Integer& p);

}  // namespace k3
