#include "k3/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <tuple>

namespace k3 {

namespace {

struct ExtGcd {
  Integer g, s, t;  // s*a + t*b = g >= 0
};

ExtGcd ext_gcd(Integer a, Integer b) {
  Integer s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    Integer q = a / b;
    Integer r = a - q * b;
    a = b;
    b = r;
    Integer s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    Integer t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (a < 0) return {Integer(-a), Integer(-s0), Integer(-t0)};
  return {a, s0, t0};
}

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

IntMatrix path_graph_root_block(int n) {
  IntMatrix g = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) g(i, i) = -2;
  for (int i = 0; i + 1 < n; ++i) g(i, i + 1) = g(i + 1, i) = 1;
  return g;
}

void require_nondegenerate(const Lattice& l) {
  if (bareiss_determinant(l.gram()) == 0) throw DomainError("degenerate Gram matrix");
}

Integer dot(const IntVector& a, const IntVector& b) { return a.dot(b); }

}  // namespace

Integer DiscGroup::order() const {
  Integer o = 1;
  for (const auto& f : invariant_factors) o *= f;
  return o;
}

std::string DiscGroup::to_string() const {
  if (invariant_factors.empty()) return "0";
  std::map<Integer, int> counts;
  for (const auto& f : invariant_factors) ++counts[f];
  std::string out;
  for (const auto& [f, c] : counts) {
    if (!out.empty()) out += " + ";
    out += c == 1 ? "Z/" + f.str() : "(Z/" + f.str() + ")^" + std::to_string(c);
  }
  return out;
}

Lattice::Lattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw DomainError("Gram matrix must be square");
  if (gram_ != gram_.transpose()) throw DomainError("Gram matrix must be symmetric");
}

bool Lattice::is_even() const {
  for (Eigen::Index i = 0; i < gram_.rows(); ++i)
    if (gram_(i, i) % 2 != 0) return false;
  return true;
}

Lattice Lattice::operator+(const Lattice& o) const {
  const Eigen::Index n = rank(), m = o.rank();
  IntMatrix g = IntMatrix::Zero(n + m, n + m);
  g.topLeftCorner(n, n) = gram_;
  g.bottomRightCorner(m, m) = o.gram_;
  return Lattice(std::move(g));
}

Lattice Lattice::twisted(const Integer& m) const {
  if (m == 0) throw DomainError("twist by zero");
  return Lattice(IntMatrix(gram_ * m));
}

Lattice hyperbolic_plane() {
  IntMatrix g(2, 2);
  g << 0, 1, 1, 0;
  return Lattice(std::move(g));
}

Lattice root_lattice_a(int n) {
  if (n < 1) throw DomainError("A_n needs n >= 1");
  return Lattice(path_graph_root_block(n));
}

Lattice root_lattice_d(int n) {
  if (n < 4) throw DomainError("D_n needs n >= 4");
  IntMatrix g = path_graph_root_block(n);
  // Chain 0..n-2, node n-1 hangs off node n-3.
  g(n - 2, n - 1) = g(n - 1, n - 2) = 0;
  g(n - 3, n - 1) = g(n - 1, n - 3) = 1;
  return Lattice(std::move(g));
}

Lattice root_lattice_e(int n) {
  if (n < 6 || n > 8) throw DomainError("E_n needs n in {6, 7, 8}");
  IntMatrix g = IntMatrix::Zero(n, n);
  g.topLeftCorner(n - 1, n - 1) = path_graph_root_block(n - 1);
  // Branch node attached to the third node of the chain: arms 2, n-4, 1.
  g(n - 1, n - 1) = -2;
  g(2, n - 1) = g(n - 1, 2) = 1;
  return Lattice(std::move(g));
}

DetSignature determinant_and_signature(const Lattice& lattice) {
  return {bareiss_determinant(lattice.gram()), congruence_inertia(lattice.gram())};
}

DiscGroup discriminant_group(const Lattice& lattice) {
  require_nondegenerate(lattice);
  DiscGroup out;
  for (auto& f : smith_diagonal(lattice.gram()))
    if (f != 1) out.invariant_factors.push_back(std::move(f));
  return out;
}

bool is_prime(const Integer& p) {
  if (p < 2) return false;
  for (Integer q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

bool is_p_elementary(const Lattice& lattice, const Integer& p) {
  if (!is_prime(p)) throw DomainError("is_p_elementary needs a prime, got " + p.str());
  const DiscGroup dg = discriminant_group(lattice);
  return std::all_of(dg.invariant_factors.begin(), dg.invariant_factors.end(),
                     [&](const Integer& f) { return f == p; });
}

RatMatrix dual_gram(const Lattice& lattice) {
  require_nondegenerate(lattice);
  return exact_inverse(lattice.gram());
}

bool even_unimodular_exists(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1) throw DomainError("signature needs p, q >= 0 and p + q >= 1");
  return (p - q) % 8 == 0;
}

namespace {

DivisorClassResult box_search(const IntMatrix& gram, const std::vector<DotConstraint>& constraints,
                              const Integer& norm, int bound) {
  const Eigen::Index n = gram.rows();
  double cells = 1;
  for (Eigen::Index i = 0; i < n; ++i) cells *= 2.0 * bound + 1;
  if (cells > 2e7) throw DomainError("divisor class box search too large");
  std::vector<IntVector> us;
  for (const auto& c : constraints) us.push_back(gram * c.w);

  DivisorClassResult out;
  IntVector v = IntVector::Constant(n, Integer(-bound));
  if (n == 0) return out;
  for (;;) {
    bool ok = true;
    for (std::size_t c = 0; c < constraints.size() && ok; ++c) ok = dot(v, us[c]) == constraints[c].value;
    if (ok && v.dot(gram * v) == norm) out.solutions.push_back(v);
    Eigen::Index i = n - 1;
    while (i >= 0 && v(i) == bound) {
      v(i) = -bound;
      --i;
    }
    if (i < 0) break;
    v(i) += 1;
  }
  return out;
}

}  // namespace

DivisorClassResult divisor_class_solve(const IntMatrix& gram, const std::vector<DotConstraint>& constraints,
                                       const Integer& norm, int bound) {
  if (gram.rows() != gram.cols() || gram != gram.transpose()) throw DomainError("Gram matrix must be symmetric");
  if (bound < 1) throw DomainError("search bound must be >= 1");
  const Eigen::Index n = gram.rows();
  for (const auto& c : constraints)
    if (c.w.size() != n) throw DomainError("constraint vector has the wrong length");

  std::vector<IntVector> us;
  for (const auto& c : constraints) us.push_back(gram * c.w);

  DivisorClassResult certified_empty{{}, true};
  std::size_t lead = constraints.size();
  for (std::size_t c = 0; c < constraints.size(); ++c) {
    if (us[c].isZero()) {
      if (constraints[c].value != 0) return certified_empty;
    } else if (lead == constraints.size()) {
      lead = c;
    }
  }
  if (n > 2 || n == 0 || lead == constraints.size()) return box_search(gram, constraints, norm, bound);

  // Solutions of the lead constraint: v = base + k * dir.
  IntVector base(n), dir(n);
  std::optional<Integer> fixed;
  const IntVector& u = us[lead];
  const Integer& value = constraints[lead].value;
  if (n == 1) {
    if (value % u(0) != 0) return certified_empty;
    base(0) = value / u(0);
    dir(0) = 0;
    fixed = Integer(0);
  } else {
    ExtGcd e = ext_gcd(u(0), u(1));
    if (value % e.g != 0) return certified_empty;
    const Integer scale = value / e.g;
    base << e.s * scale, e.t * scale;
    dir << -u(1) / e.g, u(0) / e.g;
  }

  for (std::size_t c = 0; c < constraints.size(); ++c) {
    if (c == lead) continue;
    const Integer alpha = dot(base, us[c]);
    const Integer beta = dot(dir, us[c]);
    const Integer rhs = constraints[c].value - alpha;
    if (beta == 0) {
      if (rhs != 0) return certified_empty;
      continue;
    }
    if (rhs % beta != 0) return certified_empty;
    Integer k = rhs / beta;
    if (fixed && *fixed != k) return certified_empty;
    fixed = k;
  }

  // Q(base + k dir) - norm = A k^2 + 2 B k + C.
  const Integer qa = dir.dot(gram * dir);
  const Integer qb = base.dot(gram * dir);
  const Integer qc = base.dot(gram * base) - norm;
  std::vector<Integer> ks;
  if (fixed) {
    if (qa * *fixed * *fixed + 2 * qb * *fixed + qc == 0) ks.push_back(*fixed);
  } else if (qa != 0) {
    const Integer disc = qb * qb - qa * qc;
    if (disc >= 0) {
      const Integer root = boost::multiprecision::sqrt(disc);
      if (root * root == disc) {
        for (const Integer& num : {Integer(-qb + root), Integer(-qb - root)})
          if (num % qa == 0) ks.push_back(num / qa);
      }
    }
  } else if (qb != 0) {
    if (qc % (2 * qb) == 0) ks.push_back(-qc / (2 * qb));
  } else if (qc == 0) {
    // Whole line satisfies everything: infinitely many, fall back to the box.
    return box_search(gram, constraints, norm, bound);
  }

  DivisorClassResult out;
  out.certified_complete = true;
  for (const auto& k : ks) out.solutions.push_back(base + k * dir);
  std::sort(out.solutions.begin(), out.solutions.end(), lex_less);
  out.solutions.erase(std::unique(out.solutions.begin(), out.solutions.end()), out.solutions.end());
  return out;
}

std::vector<Lattice> brute_force_even_rank2(const Integer& det_target, int entry_bound) {
  if (entry_bound < 1) throw DomainError("entry bound must be >= 1");
  std::vector<Lattice> out;
  for (int a = -entry_bound; a <= entry_bound; ++a)
    for (int b = -entry_bound; b <= entry_bound; ++b)
      for (int c = -entry_bound; c <= entry_bound; ++c) {
        if (Integer(4) * a * c - Integer(b) * b != det_target) continue;
        IntMatrix g(2, 2);
        g << 2 * a, b, b, 2 * c;
        out.emplace_back(std::move(g));
      }
  return out;
}

}  // namespace k3
