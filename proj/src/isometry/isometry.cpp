#include "k3/isometry.hpp"

#include <functional>
#include <numeric>

#include "k3/scalar.hpp"

namespace k3 {

int euler_phi(int n) {
  if (n < 1) throw DomainError("phi needs n >= 1");
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

int moebius(int n) {
  if (n < 1) throw DomainError("mu needs n >= 1");
  int mu = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

std::vector<int> divisors(int n) {
  if (n < 1) throw DomainError("divisors need n >= 1");
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

int CyclotomicMultiset::rank() const {
  int r = plus_units + minus_units;
  for (const auto& [d, c] : blocks) r += c * euler_phi(d);
  return r;
}

int CyclotomicMultiset::trace() const {
  int t = plus_units - minus_units;
  for (const auto& [d, c] : blocks) t += c * moebius(d);
  return t;
}

int CyclotomicMultiset::invariant_rank() const {
  auto it = blocks.find(1);
  return plus_units + (it == blocks.end() ? 0 : it->second);
}

CyclotomicMultiset CyclotomicMultiset::power(int k) const {
  if (k < 0) throw DomainError("negative power of an isometry pattern");
  CyclotomicMultiset out;
  out.plus_units = plus_units;
  (k % 2 == 0 ? out.plus_units : out.minus_units) += minus_units;
  for (const auto& [d, c] : blocks) {
    const int image = d / std::gcd(d, k == 0 ? d : k);
    out.blocks[image] += c * (euler_phi(d) / euler_phi(image));
  }
  return out;
}

CyclotomicMultiset CyclotomicMultiset::normalized() const {
  CyclotomicMultiset out;
  for (const auto& [d, c] : blocks)
    if (c != 0) out.blocks[d] += c;
  if (plus_units) out.blocks[1] += plus_units;
  if (minus_units) out.blocks[2] += minus_units;
  return out;
}

CyclotomicMultiset CyclotomicMultiset::operator+(const CyclotomicMultiset& o) const {
  CyclotomicMultiset out = *this;
  out.plus_units += o.plus_units;
  out.minus_units += o.minus_units;
  for (const auto& [d, c] : o.blocks) out.blocks[d] += c;
  return out;
}

std::string CyclotomicMultiset::to_string() const {
  std::vector<std::string> parts;
  auto with_count = [](std::string base, int c) { return c == 1 ? base : base + "*" + std::to_string(c); };
  if (plus_units) parts.push_back(with_count("1", plus_units));
  if (minus_units) parts.push_back(with_count("-1", minus_units));
  for (const auto& [d, c] : blocks)
    if (c) parts.push_back(with_count("Phi(" + std::to_string(d) + ")", c));
  std::string out = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out + "]";
}

std::string IsometryPattern::to_string() const {
  return "S: " + algebraic.to_string() + "; T: " + transcendental.to_string();
}

int lefschetz_number(const IsometryPattern& pattern) {
  if (pattern.rank() != 22)
    throw DomainError("Lefschetz number needs a rank-22 pattern, got rank " + std::to_string(pattern.rank()));
  return 2 + pattern.algebraic.trace() + pattern.transcendental.trace();
}

std::vector<CyclotomicMultiset> char_poly_decompositions(int order, int rank,
                                                         const DecompositionConstraints& constraints) {
  if (order < 1 || rank < 0) throw DomainError("decompositions need order >= 1 and rank >= 0");
  std::vector<int> ds;
  for (int d : divisors(order)) {
    if (constraints.forbid_one && d == 1) continue;
    if (!constraints.allowed.empty() && !constraints.allowed.count(d)) continue;
    ds.push_back(d);
  }

  std::vector<CyclotomicMultiset> out;
  std::vector<int> counts(ds.size(), 0);
  auto accept = [&] {
    CyclotomicMultiset m;
    for (std::size_t i = 0; i < ds.size(); ++i)
      if (counts[i]) m.blocks[ds[i]] = counts[i];
    auto count_of = [&](int d) {
      auto it = m.blocks.find(d);
      return it == m.blocks.end() ? 0 : it->second;
    };
    if (constraints.require_primitive && count_of(order) == 0) return;
    for (const auto& [d, c] : constraints.fixed_counts)
      if (count_of(d) != c) return;
    for (const auto& [d, c] : constraints.min_counts)
      if (count_of(d) < c) return;
    for (const auto& [subset, r] : constraints.subset_ranks) {
      int got = 0;
      for (int d : subset) got += count_of(d) * euler_phi(d);
      if (got != r) return;
    }
    out.push_back(std::move(m));
  };

  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i == ds.size()) {
      if (remaining == 0) accept();
      return;
    }
    const int phi = euler_phi(ds[i]);
    for (int c = remaining / phi; c >= 0; --c) {
      counts[i] = c;
      rec(i + 1, remaining - c * phi);
    }
    counts[i] = 0;
  };
  rec(0, rank);
  return out;
}

int LocalAction::two_form_weight() const {
  if (order < 1) throw DomainError("local action order must be positive");
  return (((p + q) % order) + order) % order;
}

std::string LocalAction::to_string() const {
  return "1/" + std::to_string(order) + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

bool local_curve_possible(const std::set<int>& w1, const std::set<int>& w2, int modulus) {
  if (modulus < 1) throw DomainError("modulus must be positive");
  for (int a : w1)
    for (int b : w2)
      if (((a + b) % modulus + modulus) % modulus == 0) return true;
  return false;
}

}  // namespace k3
