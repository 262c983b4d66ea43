#include <doctest.h>

#include <functional>
#include <numeric>

#include "k3/isometry.hpp"
#include "k3/parse.hpp"
#include "k3/poly.hpp"

using namespace k3;

namespace {

// Phi_d = (t^d - 1) / prod_{e | d, e < d} Phi_e, computed by exact division.
std::vector<Poly> cyclotomic_table(int max_d) {
  const FieldContext q = FieldContext::rationals();
  std::vector<Poly> phi(static_cast<std::size_t>(max_d) + 1);
  for (int d = 1; d <= max_d; ++d) {
    Poly p = Poly::monomial(FieldElement::one(q), d) - Poly::constant(FieldElement::one(q));
    for (int e = 1; e < d; ++e)
      if (d % e == 0) {
        const DivMod qr = divmod(p, phi[e]);
        REQUIRE(qr.remainder.is_zero());
        p = qr.quotient;
      }
    phi[d] = p;
  }
  return phi;
}

// Eigenvalue exponents j / d with gcd(j, d) = 1, raised to the k-th power,
// tallied by the order of the result.
std::map<int, int> power_orders(int d, int k) {
  std::map<int, int> out;
  for (int j = 0; j < d; ++j) {
    if (std::gcd(j, d) != 1) continue;
    const int e = static_cast<int>((static_cast<long long>(j) * k) % d);
    out[d / std::gcd(e, d)]++;
  }
  return out;
}

// Every count vector over the divisors, no pruning.
std::vector<std::map<int, int>> brute_decompositions(int order, int rank) {
  std::vector<int> ds;
  for (int d = 1; d <= order; ++d)
    if (order % d == 0) ds.push_back(d);
  std::vector<std::map<int, int>> out;
  std::vector<int> c(ds.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == ds.size()) {
      int r = 0;
      for (std::size_t k = 0; k < ds.size(); ++k) r += c[k] * euler_phi(ds[k]);
      if (r != rank) return;
      std::map<int, int> m;
      for (std::size_t k = 0; k < ds.size(); ++k)
        if (c[k]) m[ds[k]] = c[k];
      out.push_back(m);
      return;
    }
    for (c[i] = 0; c[i] <= rank; ++c[i]) rec(i + 1);
    c[i] = 0;
  };
  rec(0);
  return out;
}

}  // namespace

TEST_CASE("arithmetic functions") {
  CHECK(euler_phi(11) == 10);
  CHECK(euler_phi(22) == 10);
  CHECK(euler_phi(1) == 1);
  CHECK(moebius(1) == 1);
  CHECK(moebius(11) == -1);
  CHECK(moebius(22) == 1);
  CHECK(moebius(12) == 0);
  CHECK(divisors(22) == std::vector<int>{1, 2, 11, 22});
  CHECK_THROWS_AS(euler_phi(0), DomainError);
}

TEST_CASE("trace of a Phi_d block is the sum of its roots, d <= 100") {
  const auto phi = cyclotomic_table(100);
  for (int d = 1; d <= 100; ++d) {
    CHECK(phi[d].degree() == euler_phi(d));
    const Rational root_sum = -phi[d].coeff(phi[d].degree() - 1).x();
    CHECK(root_sum == Rational(moebius(d)));
    CHECK(CyclotomicMultiset::block(d).trace() == moebius(d));
    CHECK(CyclotomicMultiset::block(d).rank() == euler_phi(d));
  }
}

TEST_CASE("power map against explicit root exponents") {
  for (int d = 1; d <= 60; ++d)
    for (int k = 0; k <= 30; ++k) {
      const CyclotomicMultiset p = CyclotomicMultiset::block(d).power(k);
      std::map<int, int> want;
      for (const auto& [order, mult] : power_orders(d, k)) want[order] = mult / euler_phi(order);
      CHECK(p.blocks == want);
    }
  const CyclotomicMultiset u = CyclotomicMultiset::units(4, 8);
  CHECK(u.power(2) == CyclotomicMultiset::units(12, 0));
  CHECK(u.power(11) == u);
  CHECK(u.trace() == -4);
}

TEST_CASE("multiset literals") {
  CHECK(CyclotomicMultiset::units(4, 8).to_string() == "[1*4, -1*8]");
  CHECK(CyclotomicMultiset::block(11).to_string() == "[Phi(11)]");
  const CyclotomicMultiset m = parse_multiset("[Phi(1)*2, Phi(11)]");
  CHECK(m.to_string() == "[Phi(1)*2, Phi(11)]");
  CHECK(m.rank() == 12);
  CHECK(m.invariant_rank() == 2);
  CHECK(parse_multiset("[]").rank() == 0);
  CHECK(CyclotomicMultiset::units(2, 3).normalized() == parse_multiset("[Phi(1)*2, Phi(2)*3]"));
  CHECK((CyclotomicMultiset::units(1, 0) + CyclotomicMultiset::block(11)).rank() == 11);
  CHECK_THROWS_AS(parse_multiset("[2*3]"), ParseError);
  CHECK_THROWS_AS(parse_multiset("[Phi(0)]"), ParseError);
  CHECK_THROWS_AS(parse_multiset("[Phi(3)"), ParseError);
}

TEST_CASE("Lefschetz numbers") {
  const IsometryPattern composite = parse_pattern("S: [1*4, -1*8]; T: [Phi(11)]");
  CHECK(lefschetz_number(composite) == -3);
  const IsometryPattern h = parse_pattern("S: [Phi(1), Phi(2), Phi(11)]; T: [Phi(22)]");
  CHECK(lefschetz_number(h) == 2);
  const IsometryPattern iota{h.algebraic.power(11), h.transcendental.power(11)};
  CHECK(iota.to_string() == "S: [Phi(1)*11, Phi(2)]; T: [Phi(2)*10]");
  CHECK(lefschetz_number(iota) == 2);
  CHECK(lefschetz_number(parse_pattern("S: [Phi(1)*12]; T: [Phi(11)]")) == 13);
  CHECK_THROWS_AS(lefschetz_number(parse_pattern("S: [Phi(1)]; T: []")), DomainError);
  CHECK_THROWS_AS(parse_pattern("S: [1]"), ParseError);
}

TEST_CASE("decompositions match an unpruned enumeration") {
  for (int order : {1, 2, 6, 11, 12, 22})
    for (int rank = 0; rank <= (order > 12 ? 22 : 12); ++rank) {
      const auto got = char_poly_decompositions(order, rank);
      auto want = brute_decompositions(order, rank);
      std::vector<std::map<int, int>> got_maps;
      for (const auto& m : got) {
        CHECK(m.rank() == rank);
        got_maps.push_back(m.blocks);
      }
      std::sort(got_maps.begin(), got_maps.end());
      std::sort(want.begin(), want.end());
      CHECK(got_maps == want);
    }
  const auto two = char_poly_decompositions(2, 2);
  REQUIRE(two.size() == 3);
  CHECK(two[0].to_string() == "[Phi(1)*2]");
  CHECK(two[1].to_string() == "[Phi(1), Phi(2)]");
  CHECK(two[2].to_string() == "[Phi(2)*2]");
}

TEST_CASE("decomposition constraints filter the unpruned list") {
  DecompositionConstraints c;
  c.subset_ranks = {{{1, 2}, 2}};
  c.min_counts = {{1, 1}};
  const auto got = char_poly_decompositions(22, 12, c);
  int want = 0;
  for (const auto& m : brute_decompositions(22, 12)) {
    const int c1 = m.count(1) ? m.at(1) : 0, c2 = m.count(2) ? m.at(2) : 0;
    if (c1 + c2 == 2 && c1 >= 1) ++want;
  }
  CHECK(static_cast<int>(got.size()) == want);
  CHECK(want == 4);

  DecompositionConstraints no_one;
  no_one.forbid_one = true;
  CHECK(char_poly_decompositions(11, 10, no_one).size() == 1);
  CHECK(char_poly_decompositions(11, 11, no_one).empty());

  DecompositionConstraints prim;
  prim.require_primitive = true;
  for (const auto& m : char_poly_decompositions(22, 20, prim)) CHECK(m.blocks.count(22));
}

TEST_CASE("local actions") {
  const LocalAction p1{11, 5, 7}, p2{11, 2, 10};
  CHECK(p1.two_form_weight() == 1);
  CHECK(p2.two_form_weight() == 1);
  CHECK(p1.to_string() == "1/11(5,7)");
  CHECK_FALSE(local_curve_possible({5, 7}, {2, 10}, 11));
  CHECK(local_curve_possible({5, 7}, {4, 6}, 11));
  // Brute force over all weight pairs.
  for (int a = 0; a < 11; ++a)
    for (int b = 0; b < 11; ++b) CHECK(local_curve_possible({a}, {b}, 11) == ((a + b) % 11 == 0));
}
