#include <doctest.h>

#include <functional>
#include <set>

#include "k3/enumerate.hpp"
#include "k3/lattice.hpp"

using namespace k3;

namespace {

KodairaType T(const std::string& s) { return KodairaType::parse(s); }

std::vector<std::string> described(const std::vector<OrbitConfig>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(c.to_string());
  return out;
}

// Independent enumeration: every count vector over the orbit types, then
// filter by the Euler identity. No canonical ordering, compared as sets.
std::set<std::string> brute_orbits(const FiberOrbitSettings& s, const std::vector<KodairaType>& orbit_types) {
  std::set<std::string> out;
  for (const auto& x0 : s.allowed_at_0)
    for (const auto& xi : s.allowed_at_inf) {
      if (s.identify_swap) {
        const bool swappable = std::count(s.allowed_at_0.begin(), s.allowed_at_0.end(), xi) &&
                               std::count(s.allowed_at_inf.begin(), s.allowed_at_inf.end(), x0);
        if (swappable && xi < x0) continue;
      }
      std::vector<int> c(orbit_types.size(), 0);
      std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
        if (i == orbit_types.size()) {
          int e = x0.euler() + xi.euler(), n = 0;
          std::vector<KodairaType> orbit;
          for (std::size_t k = 0; k < c.size(); ++k) {
            e += s.orbit_size * c[k] * orbit_types[k].euler();
            n += c[k];
            for (int r = 0; r < c[k]; ++r) orbit.push_back(orbit_types[k]);
          }
          if (e != s.total_euler || (s.require_orbit && n == 0)) return;
          std::sort(orbit.begin(), orbit.end());
          out.insert(OrbitConfig{x0, xi, orbit, {}}.to_string());
          return;
        }
        const int step = s.orbit_size * orbit_types[i].euler();
        for (c[i] = 0; used + c[i] * step <= s.total_euler; ++c[i]) rec(i + 1, used + c[i] * step);
        c[i] = 0;
      };
      rec(0, x0.euler() + xi.euler());
    }
  return out;
}

}  // namespace

TEST_CASE("rank and determinant cases") {
  const auto cases = rank_det_cases();
  REQUIRE(cases.size() == 5);
  const std::vector<std::pair<int, int>> pairs = {{2, -1}, {2, -11}, {2, -121}, {12, -1}, {12, -11}};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(cases[i].rank_m == pairs[i].first);
    CHECK(cases[i].det_m == pairs[i].second);
  }
  CHECK(cases[0].feasible);
  CHECK(cases[0].label == "U");
  CHECK_FALSE(cases[1].feasible);
  CHECK(cases[1].reason == RankDetCase::Reason::rank2_parity_mod4);
  CHECK(cases[2].label == "U(11)");
  CHECK_FALSE(cases[3].feasible);
  CHECK(cases[3].reason == RankDetCase::Reason::even_unimodular_mod8);
  CHECK(cases[4].label == "U + A10");
  CHECK(to_string(RankDetCase::Reason::even_unimodular_mod8) == "even-unimodular-mod-8");

  // Closed form {rank N in {10, 20}, s <= rank N / 10}.
  std::set<std::pair<int, int>> closed;
  for (int rn : {10, 20})
    for (int s = 0; s <= rn / 10; ++s) closed.insert({22 - rn, s});
  std::set<std::pair<int, int>> got;
  for (const auto& c : cases) got.insert({c.rank_m, c.s});
  CHECK(got == closed);

  // Survivor witnesses really have the case invariants.
  for (const auto& c : cases) {
    if (!c.feasible) continue;
    const Lattice l = build_lattice(c.label);
    CHECK(l.rank() == c.rank_m);
    CHECK(determinant_and_signature(l).det == c.det_m);
    CHECK(is_p_elementary(l, 11));
  }
}

TEST_CASE("section case orbit configurations") {
  const auto prop3 = fiber_orbit_configs(preset_orbit_settings("prop3"));
  CHECK(described(prop3) == std::vector<std::string>{"X0=I0, Xinf=II, orbits={I1, I1}",
                                                      "X0=I0, Xinf=II, orbits={I2}",
                                                      "X0=I0, Xinf=II, orbits={II}"});
  for (const auto& c : prop3) CHECK(c.euler(11) == 24);
  const auto claim4 = fiber_orbit_configs(preset_orbit_settings("claim4"));
  CHECK(described(claim4) ==
        std::vector<std::string>{"X0=I0, Xinf=II, orbits={I1, I1}", "X0=I0, Xinf=II, orbits={II}"});

  // Without the swap identification (I0, II) and (II, I0) both appear.
  FiberOrbitSettings s = preset_orbit_settings("prop3");
  s.identify_swap = false;
  CHECK(fiber_orbit_configs(s).size() == 6);
}

TEST_CASE("no-section orbit configurations") {
  const auto l7 = fiber_orbit_configs(preset_orbit_settings("lemma7"));
  CHECK(described(l7) == std::vector<std::string>{"X0=I0, Xinf=II, orbits={I1, I1}",
                                                   "X0=I0, Xinf=II, orbits={II}",
                                                   "X0=I11, Xinf=II, orbits={I1}"});
  const auto wide = fiber_orbit_configs(preset_orbit_settings("lemma7_wide"));
  REQUIRE(wide.size() == 4);
  CHECK(wide[3].at_0 == T("I22"));
  CHECK(wide[3].orbit.empty());
  CHECK(wide[3].note == "excluded by the rank-M argument, not checked here");

  std::vector<std::string> q;
  for (const auto& c : l7) {
    const FiberConfiguration f = quotient_configuration(c);
    CHECK(f.euler_sum() == 12);
    q.push_back(f.to_string());
  }
  CHECK(q == std::vector<std::string>{"11I0 + II* + 2 x I1", "11I0 + II* + II", "11I1 + II* + I1"});
  CHECK_THROWS_AS(quotient_configuration(OrbitConfig{T("II"), T("II"), {T("I1")}, {}}), DomainError);
  CHECK_THROWS_AS(quotient_configuration(OrbitConfig{T("I5"), T("II"), {T("I1")}, {}}), DomainError);
}

TEST_CASE("orbit enumeration is exhaustive against a brute force") {
  const std::vector<KodairaType> fixed = {T("I0"), T("I1"), T("I2"), T("I11"), T("II"), T("III"), T("IV"),
                                          T("I0*"), T("II*")};
  for (int total : {12, 24})
    for (int size : {1, 2, 3, 5, 11})
      for (bool swap : {false, true})
        for (bool require : {false, true}) {
          FiberOrbitSettings s;
          s.total_euler = total;
          s.orbit_size = size;
          s.allowed_at_0 = fixed;
          s.allowed_at_inf = {T("I0"), T("II"), T("II*"), T("IV")};
          s.identify_swap = swap;
          s.require_orbit = require;
          const auto got = fiber_orbit_configs(s);
          std::set<std::string> got_set;
          for (const auto& c : got) {
            CHECK(c.euler(size) == total);
            got_set.insert(c.to_string());
          }
          CHECK(got_set.size() == got.size());
          CHECK(got_set == brute_orbits(s, kodaira_types_up_to(total / size)));
        }
}

TEST_CASE("order-22 replay with an involution") {
  const Order22Report r = order22_replay("lemma1");
  REQUIRE(r.candidates.size() == 2);
  CHECK(r.survivors() == 0);
  const auto s = char_poly_decompositions(11, 12);
  REQUIRE(s.size() == 2);
  CHECK(r.candidates[0].pattern.algebraic == s[0]);
  CHECK(r.candidates[1].pattern.algebraic == s[1]);
  CHECK(r.candidates[0].lefschetz == -3);
  CHECK(r.candidates[0].killed_by == "fixed-locus-finite-vs-chi");
  CHECK(r.candidates[1].killed_by == "rationality");
  CHECK_FALSE(r.candidates[1].lefschetz.has_value());
  CHECK_FALSE(r.assumptions.empty());
}

TEST_CASE("order-22 replay for the maximal group") {
  const Order22Report r = order22_replay("lemma9");
  REQUIRE(r.candidates.size() == 6);
  std::vector<int> chi;
  for (const auto& c : r.candidates) chi.push_back(*c.lefschetz);
  CHECK(chi == std::vector<int>{4, 6, 2, 4, 6, 4});
  CHECK(r.survivors() == 0);
  int consistent = 0;
  for (const auto& c : r.candidates) {
    if (c.killed_by == "lefschetz-mismatch") continue;
    ++consistent;
    CHECK(c.pattern.to_string() == "S: [Phi(1), Phi(2), Phi(11)]; T: [Phi(22)]");
    CHECK(c.killed_by == "invariant-curve-weight-check");
  }
  CHECK(consistent == 1);

  // Candidate list is exactly the constrained decompositions, T rank 10 then 20.
  DecompositionConstraints t;
  t.allowed = {22};
  DecompositionConstraints sc;
  sc.subset_ranks = {{{1, 2}, 2}};
  sc.min_counts = {{1, 1}};
  std::size_t i = 0;
  for (int rt : {10, 20})
    for (const auto& ht : char_poly_decompositions(22, rt, t))
      for (const auto& hs : char_poly_decompositions(22, 22 - rt, sc)) {
        REQUIRE(i < r.candidates.size());
        CHECK(r.candidates[i].pattern.algebraic == hs);
        CHECK(r.candidates[i].pattern.transcendental == ht);
        ++i;
      }
  CHECK(i == r.candidates.size());
}

TEST_CASE("order-22 control and determinism") {
  const Order22Report c = order22_replay("control");
  REQUIRE(c.candidates.size() == 1);
  CHECK(c.survivors() == 1);
  CHECK(c.candidates[0].pattern.transcendental.to_string() == "[Phi(11)]");
  CHECK_THROWS_AS(order22_replay("lemma3"), DomainError);
  const auto a = order22_replay("lemma9"), b = order22_replay("lemma9");
  for (std::size_t i = 0; i < a.candidates.size(); ++i) {
    CHECK(a.candidates[i].pattern.to_string() == b.candidates[i].pattern.to_string());
    CHECK(a.candidates[i].detail == b.candidates[i].detail);
  }
  CHECK_THROWS_AS(preset_orbit_settings("nope"), DomainError);
}
