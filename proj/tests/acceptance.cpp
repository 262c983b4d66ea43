// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <tuple>

#include "k3/commands.hpp"
#include "k3/parse.hpp"
#include "support.hpp"

using namespace k3;
using k3::testing::Rng;
using k3::testing::uniform;

namespace {

const FieldContext Q = FieldContext::rationals();
const FieldContext K = FieldContext::quadratic(-3);

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

template <class A, class B>
void require_eq(const A& got, const B& want, const std::string& what) {
  if (!(got == want)) {
    std::ostringstream s;
    s << what << ": got " << got << ", want " << want;
    throw Failure{s.str()};
  }
}

Bindings special() { return {{"s", parse_poly("(2/9)*w", K)}}; }

// (place, geometric count, type) rows of an analysis.
std::vector<std::string> table(const FiberAnalysis& f) {
  std::vector<std::string> out;
  for (const auto& x : f.fibers)
    out.push_back(x.place.to_string() + " " + std::to_string(x.degree()) + " " + x.type.to_string());
  return out;
}

std::string joined(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " | ") + x;
  return s;
}

FiberAnalysis analyze(const std::string& a, const std::string& b, const FieldContext& ctx = Q,
                      const Bindings& bind = {}) {
  return analyze_fibers(WeierstrassModel(parse_poly(a, ctx, bind), parse_poly(b, ctx, bind)));
}

void ac1() {
  std::ostringstream out, err;
  const char* argv[] = {"k3tool", "surface", "analyze", "--a", "0", "--b", "t^11-1"};
  require_eq(run_cli(7, argv, out, err), 0, "exit status");
  const Json j = Json::parse(out.str());
  require_eq(j["fibers"].size(), 2u, "fiber rows");
  require(j["fibers"][0]["place"] == "t^11 - 1" && j["fibers"][0]["degree"] == 11 && j["fibers"][0]["type"] == "II",
          "finite row");
  require(j["fibers"][1]["place"] == "infinity" && j["fibers"][1]["type"] == "II", "row at infinity");
  require(j["euler_total"] == 24 && j["class"] == "K3", "euler/class");
}

void ac2() {
  const FiberAnalysis f = analyze("1", "t^11 - 1");
  require_eq(joined(table(f)), std::string("t^22 - 2*t^11 + 31/27 22 I1 | infinity 1 II"), "table");
  require_eq(f.euler_total, 24, "euler");
}

void ac3() {
  const FiberAnalysis f = analyze("1", "t^11 - s", K, special());
  require_eq(joined(table(f)), std::string("t 1 I11 | t^11 - (4/9)*w 11 I1 | infinity 1 II"), "table");
  require_eq(f.euler_total, 24, "euler");
  require_eq(f.surface.to_string(), std::string("K3"), "class");
  const Poly diff = discriminant(parse_poly("1", K), parse_poly("t^11 - s", K, special())) -
                    parse_poly("27*t^11*(t^11 - 2*s)", K, special());
  require(diff.is_zero(), "Delta - 27 t^11 (t^11 - 2s) = " + diff.to_string());
}

void ac4() {
  const FiberAnalysis j1 = analyze("0", "t - 1"), j2 = analyze("1", "t - 1"), j3 = analyze("1", "t - s", K, special());
  require_eq(joined(table(j1)), std::string("t - 1 1 II | infinity 1 II*"), "J1");
  require_eq(joined(table(j2)), std::string("t^2 - 2*t + 31/27 2 I1 | infinity 1 II*"), "J2");
  require_eq(joined(table(j3)), std::string("t - (4/9)*w 1 I1 | t 1 I1 | infinity 1 II*"), "J3");
  for (const auto* f : {&j1, &j2, &j3}) {
    require_eq(f->euler_total, 12, "euler");
    require_eq(f->surface.to_string(), std::string("rational"), "class");
  }
}

void ac5() {
  std::vector<std::string> got;
  for (const auto& c : rank_det_cases())
    got.push_back("(" + std::to_string(c.rank_m) + "," + to_string(c.det_m) + ") " +
                  (c.feasible ? c.label : to_string(c.reason)));
  require_eq(joined(got),
             std::string("(2,-1) U | (2,-11) rank2-parity-mod-4 | (2,-121) U(11) | (12,-1) even-unimodular-mod-8 | "
                         "(12,-11) U + A10"),
             "cases");
}

void ac6() {
  int found = 0, bad = 0;
  for (const auto& l : brute_force_even_rank2(Integer(-121), 30)) {
    if (!is_p_elementary(l, 11)) continue;
    ++found;
    for (Eigen::Index i = 0; i < 2; ++i)
      for (Eigen::Index j = 0; j < 2; ++j)
        if (l.gram()(i, j) % 11 != 0) ++bad;
  }
  require(found > 0, "no lattices enumerated");
  require_eq(bad, 0, "counterexamples");
}

void ac7() {
  require_eq(lefschetz_number(parse_pattern("S: [1*4, -1*8]; T: [Phi(11)]")), -3, "composite");
  const IsometryPattern h = parse_pattern("S: [Phi(1), Phi(2), Phi(11)]; T: [Phi(22)]");
  const IsometryPattern iota{h.algebraic.power(11), h.transcendental.power(11)};
  require_eq(lefschetz_number(iota), 2, "involution");
}

void ac8() {
  const Order22Report l1 = order22_replay("lemma1");
  require_eq(l1.candidates.size(), 2u, "lemma1 candidates");
  require_eq(l1.survivors(), 0, "lemma1 survivors");
  require_eq(l1.candidates[0].killed_by, std::string("fixed-locus-finite-vs-chi"), "lemma1 rule 0");
  require_eq(l1.candidates[1].killed_by, std::string("rationality"), "lemma1 rule 1");
  const Order22Report l9 = order22_replay("lemma9");
  require_eq(l9.survivors(), 0, "lemma9 survivors");
  require(!local_curve_possible({5, 7}, {2, 10}, 11), "weight check must be false");
  int weight = 0;
  for (const auto& c : l9.candidates) {
    if (c.killed_by == "invariant-curve-weight-check") {
      ++weight;
      require_eq(c.pattern.to_string(), std::string("S: [Phi(1), Phi(2), Phi(11)]; T: [Phi(22)]"), "pattern");
    } else {
      require_eq(c.killed_by, std::string("lefschetz-mismatch"), "other rule");
    }
  }
  require_eq(weight, 1, "weight-check kills");
}

std::set<std::string> configs(const std::string& preset) {
  std::set<std::string> out;
  for (const auto& c : fiber_orbit_configs(preset_orbit_settings(preset))) out.insert(c.to_string());
  return out;
}

void ac9() {
  require(configs("prop3") == std::set<std::string>{"X0=I0, Xinf=II, orbits={I1, I1}", "X0=I0, Xinf=II, orbits={I2}",
                                                    "X0=I0, Xinf=II, orbits={II}"},
          "prop3 set");
  require(configs("claim4") == std::set<std::string>{"X0=I0, Xinf=II, orbits={I1, I1}", "X0=I0, Xinf=II, orbits={II}"},
          "claim4 set");
  require(configs("lemma7") == std::set<std::string>{"X0=I0, Xinf=II, orbits={I1, I1}", "X0=I0, Xinf=II, orbits={II}",
                                                     "X0=I11, Xinf=II, orbits={I1}"},
          "lemma7 set");
  std::set<std::string> q;
  for (const auto& c : fiber_orbit_configs(preset_orbit_settings("lemma7"))) {
    const FiberConfiguration f = quotient_configuration(c);
    require_eq(f.euler_sum(), 12, f.to_string());
    q.insert(f.to_string());
  }
  require(q == std::set<std::string>{"11I0 + II* + 2 x I1", "11I0 + II* + II", "11I1 + II* + I1"}, "lemma8 set");
}

void ac10() {
  IntMatrix g(2, 2);
  g << -2, 1, 1, 0;
  IntVector e = IntVector::Zero(2), f = IntVector::Zero(2);
  e(1) = 1;
  f(1) = 1;
  const DivisorClassResult a = divisor_class_solve(g, {{e, Integer(1)}}, Integer(-2), 50);
  require(a.certified_complete, "section solve not certified");
  require_eq(a.solutions.size(), 1u, "section solutions");
  require(a.solutions[0](0) == 1 && a.solutions[0](1) == 0, "section solution (1,0)");
  const DivisorClassResult b = divisor_class_solve(g, {{f, Integer(0)}}, Integer(-22), 50);
  require(b.certified_complete, "(-22) solve not certified");
  require(b.solutions.empty(), "(-22) solutions nonempty");
}

// Randomized suites, each at least 1000 cases.
void ac11() {
  Rng rng(2026);
  int euler_cases = 0;
  for (int i = 0; euler_cases < 1000; ++i) {
    const int k = 1 + i % 2;
    const WeierstrassModel m = k3::testing::planted_model(rng, i % 5 ? Q : K, k);
    const FiberAnalysis f = analyze_fibers(m);
    if (!f.globally_minimal) continue;
    require_eq(f.euler_total, 12 * k, "Euler sum on " + m.a().to_string() + ", " + m.b().to_string());
    ++euler_cases;
  }

  for (int i = 0; i < 1000; ++i) {
    const int n = uniform(rng, 1, 5);
    IntMatrix g(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = r; c < n; ++c) g(r, c) = g(c, r) = uniform(rng, -6, 6) * (r == c ? 2 : 1);
    const Lattice l(g);
    const DetSignature ds = determinant_and_signature(l);
    if (ds.det == 0) {
      --i;
      continue;
    }
    Integer order = 1;
    for (const auto& d : discriminant_group(l).invariant_factors) order *= d;
    require_eq(order, abs(ds.det), "disc order");
  }

  for (int i = 0; i < 1000; ++i) {
    const FieldContext& ctx = i % 3 ? Q : K;
    const Poly a = k3::testing::random_poly(rng, ctx, uniform(rng, 0, 4), 4);
    const Poly b = k3::testing::random_poly(rng, ctx, uniform(rng, 1, 4), 4);
    const Poly c = k3::testing::random_poly(rng, ctx, uniform(rng, 0, 3), 4);
    const Poly p = a * c, q = b * c;
    const Poly g = poly_gcd(p, q);
    require(divides(g, p) && divides(g, q), "gcd divides");
    require(divides(c, g), "planted factor divides gcd");
    const Poly sq = pow(b, 2) * a * k3::testing::random_poly(rng, ctx, 1, 4);
    const SquarefreeDecomposition d = squarefree_decompose(sq);
    Poly back = Poly::constant(d.content);
    for (const auto& [f, e] : d.factors) back = back * pow(f, e);
    require(back == sq, "squarefree reassembly of " + sq.to_string());
  }

  for (int i = 0; i < 1000; ++i) {
    const FieldContext& ctx = i % 4 ? Q : K;
    const WeierstrassModel m = k3::testing::planted_model(rng, ctx, 1 + i % 2);
    FieldElement l = k3::testing::random_element(rng, ctx, 5);
    if (l.is_zero()) l = FieldElement::one(ctx);
    const FieldElement l2 = l * l;
    const FiberAnalysis f = analyze_fibers(m);
    const FiberAnalysis r = analyze_fibers(WeierstrassModel(m.a() * (l2 * l2), m.b() * (l2 * l2 * l2)));
    require(table(f) == table(r), "rescaling changed the table of " + m.b().to_string());
  }
}

}  // namespace

int main() {
  const std::vector<std::tuple<std::string, std::string, std::function<void()>>> criteria = {
      {"AC1", "S66 fiber table", ac1},
      {"AC2", "generic member s = 1", ac2},
      {"AC3", "special member over Q(sqrt(-3))", ac3},
      {"AC4", "rational surfaces J1 J2 J3", ac4},
      {"AC5", "rank/det table", ac5},
      {"AC6", "rank-2 brute force", ac6},
      {"AC7", "Lefschetz numbers", ac7},
      {"AC8", "order-22 replays", ac8},
      {"AC9", "fiber-orbit enumerations", ac9},
      {"AC10", "divisor class solves", ac10},
      {"AC11", "property suites", ac11},
  };
  int failed = 0;
  for (const auto& [id, name, run] : criteria) {
    try {
      run();
      std::cout << id << " PASS " << name << "\n";
    } catch (const Failure& f) {
      ++failed;
      std::cout << id << " FAIL " << name << ": " << f.what << "\n";
    } catch (const std::exception& e) {
      ++failed;
      std::cout << id << " FAIL " << name << ": exception " << e.what() << "\n";
    }
  }
  std::cout << (failed ? "FAILED " : "ALL PASS ") << (criteria.size() - failed) << "/" << criteria.size() << "\n";
  return failed ? 1 : 0;
}
