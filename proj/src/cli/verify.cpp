#include "k3/verify.hpp"

#include <functional>
#include <sstream>

#include "k3/parse.hpp"

namespace k3 {

bool VerificationReport::all_pass() const {
  for (const auto& s : scenarios)
    if (!s.pass) return false;
  return true;
}

namespace {

struct Scenario {
  std::string name;
  std::string anchor;
  std::string expected;
  std::function<std::string()> actual;
};

const FieldContext kEisenstein = FieldContext::quadratic(-3);

Poly P(const std::string& text, const FieldContext& ctx = FieldContext::rationals(), const Bindings& b = {}) {
  return parse_poly(text, ctx, b);
}

// s = (2/9) sqrt(-3), so s^2 = -4/27.
Bindings special_s() { return {{"s", P("(2/9)*w", kEisenstein)}}; }

std::string surface_line(const Poly& a, const Poly& b) {
  const WeierstrassModel m(a, b);
  const FiberAnalysis f = analyze_fibers(m);
  return fiber_summary(f) + "; euler " + std::to_string(f.euler_total) + "; " + f.surface.to_string();
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string orbit_lines(const std::string& preset) {
  const auto settings = preset_orbit_settings(preset);
  std::vector<std::string> parts;
  for (const auto& c : fiber_orbit_configs(settings)) parts.push_back(c.to_string());
  return std::to_string(parts.size()) + ": " + join(parts, " | ");
}

std::string vector_string(const IntVector& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v(i));
  return out + ")";
}

std::string solutions_string(const DivisorClassResult& r) {
  std::vector<std::string> parts;
  for (const auto& v : r.solutions) parts.push_back(vector_string(v));
  return "{" + join(parts, ", ") + "}" + (r.certified_complete ? " certified" : " uncertified");
}

IntMatrix section_fiber_gram() {
  IntMatrix g(2, 2);
  g << -2, 1, 1, 0;  // C^2 = -2, C.F = 1, F^2 = 0
  return g;
}

IntVector unit(int i) {
  IntVector v = IntVector::Zero(2);
  v(i) = 1;
  return v;
}

std::vector<Scenario> build_suite() {
  std::vector<Scenario> s;

  s.push_back({"example1", "y^2 = x^3 + (t^11 - 1)", "11 x II + II(inf); euler 24; K3",
               [] { return surface_line(P("0"), P("t^11 - 1")); }});

  s.push_back({"claim5", "J(t) = 4a(t)^3/(4a(t)^3+27b(t)^2) = 0; Delta(t) = 27b(t)^2",
               "J = 0; Delta = 27*(t^11 - 1)^2; places t^11 - 1",
               [] {
                 const WeierstrassModel m(P("0"), P("t^11 - 1"));
                 const Poly d = discriminant(m);
                 const bool match = d == P("27*(t^11 - 1)^2");
                 std::vector<std::string> places;
                 for (const auto& f : analyze_fibers(m).fibers)
                   if (!f.place.is_infinity()) places.push_back(f.place.to_string());
                 return "J = " + j_map(m).to_string() + "; Delta = " +
                        (match ? std::string("27*(t^11 - 1)^2") : d.to_string()) + "; places " + join(places, ", ");
               }});

  s.push_back({"claim6", "y^2 = x^3 + x + (t^11 - s), s != 0, +-sqrt(-4/27)",
               "s=1: 22 x I1 + II(inf); euler 24; K3 | s=-1: 22 x I1 + II(inf); euler 24; K3 | "
               "s=2: 22 x I1 + II(inf); euler 24; K3 | s=1/3: 22 x I1 + II(inf); euler 24; K3",
               [] {
                 std::vector<std::string> parts;
                 for (const char* sv : {"1", "-1", "2", "1/3"})
                   parts.push_back(std::string("s=") + sv + ": " +
                                   surface_line(P("1"), P("t^11 - s", FieldContext::rationals(), {{"s", P(sv)}})));
                 return join(parts, " | ");
               }});

  s.push_back({"example2", "X_{sqrt(-4/27)}: I11 fiber X_{t=0}, type II fiber X_{t=inf}",
               "I11 + 11 x I1 + II(inf); euler 24; K3; Delta - 27*t^11*(t^11 - 2*s) = 0",
               [] {
                 const Bindings b = special_s();
                 const Poly a = P("1", kEisenstein), bb = P("t^11 - s", kEisenstein, b);
                 const Poly diff = discriminant(a, bb) - P("27*t^11*(t^11 - 2*s)", kEisenstein, b);
                 return surface_line(a, bb) + "; Delta - 27*t^11*(t^11 - 2*s) = " + diff.to_string();
               }});

  s.push_back({"example3", "J^(1): y^2 = x^3 + (t-1); J^(2), J^(3): y^2 = x^3 + x + (t-s)",
               "J1: II + II*(inf); euler 12; rational | J2: 2 x I1 + II*(inf); euler 12; rational | "
               "J3: I1 + I1 + II*(inf); euler 12; rational; places t - (4/9)*w, t",
               [] {
                 const Bindings b = special_s();
                 const WeierstrassModel j3(P("1", kEisenstein), P("t - s", kEisenstein, b));
                 std::vector<std::string> places;
                 for (const auto& f : analyze_fibers(j3).fibers)
                   if (!f.place.is_infinity()) places.push_back(f.place.to_string());
                 return "J1: " + surface_line(P("0"), P("t - 1")) + " | J2: " + surface_line(P("1"), P("t - 1")) +
                        " | J3: " + surface_line(j3.a(), j3.b()) + "; places " + join(places, ", ");
               }});

  s.push_back({"lemma1", "chi_topol(X^(g o iota)) = -3; G_N = {1}",
               "candidates 2; S: [Phi(1)*12]; T: [Phi(11)] -> fixed-locus-finite-vs-chi (chi -3); "
               "S: [Phi(1)*2, Phi(11)]; T: [Phi(11)] -> rationality; survivors 0",
               [] {
                 const Order22Report r = order22_replay("lemma1");
                 std::vector<std::string> parts;
                 for (const auto& c : r.candidates) {
                   std::string line = c.pattern.to_string() + " -> " + (c.killed_by.empty() ? "survives" : c.killed_by);
                   if (c.lefschetz) line += " (chi " + std::to_string(*c.lefschetz) + ")";
                   parts.push_back(line);
                 }
                 return "candidates " + std::to_string(r.candidates.size()) + "; " + join(parts, "; ") +
                        "; survivors " + std::to_string(r.survivors());
               }});

  s.push_back({"lemma2", "(2, -1), (2, -11), (2, -11^2), (12, -1), (12, -11); U, U(11) or U + A10",
               "(2,-1) U; (2,-11) rank2-parity-mod-4; (2,-121) U(11); (12,-1) even-unimodular-mod-8; (12,-11) U + A10",
               [] {
                 std::vector<std::string> parts;
                 for (const auto& c : rank_det_cases())
                   parts.push_back("(" + std::to_string(c.rank_m) + "," + to_string(c.det_m) + ") " +
                                   (c.feasible ? c.label : to_string(c.reason)));
                 return join(parts, "; ");
               }});

  s.push_back({"lemma2_rank2", "det M = -11^2, M 11-elementary: each b_ij divisible by 11",
               "bound 30: 18 lattices, counterexamples 0",
               [] {
                 int found = 0, bad = 0;
                 for (const auto& l : brute_force_even_rank2(Integer(-121), 30)) {
                   if (!is_p_elementary(l, 11)) continue;
                   ++found;
                   for (Eigen::Index i = 0; i < 2; ++i)
                     for (Eigen::Index j = 0; j < 2; ++j)
                       if (l.gram()(i, j) % 11 != 0) ++bad;
                 }
                 return "bound 30: " + std::to_string(found) + " lattices, counterexamples " + std::to_string(bad);
               }});

  s.push_back({"prop3", "24 = chi(X_0) + chi(X_inf) + 11m; (X_0, X_inf) = (I0, II)",
               "3: X0=I0, Xinf=II, orbits={I1, I1} | X0=I0, Xinf=II, orbits={I2} | X0=I0, Xinf=II, orbits={II}",
               [] { return orbit_lines("prop3"); }});

  s.push_back({"section", "((aC+bE).E) = 1, (aC+bE)^2 = -2 => a = 1, b = 0", "{(1,0)} certified",
               [] {
                 return solutions_string(divisor_class_solve(section_fiber_gram(), {{unit(1), Integer(1)}},
                                                             Integer(-2), 50));
               }});

  s.push_back({"claim4", "-22 = (S)^2 = (bF)^2 = 0",
               "{} certified; 2: X0=I0, Xinf=II, orbits={I1, I1} | X0=I0, Xinf=II, orbits={II}",
               [] {
                 return solutions_string(divisor_class_solve(section_fiber_gram(), {{unit(1), Integer(0)}},
                                                             Integer(-22), 50)) +
                        "; " + orbit_lines("claim4");
               }});

  s.push_back({"lemma7", "X_0 smooth or of type I11; X_inf of type II; X^g = {P1, P2}",
               "3: X0=I0, Xinf=II, orbits={I1, I1} | X0=I0, Xinf=II, orbits={II} | X0=I11, Xinf=II, orbits={I1}",
               [] { return orbit_lines("lemma7"); }});

  s.push_back({"lemma8", "T_0 of type 11I0 or 11I1, T_inf of type II*",
               "11I0 + II* + 2 x I1 = 12 | 11I0 + II* + II = 12 | 11I1 + II* + I1 = 12",
               [] {
                 std::vector<std::string> parts;
                 for (const auto& c : fiber_orbit_configs(preset_orbit_settings("lemma7"))) {
                   const FiberConfiguration q = quotient_configuration(c);
                   parts.push_back(q.to_string() + " = " + std::to_string(q.euler_sum()));
                 }
                 return join(parts, " | ");
               }});

  s.push_back({"lemma9", "chi_topol(X^iota) = 2; no a in {5,7}, b in {2,10} with a + b = 0 mod 11",
               "candidates 6; chi-consistent S: [Phi(1), Phi(2), Phi(11)]; T: [Phi(22)]; "
               "chi(X^iota) = 2; killed by invariant-curve-weight-check; survivors 0",
               [] {
                 const Order22Report r = order22_replay("lemma9");
                 std::vector<std::string> consistent;
                 std::string chi_iota = "?", killer = "none";
                 for (const auto& c : r.candidates) {
                   if (c.killed_by == "lefschetz-mismatch") continue;
                   consistent.push_back(c.pattern.to_string());
                   const IsometryPattern iota{c.pattern.algebraic.power(11), c.pattern.transcendental.power(11)};
                   chi_iota = std::to_string(lefschetz_number(iota));
                   if (!c.killed_by.empty()) killer = c.killed_by;
                 }
                 return "candidates " + std::to_string(r.candidates.size()) + "; chi-consistent " +
                        join(consistent, ", ") + "; chi(X^iota) = " + chi_iota + "; killed by " + killer +
                        "; survivors " + std::to_string(r.survivors());
               }});

  return s;
}

const std::vector<Scenario>& suite() {
  static const std::vector<Scenario> s = build_suite();
  return s;
}

ScenarioResult run(const Scenario& sc) {
  ScenarioResult r{sc.name, false, sc.expected, {}, sc.anchor};
  try {
    r.actual = sc.actual();
  } catch (const std::exception& e) {
    r.actual = std::string("error: ") + e.what();
  }
  r.pass = r.actual == r.expected;
  return r;
}

}  // namespace

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suite()) out.push_back(s.name);
    return out;
  }();
  return names;
}

VerificationReport verify_paper(const std::string& selector) {
  VerificationReport rep;
  for (const auto& s : suite())
    if (selector == "all" || selector == s.name) rep.scenarios.push_back(run(s));
  if (rep.scenarios.empty()) throw DomainError("unknown scenario '" + selector + "'");
  return rep;
}

Json verification_json(const VerificationReport& report) {
  Json j;
  j["kind"] = "verification";
  Json arr = Json::array();
  int passed = 0;
  for (const auto& s : report.scenarios) {
    Json e;
    e["name"] = s.name;
    e["status"] = s.pass ? "pass" : "fail";
    e["expected"] = s.expected;
    e["actual"] = s.actual;
    e["anchor"] = s.anchor;
    arr.push_back(std::move(e));
    passed += s.pass;
  }
  j["scenarios"] = std::move(arr);
  j["passed"] = passed;
  j["total"] = report.scenarios.size();
  j["status"] = report.all_pass() ? "pass" : "fail";
  return j;
}

std::string verification_text(const VerificationReport& report) {
  std::ostringstream os;
  int passed = 0;
  for (const auto& s : report.scenarios) {
    os << (s.pass ? "PASS " : "FAIL ") << s.name << "  [" << s.anchor << "]\n";
    os << "  actual:   " << s.actual << "\n";
    if (!s.pass) os << "  expected: " << s.expected << "\n";
    passed += s.pass;
  }
  os << passed << "/" << report.scenarios.size() << " scenarios pass\n";
  return os.str();
}

}  // namespace k3
