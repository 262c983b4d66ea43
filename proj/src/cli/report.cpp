#include "k3/report.hpp"

#include <iomanip>
#include <sstream>

namespace k3 {

Format resolve_format(bool text_flag, const char* env_value) {
  if (text_flag) return Format::text;
  if (env_value == nullptr || *env_value == '\0') return Format::json;
  const std::string v(env_value);
  if (v == "json") return Format::json;
  if (v == "text") return Format::text;
  throw DomainError("K3_REPORT_FORMAT must be 'json' or 'text', got '" + v + "'");
}

Json to_json(const Valuation& v) {
  if (v.is_omega()) return "omega";
  return v.value();
}

Json to_json(const KodairaFiber& f) {
  Json j;
  j["place"] = f.place.to_string();
  j["degree"] = f.degree();
  j["type"] = f.type.to_string();
  j["v_a"] = to_json(f.valuations.va);
  j["v_b"] = to_json(f.valuations.vb);
  j["v_delta"] = to_json(f.valuations.vd);
  j["euler"] = f.euler();
  if (f.valuations.reductions) j["reductions"] = f.valuations.reductions;
  return j;
}

std::string fiber_summary(const FiberAnalysis& a) {
  std::string out;
  for (const auto& f : a.fibers) {
    if (!out.empty()) out += " + ";
    if (f.degree() > 1) out += std::to_string(f.degree()) + " x ";
    out += f.type.to_string() + (f.place.is_infinity() ? "(inf)" : "");
  }
  return out.empty() ? "none" : out;
}

Json analysis_json(const WeierstrassModel& m, const FiberAnalysis& a) {
  Json j;
  j["field"] = m.context().to_string();
  j["a"] = m.a().to_string();
  j["b"] = m.b().to_string();
  j["discriminant"] = discriminant(m).to_string();
  j["j"] = j_map(m).to_string();
  j["k"] = a.k;
  Json fibers = Json::array();
  for (const auto& f : a.fibers) fibers.push_back(to_json(f));
  j["fibers"] = std::move(fibers);
  j["summary"] = fiber_summary(a);
  j["euler_total"] = a.euler_total;
  j["euler_expected"] = 12 * a.k;
  j["globally_minimal"] = a.globally_minimal;
  j["euler_consistent"] = a.euler_consistent();
  j["class"] = a.surface.to_string();
  return j;
}

std::string analysis_text(const WeierstrassModel& m, const FiberAnalysis& a) {
  std::ostringstream os;
  os << "y^2 = x^3 + (" << m.a() << ")*x + (" << m.b() << ")  over " << m.context().to_string() << "\n";
  os << "discriminant: " << discriminant(m) << "\n";
  os << "J: " << j_map(m).to_string() << "\n\n";
  os << std::left << std::setw(28) << "place" << std::setw(8) << "degree" << std::setw(7) << "type"
     << std::setw(7) << "v_a" << std::setw(7) << "v_b" << std::setw(9) << "v_delta" << "euler\n";
  for (const auto& f : a.fibers) {
    os << std::setw(28) << f.place.to_string() << std::setw(8) << f.degree() << std::setw(7) << f.type.to_string()
       << std::setw(7) << f.valuations.va.to_string() << std::setw(7) << f.valuations.vb.to_string()
       << std::setw(9) << f.valuations.vd.to_string() << f.euler() << "\n";
  }
  os << "\nk = " << a.k << ", euler total " << a.euler_total << " (expected " << 12 * a.k << ")"
     << (a.globally_minimal ? "" : ", model not minimal") << "\n";
  os << "class: " << a.surface.to_string() << "\n";
  return os.str();
}

namespace {

std::vector<Integer> prime_divisors(Integer n) {
  std::vector<Integer> out;
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

Json integer_json(const Integer& v) {
  if (abs_value(v) < Integer(1) << 62) return v.convert_to<long long>();
  return to_string(v);
}

}  // namespace

Json lattice_json(const std::string& expr, const Lattice& l) {
  Json j;
  j["expression"] = expr;
  j["rank"] = l.rank();
  Json gram = Json::array();
  for (Eigen::Index r = 0; r < l.rank(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < l.rank(); ++c) row.push_back(integer_json(l.gram()(r, c)));
    gram.push_back(std::move(row));
  }
  j["gram"] = std::move(gram);
  const DetSignature ds = determinant_and_signature(l);
  j["det"] = to_string(ds.det);
  j["signature"] = {ds.signature.positives, ds.signature.negatives};
  j["nullity"] = ds.signature.zeros;
  j["even"] = l.is_even();
  if (ds.degenerate()) {
    j["discriminant_group"] = nullptr;
    return j;
  }
  const DiscGroup g = discriminant_group(l);
  j["discriminant_group"] = g.to_string();
  Json factors = Json::array();
  for (const auto& f : g.invariant_factors) factors.push_back(to_string(f));
  j["invariant_factors"] = std::move(factors);
  j["order"] = to_string(g.order());
  Json elementary = Json::array();
  for (const Integer& p : prime_divisors(abs_value(ds.det)))
    if (is_p_elementary(l, p)) elementary.push_back(to_string(p));
  j["p_elementary"] = std::move(elementary);
  j["unimodular"] = g.is_trivial();
  return j;
}

Json to_json(const RankDetCase& c) {
  Json j;
  j["rank_m"] = c.rank_m;
  j["det_m"] = to_string(c.det_m);
  j["s"] = c.s;
  j["feasible"] = c.feasible;
  j["reason"] = to_string(c.reason);
  j["lattice"] = c.label.empty() ? Json(nullptr) : Json(c.label);
  return j;
}

Json rank_det_json(const std::vector<RankDetCase>& cases) {
  Json j;
  j["kind"] = "rank_det";
  Json arr = Json::array();
  Json survivors = Json::array();
  for (const auto& c : cases) {
    arr.push_back(to_json(c));
    if (c.feasible) survivors.push_back(c.label);
  }
  j["cases"] = std::move(arr);
  j["survivors"] = std::move(survivors);
  return j;
}

Json to_json(const OrbitConfig& c, int orbit_size) {
  Json j;
  j["at_0"] = c.at_0.to_string();
  j["at_inf"] = c.at_inf.to_string();
  Json orbit = Json::array();
  for (const auto& t : c.orbit) orbit.push_back(t.to_string());
  j["orbits"] = std::move(orbit);
  j["euler"] = c.euler(orbit_size);
  j["description"] = c.to_string();
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json fiber_orbits_json(const FiberOrbitSettings& s, const std::vector<OrbitConfig>& configs, bool quotient) {
  Json j;
  j["kind"] = "fiber_orbits";
  j["total_euler"] = s.total_euler;
  j["orbit_size"] = s.orbit_size;
  j["assumptions"] = s.assumptions;
  Json arr = Json::array();
  for (const auto& c : configs) {
    Json e = to_json(c, s.orbit_size);
    if (quotient) {
      const FiberConfiguration q = quotient_configuration(c, s.orbit_size);
      const EulerCheck check = config_euler_check(q, 12);
      e["quotient"] = q.to_string();
      e["quotient_euler"] = check.total;
      e["quotient_euler_ok"] = check.pass;
    }
    arr.push_back(std::move(e));
  }
  j["count"] = configs.size();
  j["configurations"] = std::move(arr);
  return j;
}

Json to_json(const Order22Candidate& c) {
  Json j;
  j["pattern"] = c.pattern.to_string();
  j["lefschetz"] = c.lefschetz ? Json(*c.lefschetz) : Json(nullptr);
  j["status"] = c.killed_by.empty() ? "survives" : "killed";
  j["killed_by"] = c.killed_by.empty() ? Json(nullptr) : Json(c.killed_by);
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

Json order22_json(const Order22Report& r) {
  Json j;
  j["kind"] = "order22";
  j["scenario"] = r.scenario;
  j["assumptions"] = r.assumptions;
  Json arr = Json::array();
  for (const auto& c : r.candidates) arr.push_back(to_json(c));
  j["candidates"] = std::move(arr);
  j["survivors"] = r.survivors();
  return j;
}

namespace {

void render(std::ostringstream& os, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        os << pad << k << ":\n";
        render(os, v, indent + 2);
      } else {
        os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object()) {
        os << pad << "-\n";
        render(os, v, indent + 2);
      } else {
        os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string json_as_text(const Json& j) {
  std::ostringstream os;
  render(os, j, 0);
  return os.str();
}

}  // namespace k3
