#include "k3/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "k3/parse.hpp"
#include "k3/verify.hpp"

namespace k3 {

namespace {

std::vector<KodairaType> type_list(const Json& j, const char* key) {
  std::vector<KodairaType> out;
  for (const auto& t : j.at(key)) out.push_back(KodairaType::parse(t.get<std::string>()));
  return out;
}

FiberOrbitSettings orbit_settings(const Json& r) {
  if (r.contains("preset")) return preset_orbit_settings(r.at("preset").get<std::string>());
  FiberOrbitSettings s;
  s.total_euler = r.value("total_euler", 24);
  s.orbit_size = r.value("orbit_size", 11);
  s.allowed_at_0 = type_list(r, "allowed_at_0");
  s.allowed_at_inf = type_list(r, "allowed_at_inf");
  if (r.contains("orbit_allowed") && !(r["orbit_allowed"].is_string() && r["orbit_allowed"] == "all"))
    s.orbit_allowed = type_list(r, "orbit_allowed");
  if (r.contains("orbit_excluded")) s.orbit_excluded = type_list(r, "orbit_excluded");
  s.identify_swap = r.value("identify_swap", false);
  s.require_orbit = r.value("require_orbit", true);
  if (r.contains("notes_at_0"))
    for (const auto& [k, v] : r["notes_at_0"].items()) s.notes_at_0[KodairaType::parse(k)] = v.get<std::string>();
  if (r.contains("assumptions")) s.assumptions = r["assumptions"].get<std::vector<std::string>>();
  return s;
}

std::map<int, int> int_map(const Json& j) {
  std::map<int, int> out;
  for (const auto& [k, v] : j.items()) out[std::stoi(k)] = v.get<int>();
  return out;
}

Json char_poly_request(const Json& r) {
  const int order = r.at("order").get<int>();
  const int rank = r.at("rank").get<int>();
  DecompositionConstraints c;
  c.forbid_one = r.value("forbid_one", false);
  c.require_primitive = r.value("require_primitive", false);
  if (r.contains("allowed")) c.allowed = r["allowed"].get<std::set<int>>();
  if (r.contains("fixed_counts")) c.fixed_counts = int_map(r["fixed_counts"]);
  if (r.contains("min_counts")) c.min_counts = int_map(r["min_counts"]);
  if (r.contains("subset_ranks"))
    for (const auto& e : r["subset_ranks"])
      c.subset_ranks.push_back({e.at("divisors").get<std::set<int>>(), e.at("rank").get<int>()});
  Json j;
  j["kind"] = "char_poly";
  j["order"] = order;
  j["rank"] = rank;
  Json arr = Json::array();
  for (const auto& m : char_poly_decompositions(order, rank, c)) {
    Json e;
    e["multiset"] = m.to_string();
    e["trace"] = m.trace();
    e["invariant_rank"] = m.invariant_rank();
    arr.push_back(std::move(e));
  }
  j["count"] = arr.size();
  j["decompositions"] = std::move(arr);
  return j;
}

Json lefschetz_request(const Json& r) {
  const IsometryPattern p = parse_pattern(r.at("pattern").get<std::string>());
  Json j;
  j["kind"] = "lefschetz";
  j["pattern"] = p.to_string();
  j["rank"] = p.rank();
  j["lefschetz"] = lefschetz_number(p);
  Json powers = Json::array();
  if (r.contains("powers"))
    for (const auto& k : r["powers"]) {
      const IsometryPattern q{p.algebraic.power(k.get<int>()), p.transcendental.power(k.get<int>())};
      Json e;
      e["power"] = k;
      e["pattern"] = q.to_string();
      e["lefschetz"] = lefschetz_number(q);
      powers.push_back(std::move(e));
    }
  j["powers"] = std::move(powers);
  return j;
}

void emit(std::ostream& out, Format f, const Json& j, const std::string& text = {}) {
  if (f == Format::json) {
    out << j.dump(2) << "\n";
  } else {
    out << (text.empty() ? json_as_text(j) : text);
  }
}

}  // namespace

Json run_enumeration(const Json& r) {
  if (!r.is_object() || !r.contains("kind")) throw DomainError("request needs a \"kind\" field");
  const std::string kind = r["kind"].get<std::string>();
  Json out;
  if (kind == "fiber_orbits") {
    const FiberOrbitSettings s = orbit_settings(r);
    out = fiber_orbits_json(s, fiber_orbit_configs(s), r.value("quotient", false));
  } else if (kind == "rank_det") {
    out = rank_det_json(rank_det_cases());
  } else if (kind == "order22") {
    out = order22_json(order22_replay(r.at("scenario").get<std::string>()));
  } else if (kind == "char_poly") {
    out = char_poly_request(r);
  } else if (kind == "lefschetz") {
    out = lefschetz_request(r);
  } else {
    throw DomainError("unknown request kind '" + kind + "'");
  }
  if (r.contains("name")) out["name"] = r["name"];
  return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for K3 surfaces with an order-11 automorphism", "k3tool"};
  app.require_subcommand(1);
  bool text = false;
  app.add_flag("--text", text, "human-readable output instead of JSON");
  app.fallthrough();

  std::string lattice_expr;
  auto* lattice = app.add_subcommand("lattice", "invariants of a lattice expression such as \"U + A10\"");
  lattice->add_option("expr", lattice_expr, "lattice expression")->required();

  auto* surface = app.add_subcommand("surface", "Weierstrass elliptic surfaces");
  surface->require_subcommand(1);
  auto* analyze = surface->add_subcommand("analyze", "singular fibers of y^2 = x^3 + a(t) x + b(t)");
  std::string a_text, b_text, field_text = "Q";
  std::vector<std::string> lets;
  analyze->add_option("--a", a_text, "a(t)")->required();
  analyze->add_option("--b", b_text, "b(t)")->required();
  analyze->add_option("--field", field_text, "Q or w2=d")->capture_default_str();
  analyze->add_option("--let", lets, "constant binding name=expr, repeatable");

  auto* verify = app.add_subcommand("verify", "replay suite");
  verify->require_subcommand(1);
  auto* paper = verify->add_subcommand("paper", "run every scenario or a single one");
  std::string scenario = "all";
  paper->add_option("scenario", scenario, "scenario name or 'all'")->capture_default_str();

  std::string request_path;
  auto* enumerate = app.add_subcommand("enumerate", "run a JSON enumeration request");
  enumerate->add_option("request", request_path, "path to the request file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "k3tool: " << e.what() << "\n";
    return exit_code::usage;
  }

  try {
    const Format fmt = resolve_format(text, std::getenv("K3_REPORT_FORMAT"));

    if (*lattice) {
      const Lattice l = build_lattice(lattice_expr);
      emit(out, fmt, lattice_json(lattice_expr, l));
      return exit_code::ok;
    }

    if (*analyze) {
      const FieldContext ctx = parse_field(field_text);
      Bindings bindings;
      for (const auto& l : lets) {
        auto [name, value] = parse_binding(l, ctx, bindings);
        bindings.insert_or_assign(name, std::move(value));
      }
      const WeierstrassModel m(parse_poly(a_text, ctx, bindings), parse_poly(b_text, ctx, bindings));
      const FiberAnalysis f = analyze_fibers(m);
      emit(out, fmt, analysis_json(m, f), analysis_text(m, f));
      return exit_code::ok;
    }

    if (*paper) {
      const VerificationReport rep = verify_paper(scenario);
      emit(out, fmt, verification_json(rep), verification_text(rep));
      return rep.all_pass() ? exit_code::ok : exit_code::verification_failed;
    }

    if (*enumerate) {
      std::ifstream in(request_path);
      if (!in) throw DomainError("cannot open '" + request_path + "'");
      const Json request = Json::parse(in);
      emit(out, fmt, run_enumeration(request));
      return exit_code::ok;
    }
  } catch (const InvalidModel& e) {
    err << "k3tool: invalid model: " << e.what() << "\n";
    return exit_code::invalid_model;
  } catch (const Error& e) {
    err << "k3tool: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const nlohmann::json::exception& e) {
    err << "k3tool: bad request: " << e.what() << "\n";
    return exit_code::usage;
  }
  err << "k3tool: no command\n";
  return exit_code::usage;
}

}  // namespace k3
