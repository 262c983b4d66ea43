#include "k3/enumerate.hpp"

#include <algorithm>
#include <functional>

#include "k3/lattice.hpp"

namespace k3 {

std::string to_string(RankDetCase::Reason r) {
  switch (r) {
    case RankDetCase::Reason::ok: return "ok";
    case RankDetCase::Reason::even_unimodular_mod8: return "even-unimodular-mod-8";
    case RankDetCase::Reason::rank2_parity_mod4: return "rank2-parity-mod-4";
  }
  return "?";
}

namespace {

constexpr int kOrder = 11;
constexpr int kH2Rank = 22;

Integer power_of(int base, int e) {
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

bool witness_matches(const Lattice& l, int rank, const Integer& det, int s) {
  if (l.rank() != rank || !l.is_even()) return false;
  const DetSignature ds = determinant_and_signature(l);
  if (ds.det != det) return false;
  if (!(ds.signature == SignaturePair{1, rank - 1, 0})) return false;
  return is_p_elementary(l, kOrder) && discriminant_group(l).invariant_factors.size() == static_cast<std::size_t>(s);
}

}  // namespace

std::vector<RankDetCase> rank_det_cases() {
  static const char* const witnesses[] = {"U", "U(11)", "U + A10"};
  const int phi = euler_phi(kOrder);
  std::vector<RankDetCase> out;
  for (int rank_n = phi * ((kH2Rank - 1) / phi); rank_n >= phi; rank_n -= phi) {
    for (int s = 0; s <= rank_n / phi; ++s) {
      RankDetCase c;
      c.rank_m = kH2Rank - rank_n;
      c.s = s;
      c.det_m = -power_of(kOrder, s);
      if (abs_value(c.det_m) == 1 && !even_unimodular_exists(1, c.rank_m - 1)) {
        c.feasible = false;
        c.reason = RankDetCase::Reason::even_unimodular_mod8;
      } else if (c.rank_m == 2) {
        // det [[2a, b], [b, 2c]] = 4ac - b^2 is 0 or -1 mod 4.
        Integer r = c.det_m % 4;
        if (r < 0) r += 4;
        if (r != 0 && r != 3) {
          c.feasible = false;
          c.reason = RankDetCase::Reason::rank2_parity_mod4;
        }
      }
      if (c.feasible) {
        for (const char* w : witnesses)
          if (witness_matches(build_lattice(w), c.rank_m, c.det_m, s)) {
            c.label = w;
            break;
          }
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

int OrbitConfig::euler(int orbit_size) const {
  int e = at_0.euler() + at_inf.euler();
  for (const auto& t : orbit) e += orbit_size * t.euler();
  return e;
}

std::string OrbitConfig::to_string() const {
  std::string out = "X0=" + at_0.to_string() + ", Xinf=" + at_inf.to_string() + ", orbits={";
  for (std::size_t i = 0; i < orbit.size(); ++i) out += (i ? ", " : "") + orbit[i].to_string();
  return out + "}";
}

std::vector<OrbitConfig> fiber_orbit_configs(const FiberOrbitSettings& settings) {
  if (settings.orbit_size < 1) throw DomainError("orbit size must be positive");
  std::vector<KodairaType> types =
      settings.orbit_allowed ? *settings.orbit_allowed
                             : kodaira_types_up_to(std::max(0, settings.total_euler / settings.orbit_size));
  std::erase_if(types, [&](const KodairaType& t) {
    return t.euler() == 0 ||
           std::find(settings.orbit_excluded.begin(), settings.orbit_excluded.end(), t) !=
               settings.orbit_excluded.end();
  });
  std::sort(types.begin(), types.end());
  types.erase(std::unique(types.begin(), types.end()), types.end());

  auto allowed = [](const std::vector<KodairaType>& set, const KodairaType& t) {
    return std::find(set.begin(), set.end(), t) != set.end();
  };

  std::vector<OrbitConfig> out;
  for (const auto& x0 : settings.allowed_at_0) {
    for (const auto& xinf : settings.allowed_at_inf) {
      if (settings.identify_swap && xinf < x0 && allowed(settings.allowed_at_0, xinf) &&
          allowed(settings.allowed_at_inf, x0))
        continue;
      const int rest = settings.total_euler - x0.euler() - xinf.euler();
      if (rest < 0 || rest % settings.orbit_size != 0) continue;
      const int m = rest / settings.orbit_size;
      if (m == 0 && settings.require_orbit) continue;

      std::vector<KodairaType> chosen;
      std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
        if (left == 0) {
          OrbitConfig c{x0, xinf, chosen, {}};
          auto note = settings.notes_at_0.find(x0);
          if (note != settings.notes_at_0.end()) c.note = note->second;
          out.push_back(std::move(c));
          return;
        }
        for (std::size_t i = from; i < types.size(); ++i) {
          if (types[i].euler() > left) continue;
          chosen.push_back(types[i]);
          rec(i, left - types[i].euler());
          chosen.pop_back();
        }
      };
      rec(0, m);
    }
  }
  std::sort(out.begin(), out.end(), [](const OrbitConfig& a, const OrbitConfig& b) {
    return std::tie(a.at_0, a.at_inf, a.orbit) < std::tie(b.at_0, b.at_inf, b.orbit);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FiberOrbitSettings preset_orbit_settings(const std::string& name) {
  using K = KodairaType;
  FiberOrbitSettings s;
  if (name == "prop3" || name == "claim4") {
    s.allowed_at_0 = s.allowed_at_inf = {K::i(0), K::ii()};
    s.identify_swap = true;
    s.assumptions = {
        "X_0, X_inf irreducible (a reducible one would force rank M >= 3): types I0, I1, II",
        "neither X_0 nor X_inf is of type I1 (local action on the 2-form)",
        "t -> 1/t identifies (x0, xinf) with (xinf, x0)",
    };
    if (name == "claim4") {
      s.orbit_excluded = {K::i(2)};
      s.assumptions.push_back("I2 orbits excluded: [S] = a[C] + b[F] with S.F = 0 has no solution of S^2 = -22");
    }
    return s;
  }
  if (name == "lemma7" || name == "lemma7_wide") {
    s.allowed_at_0 = {K::i(0), K::i(11)};
    s.allowed_at_inf = {K::ii()};
    s.orbit_excluded = {K::i(2)};
    s.assumptions = {
        "M = U(11): no g-stable section; X_0 carries a translation of order 11, so X_0 is I0 or I_{11m}",
        "X_inf is of type II with X^g = {P1, P2}",
        "I2 orbits excluded by the same divisor-class argument as in the section case",
    };
    if (name == "lemma7_wide") {
      s.allowed_at_0.push_back(K::i(22));
      s.require_orbit = false;
      s.notes_at_0[K::i(22)] = "excluded by the rank-M argument, not checked here";
    }
    return s;
  }
  throw DomainError("unknown orbit preset '" + name + "'");
}

FiberConfiguration quotient_configuration(const OrbitConfig& config, int orbit_size) {
  if (config.at_0.family != KodairaType::Family::I || config.at_0.n % orbit_size != 0)
    throw DomainError("fixed fiber " + config.at_0.to_string() + " does not carry a free translation of order " +
                      std::to_string(orbit_size));
  std::vector<ConfigEntry> entries;
  entries.push_back({orbit_size, KodairaType::i(config.at_0.n / orbit_size), 1});
  entries.push_back({1, KodairaType::ii_star(), 1});
  for (const auto& t : config.orbit) {
    auto it = std::find_if(entries.begin() + 2, entries.end(),
                           [&](const ConfigEntry& e) { return e.multiplicity == 1 && e.type == t; });
    if (it == entries.end()) {
      entries.push_back({1, t, 1});
    } else {
      ++it->count;
    }
  }
  return FiberConfiguration(std::move(entries));
}

int Order22Report::survivors() const {
  return static_cast<int>(std::count_if(candidates.begin(), candidates.end(),
                                        [](const Order22Candidate& c) { return c.killed_by.empty(); }));
}

namespace {

Order22Report replay_involution_composite() {
  Order22Report rep;
  rep.scenario = "lemma1";
  rep.assumptions = {
      "G_N = <iota> of order 2, rank T_X = 10, rank S_X = 12",
      "iota acts on S_X (x) C as diag[I4, -I8] and trivially on T_X",
      "iota is symplectic, so X^iota is finite and X^(g o iota) is contained in it",
  };
  const int iota_minus = 8, iota_plus = 4;
  const auto s_candidates = char_poly_decompositions(kOrder, 12);
  DecompositionConstraints no_one;
  no_one.forbid_one = true;
  const auto t_candidates = char_poly_decompositions(kOrder, 10, no_one);

  for (const auto& gs : s_candidates) {
    for (const auto& gt : t_candidates) {
      Order22Candidate cand;
      cand.pattern = {gs, gt};
      const int fixed = gs.invariant_rank();
      const int moving = gs.rank() - fixed;  // dimensions carrying primitive 11th roots
      // k = number of those dimensions on which iota is -1.
      const int lo = std::max({0, iota_minus - fixed, moving - iota_plus});
      const int hi = std::min(iota_minus, moving);
      const int phi22 = euler_phi(2 * kOrder);
      std::vector<int> ks;
      for (int k = lo; k <= hi; ++k)
        if (k % phi22 == 0 && (moving - k) % euler_phi(kOrder) == 0) ks.push_back(k);
      if (ks.empty()) {
        cand.killed_by = "rationality";
        cand.detail = "g o iota would carry k primitive 22nd roots with k in [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "], never a multiple of phi(22) = " + std::to_string(phi22);
        rep.candidates.push_back(std::move(cand));
        continue;
      }
      const int k = ks.front();
      CyclotomicMultiset composite_s = CyclotomicMultiset::units(fixed - (iota_minus - k), iota_minus - k);
      if (moving - k) composite_s.blocks[kOrder] = (moving - k) / euler_phi(kOrder);
      if (k) composite_s.blocks[2 * kOrder] = k / phi22;
      IsometryPattern composite{composite_s, gt};
      const int chi = lefschetz_number(composite);
      cand.lefschetz = chi;
      if (chi < 0) {
        cand.killed_by = "fixed-locus-finite-vs-chi";
        cand.detail = "g o iota = " + composite.to_string() + " has chi_top(X^(g o iota)) = " +
                      std::to_string(chi) + " < 0, so its fixed locus contains a curve; but it lies in the finite set X^iota";
      }
      rep.candidates.push_back(std::move(cand));
    }
  }
  return rep;
}

Order22Report replay_order22_maximality() {
  Order22Report rep;
  rep.scenario = "lemma9";
  rep.assumptions = {
      "h of order 22 acts purely non-symplectically: only Phi(22) blocks on T_X, rank T_X in {10, 20}",
      "g = h^2 has invariant lattice M of rank 2: Phi(1) + Phi(2) carry rank 2 on S_X",
      "an h-invariant ample class: at least one Phi(1) block on S_X",
      "X^h = X^g = {P1, P2}, so chi_top(X^h) = 2",
      "g(C) = C for the rational curve C in X^iota (the free-orbit case leaves no ample class)",
      "g acts near P1 as 1/11(5,7) and near P2 as 1/11(2,10)",
  };
  const LocalAction p1{kOrder, 5, 7}, p2{kOrder, 2, 10};
  if (p1.two_form_weight() != 1 || p2.two_form_weight() != 1)
    throw ContractViolation("local actions must have weight 1 on the 2-form");

  const int h_order = 2 * kOrder;
  for (int rank_t = euler_phi(kOrder); rank_t <= 2 * euler_phi(kOrder); rank_t += euler_phi(kOrder)) {
    DecompositionConstraints t_rules;
    t_rules.allowed = {h_order};
    DecompositionConstraints s_rules;
    s_rules.subset_ranks = {{{1, 2}, 2}};
    s_rules.min_counts = {{1, 1}};
    for (const auto& ht : char_poly_decompositions(h_order, rank_t, t_rules)) {
      for (const auto& hs : char_poly_decompositions(h_order, kH2Rank - rank_t, s_rules)) {
        Order22Candidate cand;
        cand.pattern = {hs, ht};
        const int chi = lefschetz_number(cand.pattern);
        cand.lefschetz = chi;
        if (chi != 2) {
          cand.killed_by = "lefschetz-mismatch";
          cand.detail = "chi_top(X^h) = " + std::to_string(chi) + " but X^h = {P1, P2} needs 2";
          rep.candidates.push_back(std::move(cand));
          continue;
        }
        const IsometryPattern iota{hs.power(kOrder), ht.power(kOrder)};
        const int chi_iota = lefschetz_number(iota);
        const std::set<int> w1{p1.p, p1.q}, w2{p2.p, p2.q};
        if (!local_curve_possible(w1, w2, kOrder)) {
          cand.killed_by = "invariant-curve-weight-check";
          cand.detail = "iota = h^11 = " + iota.to_string() + " with chi_top(X^iota) = " + std::to_string(chi_iota) +
                        "; a g-stable curve through P1, P2 needs a in {5,7}, b in {2,10} with a + b = 0 mod 11: none";
        }
        rep.candidates.push_back(std::move(cand));
      }
    }
  }
  return rep;
}

Order22Report replay_control() {
  Order22Report rep;
  rep.scenario = "control";
  rep.assumptions = {"g of order 11 alone; no involution, no elimination rule"};
  DecompositionConstraints no_one;
  no_one.forbid_one = true;
  DecompositionConstraints identity;
  identity.fixed_counts = {{kOrder, 0}};
  for (const auto& gs : char_poly_decompositions(kOrder, 12, identity))
    for (const auto& gt : char_poly_decompositions(kOrder, 10, no_one)) {
      Order22Candidate cand;
      cand.pattern = {gs, gt};
      cand.lefschetz = lefschetz_number(cand.pattern);
      rep.candidates.push_back(std::move(cand));
    }
  return rep;
}

}  // namespace

Order22Report order22_replay(const std::string& scenario) {
  if (scenario == "lemma1") return replay_involution_composite();
  if (scenario == "lemma9") return replay_order22_maximality();
  if (scenario == "control") return replay_control();
  throw DomainError("unknown order-22 scenario '" + scenario + "'");
}

}  // namespace k3
