#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "k3/ellsurf.hpp"
#include "k3/isometry.hpp"
#include "k3/scalar.hpp"

namespace k3 {

/// One (rank M, det M) candidate for the invariant lattice M of an order-11
/// action, with N = M^perp of rank 22 - rank M.
struct RankDetCase {
  enum class Reason { ok, even_unimodular_mod8, rank2_parity_mod4 };

  int rank_m = 0;
  Integer det_m;
  int s = 0;  // det M = -11^s
  bool feasible = true;
  Reason reason = Reason::ok;
  std::string label;  // lattice expression of the survivor, empty otherwise
};

std::string to_string(RankDetCase::Reason r);

/// rank N runs over the positive multiples of phi(11) = 10 below 22 and
/// 0 <= s <= rank N / 10; each case is then tested against the even
/// unimodular mod-8 rule and the rank-2 parity rule 4ac - b^2 = 0, -1 mod 4.
/// Survivors are matched to a witness lattice with identical rank,
/// determinant, signature (1, rank - 1), parity and 11-elementary group.
std::vector<RankDetCase> rank_det_cases();

struct OrbitConfig {
  KodairaType at_0;
  KodairaType at_inf;
  std::vector<KodairaType> orbit;  // one entry per free orbit, sorted
  std::string note;

  int euler(int orbit_size) const;
  std::string to_string() const;
  friend bool operator==(const OrbitConfig& a, const OrbitConfig& b) {
    return a.at_0 == b.at_0 && a.at_inf == b.at_inf && a.orbit == b.orbit;
  }
};

struct FiberOrbitSettings {
  int total_euler = 24;
  int orbit_size = 11;
  std::vector<KodairaType> allowed_at_0;
  std::vector<KodairaType> allowed_at_inf;
  /// nullopt: every Kodaira type the budget admits.
  std::optional<std::vector<KodairaType>> orbit_allowed;
  std::vector<KodairaType> orbit_excluded;
  /// Treat (x0, xinf) and (xinf, x0) as one configuration (t -> 1/t).
  bool identify_swap = false;
  /// At least one free orbit of singular fibers.
  bool require_orbit = true;
  /// Free-text annotation attached to configurations by their type at 0.
  std::map<KodairaType, std::string> notes_at_0;
  /// Recorded, not checked: the geometric reasons behind the allowed sets.
  std::vector<std::string> assumptions;
};

/// Every configuration with e(X_0) + e(X_inf) + orbit_size * sum e(orbit)
/// equal to the budget, in canonical order.
std::vector<OrbitConfig> fiber_orbit_configs(const FiberOrbitSettings& settings);

/// Named settings used by the replay suite: "prop3" (invariant section,
/// swap identified), "claim4" (prop3 without I2 orbits), "lemma7" (no
/// invariant section, I0 or I11 at 0) and "lemma7_wide" (lemma7 plus I22
/// at 0 and orbit-free configurations). DomainError on other names.
FiberOrbitSettings preset_orbit_settings(const std::string& name);

/// Fibers of the relatively minimal quotient fibration: X_0 = I_n (11 | n)
/// becomes the multiple fiber 11I_{n/11}; every free orbit of type tau
/// becomes one tau fiber; X_inf is replaced by II* (assumed from the
/// construction, not derived).
FiberConfiguration quotient_configuration(const OrbitConfig& config, int orbit_size = 11);

struct Order22Candidate {
  IsometryPattern pattern;
  std::optional<int> lefschetz;
  std::string killed_by;  // empty for a survivor
  std::string detail;
};

struct Order22Report {
  std::string scenario;
  std::vector<Order22Candidate> candidates;
  std::vector<std::string> assumptions;
  int survivors() const;
};

/// "lemma1", "lemma9" or "control". DomainError on anything else.
Order22Report order22_replay(const std::string& scenario);

}  // namespace k3
