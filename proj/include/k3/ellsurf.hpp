#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "k3/poly.hpp"

namespace k3 {

/// Kodaira fiber type. `n` is the index of I_n and I_n*; zero otherwise.
struct KodairaType {
  enum class Family { I, II, III, IV, I_star, IV_star, III_star, II_star };

  Family family = Family::I;
  int n = 0;

  static KodairaType i(int n) { return {Family::I, n}; }
  static KodairaType i_star(int n) { return {Family::I_star, n}; }
  static KodairaType ii() { return {Family::II, 0}; }
  static KodairaType iii() { return {Family::III, 0}; }
  static KodairaType iv() { return {Family::IV, 0}; }
  static KodairaType iv_star() { return {Family::IV_star, 0}; }
  static KodairaType iii_star() { return {Family::III_star, 0}; }
  static KodairaType ii_star() { return {Family::II_star, 0}; }

  /// Topological Euler number: n, 2, 3, 4, n + 6, 8, 9, 10.
  int euler() const noexcept;
  bool is_smooth() const noexcept { return family == Family::I && n == 0; }

  /// "I0", "I11", "II", "III", "IV", "I0*", "I3*", "IV*", "III*", "II*".
  std::string to_string() const;
  /// Inverse of to_string; ParseError on anything else.
  static KodairaType parse(const std::string& text);

  friend bool operator==(const KodairaType&, const KodairaType&) = default;
  friend auto operator<=>(const KodairaType&, const KodairaType&) = default;
};

/// Every type with 1 <= euler <= max_euler, in canonical order.
std::vector<KodairaType> kodaira_types_up_to(int max_euler);

/// Characteristic-zero Kodaira table. Returns nullopt for a non-minimal
/// triple (v_a >= 4 and v_b >= 6). Throws ContractViolation when v_delta is
/// inconsistent with v_a, v_b (v_delta must equal min(3 v_a, 2 v_b) unless
/// the two agree, in which case it may exceed them).
std::optional<KodairaType> kodaira_type_from_valuations(Valuation va, Valuation vb, Valuation vd);

struct LocalValuations {
  Valuation va, vb, vd;
  int reductions = 0;  // number of (4, 6, 12) steps taken
};

/// Strips (4, 6, 12) while v_a >= 4 and v_b >= 6.
LocalValuations minimalize(Valuation va, Valuation vb, Valuation vd);

/// y^2 = x^3 + a(t) x + b(t) over a FieldContext.
class WeierstrassModel {
 public:
  /// InvalidModel if 4a^3 + 27b^2 == 0; ContextMismatch on mixed contexts.
  WeierstrassModel(Poly a, Poly b);

  const Poly& a() const noexcept { return a_; }
  const Poly& b() const noexcept { return b_; }
  const FieldContext& context() const noexcept { return a_.context(); }
  /// Smallest k >= 1 with deg a <= 4k and deg b <= 6k.
  int k() const noexcept { return k_; }

  /// The model in u = 1/t: (u^{4k} a(1/u), u^{6k} b(1/u)).
  WeierstrassModel at_infinity() const;

 private:
  Poly a_, b_;
  int k_ = 1;
};

/// 4a^3 + 27b^2.
Poly discriminant(const Poly& a, const Poly& b);
Poly discriminant(const WeierstrassModel& m);

/// Reduced fraction with monic denominator.
struct RationalFunction {
  Poly numerator, denominator;
  bool is_constant() const { return numerator.degree() <= 0 && denominator.degree() == 0; }
  std::string to_string() const;
};

/// J = 4a^3 / (4a^3 + 27b^2).
RationalFunction j_map(const WeierstrassModel& m);

/// Valuations at a finite place, then minimalized.
LocalValuations minimalize_at_place(const WeierstrassModel& m, const Place& place);

struct KodairaFiber {
  Place place;
  KodairaType type;
  LocalValuations valuations;  // after minimalization
  int degree() const noexcept { return place.degree(); }
  int euler() const noexcept { return type.euler(); }
};

struct SurfaceClass {
  enum class Kind { rational, k3, other };
  Kind kind = Kind::other;
  int k = 0;
  std::string to_string() const;
};

struct FiberAnalysis {
  std::vector<KodairaFiber> fibers;  // singular fibers only; finite places first
  int k = 0;
  int euler_total = 0;                 // sum over fibers of degree * euler
  bool globally_minimal = true;        // no place needed a (4, 6, 12) reduction
  SurfaceClass surface;
  bool euler_consistent() const noexcept { return euler_total == 12 * k; }
};

/// Places come from a gcd-free basis of {t, a, b, Delta} (zero polynomials
/// skipped, t so that t = 0 is its own place); the place at infinity is analysed on the flipped model. A
/// non-minimal global model is reported through `globally_minimal` and a
/// mismatching Euler total, never silently repaired.
FiberAnalysis analyze_fibers(const WeierstrassModel& m);

struct ConfigEntry {
  int multiplicity = 1;  // > 1 only for I_n (multiple fibers)
  KodairaType type;
  int count = 1;
};

/// Multiplicity-tagged fiber list. DomainError if a multiplicity > 1 is
/// attached to a type other than I_n, or counts are not positive.
class FiberConfiguration {
 public:
  FiberConfiguration() = default;
  explicit FiberConfiguration(std::vector<ConfigEntry> entries);

  const std::vector<ConfigEntry>& entries() const noexcept { return entries_; }
  int euler_sum() const noexcept;
  /// "11I0 + II* + 2 x I1".
  std::string to_string() const;

 private:
  std::vector<ConfigEntry> entries_;
};

struct EulerCheck {
  bool pass = false;
  int total = 0;
  int expected = 0;
  std::string report;
};

EulerCheck config_euler_check(const FiberConfiguration& config, int expected);

}  // namespace k3
