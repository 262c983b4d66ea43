#include <algorithm>
#include <cctype>

#include "k3/ellsurf.hpp"

namespace k3 {

int KodairaType::euler() const noexcept {
  switch (family) {
    case Family::I: return n;
    case Family::II: return 2;
    case Family::III: return 3;
    case Family::IV: return 4;
    case Family::I_star: return n + 6;
    case Family::IV_star: return 8;
    case Family::III_star: return 9;
    case Family::II_star: return 10;
  }
  return 0;
}

std::string KodairaType::to_string() const {
  switch (family) {
    case Family::I: return "I" + std::to_string(n);
    case Family::II: return "II";
    case Family::III: return "III";
    case Family::IV: return "IV";
    case Family::I_star: return "I" + std::to_string(n) + "*";
    case Family::IV_star: return "IV*";
    case Family::III_star: return "III*";
    case Family::II_star: return "II*";
  }
  return "?";
}

KodairaType KodairaType::parse(const std::string& text) {
  static const std::pair<const char*, KodairaType> named[] = {
      {"II", ii()}, {"III", iii()}, {"IV", iv()}, {"IV*", iv_star()}, {"III*", iii_star()}, {"II*", ii_star()}};
  for (const auto& [name, type] : named)
    if (text == name) return type;
  if (text.size() >= 2 && text[0] == 'I') {
    std::size_t end = 1;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    const bool star = end + 1 == text.size() && text[end] == '*';
    if (end > 1 && end <= 7 && (end == text.size() || star)) {
      const int n = std::stoi(text.substr(1, end - 1));
      return star ? i_star(n) : i(n);
    }
  }
  throw ParseError("unknown Kodaira type '" + text + "'", 0);
}

std::vector<KodairaType> kodaira_types_up_to(int max_euler) {
  std::vector<KodairaType> out;
  for (int n = 1; n <= max_euler; ++n) out.push_back(KodairaType::i(n));
  for (KodairaType t : {KodairaType::ii(), KodairaType::iii(), KodairaType::iv()})
    if (t.euler() <= max_euler) out.push_back(t);
  for (int n = 0; n + 6 <= max_euler; ++n) out.push_back(KodairaType::i_star(n));
  for (KodairaType t : {KodairaType::iv_star(), KodairaType::iii_star(), KodairaType::ii_star()})
    if (t.euler() <= max_euler) out.push_back(t);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// 3 v_a and 2 v_b with omega kept infinite.
Valuation scaled(Valuation v, int factor) { return v.is_omega() ? v : Valuation(v.value() * factor); }

}  // namespace

std::optional<KodairaType> kodaira_type_from_valuations(Valuation va, Valuation vb, Valuation vd) {
  if (vd.is_omega()) throw ContractViolation("v_delta = omega: the discriminant vanishes identically");
  if ((!va.is_omega() && va.value() < 0) || (!vb.is_omega() && vb.value() < 0) || vd.value() < 0)
    throw ContractViolation("negative valuation");
  const Valuation a3 = scaled(va, 3), b2 = scaled(vb, 2);
  if (a3 != b2) {
    if (vd != std::min(a3, b2))
      throw ContractViolation("v_delta = " + vd.to_string() + " inconsistent with v_a = " + va.to_string() +
                              ", v_b = " + vb.to_string());
  } else if (vd < a3) {
    throw ContractViolation("v_delta below min(3 v_a, 2 v_b)");
  }

  const int d = vd.value();
  if (va.at_least(4) && vb.at_least(6)) return std::nullopt;
  if (d == 0) return KodairaType::i(0);
  if (va == Valuation(0) && vb == Valuation(0)) return KodairaType::i(d);
  // Both v_a, v_b >= 1 from here on.
  if (vb == Valuation(1)) return KodairaType::ii();
  if (va == Valuation(1)) return KodairaType::iii();
  if (vb == Valuation(2)) return KodairaType::iv();
  if (va == Valuation(2) && vb == Valuation(3)) return KodairaType::i_star(d - 6);
  if (va == Valuation(2) || vb == Valuation(3)) return KodairaType::i_star(0);
  if (vb == Valuation(4)) return KodairaType::iv_star();
  if (va == Valuation(3)) return KodairaType::iii_star();
  return KodairaType::ii_star();
}

LocalValuations minimalize(Valuation va, Valuation vb, Valuation vd) {
  LocalValuations out{va, vb, vd, 0};
  while (out.va.at_least(4) && out.vb.at_least(6)) {
    if (out.vd.is_omega()) throw ContractViolation("cannot minimalize a model with vanishing discriminant");
    out.va = out.va.minus(4);
    out.vb = out.vb.minus(6);
    out.vd = out.vd.minus(12);
    ++out.reductions;
  }
  return out;
}

FiberConfiguration::FiberConfiguration(std::vector<ConfigEntry> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e.multiplicity < 1 || e.count < 1) throw DomainError("fiber multiplicity and count must be positive");
    if (e.multiplicity > 1 && e.type.family != KodairaType::Family::I)
      throw DomainError("multiple fiber of type " + e.type.to_string() + ": only I_n can be multiple");
  }
}

int FiberConfiguration::euler_sum() const noexcept {
  int total = 0;
  for (const auto& e : entries_) total += e.count * e.type.euler();
  return total;
}

std::string FiberConfiguration::to_string() const {
  std::string out;
  for (const auto& e : entries_) {
    if (!out.empty()) out += " + ";
    if (e.count > 1) out += std::to_string(e.count) + " x ";
    if (e.multiplicity > 1) out += std::to_string(e.multiplicity);
    out += e.type.to_string();
  }
  return out.empty() ? std::string("(none)") : out;
}

EulerCheck config_euler_check(const FiberConfiguration& config, int expected) {
  EulerCheck out;
  out.total = config.euler_sum();
  out.expected = expected;
  out.pass = out.total == expected;
  std::string terms;
  for (const auto& e : config.entries()) {
    if (!terms.empty()) terms += " + ";
    terms += (e.count > 1 ? std::to_string(e.count) + "*" : std::string()) + std::to_string(e.type.euler());
  }
  out.report = config.to_string() + ": " + (terms.empty() ? "0" : terms) + " = " + std::to_string(out.total) +
               (out.pass ? " == " : " != ") + std::to_string(expected);
  return out;
}

}  // namespace k3
