#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "k3/ellsurf.hpp"
#include "k3/enumerate.hpp"
#include "k3/lattice.hpp"

namespace k3 {

using Json = nlohmann::ordered_json;

enum class Format { json, text };

/// `--text` wins; otherwise K3_REPORT_FORMAT (json | text, unset = json).
/// DomainError on any other value of the variable.
Format resolve_format(bool text_flag, const char* env_value);

Json to_json(const Valuation& v);
Json to_json(const KodairaFiber& fiber);
Json analysis_json(const WeierstrassModel& model, const FiberAnalysis& analysis);
std::string analysis_text(const WeierstrassModel& model, const FiberAnalysis& analysis);

Json lattice_json(const std::string& expr, const Lattice& lattice);

Json to_json(const RankDetCase& c);
Json rank_det_json(const std::vector<RankDetCase>& cases);

Json to_json(const OrbitConfig& c, int orbit_size);
/// Configurations with their Euler identity; with `quotient` set each entry
/// also carries its quotient fibration and the Euler check against 12.
Json fiber_orbits_json(const FiberOrbitSettings& settings, const std::vector<OrbitConfig>& configs, bool quotient);

Json to_json(const Order22Candidate& c);
Json order22_json(const Order22Report& report);

/// Indented key/value rendering used by the text format of reports without
/// a dedicated table.
std::string json_as_text(const Json& j);

/// "I0 + 11 x II + II(inf)" style summary of a fiber analysis, with
/// geometric multiplicities.
std::string fiber_summary(const FiberAnalysis& analysis);

}  // namespace k3
