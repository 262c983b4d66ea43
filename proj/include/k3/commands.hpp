#pragma once

#include <iosfwd>

#include "k3/report.hpp"

namespace k3 {

namespace exit_code {
constexpr int ok = 0;
constexpr int verification_failed = 1;
constexpr int usage = 2;
constexpr int invalid_model = 3;
}  // namespace exit_code

/// Runs a declarative enumeration request:
///
///   {"kind": "fiber_orbits", "preset": "prop3"}
///   {"kind": "fiber_orbits", "total_euler": 24, "allowed_at_0": ["I0"], ...}
///   {"kind": "rank_det"}
///   {"kind": "order22", "scenario": "lemma9"}
///   {"kind": "char_poly", "order": 11, "rank": 12, "forbid_one": false, ...}
///   {"kind": "lefschetz", "pattern": "S: [...]; T: [...]", "powers": [11]}
///
/// ParseError or DomainError on malformed requests.
Json run_enumeration(const Json& request);

/// Entry point of k3tool; returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace k3
