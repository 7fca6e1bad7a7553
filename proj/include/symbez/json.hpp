#pragma once

#include <string>

#include <json.hpp>

#include "symbez/solver.hpp"
#include "symbez/verify.hpp"

namespace symbez {

nlohmann::json to_json(const Obstruction& o);
nlohmann::json to_json(const IntersectionPoint& p);
/// Keys: space, degrees, bezout, transverse, obstruction, orbit_type,
/// real_count, points (plus transversality, complete, precision_bits, inputs).
nlohmann::json to_json(const IntersectionReport& r);
nlohmann::json to_json(const TrialOutcome& t);
/// Keys: theorem, params, trials, verdict (plus counts and summary).
nlohmann::json to_json(const VerificationRun& run);

/// Two-space indented text with a trailing newline.
std::string render(const nlohmann::json& j);

}  // namespace symbez
