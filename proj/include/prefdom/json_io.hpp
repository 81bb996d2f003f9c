#pragma once

#include "prefdom/configurations.hpp"
#include "prefdom/profile.hpp"
#include "prefdom/recognition.hpp"
#include "prefdom/solvers.hpp"

#include <json.hpp>

namespace prefdom {

/// {"kind", "voters", "alternatives", "roles": {"a": name, ...}}
nlohmann::ordered_json witness_json(const Profile& profile, const ConfigurationWitness& w);

/// {"property", "holds", "violation", "certificate"}
nlohmann::ordered_json recognition_json(const Profile& profile, const RecognitionResult& result);

/// Names in `deleted` resolve against `profile`. elapsed_ms is written as 0 unless `with_timing`,
/// so that repeated runs produce identical bytes.
nlohmann::ordered_json outcome_json(const Profile& profile, const SolveOutcome& outcome, bool with_timing = false);

}  // namespace prefdom
