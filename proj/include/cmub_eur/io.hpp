#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "cmub_eur/bounds.hpp"
#include "cmub_eur/mub.hpp"
#include "cmub_eur/qstate.hpp"

namespace cmub {

// State files look like
//   {"labels": ["A", "B"], "dims": [2, 2], "re": [[...], ...], "im": [[...], ...]}
// with row-major D x D arrays. "im" may be omitted for real matrices.
// Malformed documents throw ValidationError("schema"); documents that parse
// but break a state invariant throw ValidationError naming that invariant.
QuantumState state_from_json(const nlohmann::json& doc);
QuantumState read_state_file(const std::filesystem::path& path);
nlohmann::json state_to_json(const QuantumState& state);

// {"dim": d, "bases": [{"re": [[...]], "im": [[...]]}, ...]}; row k of each
// array is the k-th vector of that basis.
nlohmann::json mubs_to_json(const MubSet& mubs);

nlohmann::json report_to_json(const BoundReport& report);

}  // namespace cmub
