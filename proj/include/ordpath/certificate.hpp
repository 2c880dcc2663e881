#pragma once

#include <json.hpp>

#include <optional>
#include <string>

namespace ordpath {

/// Verification report: what was claimed, what was checked, and the first
/// counterexample when the check failed.
struct Certificate {
    std::string claim;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    nlohmann::ordered_json value; // integer or "p/q" string
    bool verified = false;
    std::optional<nlohmann::ordered_json> counterexample;
};

nlohmann::ordered_json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::ordered_json& j);

} // namespace ordpath
