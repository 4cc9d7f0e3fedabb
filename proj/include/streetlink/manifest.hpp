#pragma once

// Run manifest: what was produced, from which configuration. The timestamp
// comes from STREETLINK_TIMESTAMP so repeated runs can be byte-identical.

#include "streetlink/scenario.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace streetlink {

uint64_t fnv1a64(const std::string& data);

nlohmann::json build_manifest(const std::string& command, const Scenario& sc,
                              const std::vector<std::string>& outputs);

void write_json_file(const nlohmann::json& j, const std::string& path);

} // namespace streetlink
