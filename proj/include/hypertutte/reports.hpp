#pragma once

#include <json.hpp>

#include "hypertutte/conjecture.hpp"
#include "hypertutte/crapo.hpp"
#include "hypertutte/tutte.hpp"

namespace hypertutte {

constexpr int kReportSchemaVersion = 1;

// Documents validate against docs/report-schema.json; every one carries
// "kind" and "schema_version".
nlohmann::ordered_json to_json(const PartitionReport& report, const BaseFamily& family);
nlohmann::ordered_json to_json(const TrialReport& report);
nlohmann::ordered_json to_json(const BatchSummary& summary);
nlohmann::ordered_json to_json(const SeriesReport& report);
nlohmann::ordered_json to_json(const BridgeReport& report);

}  // namespace hypertutte
