#pragma once

// JSON form of composition results and scans. The CLI, the service and the
// workbench all read this one document shape (docs/report_schema.md).

#include "json.hpp"
#include <string>

#include "padya/band.h"
#include "padya/composer.h"

namespace padya {

inline constexpr int kReportSchemaVersion = 1;

nlohmann::json to_json(const BandReport& band);
nlohmann::json to_json(const MatchResult& match);
nlohmann::json to_json(const JunctionResolution& junction);
nlohmann::json to_json(const PendingQuestion& question);
nlohmann::json to_json(const Suggestion& suggestion);
// Full report with "schema_version" at the top.
nlohmann::json to_json(const CompositionResult& result);

// Scansion of pādas given one per line: L-G pattern, gaṇas and the metre.
struct ScanReport {
  std::vector<std::string> lines;
  std::vector<LgPattern> patterns;
  std::vector<GanaSequence> ganas;
  std::optional<MatchResult> metre;  // exact or closest; absent if nothing compares
};
ScanReport scan_lines(const std::vector<std::string>& lines, const CatalogView& view);
nlohmann::json to_json(const ScanReport& scan);

}  // namespace padya
