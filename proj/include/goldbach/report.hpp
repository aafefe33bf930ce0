#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "goldbach/statistics.hpp"

namespace goldbach {

enum class OutputFormat { csv, json };

OutputFormat parse_output_format(std::string_view name);

// CSV documents are a header line plus one newline-terminated row per entry.
// JSON documents are {"table": <name>, "columns": [...], "rows": [{...}, ...]},
// pretty-printed with two-space indent and a trailing newline.

std::string table1_document(const std::vector<ModulusSummary>& rows, OutputFormat format);
std::string table2_document(const std::vector<EmptyPairCount>& rows, OutputFormat format);
std::string figure1_document(const GrowthSeries& rows, OutputFormat format);
std::string figure2_document(const GrowthSeries& rows, OutputFormat format);

/// Inverse of the JSON form of table1_document / table2_document. Pair counts
/// are recomputed from m; a stored average that disagrees with the integer
/// columns is rejected with ContractViolation.
std::vector<ModulusSummary> table1_from_json(const nlohmann::json& doc);
std::vector<EmptyPairCount> table2_from_json(const nlohmann::json& doc);

}  // namespace goldbach
