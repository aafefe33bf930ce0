#include "goldbach/report.hpp"

#include <fmt/format.h>

#include "goldbach/errors.hpp"

namespace goldbach {

namespace {

const std::vector<std::string> kTable1Columns = {"m",     "L0_min", "L0_avg", "L0_max", "E0_max", "e0_m", "e0_tilde_m",
                                                 "L_min", "L_avg",  "L_max",  "E_max",  "e_m",  "e_tilde_m"};
const std::vector<std::string> kTable2Columns = {"m", "count", "percent"};
const std::vector<std::string> kFigure1Columns = {"m", "E_max", "phi"};
const std::vector<std::string> kFigure2Columns = {"m", "E_max", "phi", "8m2", "16m2", "2m2_ln_m", "4m2_ln_m"};

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

nlohmann::json skeleton(std::string_view name, const std::vector<std::string>& columns) {
  return nlohmann::json{{"table", name}, {"columns", columns}, {"rows", nlohmann::json::array()}};
}

// Rounded average as a JSON number; shortest round-trip printing keeps the text.
double rounded_average(const FamilyStats& f) {
  return std::stod(format_ratio(f.total, std::max<std::uint64_t>(f.pairs, 1), 3, true));
}

void family_to_json(nlohmann::json& row, const FamilyStats& f, std::string_view tag) {
  row[fmt::format("L{}_min", tag)] = f.min_length;
  row[fmt::format("L{}_avg", tag)] = rounded_average(f);
  row[fmt::format("L{}_max", tag)] = f.max_length;
  row[fmt::format("E{}_max", tag)] = f.largest;
  row[fmt::format("e{}_m", tag)] = f.distinct;
  row[fmt::format("e{}_tilde_m", tag)] = f.total;
}

FamilyStats family_from_json(const nlohmann::json& row, std::string_view tag, std::uint64_t pairs) {
  FamilyStats f;
  f.pairs = pairs;
  f.min_length = row.at(fmt::format("L{}_min", tag)).get<std::uint64_t>();
  f.max_length = row.at(fmt::format("L{}_max", tag)).get<std::uint64_t>();
  f.largest = row.at(fmt::format("E{}_max", tag)).get<std::uint64_t>();
  f.distinct = row.at(fmt::format("e{}_m", tag)).get<std::uint64_t>();
  f.total = row.at(fmt::format("e{}_tilde_m", tag)).get<std::uint64_t>();
  const double stored = row.at(fmt::format("L{}_avg", tag)).get<double>();
  if (stored != rounded_average(f)) {
    throw ContractViolation(fmt::format("table1 row: L{}_avg={} disagrees with e{}_tilde_m/{} pairs", tag, stored,
                                        tag, pairs));
  }
  return f;
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw ContractViolation("unknown output format '" + std::string(name) + "' (expected csv or json)");
}

std::string table1_document(const std::vector<ModulusSummary>& rows, OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out = summary_csv_header() + "\n";
    for (const auto& r : rows) out += summary_csv_row(r) + "\n";
    return out;
  }
  nlohmann::json doc = skeleton("table1", kTable1Columns);
  for (const auto& r : rows) {
    nlohmann::json row{{"m", r.m}};
    family_to_json(row, r.restricted, "0");
    family_to_json(row, r.all, "");
    doc["rows"].push_back(std::move(row));
  }
  return dump(doc);
}

std::vector<ModulusSummary> table1_from_json(const nlohmann::json& doc) {
  if (doc.at("table").get<std::string>() != "table1") throw ContractViolation("not a table1 document");
  std::vector<ModulusSummary> out;
  for (const auto& row : doc.at("rows")) {
    const auto m = row.at("m").get<std::uint64_t>();
    require_even_modulus(m);
    const std::uint64_t phi = totient(m);
    out.push_back(ModulusSummary{m, family_from_json(row, "0", phi), family_from_json(row, "", phi * phi)});
  }
  return out;
}

std::string table2_document(const std::vector<EmptyPairCount>& rows, OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out = empty_count_csv_header() + "\n";
    for (const auto& r : rows) out += empty_count_csv_row(r) + "\n";
    return out;
  }
  nlohmann::json doc = skeleton("table2", kTable2Columns);
  for (const auto& r : rows) {
    const std::string percent = format_ratio(100 * r.empty_pairs, std::max<std::uint64_t>(r.total_pairs, 1), 1, false);
    doc["rows"].push_back({{"m", r.m}, {"count", r.empty_pairs}, {"percent", std::stod(percent)}});
  }
  return dump(doc);
}

std::vector<EmptyPairCount> table2_from_json(const nlohmann::json& doc) {
  if (doc.at("table").get<std::string>() != "table2") throw ContractViolation("not a table2 document");
  std::vector<EmptyPairCount> out;
  for (const auto& row : doc.at("rows")) {
    const auto m = row.at("m").get<std::uint64_t>();
    require_even_modulus(m);
    const std::uint64_t phi = totient(m);
    out.push_back(EmptyPairCount{m, row.at("count").get<std::uint64_t>(), phi * phi});
  }
  return out;
}

std::string figure1_document(const GrowthSeries& rows, OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out = "m,E_max,phi\n";
    for (const auto& r : rows) out += fmt::format("{},{},{}\n", r.m, r.largest_exception, r.phi);
    return out;
  }
  nlohmann::json doc = skeleton("figure1", kFigure1Columns);
  for (const auto& r : rows) doc["rows"].push_back({{"m", r.m}, {"E_max", r.largest_exception}, {"phi", r.phi}});
  return dump(doc);
}

std::string figure2_document(const GrowthSeries& rows, OutputFormat format) {
  if (format == OutputFormat::csv) {
    std::string out = growth_csv_header() + "\n";
    for (const auto& r : rows) out += growth_csv_row(r) + "\n";
    return out;
  }
  nlohmann::json doc = skeleton("figure2", kFigure2Columns);
  for (const auto& r : rows) {
    doc["rows"].push_back({{"m", r.m},
                           {"E_max", r.largest_exception},
                           {"phi", r.phi},
                           {"8m2", r.eight_m2},
                           {"16m2", r.sixteen_m2},
                           {"2m2_ln_m", r.two_m2_log_m},
                           {"4m2_ln_m", r.four_m2_log_m}});
  }
  return dump(doc);
}

}  // namespace goldbach
