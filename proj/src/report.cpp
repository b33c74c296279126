#include "permlex/report.hpp"

namespace permlex {

nlohmann::json to_json(const RunBounds& bounds) {
  return {{"k0", bounds.k0},
          {"k1", bounds.k1},
          {"k", bounds.k},
          {"certified_over", bounds.certified_over}};
}

nlohmann::json to_json(const AuditReport& report) {
  nlohmann::json collisions = nlohmann::json::array();
  for (const auto& c : report.collisions) {
    collisions.push_back({{"a", c.a}, {"b", c.b}});
  }
  const auto& ch = report.checks;
  return {{"map", std::string(to_string(report.map))},
          {"n", report.n},
          {"scan_window", report.scan_window},
          {"skipped_windows", report.skipped_windows},
          {"domain_size", report.domain_size},
          {"image_size", report.image_size},
          {"target_size", report.target_size},
          {"collisions", std::move(collisions)},
          {"surjective", report.surjective},
          {"bounds", to_json(report.bounds)},
          {"checks",
           {{"oracle_mismatches", ch.oracle_mismatches},
            {"well_defined_violations", ch.well_defined_violations},
            {"factor_mismatches", ch.factor_mismatches},
            {"class_gap_checked", ch.class_gap_checked},
            {"class_gap_violations", ch.class_gap_violations},
            {"type1_image_pairs", ch.type1_image_pairs},
            {"restriction_merges", ch.restriction_merges}}},
          {"structural_ok", report.structural_ok()}};
}

nlohmann::json tau_table_json(const std::string& word_spec,
                              const std::vector<TauRow>& rows) {
  nlohmann::json out_rows = nlohmann::json::array();
  for (const auto& row : rows) {
    out_rows.push_back({{"n", row.n},
                        {"tau", row.enumerated},
                        {"formula", row.formula ? nlohmann::json(*row.formula)
                                                : nlohmann::json(nullptr)},
                        {"saturated", row.saturated},
                        {"scan_window", row.scan_window}});
  }
  return {{"word", word_spec}, {"rows", std::move(out_rows)}};
}

std::string tau_csv_header() { return "n,tau,formula,saturated,scan_window"; }

std::string tau_csv_row(const TauRow& row) {
  return std::to_string(row.n) + "," + std::to_string(row.enumerated) + "," +
         (row.formula ? std::to_string(*row.formula) : std::string()) + "," +
         (row.saturated ? "true" : "false") + "," + std::to_string(row.scan_window);
}

}  // namespace permlex
