#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "permlex/doubling.hpp"
#include "permlex/word.hpp"

namespace permlex {

struct TauRow {
  std::size_t n = 0;
  std::size_t enumerated = 0;
  std::optional<std::uint64_t> formula;
  bool saturated = false;
  std::size_t scan_window = 0;

  /// Only saturated rows can contradict a formula.
  bool mismatch() const noexcept {
    return saturated && formula && *formula != enumerated;
  }
};

nlohmann::json to_json(const RunBounds& bounds);
nlohmann::json to_json(const AuditReport& report);
nlohmann::json tau_table_json(const std::string& word_spec,
                              const std::vector<TauRow>& rows);

std::string tau_csv_header();
std::string tau_csv_row(const TauRow& row);

}  // namespace permlex
