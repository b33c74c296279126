#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "permlex/permutation.hpp"
#include "permlex/shift_order.hpp"
#include "permlex/word.hpp"

namespace permlex {

inline constexpr std::size_t kDefaultScanWindow = 4096;

enum class Parity { kEven, kOdd };

/// Distinct length-n subpermutations seen over start positions
/// 0..scan_window-1. When `saturated` is false the count is a lower bound.
struct PermSet {
  std::size_t length = 0;
  std::vector<Permutation> members;  // sorted, unique
  std::size_t scan_window = 0;
  bool saturated = false;

  std::size_t count() const noexcept { return members.size(); }
  bool contains(const Permutation& p) const;
};

/// Enumerates over an existing index. With `saturate`, the scan window is
/// doubled until the count is stable across one doubling or the index runs
/// out of positions.
PermSet perm_set(const ShiftIndex& index, std::size_t n, std::size_t scan_window,
                 bool saturate = true,
                 std::optional<Parity> parity = std::nullopt);

PermSet perm_set(WordSource& source, std::size_t n,
                 std::size_t scan_window = kDefaultScanWindow,
                 bool saturate = true, std::size_t max_horizon = kDefaultHorizon);

/// Start positions restricted to one parity; the source must be doubled.
PermSet perm_set_parity(WordSource& doubled_source, std::size_t n, Parity parity,
                        std::size_t scan_window = kDefaultScanWindow,
                        bool saturate = true,
                        std::size_t max_horizon = kDefaultHorizon);

/// Grows a ShiftIndex on demand so repeated enumerations over one source
/// share a single suffix array.
class Enumerator {
 public:
  explicit Enumerator(WordSource source, std::size_t max_horizon = kDefaultHorizon);

  WordSource& source() noexcept { return source_; }

  /// Index covering at least `positions` starts and windows up to `max_window`.
  const ShiftIndex& index(std::size_t positions, std::size_t max_window);

  PermSet perm_set(std::size_t n, std::size_t scan_window = kDefaultScanWindow,
                   bool saturate = true,
                   std::optional<Parity> parity = std::nullopt);

 private:
  WordSource source_;
  std::size_t max_horizon_;
  std::optional<ShiftIndex> index_;
};

std::string perm_set_csv_header();
std::string perm_set_csv_row(const PermSet& set);

}  // namespace permlex
