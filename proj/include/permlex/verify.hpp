#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permlex/perm_set.hpp"
#include "permlex/shift_order.hpp"
#include "permlex/word.hpp"

namespace permlex {

enum class Family { kNone, kSturmian, kThueMorse, kDoubledSturmian, kDoubledThueMorse };

/// Complement wrappers are ignored: they do not change any complexity.
Family classify_family(const WordSource& source);

/// Closed-form tau for a source from a known family, where it applies.
class TauFormula {
 public:
  explicit TauFormula(const WordSource& source);

  Family family() const noexcept { return family_; }
  /// Run bound k and recurrence bound N_k of the underlying Sturmian word
  /// (doubled Sturmian family only).
  std::size_t k() const noexcept { return k_; }
  std::size_t recurrence() const noexcept { return recurrence_; }

  std::optional<std::uint64_t> operator()(std::size_t n) const;

 private:
  Family family_;
  std::size_t k_ = 0;
  std::size_t recurrence_ = 0;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteOptions {
  std::size_t scan_window = kDefaultScanWindow;
  std::size_t max_horizon = kDefaultHorizon;
};

std::vector<std::string_view> suite_names();

/// sturmian | doubled-sturmian | thue-morse | doubled-thue-morse | bounds
std::vector<CheckResult> run_suite(std::string_view suite, std::size_t n_max,
                                   const SuiteOptions& options = {});

}  // namespace permlex
