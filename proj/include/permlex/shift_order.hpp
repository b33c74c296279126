#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "permlex/permutation.hpp"
#include "permlex/word.hpp"

namespace permlex {

inline constexpr std::size_t kDefaultHorizon = 4096;

enum class Order { kLess, kGreater };

struct ShiftComparison {
  Order order;
  std::size_t witness;  // first offset c with w[a+c] != w[b+c]
};

/// Lexicographic comparison of the shifts w[a] and w[b], extending the
/// prefix as needed. Throws HorizonExhausted if the shifts agree on
/// `max_horizon` letters.
ShiftComparison compare_shifts(WordSource& source, std::size_t a, std::size_t b,
                               std::size_t max_horizon = kDefaultHorizon);

/// pi[a, a+n-1] by pairwise shift comparison.
Permutation subpermutation(WordSource& source, std::size_t a, std::size_t n,
                           std::size_t max_horizon = kDefaultHorizon);

std::vector<std::uint32_t> suffix_array(std::string_view text);
std::vector<std::uint32_t> lcp_array(std::string_view text,
                                     std::span<const std::uint32_t> sa);

/// Ranks of the shifts starting at 0..positions-1 over a frozen prefix of
/// positions + max_horizon letters, built from a suffix array.
///
/// Two shifts whose first difference lies beyond the horizon are only
/// rejected when they can share a window of length <= max_window; shifts
/// further apart never meet inside one subpermutation.
class ShiftIndex {
 public:
  ShiftIndex(WordSource& source, std::size_t positions, std::size_t max_window,
             std::size_t max_horizon = kDefaultHorizon);

  std::size_t positions() const noexcept { return ranks_.size(); }
  std::size_t max_window() const noexcept { return max_window_; }
  std::size_t max_horizon() const noexcept { return max_horizon_; }
  std::string_view letters() const noexcept { return letters_; }

  bool less(std::size_t a, std::size_t b) const { return ranks_[a] < ranks_[b]; }

  /// pi[start, start+length-1]; requires start + length <= positions()
  /// and length <= max_window().
  Permutation window(std::size_t start, std::size_t length) const;

 private:
  std::string letters_;
  std::vector<std::uint32_t> ranks_;
  std::size_t max_window_;
  std::size_t max_horizon_;
};

}  // namespace permlex
