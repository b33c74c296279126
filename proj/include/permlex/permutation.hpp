#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permlex/word.hpp"

namespace permlex {

/// A finite permutation of {1, ..., n} stored as its rank sequence.
/// Window positions are 0-based, rank values are 1-based.
class Permutation {
 public:
  using value_type = std::uint32_t;

  explicit Permutation(std::vector<value_type> ranks);
  Permutation(std::initializer_list<value_type> ranks);

  /// Skips validation; the caller guarantees `ranks` is a permutation.
  static Permutation from_trusted(std::vector<value_type> ranks);

  /// Parses the text form "(4 9 7 2 6 1 3 8 5)".
  static Permutation parse(std::string_view text);

  std::size_t size() const noexcept { return ranks_.size(); }
  value_type operator[](std::size_t i) const noexcept { return ranks_[i]; }
  std::span<const value_type> ranks() const noexcept { return ranks_; }

  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct trusted_tag {};
  Permutation(std::vector<value_type> ranks, trusted_tag)
      : ranks_(std::move(ranks)) {}

  std::vector<value_type> ranks_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Rank pattern of a sequence of pairwise distinct keys: the result holds,
/// at each index, 1 + the number of keys smaller than the key there.
template <typename Key>
Permutation pattern_of(std::span<const Key> keys) {
  std::vector<std::uint32_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t x, std::uint32_t y) { return keys[x] < keys[y]; });
  std::vector<Permutation::value_type> ranks(keys.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    ranks[order[r]] = static_cast<Permutation::value_type>(r + 1);
  }
  return Permutation::from_trusted(std::move(ranks));
}

/// u_i = 0 iff p_i < p_{i+1}.
FiniteWord form_of(const Permutation& p);
bool same_form(const Permutation& p, const Permutation& q);

/// Drops the last window position and renumbers.
Permutation left_restrict(const Permutation& p);
/// Drops the first window position and renumbers.
Permutation right_restrict(const Permutation& p);
/// Drops both ends; equals left_restrict(right_restrict(p)).
Permutation middle_restrict(const Permutation& p);
Permutation left_restrict_k(const Permutation& p, std::size_t k);

}  // namespace permlex
