#include "permlex/shift_order.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "permlex/error.hpp"

namespace permlex {

ShiftComparison compare_shifts(WordSource& source, std::size_t a, std::size_t b,
                               std::size_t max_horizon) {
  if (a == b) {
    throw Error(ErrorCode::kPrecondition, "compare_shifts needs a != b");
  }
  const std::size_t far = std::max(a, b);
  std::size_t c = 0;
  std::size_t chunk = 64;
  while (c < max_horizon) {
    const std::size_t limit = std::min(c + chunk, max_horizon);
    std::size_t need = far + limit;
    if (!source.extendable() && need > source.generated()) {
      need = source.generated();
      if (need <= far + c) {
        throw Error(ErrorCode::kPrefixTooShort,
                    "explicit word ends before the shifts differ");
      }
    }
    const std::string& letters = source.ensure(need);
    const std::size_t stop = need - far;
    for (; c < stop; ++c) {
      if (letters[a + c] != letters[b + c]) {
        return {letters[a + c] < letters[b + c] ? Order::kLess : Order::kGreater,
                c};
      }
    }
    chunk *= 2;
  }
  throw Error(ErrorCode::kHorizonExhausted,
              "shifts " + std::to_string(a) + " and " + std::to_string(b) +
                  " agree on " + std::to_string(max_horizon) + " letters");
}

Permutation subpermutation(WordSource& source, std::size_t a, std::size_t n,
                           std::size_t max_horizon) {
  if (n == 0) {
    throw Error(ErrorCode::kPrecondition, "subpermutation needs n >= 1");
  }
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
    if (x == y) return false;
    return compare_shifts(source, a + x, a + y, max_horizon).order == Order::kLess;
  });
  std::vector<Permutation::value_type> ranks(n);
  for (std::size_t r = 0; r < n; ++r) {
    ranks[order[r]] = static_cast<Permutation::value_type>(r + 1);
  }
  return Permutation::from_trusted(std::move(ranks));
}

std::vector<std::uint32_t> suffix_array(std::string_view text) {
  // Prefix doubling with two counting-sort passes per round.
  const std::size_t n = text.size();
  std::vector<std::uint32_t> sa(n), rank(n), tmp(n);
  if (n == 0) return sa;

  std::size_t classes = 256;
  for (std::size_t i = 0; i < n; ++i) rank[i] = static_cast<unsigned char>(text[i]);
  {
    std::vector<std::uint32_t> count(classes + 1, 0);
    for (auto r : rank) ++count[r + 1];
    for (std::size_t c = 1; c <= classes; ++c) count[c] += count[c - 1];
    for (std::size_t i = 0; i < n; ++i) sa[count[rank[i]]++] = static_cast<std::uint32_t>(i);
    classes = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == 0 || text[sa[i]] != text[sa[i - 1]]) ++classes;
      tmp[sa[i]] = static_cast<std::uint32_t>(classes - 1);
    }
    rank.swap(tmp);
  }

  std::vector<std::uint32_t> by_second(n);
  for (std::size_t k = 1; classes < n; k <<= 1) {
    // Order by second key: suffixes without a k-th successor sort first.
    std::size_t p = 0;
    for (std::size_t i = n - std::min(k, n); i < n; ++i) {
      by_second[p++] = static_cast<std::uint32_t>(i);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (sa[i] >= k) by_second[p++] = static_cast<std::uint32_t>(sa[i] - k);
    }
    std::vector<std::uint32_t> count(classes + 1, 0);
    for (std::size_t i = 0; i < n; ++i) ++count[rank[i] + 1];
    for (std::size_t c = 1; c <= classes; ++c) count[c] += count[c - 1];
    for (std::size_t i = 0; i < n; ++i) sa[count[rank[by_second[i]]]++] = by_second[i];

    auto second = [&](std::uint32_t i) -> std::int64_t {
      return i + k < n ? static_cast<std::int64_t>(rank[i + k]) : -1;
    };
    classes = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == 0 || rank[sa[i]] != rank[sa[i - 1]] || second(sa[i]) != second(sa[i - 1])) {
        ++classes;
      }
      tmp[sa[i]] = static_cast<std::uint32_t>(classes - 1);
    }
    rank.swap(tmp);
  }
  return sa;
}

std::vector<std::uint32_t> lcp_array(std::string_view text,
                                     std::span<const std::uint32_t> sa) {
  // Kasai et al.; lcp[i] is the common prefix length of sa[i-1] and sa[i].
  const std::size_t n = text.size();
  std::vector<std::uint32_t> inverse(n), lcp(n, 0);
  for (std::size_t i = 0; i < n; ++i) inverse[sa[i]] = static_cast<std::uint32_t>(i);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (inverse[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[inverse[i] - 1];
    while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
    lcp[inverse[i]] = static_cast<std::uint32_t>(h);
    if (h > 0) --h;
  }
  return lcp;
}

ShiftIndex::ShiftIndex(WordSource& source, std::size_t positions,
                       std::size_t max_window, std::size_t max_horizon)
    : max_window_(max_window), max_horizon_(max_horizon) {
  if (positions == 0 || max_window == 0 || max_horizon == 0) {
    throw Error(ErrorCode::kPrecondition, "ShiftIndex needs nonzero sizes");
  }
  const std::size_t total = positions + max_horizon;
  letters_ = source.ensure(total).substr(0, total);

  const auto sa = suffix_array(letters_);
  const auto lcp = lcp_array(letters_, sa);

  ranks_.assign(positions, 0);
  std::uint32_t next_rank = 0;
  std::vector<std::uint32_t> block;
  auto flush = [&] {
    if (block.size() < 2) return;
    std::sort(block.begin(), block.end());
    for (std::size_t i = 1; i < block.size(); ++i) {
      if (block[i] - block[i - 1] < max_window_) {
        throw Error(ErrorCode::kHorizonExhausted,
                    "shifts " + std::to_string(block[i - 1]) + " and " +
                        std::to_string(block[i]) + " agree on " +
                        std::to_string(max_horizon_) + " letters");
      }
    }
  };

  bool have_prev = false;
  std::uint32_t run_min = std::numeric_limits<std::uint32_t>::max();
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (i > 0) run_min = std::min(run_min, lcp[i]);
    if (sa[i] >= positions) continue;
    ranks_[sa[i]] = next_rank++;
    if (have_prev && run_min >= max_horizon_) {
      block.push_back(sa[i]);
    } else {
      flush();
      block.assign(1, sa[i]);
    }
    have_prev = true;
    run_min = std::numeric_limits<std::uint32_t>::max();
  }
  flush();
}

Permutation ShiftIndex::window(std::size_t start, std::size_t length) const {
  if (length == 0 || start + length > ranks_.size() || length > max_window_) {
    throw Error(ErrorCode::kPrecondition,
                "window [" + std::to_string(start) + ", +" +
                    std::to_string(length) + ") outside the index");
  }
  return pattern_of(std::span<const std::uint32_t>(ranks_.data() + start, length));
}

}  // namespace permlex
