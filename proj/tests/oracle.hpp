// Brute-force reference implementations. Nothing here calls into the
// library's generators or rankers.
#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Ranks = std::vector<std::uint32_t>;

inline char thue_morse_letter(std::uint64_t i) {
  return (std::popcount(i) & 1) ? '1' : '0';
}

inline std::uint64_t isqrt(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// floor(m * (c0 - sqrt(d)) / 2) for irrational sqrt(d), exact in integers.
inline std::uint64_t floor_quadratic(std::uint64_t m, std::uint64_t c0, std::uint64_t d) {
  if (m == 0) return 0;
  const std::uint64_t x = c0 * m - isqrt(d * m * m);
  return (x - 1) / 2;
}

// Characteristic Sturmian word of slope alpha: c_n = floor((n+2)a) - floor((n+1)a).
inline char slope_letter(std::uint64_t n, std::uint64_t c0, std::uint64_t d) {
  return floor_quadratic(n + 2, c0, d) - floor_quadratic(n + 1, c0, d) == 1 ? '1' : '0';
}

// alpha = (3 - sqrt 5) / 2 = 1/phi^2
inline char fibonacci_letter(std::uint64_t n) { return slope_letter(n, 3, 5); }
// alpha = (2 - sqrt 2) / 2 = 1/(2 + sqrt 2), directive 2, 2, 2, ...
inline char silver_letter(std::uint64_t n) { return slope_letter(n, 2, 2); }

inline std::string prefix(const std::function<char(std::uint64_t)>& letter,
                          std::size_t len) {
  std::string out(len, '0');
  for (std::size_t i = 0; i < len; ++i) out[i] = letter(i);
  return out;
}

inline std::string doubled(const std::string& w) {
  std::string out;
  for (char c : w) out += std::string(2, c);
  return out;
}

inline std::string complement(std::string w) {
  for (char& c : w) c = c == '0' ? '1' : '0';
  return w;
}

// Ranks of the shifts a..a+n-1, comparing `horizon` letters as plain strings.
inline Ranks subpermutation(const std::string& w, std::size_t a, std::size_t n,
                            std::size_t horizon) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return w.compare(a + x, horizon, w, a + y, horizon) < 0;
  });
  Ranks out(n);
  for (std::size_t r = 0; r < n; ++r) out[order[r]] = static_cast<std::uint32_t>(r + 1);
  return out;
}

// Rank pattern of an arbitrary sequence of distinct values.
inline Ranks pattern(const Ranks& values) {
  Ranks out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::uint32_t below = 0;
    for (auto v : values) below += v < values[i];
    out[i] = below + 1;
  }
  return out;
}

inline Ranks drop_last(const Ranks& p) { return pattern(Ranks(p.begin(), p.end() - 1)); }
inline Ranks drop_first(const Ranks& p) { return pattern(Ranks(p.begin() + 1, p.end())); }

inline std::string form(const Ranks& p) {
  std::string out;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) out += p[i] < p[i + 1] ? '0' : '1';
  return out;
}

// Literal reading of the type-k definition with a nonempty middle block.
inline bool is_type(const Ranks& p, std::size_t k) {
  if (k == 0 || 2 * k >= p.size()) return false;
  for (int eps : {1, -1}) {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      ok = static_cast<long>(p[i]) == static_cast<long>(p[p.size() - k + i]) + eps;
    }
    if (ok) return true;
  }
  return false;
}

inline bool complementary(const Ranks& p, const Ranks& q, std::size_t k) {
  if (p.size() != q.size() || !is_type(p, k)) return false;
  const std::size_t len = p.size();
  Ranks swapped;
  swapped.insert(swapped.end(), p.begin() + (len - k), p.end());
  swapped.insert(swapped.end(), p.begin() + k, p.begin() + (len - k));
  swapped.insert(swapped.end(), p.begin(), p.begin() + k);
  return swapped == q;
}

inline std::set<std::string> factor_set(const std::string& w, std::size_t n,
                                        std::size_t starts) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < starts; ++i) out.insert(w.substr(i, n));
  return out;
}

inline std::set<Ranks> perm_set(const std::string& w, std::size_t n, std::size_t starts,
                                std::size_t horizon, std::size_t step = 1,
                                std::size_t offset = 0) {
  std::set<Ranks> out;
  for (std::size_t i = offset; i < starts; i += step) {
    out.insert(subpermutation(w, i, n, horizon));
  }
  return out;
}

inline Ranks random_permutation(std::mt19937_64& rng, std::size_t n) {
  Ranks p(n);
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
