#include "permlex/closed_forms.hpp"

#include <bit>
#include <string>

#include "permlex/error.hpp"

namespace permlex {

namespace {

unsigned floor_log2(std::uint64_t x) {
  return static_cast<unsigned>(std::bit_width(x) - 1);
}

std::uint64_t pow2(unsigned r) { return std::uint64_t{1} << r; }

[[noreturn]] void domain_error(const std::string& what) {
  throw Error(ErrorCode::kDomainError, what);
}

}  // namespace

Decomposition decompose(std::uint64_t n, Flavor flavor) {
  switch (flavor) {
    case Flavor::kTau: {
      if (n < 2) domain_error("tau decomposition needs n >= 2");
      const unsigned r = floor_log2(n - 1);
      return {flavor, r, n - pow2(r)};
    }
    case Flavor::kRho: {
      if (n < 3) domain_error("rho decomposition needs n >= 3");
      const unsigned r = floor_log2(n - 2);
      return {flavor, r, n - 1 - pow2(r)};
    }
    case Flavor::kPairClass: {
      if (n < 1) domain_error("pair-class decomposition needs n >= 1");
      const unsigned r = floor_log2(n);
      return {flavor, r, n - pow2(r)};
    }
  }
  domain_error("unknown flavor");
}

std::uint64_t recompose(const Decomposition& d) {
  switch (d.flavor) {
    case Flavor::kTau: return pow2(d.r) + d.p;
    case Flavor::kRho: return pow2(d.r) + d.p + 1;
    case Flavor::kPairClass: return pow2(d.r) + d.p;
  }
  return 0;
}

std::uint64_t sturmian_tau(std::uint64_t n) {
  if (n < 2) domain_error("sturmian tau needs n >= 2");
  return n;
}

std::uint64_t doubled_sturmian_tau(std::uint64_t n, std::uint64_t k) {
  if (n < 2 || k < 1) domain_error("doubled sturmian tau needs n >= 2, k >= 1");
  return n + 2 * k + 1;
}

std::uint64_t tm_rho(std::uint64_t n) {
  if (n < 3) domain_error("tm rho needs n >= 3");
  const auto [flavor, r, p] = decompose(n, Flavor::kRho);
  // 6 * 2^{r-1} + 4p when p <= 2^{r-1}, else 8 * 2^{r-1} + 2p; kept in
  // integers so r = 0 works.
  if (2 * p <= pow2(r)) return 3 * pow2(r) + 4 * p;
  return 4 * pow2(r) + 2 * p;
}

std::uint64_t tm_tau(std::uint64_t n) {
  if (n < 6) domain_error("tm tau needs n >= 6");
  const auto [flavor, r, p] = decompose(n, Flavor::kTau);
  return 2 * (pow2(r + 1) + p - 2);
}

std::uint64_t doubled_tm_tau(std::uint64_t m) {
  const std::uint64_t n = (m + 1) / 2;
  if (n < 9) domain_error("doubled tm tau needs m >= 17");
  const bool odd = m % 2 == 1;
  const unsigned r = floor_log2(n);
  if (n == pow2(r)) {
    const std::uint64_t base = pow2(r + 2) + pow2(r + 1);
    return odd ? base : base + 4;
  }
  const std::uint64_t p = n - pow2(r);
  const std::uint64_t base = pow2(r + 3) + 4 * p;
  return odd ? base : base + 2;
}

bool delta_exceptional(std::uint64_t n) {
  if (n < 7) return false;
  return std::has_single_bit(n) || std::has_single_bit(n + 1);
}

bool delta_m_exceptional(std::uint64_t n) {
  if (n < 7) return false;
  return delta_exceptional(n) || (n >= 9 && std::has_single_bit(n - 1));
}

ParityCardinalities expected_parity_cardinalities(std::uint64_t n) {
  if (n < 8) domain_error("parity cardinalities need n >= 8");
  const std::uint64_t regular = tm_tau(n + 2);
  const std::uint64_t factors = tm_rho(n + 1);
  const std::uint64_t d = delta_exceptional(n) ? factors : regular;
  return {d, d, d, delta_m_exceptional(n) ? factors : regular};
}

}  // namespace permlex
