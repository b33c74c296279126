#pragma once

#include <cstdint>

namespace permlex {

// Three incompatible (r, p) conventions are in use; every decomposition is
// tagged with the one it was built under.
//   kTau:    n = 2^r + p,     0 < p <= 2^r   (permutation complexity of T)
//   kRho:    n = 2^r + p + 1, 0 < p <= 2^r   (factor complexity of T)
//   kPairClass: n = 2^r + c,     0 <= c < 2^r   (same-form pair classification)
enum class Flavor { kTau, kRho, kPairClass };

struct Decomposition {
  Flavor flavor;
  unsigned r;
  std::uint64_t p;  // holds c for kPairClass
};

Decomposition decompose(std::uint64_t n, Flavor flavor);
std::uint64_t recompose(const Decomposition& d);

std::uint64_t sturmian_tau(std::uint64_t n);
std::uint64_t doubled_sturmian_tau(std::uint64_t n, std::uint64_t k);
std::uint64_t tm_rho(std::uint64_t n);
std::uint64_t tm_tau(std::uint64_t n);
/// m = 2n - 1 or 2n with n >= 9.
std::uint64_t doubled_tm_tau(std::uint64_t m);

/// n = 2^r - 1 or 2^r for some r >= 3.
bool delta_exceptional(std::uint64_t n);
/// n = 2^r - 1, 2^r or 2^r + 1 for some r >= 3.
bool delta_m_exceptional(std::uint64_t n);

/// Expected parity-set sizes of d(T) for one n >= 8.
struct ParityCardinalities {
  std::uint64_t even_2n;          // |Perm_ev(2n)|,     delta
  std::uint64_t even_2n_minus_1;  // |Perm_ev(2n - 1)|, delta_L
  std::uint64_t odd_2n_minus_1;   // |Perm_odd(2n - 1)|, delta_R
  std::uint64_t odd_2n_minus_2;   // |Perm_odd(2n - 2)|, delta_M
};

ParityCardinalities expected_parity_cardinalities(std::uint64_t n);

}  // namespace permlex
