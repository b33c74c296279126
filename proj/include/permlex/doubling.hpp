#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "permlex/perm_set.hpp"
#include "permlex/permutation.hpp"
#include "permlex/shift_order.hpp"
#include "permlex/word.hpp"

namespace permlex {

inline constexpr std::size_t kDefaultRunInspect = std::size_t{1} << 14;

/// Run bounds over kDefaultRunInspect letters (or the whole explicit word).
RunBounds default_run_bounds(WordSource& source);

/// Class ladder C_0 = 0^{k0}, C_1 = 0^{k0-1}1, ..., C_{k0-1} = 01,
/// C_{k0} = 10, ..., C_{k0+k1-1} = 1^{k1}. Every shift has exactly one of
/// them as a prefix; reading it needs letters pos..pos+k-1.
std::size_t class_of(std::string_view letters, const RunBounds& bounds,
                     std::size_t pos);

/// Whether every class occurs among the offsets a..a+n-1.
bool classes_complete(std::string_view letters, const RunBounds& bounds,
                      std::size_t a, std::size_t n);

struct ClassProfile {
  RunBounds bounds;
  std::vector<std::size_t> class_index;   // one per window offset
  std::vector<std::size_t> gamma_sizes;   // |gamma_j|
  std::vector<std::size_t> partial_sums;  // S_j = sum_{i <= j} |gamma_i|

  /// S_{j-1}, with S_{-1} = 0.
  std::size_t sum_before(std::size_t j) const noexcept {
    return j == 0 ? 0 : partial_sums[j - 1];
  }
};

ClassProfile class_profile(std::string_view letters, const RunBounds& bounds,
                           std::size_t a, std::size_t n);
ClassProfile class_profile(WordSource& source, const RunBounds& bounds,
                           std::size_t a, std::size_t n);
ClassProfile class_profile(WordSource& source, std::size_t a, std::size_t n);

/// The doubled-word subpermutation of length 2n assembled from p (length
/// n + k) and the class profile of its first n offsets.
Permutation delta_image(const Permutation& p, const ClassProfile& profile);

enum class MapKind { kDelta, kDeltaL, kDeltaR, kDeltaM };

std::string_view to_string(MapKind kind);
MapKind parse_map_kind(std::string_view text);

Permutation restrict_image(MapKind kind, const Permutation& image);

/// Where a map's image sits in the doubled word for the window (a, n).
struct MapTarget {
  std::size_t start;
  std::size_t length;
  Parity parity;
};
MapTarget map_target(MapKind kind, std::size_t a, std::size_t n);

struct DeltaResult {
  std::size_t start;
  std::size_t n;
  Permutation p;  // length n + k
  Permutation q;  // L^k(p)
  ClassProfile profile;
  Permutation image;  // length 2n
};

DeltaResult delta(WordSource& source, std::size_t a, std::size_t n,
                  const RunBounds& bounds, std::size_t max_horizon = kDefaultHorizon);
DeltaResult delta(WordSource& source, std::size_t a, std::size_t n);

Permutation apply_map(WordSource& source, MapKind kind, std::size_t a,
                      std::size_t n);
Permutation delta_L(WordSource& source, std::size_t a, std::size_t n);
Permutation delta_R(WordSource& source, std::size_t a, std::size_t n);
Permutation delta_M(WordSource& source, std::size_t a, std::size_t n);

/// Order chain of the four doubled shifts 2a, 2a+1, 2b, 2b+1 when w[a] < w[b].
struct ChainCase {
  char label;                      // 'a' .. 'e'
  std::array<std::size_t, 4> chain;  // doubled positions in increasing order
  std::size_t class_a;
  std::size_t class_b;
  bool verified;
};

ChainCase lemma31_case(WordSource& source, WordSource& doubled_source,
                           const RunBounds& bounds, std::size_t a, std::size_t b,
                           std::size_t max_horizon = kDefaultHorizon);
ChainCase lemma31_case(WordSource& source, std::size_t a, std::size_t b);

struct CollisionPair {
  std::size_t a;
  std::size_t b;
};

struct AuditChecks {
  std::size_t oracle_mismatches = 0;        // formula vs doubled-word window
  std::size_t well_defined_violations = 0;  // equal p, different image
  std::size_t factor_mismatches = 0;       // collision with different factors
  std::size_t class_gap_checked = 0;
  std::size_t class_gap_violations = 0;
  std::size_t type1_image_pairs = 0;  // delta images forming a type-1 pair
  std::size_t restriction_merges = 0;   // R or L merging distinct delta images
};

struct AuditReport {
  MapKind map = MapKind::kDelta;
  std::size_t n = 0;
  std::size_t scan_window = 0;
  RunBounds bounds;
  std::size_t skipped_windows = 0;  // windows missing a class (n < N_k)
  std::size_t domain_size = 0;
  std::size_t image_size = 0;
  std::size_t target_size = 0;  // parity set over the same scan window
  std::vector<CollisionPair> collisions;
  bool surjective = false;
  AuditChecks checks;

  bool structural_ok() const noexcept;
};

struct AuditOptions {
  std::size_t scan_window = kDefaultScanWindow;
  std::size_t max_horizon = kDefaultHorizon;
  std::optional<RunBounds> bounds;
};

AuditReport audit_map(WordSource& source, MapKind kind, std::size_t n,
                      const AuditOptions& options = {});

struct BoundsReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t recurrence = 0;  // empirical N_k
  std::size_t doubled_odd = 0;   // tau_{d(w)}(2n - 1)
  std::size_t doubled_even = 0;  // tau_{d(w)}(2n)
  std::size_t tau_nk = 0;        // tau_w(n + k)
  std::size_t tau_nk1 = 0;       // tau_w(n + k + 1)
  bool odd_holds = false;
  bool even_holds = false;
};

BoundsReport check_bounds(WordSource& source, std::size_t n,
                          std::size_t scan_window = kDefaultScanWindow,
                          std::size_t max_horizon = kDefaultHorizon);

}  // namespace permlex
