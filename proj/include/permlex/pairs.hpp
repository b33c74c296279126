#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "permlex/perm_set.hpp"
#include "permlex/permutation.hpp"
#include "permlex/word.hpp"

namespace permlex {

/// p = (alpha lambda beta) with |alpha| = |beta| = k, alpha_i = beta_i + epsilon
/// and a nonempty lambda.
struct TypeDecomposition {
  std::size_t k = 0;
  int epsilon = 1;
  std::vector<Permutation::value_type> alpha;
  std::vector<Permutation::value_type> lambda;
  std::vector<Permutation::value_type> beta;
};

std::optional<TypeDecomposition> type_decomposition(const Permutation& p, std::size_t k);
std::vector<TypeDecomposition> types_of(const Permutation& p);

/// Exact predicate; k <= 0 means p == q.
bool is_complementary_of_type(const Permutation& p, const Permutation& q, long k);

/// 0 when p == q, the largest qualifying k when p and q are a complementary
/// pair, nullopt otherwise.
std::optional<std::size_t> complementary_pair(const Permutation& p, const Permutation& q);

struct FormGroup {
  FiniteWord form;
  std::vector<Permutation> members;
  /// complementary_pair over member pairs (i, j), i < j, in row-major order.
  std::vector<std::optional<std::size_t>> pair_types;
};

struct Census {
  std::size_t length = 0;
  std::vector<FormGroup> groups;  // sorted by form
  std::size_t violations = 0;     // same-form pairs that are not complementary
  std::size_t cross_form_pairs = 0;  // complementary pairs with different forms
};

Census same_form_census(const PermSet& set);

struct RestrictionTypeReport {
  std::size_t k = 0;
  bool left_ok = false;    // L-pair complementary of type k - 1
  bool right_ok = false;   // R-pair complementary of type k - 1
  bool middle_ok = true;   // M-pair complementary of type k - 2 (length >= 3)
  bool ok() const noexcept { return left_ok && right_ok && middle_ok; }
};

RestrictionTypeReport restriction_type_check(const Permutation& p, const Permutation& q);

/// n = 2^r + c with 0 <= c < 2^r.
struct PairClassReport {
  std::size_t n = 0;
  unsigned r = 0;
  std::size_t c = 0;
  std::size_t distinct_pairs = 0;  // same-form, distinct pairs checked
  std::size_t violations = 0;
  bool saturated = false;
};

PairClassReport classify_prop65(const PermSet& length_n_plus_1);
PairClassReport classify_prop65(WordSource& thue_morse, std::size_t n,
                             std::size_t scan_window = kDefaultScanWindow);

std::string census_csv_header();
std::string census_csv(const Census& census);

}  // namespace permlex
