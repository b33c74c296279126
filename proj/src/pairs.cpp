#include "permlex/pairs.hpp"

#include <algorithm>
#include <map>

#include "permlex/closed_forms.hpp"
#include "permlex/error.hpp"

namespace permlex {

namespace {

std::optional<long> type_epsilon(const Permutation& p, std::size_t k) {
  const std::size_t len = p.size();
  if (k == 0 || 2 * k >= len) return std::nullopt;
  const long eps = static_cast<long>(p[0]) - static_cast<long>(p[len - k]);
  if (eps != 1 && eps != -1) return std::nullopt;
  for (std::size_t i = 1; i < k; ++i) {
    if (static_cast<long>(p[i]) - static_cast<long>(p[len - k + i]) != eps) {
      return std::nullopt;
    }
  }
  return eps;
}

}  // namespace

std::optional<TypeDecomposition> type_decomposition(const Permutation& p, std::size_t k) {
  const auto eps = type_epsilon(p, k);
  if (!eps) return std::nullopt;
  const auto ranks = p.ranks();
  TypeDecomposition out;
  out.k = k;
  out.epsilon = static_cast<int>(*eps);
  out.alpha.assign(ranks.begin(), ranks.begin() + k);
  out.lambda.assign(ranks.begin() + k, ranks.end() - k);
  out.beta.assign(ranks.end() - k, ranks.end());
  return out;
}

std::vector<TypeDecomposition> types_of(const Permutation& p) {
  std::vector<TypeDecomposition> out;
  for (std::size_t k = 1; 2 * k < p.size(); ++k) {
    if (auto d = type_decomposition(p, k)) out.push_back(std::move(*d));
  }
  return out;
}

bool is_complementary_of_type(const Permutation& p, const Permutation& q, long k) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::kLengthMismatch, "complementary pair needs equal lengths");
  }
  if (k <= 0) return p == q;
  const auto kk = static_cast<std::size_t>(k);
  const std::size_t len = p.size();
  if (2 * kk >= len) return false;
  for (std::size_t i = 0; i < kk; ++i) {
    if (q[i] != p[len - kk + i] || q[len - kk + i] != p[i]) return false;
  }
  for (std::size_t i = kk; i < len - kk; ++i) {
    if (q[i] != p[i]) return false;
  }
  return type_epsilon(p, kk).has_value();
}

std::optional<std::size_t> complementary_pair(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::kLengthMismatch, "complementary pair needs equal lengths");
  }
  if (p == q) return 0;
  for (std::size_t k = (p.size() - 1) / 2; k >= 1; --k) {
    if (is_complementary_of_type(p, q, static_cast<long>(k))) return k;
  }
  return std::nullopt;
}

Census same_form_census(const PermSet& set) {
  if (!set.saturated) {
    throw Error(ErrorCode::kUnsaturated, "census needs a saturated perm set");
  }
  Census census;
  census.length = set.length;
  if (set.length < 2) {
    for (const auto& p : set.members) {
      census.groups.push_back({FiniteWord(), {p}, {}});
    }
    return census;
  }
  std::map<FiniteWord, std::vector<Permutation>> by_form;
  for (const auto& p : set.members) by_form[form_of(p)].push_back(p);
  for (auto& [form, members] : by_form) {
    FormGroup group{form, std::move(members), {}};
    for (std::size_t i = 0; i < group.members.size(); ++i) {
      for (std::size_t j = i + 1; j < group.members.size(); ++j) {
        auto t = complementary_pair(group.members[i], group.members[j]);
        if (!t) ++census.violations;
        group.pair_types.push_back(t);
      }
    }
    census.groups.push_back(std::move(group));
  }
  // Complementary pairs across different forms.
  for (std::size_t g = 0; g < census.groups.size(); ++g) {
    for (std::size_t h = g + 1; h < census.groups.size(); ++h) {
      for (const auto& p : census.groups[g].members) {
        for (const auto& q : census.groups[h].members) {
          if (complementary_pair(p, q)) ++census.cross_form_pairs;
        }
      }
    }
  }
  return census;
}

RestrictionTypeReport restriction_type_check(const Permutation& p, const Permutation& q) {
  const auto k = complementary_pair(p, q);
  if (!k) {
    throw Error(ErrorCode::kPrecondition, "restriction check needs a complementary pair");
  }
  const long kk = static_cast<long>(*k);
  RestrictionTypeReport out;
  out.k = *k;
  if (p.size() < 2) {
    out.left_ok = out.right_ok = true;
    return out;
  }
  out.left_ok = is_complementary_of_type(left_restrict(p), left_restrict(q), kk - 1);
  out.right_ok = is_complementary_of_type(right_restrict(p), right_restrict(q), kk - 1);
  if (p.size() >= 3) {
    out.middle_ok =
        is_complementary_of_type(middle_restrict(p), middle_restrict(q), kk - 2);
  }
  return out;
}

PairClassReport classify_prop65(const PermSet& set) {
  if (!set.saturated) {
    throw Error(ErrorCode::kUnsaturated, "pair classification needs a saturated perm set");
  }
  if (set.length < 6) {
    throw Error(ErrorCode::kPrecondition, "pair classification needs n > 4");
  }
  PairClassReport out;
  out.n = set.length - 1;
  const Decomposition d = decompose(out.n, Flavor::kPairClass);
  out.r = d.r;
  out.c = d.p;
  out.saturated = true;
  const std::size_t half = std::size_t{1} << (d.r - 1);
  std::map<FiniteWord, std::vector<const Permutation*>> by_form;
  for (const auto& p : set.members) by_form[form_of(p)].push_back(&p);
  for (const auto& [form, members] : by_form) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        ++out.distinct_pairs;
        const bool ok = out.c < half + 1 &&
                        is_complementary_of_type(*members[i], *members[j],
                                                 static_cast<long>(out.c + 1));
        if (!ok) ++out.violations;
      }
    }
  }
  return out;
}

PairClassReport classify_prop65(WordSource& thue_morse, std::size_t n,
                             std::size_t scan_window) {
  if (n <= 4) throw Error(ErrorCode::kPrecondition, "pair classification needs n > 4");
  PairClassReport out = classify_prop65(perm_set(thue_morse, n + 1, scan_window));
  return out;
}

std::string census_csv_header() { return "form,group_size,pair_types"; }

std::string census_csv(const Census& census) {
  std::string out;
  for (const auto& group : census.groups) {
    out += group.form.str() + "," + std::to_string(group.members.size()) + ",";
    for (std::size_t i = 0; i < group.pair_types.size(); ++i) {
      if (i > 0) out += ';';
      out += group.pair_types[i] ? std::to_string(*group.pair_types[i]) : "none";
    }
    out += '\n';
  }
  return out;
}

}  // namespace permlex
