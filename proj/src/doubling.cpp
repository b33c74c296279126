#include "permlex/doubling.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "permlex/error.hpp"

namespace permlex {

RunBounds default_run_bounds(WordSource& source) {
  const std::size_t inspect =
      source.extendable() ? kDefaultRunInspect
                          : std::min(kDefaultRunInspect, source.generated());
  return run_bounds(source, inspect);
}

std::size_t class_of(std::string_view letters, const RunBounds& bounds,
                     std::size_t pos) {
  const char lead = letters[pos];
  const std::size_t cap = lead == '0' ? bounds.k0 : bounds.k1;
  std::size_t run = 1;
  while (run < cap && letters[pos + run] == lead) ++run;
  if (lead == '0') return run >= bounds.k0 ? 0 : bounds.k0 - run;
  return run >= bounds.k1 ? bounds.k0 + bounds.k1 - 1 : bounds.k0 + run - 1;
}

bool classes_complete(std::string_view letters, const RunBounds& bounds,
                      std::size_t a, std::size_t n) {
  std::vector<bool> seen(bounds.class_count(), false);
  std::size_t missing = seen.size();
  for (std::size_t i = 0; i < n && missing > 0; ++i) {
    const std::size_t j = class_of(letters, bounds, a + i);
    if (!seen[j]) {
      seen[j] = true;
      --missing;
    }
  }
  return missing == 0;
}

ClassProfile class_profile(std::string_view letters, const RunBounds& bounds,
                           std::size_t a, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kPrecondition, "class profile needs n >= 1");
  if (a + n + bounds.k - 1 > letters.size()) {
    throw Error(ErrorCode::kPrefixTooShort, "class profile needs letters through a+n+k-2");
  }
  ClassProfile profile;
  profile.bounds = bounds;
  profile.class_index.resize(n);
  profile.gamma_sizes.assign(bounds.class_count(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = class_of(letters, bounds, a + i);
    profile.class_index[i] = j;
    ++profile.gamma_sizes[j];
  }
  profile.partial_sums.resize(bounds.class_count());
  std::size_t running = 0;
  for (std::size_t j = 0; j < bounds.class_count(); ++j) {
    if (profile.gamma_sizes[j] == 0) {
      throw Error(ErrorCode::kClassMissing,
                  "class C_" + std::to_string(j) + " absent from window (" +
                      std::to_string(a) + ", " + std::to_string(n) + ")");
    }
    running += profile.gamma_sizes[j];
    profile.partial_sums[j] = running;
  }
  return profile;
}

ClassProfile class_profile(WordSource& source, const RunBounds& bounds,
                           std::size_t a, std::size_t n) {
  return class_profile(source.ensure(a + n + bounds.k - 1), bounds, a, n);
}

ClassProfile class_profile(WordSource& source, std::size_t a, std::size_t n) {
  return class_profile(source, default_run_bounds(source), a, n);
}

Permutation delta_image(const Permutation& p, const ClassProfile& profile) {
  const std::size_t n = profile.class_index.size();
  const std::size_t k = profile.bounds.k;
  if (p.size() != n + k) {
    throw Error(ErrorCode::kLengthMismatch, "delta needs |p| = n + k");
  }
  const Permutation q = left_restrict_k(p, k);
  std::vector<Permutation::value_type> image(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = profile.class_index[i];
    const auto low = static_cast<Permutation::value_type>(q[i] + profile.sum_before(j));
    const auto high = static_cast<Permutation::value_type>(q[i] + profile.partial_sums[j]);
    if (p[i] < p[i + 1]) {
      image[2 * i] = low;
      image[2 * i + 1] = high;
    } else {
      image[2 * i] = high;
      image[2 * i + 1] = low;
    }
  }
  return Permutation(std::move(image));
}

std::string_view to_string(MapKind kind) {
  switch (kind) {
    case MapKind::kDelta: return "delta";
    case MapKind::kDeltaL: return "delta_L";
    case MapKind::kDeltaR: return "delta_R";
    case MapKind::kDeltaM: return "delta_M";
  }
  return "delta";
}

MapKind parse_map_kind(std::string_view text) {
  if (text == "delta") return MapKind::kDelta;
  if (text == "delta_L" || text == "L") return MapKind::kDeltaL;
  if (text == "delta_R" || text == "R") return MapKind::kDeltaR;
  if (text == "delta_M" || text == "M") return MapKind::kDeltaM;
  throw Error(ErrorCode::kParseError, "unknown map '" + std::string(text) + "'");
}

Permutation restrict_image(MapKind kind, const Permutation& image) {
  switch (kind) {
    case MapKind::kDelta: return image;
    case MapKind::kDeltaL: return left_restrict(image);
    case MapKind::kDeltaR: return right_restrict(image);
    case MapKind::kDeltaM: return middle_restrict(image);
  }
  return image;
}

MapTarget map_target(MapKind kind, std::size_t a, std::size_t n) {
  switch (kind) {
    case MapKind::kDelta: return {2 * a, 2 * n, Parity::kEven};
    case MapKind::kDeltaL: return {2 * a, 2 * n - 1, Parity::kEven};
    case MapKind::kDeltaR: return {2 * a + 1, 2 * n - 1, Parity::kOdd};
    case MapKind::kDeltaM: return {2 * a + 1, 2 * n - 2, Parity::kOdd};
  }
  return {2 * a, 2 * n, Parity::kEven};
}

DeltaResult delta(WordSource& source, std::size_t a, std::size_t n,
                  const RunBounds& bounds, std::size_t max_horizon) {
  ClassProfile profile = class_profile(source, bounds, a, n);
  Permutation p = subpermutation(source, a, n + bounds.k, max_horizon);
  Permutation q = left_restrict_k(p, bounds.k);
  Permutation image = delta_image(p, profile);
  return DeltaResult{a, n, std::move(p), std::move(q), std::move(profile),
                     std::move(image)};
}

DeltaResult delta(WordSource& source, std::size_t a, std::size_t n) {
  return delta(source, a, n, default_run_bounds(source));
}

Permutation apply_map(WordSource& source, MapKind kind, std::size_t a,
                      std::size_t n) {
  return restrict_image(kind, delta(source, a, n).image);
}

Permutation delta_L(WordSource& source, std::size_t a, std::size_t n) {
  return apply_map(source, MapKind::kDeltaL, a, n);
}
Permutation delta_R(WordSource& source, std::size_t a, std::size_t n) {
  return apply_map(source, MapKind::kDeltaR, a, n);
}
Permutation delta_M(WordSource& source, std::size_t a, std::size_t n) {
  return apply_map(source, MapKind::kDeltaM, a, n);
}

ChainCase lemma31_case(WordSource& source, WordSource& doubled_source,
                           const RunBounds& bounds, std::size_t a, std::size_t b,
                           std::size_t max_horizon) {
  if (compare_shifts(source, a, b, max_horizon).order != Order::kLess) {
    throw Error(ErrorCode::kPrecondition, "lemma31_case needs w[a] < w[b]");
  }
  const std::string& letters = source.ensure(std::max(a, b) + bounds.k);
  const std::size_t ci = class_of(letters, bounds, a);
  const std::size_t cj = class_of(letters, bounds, b);
  if (ci > cj) {
    throw Error(ErrorCode::kPrecondition, "class ladder out of order for w[a] < w[b]");
  }
  const char wa = letters[a];
  const char wb = letters[b];
  const std::size_t a0 = 2 * a, a1 = 2 * a + 1, b0 = 2 * b, b1 = 2 * b + 1;
  ChainCase out{};
  out.class_a = ci;
  out.class_b = cj;
  if (wa == '0' && wb == '0') {
    out.label = ci < cj ? 'a' : 'b';
    out.chain = ci < cj ? std::array{a0, a1, b0, b1} : std::array{a0, b0, a1, b1};
  } else if (wa == '0') {
    out.label = 'c';
    out.chain = {a0, a1, b1, b0};
  } else {
    out.label = ci < cj ? 'd' : 'e';
    out.chain = ci < cj ? std::array{a1, a0, b1, b0} : std::array{a1, b1, a0, b0};
  }
  out.verified = true;
  for (std::size_t i = 0; i + 1 < out.chain.size(); ++i) {
    const auto cmp =
        compare_shifts(doubled_source, out.chain[i], out.chain[i + 1], max_horizon);
    if (cmp.order != Order::kLess) out.verified = false;
  }
  return out;
}

ChainCase lemma31_case(WordSource& source, std::size_t a, std::size_t b) {
  WordSource twice = doubled(source);
  return lemma31_case(source, twice, default_run_bounds(source), a, b);
}

bool AuditReport::structural_ok() const noexcept {
  return checks.oracle_mismatches == 0 && checks.well_defined_violations == 0 &&
         checks.factor_mismatches == 0 && checks.class_gap_violations == 0 &&
         checks.type1_image_pairs == 0 && checks.restriction_merges == 0;
}

namespace {

struct DomainEntry {
  std::size_t start;
  Permutation full_image;
  Permutation mapped;
};

}  // namespace

AuditReport audit_map(WordSource& source, MapKind kind, std::size_t n,
                      const AuditOptions& options) {
  if (n < 2) throw Error(ErrorCode::kPrecondition, "audit needs n >= 2");
  const RunBounds bounds = options.bounds ? *options.bounds : default_run_bounds(source);
  const std::size_t k = bounds.k;
  const std::size_t window = options.scan_window;

  ShiftIndex index(source, window + n + k, n + k, options.max_horizon);
  WordSource twice = doubled(source);
  ShiftIndex doubled_index(twice, 2 * (window + n), 2 * n, options.max_horizon);
  const std::string_view letters = index.letters();

  AuditReport report;
  report.map = kind;
  report.n = n;
  report.scan_window = window;
  report.bounds = bounds;

  std::unordered_map<Permutation, DomainEntry, PermutationHash> domain;
  std::vector<std::size_t> kept;
  for (std::size_t a = 0; a < window; ++a) {
    if (!classes_complete(letters, bounds, a, n)) {
      ++report.skipped_windows;
      continue;
    }
    kept.push_back(a);
    const ClassProfile profile = class_profile(letters, bounds, a, n);
    Permutation p = index.window(a, n + k);
    Permutation full = delta_image(p, profile);
    Permutation mapped = restrict_image(kind, full);
    const MapTarget target = map_target(kind, a, n);
    if (!(mapped == doubled_index.window(target.start, target.length))) {
      ++report.checks.oracle_mismatches;
    }
    auto it = domain.find(p);
    if (it == domain.end()) {
      domain.emplace(std::move(p), DomainEntry{a, std::move(full), std::move(mapped)});
    } else if (!(it->second.mapped == mapped)) {
      ++report.checks.well_defined_violations;
    }
  }
  report.domain_size = domain.size();

  // Group domain members by image; every pair inside a group collides.
  std::unordered_map<Permutation, std::vector<const DomainEntry*>, PermutationHash> by_image;
  for (const auto& [p, entry] : domain) by_image[entry.mapped].push_back(&entry);
  report.image_size = by_image.size();
  for (auto& [image, entries] : by_image) {
    std::sort(entries.begin(), entries.end(),
              [](auto* x, auto* y) { return x->start < y->start; });
    for (std::size_t i = 0; i < entries.size(); ++i) {
      for (std::size_t j = i + 1; j < entries.size(); ++j) {
        const std::size_t a = entries[i]->start;
        const std::size_t b = entries[j]->start;
        report.collisions.push_back({a, b});
        if (letters.substr(a, n) != letters.substr(b, n)) {
          ++report.checks.factor_mismatches;
        }
      }
    }
  }
  std::sort(report.collisions.begin(), report.collisions.end(),
            [](const CollisionPair& x, const CollisionPair& y) {
              return x.a != y.a ? x.a < y.a : x.b < y.b;
            });

  const MapTarget target = map_target(kind, 0, n);
  PermSet target_set;
  if (report.skipped_windows == 0) {
    target_set = perm_set(doubled_index, target.length, 2 * window, false, target.parity);
  } else {
    // Below N_k the target is limited to the doubled windows of kept starts.
    std::unordered_set<Permutation, PermutationHash> seen;
    for (std::size_t a : kept) {
      const MapTarget t = map_target(kind, a, n);
      seen.insert(doubled_index.window(t.start, t.length));
    }
    target_set.length = target.length;
    target_set.members.assign(seen.begin(), seen.end());
    std::sort(target_set.members.begin(), target_set.members.end());
  }
  report.target_size = target_set.count();
  report.surjective = report.image_size == report.target_size;
  if (report.surjective) {
    for (const auto& [image, entries] : by_image) {
      if (!target_set.contains(image)) {
        report.surjective = false;
        break;
      }
    }
  }

  // Windows sharing L^k(p) whose last offsets sit in different
  // classes must sit in adjacent classes and get distinct last values.
  std::unordered_map<Permutation, std::vector<const DomainEntry*>, PermutationHash> by_prefix;
  for (const auto& [p, entry] : domain) by_prefix[left_restrict_k(p, k)].push_back(&entry);
  for (const auto& [prefix, entries] : by_prefix) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
      for (std::size_t j = i + 1; j < entries.size(); ++j) {
        const DomainEntry* x = entries[i];
        const DomainEntry* y = entries[j];
        const std::size_t cx = class_of(letters, bounds, x->start + n - 1);
        const std::size_t cy = class_of(letters, bounds, y->start + n - 1);
        if (cx == cy) continue;
        if (!index.less(x->start + n - 1, y->start + n - 1)) std::swap(x, y);
        ++report.checks.class_gap_checked;
        const bool adjacent = class_of(letters, bounds, y->start + n - 1) ==
                              class_of(letters, bounds, x->start + n - 1) + 1;
        const auto& px = x->full_image;
        const auto& py = y->full_image;
        const bool gaps = px[2 * n - 2] != py[2 * n - 2] && px[2 * n - 1] != py[2 * n - 1];
        if (!adjacent || !gaps) ++report.checks.class_gap_violations;
      }
    }
  }

  // Type-1 pairs and R/L merges among the distinct delta images.
  std::unordered_set<Permutation, PermutationHash> images;
  for (const auto& [p, entry] : domain) images.insert(entry.full_image);
  std::unordered_set<Permutation, PermutationHash> lefts, rights;
  for (const auto& image : images) {
    lefts.insert(left_restrict(image));
    rights.insert(right_restrict(image));
    const std::size_t last = image.size() - 1;
    const auto diff = static_cast<long>(image[0]) - static_cast<long>(image[last]);
    if (image.size() >= 3 && (diff == 1 || diff == -1)) {
      std::vector<Permutation::value_type> swapped(image.ranks().begin(), image.ranks().end());
      std::swap(swapped.front(), swapped.back());
      Permutation partner = Permutation::from_trusted(std::move(swapped));
      if (image < partner && images.count(partner) > 0) {
        ++report.checks.type1_image_pairs;
      }
    }
  }
  report.checks.restriction_merges =
      (images.size() - lefts.size()) + (images.size() - rights.size());
  return report;
}

BoundsReport check_bounds(WordSource& source, std::size_t n, std::size_t scan_window,
                          std::size_t max_horizon) {
  const RunBounds bounds = default_run_bounds(source);
  const std::size_t recurrence_window =
      source.extendable() ? kDefaultScanWindow
                          : std::min(kDefaultScanWindow, source.generated());
  const RecurrenceBound nk = recurrence_bound(source, bounds.k, recurrence_window);
  if (n < nk.length) {
    throw Error(ErrorCode::kClassMissing,
                "n = " + std::to_string(n) + " is below N_k = " + std::to_string(nk.length));
  }
  Enumerator base(source, max_horizon);
  Enumerator twice(doubled(source), max_horizon);
  const PermSet odd = twice.perm_set(2 * n - 1, scan_window);
  const PermSet even = twice.perm_set(2 * n, scan_window);
  const PermSet tk = base.perm_set(n + bounds.k, scan_window);
  const PermSet tk1 = base.perm_set(n + bounds.k + 1, scan_window);
  if (!odd.saturated || !even.saturated || !tk.saturated || !tk1.saturated) {
    throw Error(ErrorCode::kUnsaturated, "bound check needs saturated counts");
  }
  BoundsReport out;
  out.n = n;
  out.k = bounds.k;
  out.recurrence = nk.length;
  out.doubled_odd = odd.count();
  out.doubled_even = even.count();
  out.tau_nk = tk.count();
  out.tau_nk1 = tk1.count();
  out.odd_holds = out.doubled_odd <= 2 * out.tau_nk;
  out.even_holds = out.doubled_even <= out.tau_nk + out.tau_nk1;
  return out;
}

}  // namespace permlex
