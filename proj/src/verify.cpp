#include "permlex/verify.hpp"

#include <sstream>

#include "permlex/closed_forms.hpp"
#include "permlex/doubling.hpp"
#include "permlex/error.hpp"
#include "permlex/pairs.hpp"
#include "permlex/word_spec.hpp"

namespace permlex {

namespace {

const WordSource& strip_complements(const WordSource& source) {
  const WordSource* s = &source;
  while (s->kind() == WordSource::Kind::kComplemented) s = s->inner();
  return *s;
}

bool same_morphism(const Morphism& a, const Morphism& b) {
  return a.images == b.images;
}

Family base_family(const WordSource& source) {
  switch (source.kind()) {
    case WordSource::Kind::kSturmian:
      return Family::kSturmian;
    case WordSource::Kind::kMorphic:
      if (same_morphism(source.morphism(), thue_morse_morphism())) {
        return Family::kThueMorse;
      }
      if (same_morphism(source.morphism(), fibonacci_morphism()) && source.seed() == 0) {
        return Family::kSturmian;
      }
      return Family::kNone;
    default:
      return Family::kNone;
  }
}

std::string range_text(std::size_t lo, std::size_t hi) {
  return std::to_string(lo) + ".." + std::to_string(hi);
}

// Looks up enumerated counts against a reference; one check per call.
template <typename Count, typename Expected>
CheckResult compare_range(std::string name, std::size_t lo, std::size_t hi,
                          Count count, Expected expected) {
  CheckResult out{std::move(name), true, ""};
  for (std::size_t n = lo; n <= hi; ++n) {
    const auto [value, saturated] = count(n);
    const std::uint64_t want = expected(n);
    if (!saturated || value != want) {
      out.passed = false;
      out.detail = "n=" + std::to_string(n) + ": got " + std::to_string(value) +
                   (saturated ? "" : " (unsaturated)") + ", expected " +
                   std::to_string(want);
      return out;
    }
  }
  out.detail = "n=" + range_text(lo, hi);
  return out;
}

void require_n_max(std::size_t n_max, std::size_t min, std::string_view suite) {
  if (n_max < min) {
    throw Error(ErrorCode::kDomainError, std::string(suite) + " suite needs n-max >= " +
                                             std::to_string(min));
  }
}

std::vector<CheckResult> sturmian_suite(std::size_t n_max, const SuiteOptions& opt) {
  require_n_max(n_max, 2, "sturmian");
  std::vector<CheckResult> out;
  for (const char* spec : {"fibonacci", "sturmian:2", "complement(fibonacci)"}) {
    Enumerator e(parse_word_spec(spec), opt.max_horizon);
    e.index(2 * opt.scan_window + n_max, n_max);
    out.push_back(compare_range(
        std::string("tau ") + spec, 2, n_max,
        [&](std::size_t n) {
          const PermSet s = e.perm_set(n, opt.scan_window);
          return std::pair{s.count(), s.saturated};
        },
        [](std::size_t n) { return sturmian_tau(n); }));
  }
  return out;
}

std::vector<CheckResult> doubled_sturmian_suite(std::size_t n_max,
                                                const SuiteOptions& opt) {
  require_n_max(n_max, 2, "doubled-sturmian");
  std::vector<CheckResult> out;
  for (const char* spec :
       {"double(fibonacci)", "double(sturmian:2)", "double(complement(fibonacci))"}) {
    WordSource source = parse_word_spec(spec);
    const TauFormula formula(source);
    const std::size_t k = formula.k();
    const std::size_t threshold = 2 * formula.recurrence();
    Enumerator e(std::move(source), opt.max_horizon);
    e.index(2 * opt.scan_window + n_max, n_max);
    std::vector<std::size_t> counts(n_max + 1, 0);
    std::vector<bool> saturated(n_max + 1, false);
    for (std::size_t n = 2; n <= n_max; ++n) {
      const PermSet s = e.perm_set(n, opt.scan_window);
      counts[n] = s.count();
      saturated[n] = s.saturated;
    }
    std::size_t onset = n_max + 1;
    while (onset > 2 && saturated[onset - 1] &&
           counts[onset - 1] == doubled_sturmian_tau(onset - 1, k)) {
      --onset;
    }
    CheckResult check{std::string("tau ") + spec, true, ""};
    std::ostringstream detail;
    detail << "k=" << k << " N=" << formula.recurrence() << " onset=";
    if (onset > n_max) {
      detail << "none";
    } else {
      detail << onset;
    }
    detail << " n-max=" << n_max;
    if (threshold <= n_max && onset > threshold) {
      check.passed = false;
      detail << ": n+2k+1 fails at or beyond 2N, n=" << onset - 1 << " gives "
             << counts[onset - 1];
    } else if (threshold > n_max) {
      detail << " (no tested length reaches 2N)";
    }
    check.detail = detail.str();
    out.push_back(std::move(check));
  }
  return out;
}

std::vector<CheckResult> thue_morse_suite(std::size_t n_max, const SuiteOptions& opt) {
  require_n_max(n_max, 6, "thue-morse");
  std::vector<CheckResult> out;
  WordSource tm = WordSource::thue_morse();
  out.push_back(compare_range(
      "rho thue-morse", 3, n_max,
      [&](std::size_t n) {
        const FactorCount c = factor_complexity(tm, n, opt.scan_window);
        return std::pair{c.count, c.saturated};
      },
      [](std::size_t n) { return tm_rho(n); }));

  Enumerator e(WordSource::thue_morse(), opt.max_horizon);
  e.index(2 * opt.scan_window + n_max + 1, n_max + 1);
  std::vector<PermSet> sets;
  for (std::size_t n = 0; n <= n_max; ++n) {
    sets.push_back(n >= 5 ? e.perm_set(n, opt.scan_window) : PermSet{});
  }
  out.push_back(compare_range(
      "tau thue-morse", 6, n_max,
      [&](std::size_t n) { return std::pair{sets[n].count(), sets[n].saturated}; },
      [](std::size_t n) { return tm_tau(n); }));

  CheckResult census{"same-form census thue-morse", true, ""};
  CheckResult restriction{"restriction types thue-morse", true, ""};
  std::size_t pairs_checked = 0;
  for (std::size_t n = 6; n <= n_max && census.passed; ++n) {
    const Census c = same_form_census(sets[n]);
    if (c.violations != 0) {
      census.passed = false;
      census.detail = "n=" + std::to_string(n) + ": " + std::to_string(c.violations) +
                      " same-form pairs are not complementary";
    }
    for (const auto& group : c.groups) {
      for (std::size_t i = 0; i < group.members.size(); ++i) {
        for (std::size_t j = i + 1; j < group.members.size(); ++j) {
          if (!complementary_pair(group.members[i], group.members[j])) continue;
          ++pairs_checked;
          if (restriction.passed &&
              !restriction_type_check(group.members[i], group.members[j]).ok()) {
            restriction.passed = false;
            restriction.detail = "n=" + std::to_string(n) + ": " +
                                 group.members[i].str() + " / " + group.members[j].str();
          }
        }
      }
    }
  }
  if (census.passed) census.detail = "n=" + range_text(6, n_max);
  if (restriction.passed) {
    restriction.detail = std::to_string(pairs_checked) + " pairs";
  }
  out.push_back(std::move(census));
  out.push_back(std::move(restriction));

  CheckResult classify{"pair classification thue-morse", true, ""};
  std::size_t distinct = 0;
  for (std::size_t n = 5; n + 1 <= n_max; ++n) {
    const PairClassReport r = classify_prop65(sets[n + 1]);
    distinct += r.distinct_pairs;
    if (r.violations != 0) {
      classify.passed = false;
      classify.detail = "n=" + std::to_string(n) + ": " + std::to_string(r.violations) +
                        " pairs are not of type c+1 = " + std::to_string(r.c + 1);
      break;
    }
  }
  if (classify.passed) {
    classify.detail = "n=" + range_text(5, n_max - 1) + ", " + std::to_string(distinct) +
                      " pairs";
  }
  out.push_back(std::move(classify));
  return out;
}

std::vector<CheckResult> doubled_thue_morse_suite(std::size_t n_max,
                                                  const SuiteOptions& opt) {
  require_n_max(n_max, 9, "doubled-thue-morse");
  std::vector<CheckResult> out;
  Enumerator e(WordSource::doubled(WordSource::thue_morse()), opt.max_horizon);
  const std::size_t m_max = 2 * n_max;
  e.index(4 * opt.scan_window + m_max, m_max);
  out.push_back(compare_range(
      "tau double(thue-morse)", 17, m_max,
      [&](std::size_t m) {
        const PermSet s = e.perm_set(m, opt.scan_window);
        return std::pair{s.count(), s.saturated};
      },
      [](std::size_t m) { return doubled_tm_tau(m); }));

  // Parity sets scan twice the window so each parity sees scan_window starts.
  const std::size_t window = 2 * opt.scan_window;
  auto parity_count = [&](std::size_t len, Parity parity) {
    return e.perm_set(len, window, true, parity);
  };
  for (std::size_t n = 9; n <= n_max; ++n) {
    const ParityCardinalities want = expected_parity_cardinalities(n);
    const PermSet ev2n = parity_count(2 * n, Parity::kEven);
    const PermSet ev = parity_count(2 * n - 1, Parity::kEven);
    const PermSet od = parity_count(2 * n - 1, Parity::kOdd);
    const PermSet od2 = parity_count(2 * n - 2, Parity::kOdd);
    const bool all_saturated =
        ev2n.saturated && ev.saturated && od.saturated && od2.saturated;
    const bool counts_ok =
        ev2n.count() == want.even_2n && ev.count() == want.even_2n_minus_1 &&
        od.count() == want.odd_2n_minus_1 && od2.count() == want.odd_2n_minus_2;
    const bool sum_ok = ev.count() + od.count() == doubled_tm_tau(2 * n - 1);
    std::ostringstream detail;
    detail << "even(" << 2 * n << ")=" << ev2n.count() << "/" << want.even_2n
           << " even(" << 2 * n - 1 << ")=" << ev.count() << "/" << want.even_2n_minus_1
           << " odd(" << 2 * n - 1 << ")=" << od.count() << "/" << want.odd_2n_minus_1
           << " odd(" << 2 * n - 2 << ")=" << od2.count() << "/" << want.odd_2n_minus_2;
    if (delta_m_exceptional(n)) detail << " exceptional";
    if (!all_saturated) detail << " unsaturated";
    if (!sum_ok) detail << " parity sum mismatch";
    out.push_back({"parity n=" + std::to_string(n), all_saturated && counts_ok && sum_ok,
                   detail.str()});
  }
  return out;
}

std::vector<CheckResult> bounds_suite(std::size_t n_max, const SuiteOptions& opt) {
  require_n_max(n_max, 2, "bounds");
  std::vector<CheckResult> out;
  for (const char* spec : {"fibonacci", "sturmian:2", "thue-morse"}) {
    WordSource source = parse_word_spec(spec);
    const RunBounds bounds = default_run_bounds(source);
    const std::size_t from = recurrence_bound(source, bounds.k, kDefaultScanWindow).length;
    CheckResult check{std::string("doubling bounds ") + spec, true, ""};
    std::size_t tight = 0;
    for (std::size_t n = from; n <= n_max; ++n) {
      const BoundsReport r = check_bounds(source, n, opt.scan_window, opt.max_horizon);
      if (r.doubled_odd == 2 * r.tau_nk) ++tight;
      if (!r.odd_holds || !r.even_holds) {
        check.passed = false;
        check.detail = "n=" + std::to_string(n) + ": " + std::to_string(r.doubled_odd) +
                       " vs 2*" + std::to_string(r.tau_nk) + ", " +
                       std::to_string(r.doubled_even) + " vs " +
                       std::to_string(r.tau_nk) + "+" + std::to_string(r.tau_nk1);
        break;
      }
    }
    if (check.passed) {
      check.detail = from > n_max ? "no length at or beyond N_k = " + std::to_string(from)
                                  : "n=" + range_text(from, n_max) + ", odd bound tight " +
                                        std::to_string(tight) + " times";
    }
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace

Family classify_family(const WordSource& source) {
  const WordSource& s = strip_complements(source);
  if (s.kind() != WordSource::Kind::kDoubled) return base_family(s);
  switch (base_family(strip_complements(*s.inner()))) {
    case Family::kSturmian: return Family::kDoubledSturmian;
    case Family::kThueMorse: return Family::kDoubledThueMorse;
    default: return Family::kNone;
  }
}

TauFormula::TauFormula(const WordSource& source) : family_(classify_family(source)) {
  if (family_ == Family::kDoubledSturmian) {
    WordSource base = *strip_complements(source).inner();
    const RunBounds bounds = default_run_bounds(base);
    k_ = bounds.k;
    recurrence_ = recurrence_bound(base, k_, kDefaultScanWindow).length;
  }
}

std::optional<std::uint64_t> TauFormula::operator()(std::size_t n) const {
  switch (family_) {
    case Family::kSturmian:
      if (n >= 2) return sturmian_tau(n);
      break;
    case Family::kThueMorse:
      if (n >= 6) return tm_tau(n);
      break;
    case Family::kDoubledSturmian:
      if (n >= 2 * recurrence_) return doubled_sturmian_tau(n, k_);
      break;
    case Family::kDoubledThueMorse:
      if (n >= 17) return doubled_tm_tau(n);
      break;
    case Family::kNone:
      break;
  }
  return std::nullopt;
}

std::vector<std::string_view> suite_names() {
  return {"sturmian", "doubled-sturmian", "thue-morse", "doubled-thue-morse", "bounds"};
}

std::vector<CheckResult> run_suite(std::string_view suite, std::size_t n_max,
                                   const SuiteOptions& options) {
  if (suite == "sturmian") return sturmian_suite(n_max, options);
  if (suite == "doubled-sturmian") return doubled_sturmian_suite(n_max, options);
  if (suite == "thue-morse") return thue_morse_suite(n_max, options);
  if (suite == "doubled-thue-morse") return doubled_thue_morse_suite(n_max, options);
  if (suite == "bounds") return bounds_suite(n_max, options);
  throw Error(ErrorCode::kParseError, "unknown suite '" + std::string(suite) + "'");
}

}  // namespace permlex
