#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "permlex/error.hpp"
#include "permlex/perm_set.hpp"
#include "permlex/word_spec.hpp"

using namespace permlex;

namespace {

std::set<oracle::Ranks> as_ranks(const PermSet& s) {
  std::set<oracle::Ranks> out;
  for (const auto& p : s.members) out.insert({p.ranks().begin(), p.ranks().end()});
  return out;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST(PermSet, Examples) {
  WordSource fib = WordSource::fibonacci();
  EXPECT_EQ(perm_set(fib, 5).count(), 5u);
  WordSource tm = WordSource::thue_morse();
  const PermSet six = perm_set(tm, 6);
  EXPECT_EQ(six.count(), 16u);
  EXPECT_TRUE(six.saturated);
  const PermSet one = perm_set(tm, 1);
  ASSERT_EQ(one.count(), 1u);
  EXPECT_EQ(one.members[0].str(), "(1)");
}

TEST(PermSet, MatchesNaiveEnumeration) {
  const std::string tm = oracle::prefix(oracle::thue_morse_letter, 6000);
  const std::string fib = oracle::prefix(oracle::fibonacci_letter, 6000);
  WordSource t = WordSource::thue_morse();
  WordSource f = WordSource::fibonacci();
  for (std::size_t n : {2u, 5u, 9u, 13u, 24u}) {
    EXPECT_EQ(as_ranks(perm_set(t, n, 1024, false)), oracle::perm_set(tm, n, 1024, 512));
    EXPECT_EQ(as_ranks(perm_set(f, n, 1024, false)), oracle::perm_set(fib, n, 1024, 512));
  }
}

TEST(PermSet, InvariantsOnSaturatedCounts) {
  for (const char* spec : {"thue-morse", "fibonacci", "sturmian:2", "double(thue-morse)"}) {
    WordSource s = parse_word_spec(spec);
    for (std::size_t n = 2; n <= 24; ++n) {
      const PermSet set = perm_set(s, n, 512);
      ASSERT_TRUE(set.saturated);
      EXPECT_TRUE(std::is_sorted(set.members.begin(), set.members.end()));
      EXPECT_TRUE(std::adjacent_find(set.members.begin(), set.members.end()) ==
                  set.members.end());
      EXPECT_LE(set.count(), set.scan_window);
      if (n <= 20) {
        EXPECT_LE(set.count(), factorial(n));
      }
      const FactorCount rho = factor_complexity(s, n - 1, 4096);
      EXPECT_LE(rho.count, set.count()) << spec << " n=" << n;
      // saturated => one more doubling changes nothing
      const PermSet wider = perm_set(s, n, 2 * set.scan_window, false);
      EXPECT_EQ(wider.count(), set.count());
    }
  }
}

TEST(PermSet, ComplementHasSameCounts) {
  for (const char* spec : {"thue-morse", "fibonacci", "sturmian:2", "double(fibonacci)"}) {
    WordSource s = parse_word_spec(spec);
    WordSource c = complemented(parse_word_spec(spec));
    Enumerator es(s), ec(c);
    es.index(4096 + 40, 40);
    ec.index(4096 + 40, 40);
    for (std::size_t n = 1; n <= 40; ++n) {
      const PermSet a = es.perm_set(n, 1024);
      const PermSet b = ec.perm_set(n, 1024);
      ASSERT_TRUE(a.saturated && b.saturated);
      EXPECT_EQ(a.count(), b.count()) << spec << " n=" << n;
    }
  }
}

TEST(PermSet, UnsaturatedWhenIndexRunsOut) {
  WordSource tm = WordSource::thue_morse();
  ShiftIndex index(tm, 40, 20);
  const PermSet s = perm_set(index, 20, 16, true);
  EXPECT_FALSE(s.saturated);
  EXPECT_EQ(s.scan_window, 16u);
}

TEST(PermSet, LimitAndPreconditionErrors) {
  WordSource tm = WordSource::thue_morse();
  ShiftIndex index(tm, 40, 20);
  try {
    perm_set(index, 20, 30, false);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLimitExceeded);
  }
  EXPECT_THROW(perm_set(tm, 0), Error);
  WordSource capped = WordSource::thue_morse();
  capped.set_hard_limit(3000);
  try {
    perm_set(capped, 10, 4096);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLimitExceeded);
  }
}

TEST(PermSet, SaturationStopsAtHardLimit) {
  WordSource tm = WordSource::thue_morse();
  tm.set_hard_limit(8192);
  const PermSet s = perm_set(tm, 10, 1024, true, 1024);
  EXPECT_TRUE(s.saturated);
  EXPECT_EQ(s.count(), 32u);
}

TEST(ParitySets, Examples) {
  WordSource dt = doubled(WordSource::thue_morse());
  const PermSet even = perm_set_parity(dt, 18, Parity::kEven);
  const PermSet odd = perm_set_parity(dt, 18, Parity::kOdd);
  EXPECT_EQ(even.count(), 34u);
  EXPECT_EQ(odd.count(), 36u);
  std::vector<Permutation> both;
  std::set_intersection(even.members.begin(), even.members.end(), odd.members.begin(),
                        odd.members.end(), std::back_inserter(both));
  EXPECT_TRUE(both.empty());
  EXPECT_EQ(perm_set(dt, 18).count(), 70u);
}

TEST(ParitySets, MatchNaiveEnumeration) {
  const std::string dt = oracle::doubled(oracle::prefix(oracle::thue_morse_letter, 4000));
  WordSource s = doubled(WordSource::thue_morse());
  for (std::size_t n : {16u, 17u, 18u, 31u}) {
    EXPECT_EQ(as_ranks(perm_set_parity(s, n, Parity::kEven, 2048, false)),
              oracle::perm_set(dt, n, 2048, 1024, 2, 0));
    EXPECT_EQ(as_ranks(perm_set_parity(s, n, Parity::kOdd, 2048, false)),
              oracle::perm_set(dt, n, 2048, 1024, 2, 1));
  }
}

TEST(ParitySets, EvenAndOddDisjointBeyondTwiceRecurrence) {
  WordSource s = doubled(WordSource::fibonacci());
  for (std::size_t n = 13; n <= 40; ++n) {
    const PermSet even = perm_set_parity(s, n, Parity::kEven, 1024);
    const PermSet odd = perm_set_parity(s, n, Parity::kOdd, 1024);
    std::vector<Permutation> both;
    std::set_intersection(even.members.begin(), even.members.end(), odd.members.begin(),
                          odd.members.end(), std::back_inserter(both));
    EXPECT_TRUE(both.empty()) << n;
    EXPECT_EQ(even.count() + odd.count(), perm_set(s, n, 1024).count()) << n;
  }
}

TEST(ParitySets, WrongSource) {
  WordSource tm = WordSource::thue_morse();
  try {
    perm_set_parity(tm, 8, Parity::kEven);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWrongSource);
  }
  WordSource cd = complemented(doubled(WordSource::thue_morse()));
  EXPECT_THROW(perm_set_parity(cd, 8, Parity::kEven), Error);
}

TEST(Enumerator, ReusesAndGrowsIndex) {
  Enumerator e(WordSource::thue_morse());
  const PermSet a = e.perm_set(6, 256);
  const PermSet b = e.perm_set(30, 256);
  const PermSet c = e.perm_set(6, 256);
  EXPECT_EQ(a.count(), 16u);
  EXPECT_EQ(c.count(), 16u);
  WordSource tm = WordSource::thue_morse();
  EXPECT_EQ(b.count(), perm_set(tm, 30, 256).count());
}

TEST(PermSetCsv, Rows) {
  WordSource tm = WordSource::thue_morse();
  const PermSet s = perm_set(tm, 6, 64);
  EXPECT_EQ(perm_set_csv_header(), "n,count,scan_window,saturated");
  EXPECT_EQ(perm_set_csv_row(s), "6,16," + std::to_string(s.scan_window) + ",true");
}
