#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracle.hpp"
#include "permlex/error.hpp"
#include "permlex/shift_order.hpp"
#include "permlex/word_spec.hpp"

using namespace permlex;

namespace {

oracle::Ranks ranks(const Permutation& p) { return {p.ranks().begin(), p.ranks().end()}; }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kDomainError;
}

}  // namespace

TEST(CompareShifts, Examples) {
  WordSource fib = WordSource::fibonacci();
  EXPECT_EQ(compare_shifts(fib, 2, 1).order, Order::kLess);

  WordSource tm = WordSource::thue_morse();
  const ShiftComparison c = compare_shifts(tm, 0, 3);
  EXPECT_EQ(c.order, Order::kGreater);
  EXPECT_EQ(c.witness, 2u);

  // T[0] = 0, T[1] = 1: decided by the first letter.
  const ShiftComparison first = compare_shifts(tm, 0, 1);
  EXPECT_EQ(first.order, Order::kLess);
  EXPECT_EQ(first.witness, 0u);
}

TEST(CompareShifts, AntisymmetricAndMatchesStringCompare) {
  WordSource tm = WordSource::thue_morse();
  const std::string w = oracle::prefix(oracle::thue_morse_letter, 1 << 14);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t a = rng() % 4000, b = rng() % 4000;
    if (a == b) continue;
    const auto ab = compare_shifts(tm, a, b);
    const auto ba = compare_shifts(tm, b, a);
    EXPECT_NE(ab.order, ba.order);
    EXPECT_EQ(ab.witness, ba.witness);
    const bool less = w.compare(a, 4096, w, b, 4096) < 0;
    EXPECT_EQ(ab.order == Order::kLess, less);
    EXPECT_NE(w[a + ab.witness], w[b + ab.witness]);
    EXPECT_EQ(w.compare(a, ab.witness, w, b, ab.witness), 0);
  }
}

TEST(CompareShifts, Errors) {
  WordSource tm = WordSource::thue_morse();
  EXPECT_EQ(code_of([&] { compare_shifts(tm, 5, 5); }), ErrorCode::kPrecondition);
  WordSource periodic = parse_word_spec("explicit:010101010101");
  EXPECT_EQ(code_of([&] { compare_shifts(periodic, 0, 2); }), ErrorCode::kPrefixTooShort);
  WordSource fib = WordSource::fibonacci();
  // Shifts 0 and 1597 share a prefix far longer than 8 letters.
  EXPECT_EQ(code_of([&] { compare_shifts(fib, 0, 1597, 8); }),
            ErrorCode::kHorizonExhausted);
}

TEST(Subpermutation, Examples) {
  WordSource fib = WordSource::fibonacci();
  EXPECT_EQ(subpermutation(fib, 3, 3).str(), "(2 3 1)");
  WordSource tm = WordSource::thue_morse();
  EXPECT_EQ(subpermutation(tm, 0, 9).str(), "(4 9 7 2 6 1 3 8 5)");
  EXPECT_EQ(subpermutation(tm, 12, 9).str(), "(5 9 7 2 6 1 3 8 4)");
  EXPECT_EQ(subpermutation(tm, 77, 1).str(), "(1)");
  EXPECT_EQ(code_of([&] { subpermutation(tm, 0, 0); }), ErrorCode::kPrecondition);
}

TEST(SuffixArray, MatchesNaiveSort) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 300;
    std::string s(n, '0');
    for (auto& c : s) c = (rng() & 1) ? '1' : '0';
    if (t % 3 == 0) s = oracle::prefix(oracle::fibonacci_letter, n);
    std::vector<std::uint32_t> expect(n);
    std::iota(expect.begin(), expect.end(), 0);
    std::sort(expect.begin(), expect.end(), [&](auto a, auto b) {
      return s.compare(a, std::string::npos, s, b, std::string::npos) < 0;
    });
    const auto sa = suffix_array(s);
    ASSERT_EQ(sa, expect) << s;
    const auto lcp = lcp_array(s, sa);
    ASSERT_EQ(lcp.size(), n);
    for (std::size_t i = 1; i < n; ++i) {
      std::uint32_t l = 0;
      while (sa[i - 1] + l < n && sa[i] + l < n && s[sa[i - 1] + l] == s[sa[i] + l]) ++l;
      EXPECT_EQ(lcp[i], l);
    }
  }
  EXPECT_TRUE(suffix_array("").empty());
}

class IndexAgainstOracle : public ::testing::TestWithParam<const char*> {};

TEST_P(IndexAgainstOracle, WindowsMatchNaiveRanking) {
  const std::string spec = GetParam();
  WordSource source = parse_word_spec(spec);
  const std::string w = extend_prefix(source, 12000).str();
  ShiftIndex index(source, 3000, 64);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 1500; ++t) {
    const std::size_t n = 1 + rng() % 64;
    const std::size_t a = rng() % (3000 - n);
    ASSERT_EQ(ranks(index.window(a, n)), oracle::subpermutation(w, a, n, 2048))
        << spec << " a=" << a << " n=" << n;
  }
}

TEST_P(IndexAgainstOracle, AgreesWithDirectComparisonRoute) {
  WordSource source = parse_word_spec(GetParam());
  ShiftIndex index(source, 1500, 40);
  for (std::size_t a = 0; a + 40 <= 1500; a += 37) {
    EXPECT_EQ(index.window(a, 40), subpermutation(source, a, 40));
  }
}

INSTANTIATE_TEST_SUITE_P(Words, IndexAgainstOracle,
                         ::testing::Values("thue-morse", "fibonacci", "sturmian:2",
                                           "double(thue-morse)", "double(fibonacci)",
                                           "complement(sturmian:1,3)"));

TEST(ShiftIndex, FibonacciFarApartSharingLongPrefixesIsFine) {
  WordSource fib = WordSource::fibonacci();
  // Shifts 0 and 10946 agree on far more than the horizon but never share a window.
  EXPECT_NO_THROW(ShiftIndex(fib, 20000, 64, 256));
  // 143 and 198 do share one, and agree on 64 letters.
  EXPECT_THROW(ShiftIndex(fib, 20000, 64, 64), Error);
}

TEST(ShiftIndex, HorizonTooSmallForWindow) {
  WordSource fib = WordSource::fibonacci();
  EXPECT_EQ(code_of([&] { ShiftIndex(fib, 2000, 200, 16); }),
            ErrorCode::kHorizonExhausted);
}

TEST(ShiftIndex, PeriodicWordIsRejected) {
  std::string alt;
  for (int i = 0; i < 400; ++i) alt += "01";
  WordSource periodic = WordSource::from_word(FiniteWord(alt));
  EXPECT_EQ(code_of([&] { ShiftIndex(periodic, 100, 10, 64); }),
            ErrorCode::kHorizonExhausted);
}

TEST(ShiftIndex, WindowPreconditions) {
  WordSource tm = WordSource::thue_morse();
  ShiftIndex index(tm, 100, 10);
  EXPECT_EQ(code_of([&] { index.window(95, 10); }), ErrorCode::kPrecondition);
  EXPECT_EQ(code_of([&] { index.window(0, 11); }), ErrorCode::kPrecondition);
  EXPECT_EQ(index.positions(), 100u);
  EXPECT_TRUE(index.less(0, 1));
}
