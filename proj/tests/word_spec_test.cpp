#include <gtest/gtest.h>

#include "permlex/error.hpp"
#include "permlex/word_spec.hpp"

using namespace permlex;

namespace {

std::string prefix_of(const std::string& spec, std::size_t n) {
  WordSource s = parse_word_spec(spec);
  return extend_prefix(s, n).str();
}

}  // namespace

TEST(WordSpec, Names) {
  EXPECT_EQ(prefix_of("thue-morse", 8), "01101001");
  EXPECT_EQ(prefix_of("fibonacci", 13), "0100101001001");
  EXPECT_EQ(prefix_of("sturmian:1", 13), "0100101001001");
  EXPECT_EQ(prefix_of("explicit:0110", 4), "0110");
  EXPECT_EQ(prefix_of("morphic:01,10", 8), "01101001");
  EXPECT_EQ(prefix_of("morphic:01,10@1", 4), "1001");
}

TEST(WordSpec, Nesting) {
  EXPECT_EQ(prefix_of("double(explicit:01)", 4), "0011");
  EXPECT_EQ(prefix_of("double(thue-morse)", 8), "00111100");
  EXPECT_EQ(prefix_of("complement(thue-morse)", 8), "10010110");
  EXPECT_EQ(prefix_of("complement(complement(fibonacci))", 13), "0100101001001");
  EXPECT_EQ(prefix_of("double(complement(double(explicit:01)))", 8), "11110000");
}

TEST(WordSpec, DescribeReparses) {
  for (const char* spec :
       {"thue-morse", "fibonacci", "sturmian:2,1,3", "explicit:0010", "double(fibonacci)",
        "complement(double(sturmian:2))", "morphic:001,1@0"}) {
    WordSource s = parse_word_spec(spec);
    EXPECT_EQ(s.describe(), spec);
    WordSource again = parse_word_spec(s.describe());
    const std::size_t len = s.extendable() ? 64 : s.generated();
    EXPECT_EQ(extend_prefix(again, len), extend_prefix(s, len));
  }
}

TEST(WordSpec, ToleratesSurroundingSpace) {
  EXPECT_EQ(prefix_of(" double( thue-morse ) ", 4), "0011");
}

TEST(WordSpec, Errors) {
  for (const char* bad : {"", "thue", "double(fibonacci", "double()", "sturmian:",
                          "sturmian:1,,2", "explicit:", "explicit:012", "fibonacci)",
                          "complement", "morphic:01", "sturmian:x"}) {
    try {
      parse_word_spec(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_TRUE(e.code() == ErrorCode::kParseError ||
                  e.code() == ErrorCode::kInvalidWord ||
                  e.code() == ErrorCode::kInvalidDirective)
          << bad << ": " << e.what();
    }
  }
}

TEST(WordSpec, SemanticErrorsKeepTheirCode) {
  try {
    parse_word_spec("sturmian:1,0");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidDirective);
  }
  try {
    parse_word_spec("morphic:10,01");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidMorphism);
  }
}
