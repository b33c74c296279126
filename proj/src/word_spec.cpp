#include "permlex/word_spec.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "permlex/error.hpp"

namespace permlex {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  WordSource parse() {
    WordSource source = spec();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return source;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::kParseError, why + " at offset " +
                                            std::to_string(pos_) + " in '" +
                                            std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool consume(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint32_t number() {
    std::string d = digits();
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), value);
    if (ec != std::errc{} || ptr != d.data() + d.size()) fail("number out of range");
    return value;
  }

  WordSource spec() {
    if (consume("fibonacci")) return WordSource::fibonacci();
    if (consume("thue-morse")) return WordSource::thue_morse();
    if (consume("sturmian:")) {
      std::vector<std::uint32_t> directive{number()};
      while (consume(",")) directive.push_back(number());
      return WordSource::sturmian(std::move(directive));
    }
    if (consume("explicit:")) return WordSource::from_word(FiniteWord(digits()));
    if (consume("morphic:")) {
      std::string zero = digits();
      expect(',');
      std::string one = digits();
      Letter seed = 0;
      if (consume("@")) seed = static_cast<Letter>(number());
      return WordSource::morphic(Morphism{{zero, one}}, seed);
    }
    if (consume("double")) {
      expect('(');
      WordSource inner = spec();
      expect(')');
      return WordSource::doubled(std::move(inner));
    }
    if (consume("complement")) {
      expect('(');
      WordSource inner = spec();
      expect(')');
      return WordSource::complemented(std::move(inner));
    }
    fail("unknown word spec");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

WordSource parse_word_spec(std::string_view text) { return Parser(text).parse(); }

}  // namespace permlex
