#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace permlex {

using Letter = std::uint8_t;

inline constexpr std::size_t kDefaultHardLimit = std::size_t{1} << 24;

/// A finite binary word. Letters are stored as the characters '0' and '1'
/// so that factors can be hashed and printed without conversion.
class FiniteWord {
 public:
  FiniteWord() = default;
  explicit FiniteWord(std::string digits);

  std::size_t size() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }
  Letter operator[](std::size_t i) const noexcept {
    return static_cast<Letter>(digits_[i] - '0');
  }
  const std::string& str() const noexcept { return digits_; }

  FiniteWord substr(std::size_t pos, std::size_t len) const;

  friend bool operator==(const FiniteWord&, const FiniteWord&) = default;
  friend auto operator<=>(const FiniteWord&, const FiniteWord&) = default;

 private:
  std::string digits_;
};

FiniteWord apply_doubling(const FiniteWord& word);
FiniteWord apply_complement(const FiniteWord& word);

struct Morphism {
  std::array<std::string, 2> images;  // images of 0 and 1, as digit strings
};

Morphism thue_morse_morphism();
Morphism fibonacci_morphism();

/// Lazily extendable description of an infinite (or, for explicit words,
/// finite) binary word. The generated prefix only ever grows.
class WordSource {
 public:
  enum class Kind { kMorphic, kSturmian, kExplicit, kDoubled, kComplemented };

  static WordSource morphic(Morphism morphism, Letter seed,
                            std::size_t hard_limit = kDefaultHardLimit);
  static WordSource sturmian(std::vector<std::uint32_t> directive,
                             std::size_t hard_limit = kDefaultHardLimit);
  static WordSource from_word(FiniteWord word);
  static WordSource doubled(WordSource inner);
  static WordSource complemented(WordSource inner);

  static WordSource fibonacci();
  static WordSource thue_morse();

  WordSource(const WordSource& other);
  WordSource& operator=(const WordSource& other);
  WordSource(WordSource&&) noexcept = default;
  WordSource& operator=(WordSource&&) noexcept = default;
  ~WordSource() = default;

  Kind kind() const noexcept { return kind_; }
  const WordSource* inner() const noexcept { return inner_.get(); }
  const Morphism& morphism() const noexcept { return morphism_; }
  Letter seed() const noexcept { return seed_; }
  const std::vector<std::uint32_t>& directive() const noexcept {
    return directive_;
  }

  /// Word-spec string that reparses to an equivalent source.
  std::string describe() const;

  bool extendable() const noexcept;
  std::size_t hard_limit() const noexcept { return hard_limit_; }
  void set_hard_limit(std::size_t limit);

  /// Letters generated so far (at least the longest prefix ever requested).
  std::size_t generated() const noexcept { return prefix_.size(); }

  /// Makes at least `length` letters available and returns the whole
  /// generated buffer as digits. The buffer may be longer than `length`.
  const std::string& ensure(std::size_t length);

  /// Read-only view of the letters generated so far.
  std::string_view frozen() const noexcept { return prefix_; }

  Letter at(std::size_t i) {
    return static_cast<Letter>(ensure(i + 1)[i] - '0');
  }

 private:
  WordSource(Kind kind, std::size_t hard_limit);
  void grow(std::size_t length);

  Kind kind_;
  std::size_t hard_limit_;
  std::string prefix_;

  Morphism morphism_{};
  Letter seed_ = 0;
  std::size_t read_pos_ = 0;

  std::vector<std::uint32_t> directive_;
  std::size_t sturmian_step_ = 0;
  std::uint64_t len_cur_ = 1;
  std::uint64_t len_prev_ = 1;

  std::unique_ptr<WordSource> inner_;
};

FiniteWord extend_prefix(WordSource& source, std::size_t target_len);

WordSource sturmian_characteristic(std::vector<std::uint32_t> directive);
WordSource doubled(WordSource source);
WordSource complemented(WordSource source);

/// Maximal runs of each letter over an inspected prefix. Empirical: the
/// values are only certified over `certified_over` letters.
struct RunBounds {
  std::size_t k0 = 1;
  std::size_t k1 = 1;
  std::size_t k = 1;
  std::size_t certified_over = 0;

  std::size_t class_count() const noexcept { return k0 + k1; }
};

RunBounds run_bounds(WordSource& source, std::size_t inspect_len);

std::vector<FiniteWord> factors(WordSource& source, std::size_t n,
                                std::size_t window_len);

struct FactorCount {
  std::size_t n = 0;
  std::size_t count = 0;
  std::size_t window_len = 0;
  bool saturated = false;
};

/// Counts distinct length-n factors, doubling the window until the count is
/// stable across one doubling (or the hard limit is reached).
FactorCount factor_complexity(WordSource& source, std::size_t n,
                              std::size_t window_len, bool saturate = true);

struct RecurrenceBound {
  std::size_t length = 0;          // empirical N_k
  std::size_t certified_over = 0;  // window inspected
  bool periodic_suspect = false;   // at most k factors of length k
};

RecurrenceBound recurrence_bound(WordSource& source, std::size_t k,
                                 std::size_t window_len);

}  // namespace permlex
