#include "permlex/word.hpp"

#include <algorithm>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "permlex/error.hpp"

namespace permlex {

namespace {

bool is_binary(std::string_view digits) {
  return std::all_of(digits.begin(), digits.end(),
                     [](char c) { return c == '0' || c == '1'; });
}

char flip(char c) { return c == '0' ? '1' : '0'; }

std::size_t count_distinct(std::string_view letters, std::size_t n,
                           std::size_t window_len) {
  std::unordered_set<std::string_view> seen;
  for (std::size_t i = 0; i + n <= window_len; ++i) {
    seen.insert(letters.substr(i, n));
  }
  return seen.size();
}

}  // namespace

FiniteWord::FiniteWord(std::string digits) : digits_(std::move(digits)) {
  if (!is_binary(digits_)) {
    throw Error(ErrorCode::kInvalidWord,
                "letters must be 0 or 1, got '" + digits_ + "'");
  }
}

FiniteWord FiniteWord::substr(std::size_t pos, std::size_t len) const {
  if (pos + len > digits_.size()) {
    throw Error(ErrorCode::kPrefixTooShort, "factor runs past end of word");
  }
  return FiniteWord(digits_.substr(pos, len));
}

FiniteWord apply_doubling(const FiniteWord& word) {
  std::string out;
  out.reserve(2 * word.size());
  for (char c : word.str()) {
    out.push_back(c);
    out.push_back(c);
  }
  return FiniteWord(std::move(out));
}

FiniteWord apply_complement(const FiniteWord& word) {
  std::string out = word.str();
  std::transform(out.begin(), out.end(), out.begin(), flip);
  return FiniteWord(std::move(out));
}

Morphism thue_morse_morphism() { return Morphism{{"01", "10"}}; }
Morphism fibonacci_morphism() { return Morphism{{"01", "0"}}; }

WordSource::WordSource(Kind kind, std::size_t hard_limit)
    : kind_(kind), hard_limit_(hard_limit) {}

WordSource::WordSource(const WordSource& other)
    : kind_(other.kind_),
      hard_limit_(other.hard_limit_),
      prefix_(other.prefix_),
      morphism_(other.morphism_),
      seed_(other.seed_),
      read_pos_(other.read_pos_),
      directive_(other.directive_),
      sturmian_step_(other.sturmian_step_),
      len_cur_(other.len_cur_),
      len_prev_(other.len_prev_),
      inner_(other.inner_ ? std::make_unique<WordSource>(*other.inner_)
                          : nullptr) {}

WordSource& WordSource::operator=(const WordSource& other) {
  if (this != &other) {
    WordSource copy(other);
    *this = std::move(copy);
  }
  return *this;
}

WordSource WordSource::morphic(Morphism morphism, Letter seed,
                               std::size_t hard_limit) {
  if (seed > 1) {
    throw Error(ErrorCode::kInvalidMorphism, "seed letter must be 0 or 1");
  }
  for (const auto& image : morphism.images) {
    if (image.empty() || !is_binary(image)) {
      throw Error(ErrorCode::kInvalidMorphism,
                  "images must be nonempty binary words");
    }
  }
  const std::string& seed_image = morphism.images[seed];
  if (seed_image.size() < 2 || seed_image[0] != static_cast<char>('0' + seed)) {
    throw Error(ErrorCode::kInvalidMorphism,
                "morphism is not prolongable on the seed letter");
  }
  WordSource source(Kind::kMorphic, hard_limit);
  source.morphism_ = std::move(morphism);
  source.seed_ = seed;
  return source;
}

WordSource WordSource::sturmian(std::vector<std::uint32_t> directive,
                                std::size_t hard_limit) {
  if (directive.empty()) {
    throw Error(ErrorCode::kInvalidDirective, "directive is empty");
  }
  for (auto d : directive) {
    if (d == 0) {
      throw Error(ErrorCode::kInvalidDirective,
                  "directive entries must be positive");
    }
  }
  WordSource source(Kind::kSturmian, hard_limit);
  source.directive_ = std::move(directive);
  return source;
}

WordSource WordSource::from_word(FiniteWord word) {
  WordSource source(Kind::kExplicit, std::max(word.size(), kDefaultHardLimit));
  source.prefix_ = word.str();
  return source;
}

WordSource WordSource::doubled(WordSource inner) {
  WordSource source(Kind::kDoubled, inner.hard_limit());
  source.inner_ = std::make_unique<WordSource>(std::move(inner));
  return source;
}

WordSource WordSource::complemented(WordSource inner) {
  WordSource source(Kind::kComplemented, inner.hard_limit());
  source.inner_ = std::make_unique<WordSource>(std::move(inner));
  return source;
}

WordSource WordSource::fibonacci() { return morphic(fibonacci_morphism(), 0); }
WordSource WordSource::thue_morse() {
  return morphic(thue_morse_morphism(), 0);
}

std::string WordSource::describe() const {
  switch (kind_) {
    case Kind::kMorphic: {
      const auto& im = morphism_.images;
      if (seed_ == 0 && im[0] == "01" && im[1] == "10") return "thue-morse";
      if (seed_ == 0 && im[0] == "01" && im[1] == "0") return "fibonacci";
      return "morphic:" + im[0] + "," + im[1] + "@" +
             std::to_string(static_cast<int>(seed_));
    }
    case Kind::kSturmian: {
      std::string out = "sturmian:";
      for (std::size_t i = 0; i < directive_.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(directive_[i]);
      }
      return out;
    }
    case Kind::kExplicit:
      return "explicit:" + prefix_;
    case Kind::kDoubled:
      return "double(" + inner_->describe() + ")";
    case Kind::kComplemented:
      return "complement(" + inner_->describe() + ")";
  }
  return {};
}

bool WordSource::extendable() const noexcept {
  switch (kind_) {
    case Kind::kExplicit:
      return false;
    case Kind::kDoubled:
    case Kind::kComplemented:
      return inner_->extendable();
    default:
      return true;
  }
}

void WordSource::set_hard_limit(std::size_t limit) {
  if (kind_ == Kind::kExplicit) return;
  hard_limit_ = limit;
  if (inner_) inner_->set_hard_limit(limit);
}

const std::string& WordSource::ensure(std::size_t length) {
  if (length <= prefix_.size()) return prefix_;
  if (kind_ == Kind::kExplicit) {
    throw Error(ErrorCode::kPrefixTooShort,
                "explicit word has " + std::to_string(prefix_.size()) +
                    " letters, " + std::to_string(length) + " requested");
  }
  if (length > hard_limit_) {
    throw Error(ErrorCode::kLimitExceeded,
                std::to_string(length) + " letters requested, hard limit is " +
                    std::to_string(hard_limit_));
  }
  grow(length);
  return prefix_;
}

void WordSource::grow(std::size_t length) {
  switch (kind_) {
    case Kind::kMorphic: {
      if (prefix_.empty()) {
        prefix_ = morphism_.images[seed_];
        read_pos_ = 1;
      }
      while (prefix_.size() < length) {
        prefix_ += morphism_.images[prefix_[read_pos_++] - '0'];
      }
      break;
    }
    case Kind::kSturmian: {
      // s_{-1} = 1, s_0 = 0, s_n = s_{n-1}^{d_n} s_{n-2}. Every s_n with
      // n >= 0 is a prefix of the limit, so only their lengths are kept and
      // the letters of s_{n+1} are copied out of the prefix itself.
      if (prefix_.empty()) {
        prefix_ = "0";
        len_cur_ = 1;
        len_prev_ = 1;
        sturmian_step_ = 0;
      }
      prefix_.reserve(length);
      while (prefix_.size() < length) {
        const std::uint64_t d = directive_[sturmian_step_ % directive_.size()];
        const std::uint64_t block = d * len_cur_;
        const std::uint64_t target = block + len_prev_;
        const std::uint64_t x = prefix_.size();
        if (x >= target) {
          len_prev_ = len_cur_;
          len_cur_ = target;
          ++sturmian_step_;
          continue;
        }
        char c;
        if (x < block) {
          c = prefix_[x % len_cur_];
        } else {
          c = sturmian_step_ == 0 ? '1' : prefix_[x - block];
        }
        prefix_.push_back(c);
      }
      break;
    }
    case Kind::kDoubled: {
      const std::string& in = inner_->ensure((length + 1) / 2);
      while (prefix_.size() < length) {
        char c = in[prefix_.size() / 2];
        prefix_.push_back(c);
        prefix_.push_back(c);
      }
      break;
    }
    case Kind::kComplemented: {
      const std::string& in = inner_->ensure(length);
      while (prefix_.size() < length) prefix_.push_back(flip(in[prefix_.size()]));
      break;
    }
    case Kind::kExplicit:
      break;
  }
}

FiniteWord extend_prefix(WordSource& source, std::size_t target_len) {
  return FiniteWord(source.ensure(target_len).substr(0, target_len));
}

WordSource sturmian_characteristic(std::vector<std::uint32_t> directive) {
  return WordSource::sturmian(std::move(directive));
}

WordSource doubled(WordSource source) {
  return WordSource::doubled(std::move(source));
}

WordSource complemented(WordSource source) {
  return WordSource::complemented(std::move(source));
}

RunBounds run_bounds(WordSource& source, std::size_t inspect_len) {
  if (inspect_len < 2) {
    throw Error(ErrorCode::kPrecondition, "run_bounds needs at least 2 letters");
  }
  std::string_view letters = source.ensure(inspect_len);
  letters = letters.substr(0, inspect_len);
  std::array<std::size_t, 2> longest{0, 0};
  std::size_t run = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    run = (i > 0 && letters[i] == letters[i - 1]) ? run + 1 : 1;
    auto& best = longest[letters[i] - '0'];
    best = std::max(best, run);
  }
  if (longest[0] == 0 || longest[1] == 0) {
    throw Error(ErrorCode::kPrecondition,
                "inspected prefix uses only one letter");
  }
  RunBounds out;
  out.k0 = longest[0];
  out.k1 = longest[1];
  out.k = std::max(out.k0, out.k1);
  out.certified_over = inspect_len;
  return out;
}

std::vector<FiniteWord> factors(WordSource& source, std::size_t n,
                                std::size_t window_len) {
  if (n == 0 || window_len < n) {
    throw Error(ErrorCode::kPrecondition, "factors needs 1 <= n <= window");
  }
  std::string_view letters = source.ensure(window_len);
  std::unordered_set<std::string_view> seen;
  for (std::size_t i = 0; i + n <= window_len; ++i) {
    seen.insert(letters.substr(i, n));
  }
  std::vector<FiniteWord> out;
  out.reserve(seen.size());
  for (auto f : seen) out.emplace_back(std::string(f));
  std::sort(out.begin(), out.end());
  return out;
}

FactorCount factor_complexity(WordSource& source, std::size_t n,
                              std::size_t window_len, bool saturate) {
  if (n == 0 || window_len < n) {
    throw Error(ErrorCode::kPrecondition, "factor count needs 1 <= n <= window");
  }
  std::size_t count = count_distinct(source.ensure(window_len), n, window_len);
  if (!saturate) return {n, count, window_len, false};
  for (;;) {
    const std::size_t next = 2 * window_len;
    const bool can_grow = next <= source.hard_limit() &&
                          (source.extendable() || next <= source.generated());
    if (!can_grow) return {n, count, window_len, false};
    const std::size_t next_count = count_distinct(source.ensure(next), n, next);
    window_len = next;
    if (next_count == count) return {n, count, window_len, true};
    count = next_count;
  }
}

RecurrenceBound recurrence_bound(WordSource& source, std::size_t k,
                                 std::size_t window_len) {
  if (k == 0 || window_len < 2 * k) {
    throw Error(ErrorCode::kPrecondition,
                "recurrence_bound needs k >= 1 and window >= 2k");
  }
  std::string_view letters = source.ensure(window_len);
  letters = letters.substr(0, window_len);

  std::unordered_map<std::string_view, std::size_t> ids;
  std::vector<std::size_t> id_at;
  id_at.reserve(window_len - k + 1);
  for (std::size_t i = 0; i + k <= window_len; ++i) {
    auto [it, inserted] = ids.try_emplace(letters.substr(i, k), ids.size());
    id_at.push_back(it->second);
  }
  const std::size_t distinct = ids.size();

  std::unordered_set<std::size_t> first_half;
  for (std::size_t i = 0; i + k <= window_len / 2; ++i) first_half.insert(id_at[i]);
  if (first_half.size() != distinct) {
    throw Error(ErrorCode::kNotSaturated,
                "length-" + std::to_string(k) +
                    " factors still appear in the second half of the window");
  }

  auto every_window_complete = [&](std::size_t len) {
    const std::size_t span = len - k + 1;  // factor starts per window
    std::vector<std::size_t> counts(distinct, 0);
    std::size_t present = 0;
    for (std::size_t i = 0; i < id_at.size(); ++i) {
      if (counts[id_at[i]]++ == 0) ++present;
      if (i >= span) {
        if (--counts[id_at[i - span]] == 0) --present;
      }
      if (i + 1 >= span && present != distinct) return false;
    }
    return true;
  };

  std::size_t lo = k;
  std::size_t hi = window_len;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (every_window_complete(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return {lo, window_len, distinct <= k};
}

}  // namespace permlex
