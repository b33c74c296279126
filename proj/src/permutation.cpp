#include "permlex/permutation.hpp"

#include <cctype>
#include <charconv>

#include "permlex/error.hpp"

namespace permlex {

namespace {

void validate(const std::vector<Permutation::value_type>& ranks) {
  if (ranks.empty()) {
    throw Error(ErrorCode::kInvalidPermutation, "permutation is empty");
  }
  std::vector<bool> seen(ranks.size() + 1, false);
  for (auto r : ranks) {
    if (r < 1 || r > ranks.size() || seen[r]) {
      throw Error(ErrorCode::kInvalidPermutation,
                  "ranks must be a permutation of 1..n");
    }
    seen[r] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<value_type> ranks) : ranks_(std::move(ranks)) {
  validate(ranks_);
}

Permutation::Permutation(std::initializer_list<value_type> ranks)
    : Permutation(std::vector<value_type>(ranks)) {}

Permutation Permutation::from_trusted(std::vector<value_type> ranks) {
  return Permutation(std::move(ranks), trusted_tag{});
}

Permutation Permutation::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) {
      ++pos;
    }
  };
  skip();
  if (pos >= text.size() || text[pos] != '(') {
    throw Error(ErrorCode::kParseError, "permutation must start with '('");
  }
  ++pos;
  std::vector<value_type> ranks;
  for (;;) {
    skip();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      break;
    }
    value_type v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc{}) {
      throw Error(ErrorCode::kParseError, "bad rank in permutation text");
    }
    pos = static_cast<std::size_t>(ptr - text.data());
    ranks.push_back(v);
  }
  skip();
  if (pos != text.size()) {
    throw Error(ErrorCode::kParseError, "trailing characters after permutation");
  }
  return Permutation(std::move(ranks));
}

std::string Permutation::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(ranks_[i]);
  }
  out += ')';
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the rank sequence.
  std::uint64_t h = 1469598103934665603ull;
  for (auto r : p.ranks()) {
    h ^= r;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

FiniteWord form_of(const Permutation& p) {
  if (p.size() < 2) {
    throw Error(ErrorCode::kLengthTooSmall, "form needs length >= 2");
  }
  std::string digits(p.size() - 1, '0');
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] > p[i + 1]) digits[i] = '1';
  }
  return FiniteWord(std::move(digits));
}

bool same_form(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if ((p[i] < p[i + 1]) != (q[i] < q[i + 1])) return false;
  }
  return true;
}

Permutation left_restrict(const Permutation& p) {
  if (p.size() < 2) {
    throw Error(ErrorCode::kLengthTooSmall, "left restriction needs length >= 2");
  }
  const auto last = p[p.size() - 1];
  std::vector<Permutation::value_type> out(p.size() - 1);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    out[i] = p[i] > last ? p[i] - 1 : p[i];
  }
  return Permutation::from_trusted(std::move(out));
}

Permutation right_restrict(const Permutation& p) {
  if (p.size() < 2) {
    throw Error(ErrorCode::kLengthTooSmall, "right restriction needs length >= 2");
  }
  const auto first = p[0];
  std::vector<Permutation::value_type> out(p.size() - 1);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const auto v = p[i + 1];
    out[i] = v > first ? v - 1 : v;
  }
  return Permutation::from_trusted(std::move(out));
}

Permutation middle_restrict(const Permutation& p) {
  if (p.size() < 3) {
    throw Error(ErrorCode::kLengthTooSmall, "middle restriction needs length >= 3");
  }
  return left_restrict(right_restrict(p));
}

Permutation left_restrict_k(const Permutation& p, std::size_t k) {
  if (p.size() < k + 1) {
    throw Error(ErrorCode::kLengthTooSmall,
                "k-fold left restriction needs length >= k + 1");
  }
  // Renumber once: a kept value drops by the number of removed values below it.
  const std::size_t kept = p.size() - k;
  std::vector<bool> removed(p.size() + 1, false);
  for (std::size_t i = kept; i < p.size(); ++i) removed[p[i]] = true;
  std::vector<Permutation::value_type> below(p.size() + 1, 0);
  for (std::size_t v = 1; v <= p.size(); ++v) {
    below[v] = below[v - 1] + (removed[v] ? 1 : 0);
  }
  std::vector<Permutation::value_type> out(kept);
  for (std::size_t i = 0; i < kept; ++i) out[i] = p[i] - below[p[i]];
  return Permutation::from_trusted(std::move(out));
}

}  // namespace permlex
