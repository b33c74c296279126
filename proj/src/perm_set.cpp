#include "permlex/perm_set.hpp"

#include <algorithm>
#include <unordered_set>

#include "permlex/error.hpp"

namespace permlex {

namespace {

using Members = std::unordered_set<Permutation, PermutationHash>;

void collect(const ShiftIndex& index, std::size_t n, std::size_t from,
             std::size_t to, std::optional<Parity> parity, Members& out) {
  for (std::size_t i = from; i < to; ++i) {
    if (parity && (i % 2 == 0) != (*parity == Parity::kEven)) continue;
    out.insert(index.window(i, n));
  }
}

PermSet finish(std::size_t n, Members&& members, std::size_t scan_window,
               bool saturated) {
  PermSet out;
  out.length = n;
  out.scan_window = scan_window;
  out.saturated = saturated;
  out.members.reserve(members.size());
  for (auto& p : members) out.members.push_back(p);
  std::sort(out.members.begin(), out.members.end());
  return out;
}

bool can_hold(const WordSource& source, std::size_t letters) {
  return letters <= source.hard_limit() &&
         (source.extendable() || letters <= source.generated());
}

}  // namespace

bool PermSet::contains(const Permutation& p) const {
  return std::binary_search(members.begin(), members.end(), p);
}

PermSet perm_set(const ShiftIndex& index, std::size_t n, std::size_t scan_window,
                 bool saturate, std::optional<Parity> parity) {
  if (n == 0 || scan_window == 0) {
    throw Error(ErrorCode::kPrecondition, "perm_set needs n >= 1 and a scan window");
  }
  if (scan_window + n - 1 > index.positions()) {
    throw Error(ErrorCode::kLimitExceeded, "scan window exceeds the shift index");
  }
  Members members;
  collect(index, n, 0, scan_window, parity, members);
  if (!saturate) return finish(n, std::move(members), scan_window, false);
  for (;;) {
    const std::size_t next = 2 * scan_window;
    if (next + n - 1 > index.positions()) {
      return finish(n, std::move(members), scan_window, false);
    }
    const std::size_t before = members.size();
    collect(index, n, scan_window, next, parity, members);
    scan_window = next;
    if (members.size() == before) {
      return finish(n, std::move(members), scan_window, true);
    }
  }
}

namespace {

PermSet enumerate_source(WordSource& source, std::size_t n, std::size_t scan_window,
                         bool saturate, std::size_t max_horizon,
                         std::optional<Parity> parity) {
  if (n == 0 || scan_window == 0) {
    throw Error(ErrorCode::kPrecondition, "perm_set needs n >= 1 and a scan window");
  }
  std::size_t capacity = (saturate ? 2 * scan_window : scan_window) + n;
  for (;;) {
    ShiftIndex index(source, capacity, n, max_horizon);
    PermSet result = perm_set(index, n, scan_window, saturate, parity);
    if (result.saturated || !saturate) return result;
    const std::size_t next = 2 * capacity;
    if (!can_hold(source, next + max_horizon)) return result;
    capacity = next;
  }
}

}  // namespace

PermSet perm_set(WordSource& source, std::size_t n, std::size_t scan_window,
                 bool saturate, std::size_t max_horizon) {
  return enumerate_source(source, n, scan_window, saturate, max_horizon,
                          std::nullopt);
}

PermSet perm_set_parity(WordSource& doubled_source, std::size_t n, Parity parity,
                        std::size_t scan_window, bool saturate,
                        std::size_t max_horizon) {
  if (doubled_source.kind() != WordSource::Kind::kDoubled) {
    throw Error(ErrorCode::kWrongSource,
                "parity sets need a doubled source, got " + doubled_source.describe());
  }
  return enumerate_source(doubled_source, n, scan_window, saturate, max_horizon,
                          parity);
}

Enumerator::Enumerator(WordSource source, std::size_t max_horizon)
    : source_(std::move(source)), max_horizon_(max_horizon) {}

const ShiftIndex& Enumerator::index(std::size_t positions, std::size_t max_window) {
  if (!index_ || index_->positions() < positions ||
      index_->max_window() < max_window) {
    if (index_) {
      positions = std::max(positions, std::min(2 * index_->positions(),
                                               source_.hard_limit() - max_horizon_));
      max_window = std::max(max_window, index_->max_window());
    }
    index_.reset();
    index_.emplace(source_, positions, max_window, max_horizon_);
  }
  return *index_;
}

PermSet Enumerator::perm_set(std::size_t n, std::size_t scan_window, bool saturate,
                             std::optional<Parity> parity) {
  if (n == 0 || scan_window == 0) {
    throw Error(ErrorCode::kPrecondition, "perm_set needs n >= 1 and a scan window");
  }
  std::size_t capacity = (saturate ? 2 * scan_window : scan_window) + n;
  for (;;) {
    const ShiftIndex& idx = index(capacity, n);
    PermSet result = permlex::perm_set(idx, n, scan_window, saturate, parity);
    if (result.saturated || !saturate) return result;
    const std::size_t next = 2 * std::max(capacity, idx.positions());
    if (!can_hold(source_, next + max_horizon_)) return result;
    capacity = next;
  }
}

std::string perm_set_csv_header() { return "n,count,scan_window,saturated"; }

std::string perm_set_csv_row(const PermSet& set) {
  return std::to_string(set.length) + "," + std::to_string(set.count()) + "," +
         std::to_string(set.scan_window) + "," + (set.saturated ? "true" : "false");
}

}  // namespace permlex
