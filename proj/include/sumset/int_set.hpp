#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sumset/error.hpp"

namespace sumset {

namespace detail {

// Strictly increasing run of 64-bit integers. Shared storage for IntSet and HSet.
class SortedValues {
 public:
  using value_type = std::int64_t;
  using const_iterator = std::vector<std::int64_t>::const_iterator;

  std::span<const std::int64_t> elements() const noexcept { return values_; }
  const std::vector<std::int64_t>& vector() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  const_iterator begin() const noexcept { return values_.begin(); }
  const_iterator end() const noexcept { return values_.end(); }
  std::int64_t operator[](std::size_t i) const { return values_[i]; }

  std::int64_t min() const {
    if (values_.empty()) throw Error(ErrorCode::arity, "min of empty set");
    return values_.front();
  }
  std::int64_t max() const {
    if (values_.empty()) throw Error(ErrorCode::arity, "max of empty set");
    return values_.back();
  }

  bool contains(std::int64_t v) const {
    return std::binary_search(values_.begin(), values_.end(), v);
  }

 protected:
  SortedValues() = default;
  explicit SortedValues(std::vector<std::int64_t> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  }
  struct Trusted {};
  SortedValues(Trusted, std::vector<std::int64_t> values) : values_(std::move(values)) {}

  std::vector<std::int64_t> values_;
};

}  // namespace detail

/// Finite set of distinct integers, stored in increasing order.
///
/// Construction from arbitrary values sorts and removes duplicates. The empty
/// set is representable so that parsing is total, but every operation that
/// mirrors a theorem rejects it.
class IntSet : public detail::SortedValues {
 public:
  IntSet() = default;
  IntSet(std::initializer_list<std::int64_t> values)
      : SortedValues(std::vector<std::int64_t>(values)) {}
  explicit IntSet(std::vector<std::int64_t> values) : SortedValues(std::move(values)) {}

  /// Caller guarantees strictly increasing input.
  static IntSet from_sorted_unique(std::vector<std::int64_t> values) {
    return IntSet(Trusted{}, std::move(values));
  }

  bool is_subset_of(const IntSet& other) const {
    return std::includes(other.begin(), other.end(), begin(), end());
  }

  friend bool operator==(const IntSet& a, const IntSet& b) { return a.values_ == b.values_; }
  friend auto operator<=>(const IntSet& a, const IntSet& b) { return a.values_ <=> b.values_; }

 private:
  IntSet(Trusted t, std::vector<std::int64_t> values) : SortedValues(t, std::move(values)) {}
};

/// Finite set of distinct nonnegative multiplicities {h_1 < ... < h_r}.
class HSet : public detail::SortedValues {
 public:
  HSet() = default;
  HSet(std::initializer_list<std::int64_t> values)
      : HSet(std::vector<std::int64_t>(values)) {}
  explicit HSet(std::vector<std::int64_t> values) : SortedValues(std::move(values)) {
    if (!values_.empty() && values_.front() < 0)
      throw Error(ErrorCode::invalid_range,
                  "multiplicities must be nonnegative, got " + std::to_string(values_.front()));
  }
  explicit HSet(const IntSet& values) : HSet(values.vector()) {}

  /// r, the number of multiplicities.
  std::size_t count() const noexcept { return size(); }

  bool has_zero() const noexcept { return !values_.empty() && values_.front() == 0; }

  HSet without_zero() const {
    if (!has_zero()) return *this;
    return HSet(std::vector<std::int64_t>(values_.begin() + 1, values_.end()));
  }

  friend bool operator==(const HSet& a, const HSet& b) { return a.values_ == b.values_; }
  friend auto operator<=>(const HSet& a, const HSet& b) { return a.values_ <=> b.values_; }
};

enum class SetClass {
  all_positive,
  zero_rest_positive,
  all_negative,
  zero_rest_negative,
  mixed,
};

inline const char* to_string(SetClass c) {
  switch (c) {
    case SetClass::all_positive: return "all-positive";
    case SetClass::zero_rest_positive: return "contains-zero-rest-positive";
    case SetClass::all_negative: return "all-negative";
    case SetClass::zero_rest_negative: return "contains-zero-rest-negative";
    case SetClass::mixed: return "mixed";
  }
  return "unknown";
}

/// [a, b] = {a, a+1, ..., b}.
inline IntSet make_interval(std::int64_t a, std::int64_t b) {
  if (a > b)
    throw Error(ErrorCode::invalid_range,
                "[" + std::to_string(a) + ", " + std::to_string(b) + "] is empty");
  // b - a + 1 must be addressable.
  const std::int64_t width = checked::add(checked::sub(b, a), 1);
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(width));
  for (std::int64_t v = a;; ++v) {
    out.push_back(v);
    if (v == b) break;
  }
  return IntSet::from_sorted_unique(std::move(out));
}

/// c * A = {c a : a in A}.
inline IntSet dilate(const IntSet& set, std::int64_t c) {
  if (set.empty()) return set;
  if (c == 0) return IntSet{0};
  std::vector<std::int64_t> out;
  out.reserve(set.size());
  for (std::int64_t a : set) out.push_back(checked::mul(a, c));
  if (c < 0) std::reverse(out.begin(), out.end());
  return IntSet::from_sorted_unique(std::move(out));
}

inline IntSet translate(const IntSet& set, std::int64_t t) {
  std::vector<std::int64_t> out;
  out.reserve(set.size());
  for (std::int64_t a : set) out.push_back(checked::add(a, t));
  return IntSet::from_sorted_unique(std::move(out));
}

inline std::int64_t min_plus(const IntSet& set) {
  if (set.size() < 2) throw Error(ErrorCode::arity, "second smallest needs at least 2 elements");
  return set[1];
}

inline std::int64_t max_minus(const IntSet& set) {
  if (set.size() < 2) throw Error(ErrorCode::arity, "second largest needs at least 2 elements");
  return set[set.size() - 2];
}

struct Extrema {
  std::int64_t min;
  std::optional<std::int64_t> min_plus;
  std::optional<std::int64_t> max_minus;
  std::int64_t max;
};

/// (s_1, s_2, s_{k-1}, s_k). The inner pair is absent when k = 1.
inline Extrema extrema(const IntSet& set) {
  if (set.empty()) throw Error(ErrorCode::arity, "extrema of empty set");
  Extrema e{set.min(), std::nullopt, std::nullopt, set.max()};
  if (set.size() >= 2) {
    e.min_plus = min_plus(set);
    e.max_minus = max_minus(set);
  }
  return e;
}

/// Sign pattern of a nonempty set. {0} counts as contains-zero-rest-positive.
inline SetClass classify(const IntSet& set) {
  if (set.empty()) throw Error(ErrorCode::arity, "cannot classify the empty set");
  const std::int64_t lo = set.min();
  const std::int64_t hi = set.max();
  if (lo > 0) return SetClass::all_positive;
  if (hi < 0) return SetClass::all_negative;
  if (lo == 0) return SetClass::zero_rest_positive;
  if (hi == 0) return SetClass::zero_rest_negative;
  return SetClass::mixed;
}

inline bool has_zero(const IntSet& set) { return set.contains(0); }

}  // namespace sumset
