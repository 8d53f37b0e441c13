#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sumset/combinatorics.hpp"
#include "sumset/int_set.hpp"
#include "sumset/sum_bitmap.hpp"

namespace sumset {

enum class SumsetKind { ordinary, restricted };

inline const char* to_string(SumsetKind kind) {
  return kind == SumsetKind::ordinary ? "ordinary" : "restricted";
}

inline SumsetKind parse_kind(std::string_view text) {
  if (text == "ordinary") return SumsetKind::ordinary;
  if (text == "restricted") return SumsetKind::restricted;
  throw Error(ErrorCode::parse, "unknown sumset kind '" + std::string(text) + "'");
}

inline constexpr std::uint64_t kDefaultOracleCap = 5'000'000;

namespace detail {

inline void require_nonempty(const IntSet& set) {
  if (set.empty()) throw Error(ErrorCode::arity, "sumsets of the empty set are not defined here");
}

inline void require_multiplicity(std::int64_t h) {
  if (h < 0) throw Error(ErrorCode::invalid_range, "negative multiplicity " + std::to_string(h));
}

}  // namespace detail

/// hA as a bitmap spanning exactly [h min A, h max A]. Built by repeated
/// doubling: A, 2A, 4A, ... combined along the binary expansion of h.
inline SumBitmap h_fold_bitmap(const IntSet& set, std::int64_t h) {
  detail::require_nonempty(set);
  detail::require_multiplicity(h);
  if (h == 0) return SumBitmap::point(0);
  checked::mul(h, set.min());
  checked::mul(h, set.max());
  const std::uint64_t span = static_cast<std::uint64_t>(checked::sub(set.max(), set.min()));
  if (span != 0 && static_cast<std::uint64_t>(h) > kMaxBitmapBits / span)
    throw Error(ErrorCode::overflow, "range of " + std::to_string(h) + "A is too wide");

  SumBitmap power = SumBitmap::from_set(set);
  SumBitmap result = SumBitmap::point(0);
  for (std::int64_t rest = h;;) {
    if (rest & 1) result = minkowski_sum(result, power);
    rest >>= 1;
    if (rest == 0) break;
    power = minkowski_sum(power, power);
  }
  return result;
}

/// Sums of exactly h elements of A, repetition allowed. 0A = {0}.
inline IntSet h_fold(const IntSet& set, std::int64_t h) { return h_fold_bitmap(set, h).to_set(); }

/// layers[j] = j^A (sums of j distinct elements) for j = 0..min(h_max, |A|).
///
/// Subset-sum with cardinality: elements are added in increasing order and
/// each layer j absorbs layer j-1 shifted by the new element, j descending so
/// no element is used twice.
inline std::vector<SumBitmap> restricted_layers(const IntSet& set, std::int64_t h_max) {
  detail::require_nonempty(set);
  detail::require_multiplicity(h_max);
  const auto k = static_cast<std::int64_t>(set.size());
  const std::int64_t top = std::min(h_max, k);

  std::vector<SumBitmap> layers;
  layers.reserve(static_cast<std::size_t>(top + 1));
  layers.push_back(SumBitmap::point(0));
  std::int64_t low_sum = 0;
  std::int64_t high_sum = 0;
  for (std::int64_t j = 1; j <= top; ++j) {
    low_sum = checked::add(low_sum, set[static_cast<std::size_t>(j - 1)]);
    high_sum = checked::add(high_sum, set[static_cast<std::size_t>(k - j)]);
    layers.emplace_back(low_sum, static_cast<std::uint64_t>(checked::sub(high_sum, low_sum)) + 1);
  }
  for (std::int64_t i = 0; i < k; ++i) {
    const std::int64_t a = set[static_cast<std::size_t>(i)];
    for (std::int64_t j = std::min(top, i + 1); j >= 1; --j)
      layers[static_cast<std::size_t>(j)].or_shifted(layers[static_cast<std::size_t>(j - 1)], a);
  }
  return layers;
}

inline SumBitmap h_fold_restricted_bitmap(const IntSet& set, std::int64_t h) {
  detail::require_nonempty(set);
  detail::require_multiplicity(h);
  if (h > static_cast<std::int64_t>(set.size())) return {};
  return std::move(restricted_layers(set, h).back());
}

/// Sums of h pairwise distinct elements of A. Empty when h > |A|.
inline IntSet h_fold_restricted(const IntSet& set, std::int64_t h) {
  return h_fold_restricted_bitmap(set, h).to_set();
}

inline SumBitmap h_fold_bitmap(const IntSet& set, std::int64_t h, SumsetKind kind) {
  return kind == SumsetKind::ordinary ? h_fold_bitmap(set, h) : h_fold_restricted_bitmap(set, h);
}

/// Every hA (or h^A) for h = 0..h_max, computed once per set.
class SumsetLayers {
 public:
  SumsetLayers(const IntSet& set, std::int64_t h_max) : set_(set), h_max_(h_max) {
    detail::require_nonempty(set);
    detail::require_multiplicity(h_max);
    const SumBitmap base = SumBitmap::from_set(set);
    ordinary_.reserve(static_cast<std::size_t>(h_max + 1));
    ordinary_.push_back(SumBitmap::point(0));
    for (std::int64_t h = 1; h <= h_max; ++h)
      ordinary_.push_back(minkowski_sum(ordinary_.back(), base));
    restricted_ = restricted_layers(set, h_max);
  }

  const IntSet& set() const noexcept { return set_; }
  std::int64_t h_max() const noexcept { return h_max_; }

  const SumBitmap& layer(std::int64_t h, SumsetKind kind) const {
    if (h < 0 || h > h_max_)
      throw Error(ErrorCode::invalid_range, "multiplicity " + std::to_string(h) + " not cached");
    if (kind == SumsetKind::ordinary) return ordinary_[static_cast<std::size_t>(h)];
    if (h >= static_cast<std::int64_t>(restricted_.size())) return empty_;
    return restricted_[static_cast<std::size_t>(h)];
  }

  SumBitmap union_over(const HSet& hs, SumsetKind kind) const {
    std::vector<const SumBitmap*> parts;
    parts.reserve(hs.size());
    for (std::int64_t h : hs) parts.push_back(&layer(h, kind));
    return union_of(parts);
  }

 private:
  IntSet set_;
  std::int64_t h_max_;
  std::vector<SumBitmap> ordinary_;
  std::vector<SumBitmap> restricted_;
  SumBitmap empty_;
};

/// HA (or H^A): the union of hA (or h^A) over h in H.
inline SumBitmap union_sumset_bitmap(const IntSet& set, const HSet& hs, SumsetKind kind) {
  detail::require_nonempty(set);
  if (hs.empty()) throw Error(ErrorCode::arity, "the multiplicity set H must be nonempty");
  std::vector<SumBitmap> parts;
  if (kind == SumsetKind::ordinary) {
    parts.reserve(hs.size());
    for (std::int64_t h : hs) parts.push_back(h_fold_bitmap(set, h));
  } else {
    std::vector<SumBitmap> layers = restricted_layers(set, hs.max());
    for (std::int64_t h : hs)
      if (h < static_cast<std::int64_t>(layers.size())) parts.push_back(std::move(layers[static_cast<std::size_t>(h)]));
  }
  std::vector<const SumBitmap*> ptrs;
  for (const SumBitmap& p : parts) ptrs.push_back(&p);
  return union_of(ptrs);
}

inline IntSet union_sumset(const IntSet& set, const HSet& hs, SumsetKind kind) {
  return union_sumset_bitmap(set, hs, kind).to_set();
}

/// Number of tuples the naive oracle would enumerate (saturating).
inline std::uint64_t naive_tuple_count(std::size_t k, std::int64_t h, SumsetKind kind) {
  const auto hh = static_cast<std::uint64_t>(h);
  if (kind == SumsetKind::restricted) return binomial(k, hh);
  if (k == 0) return h == 0 ? 1 : 0;
  return binomial(k + hh - 1, hh);
}

/// Reference hA / h^A by direct enumeration of index tuples. Shares no code
/// with the bitmap paths.
inline IntSet naive_h_fold(const IntSet& set, std::int64_t h, SumsetKind kind,
                           std::uint64_t cap = kDefaultOracleCap) {
  detail::require_nonempty(set);
  detail::require_multiplicity(h);
  const std::size_t k = set.size();
  if (h == 0) return IntSet{0};
  if (kind == SumsetKind::restricted && static_cast<std::size_t>(h) > k) return {};
  const std::uint64_t tuples = naive_tuple_count(k, h, kind);
  if (tuples > cap)
    throw Error(ErrorCode::oracle_refused,
                std::to_string(tuples) + " tuples exceeds the oracle cap " + std::to_string(cap));

  const auto n = static_cast<std::size_t>(h);
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = kind == SumsetKind::ordinary ? 0 : i;
  std::vector<std::int64_t> sums;
  sums.reserve(static_cast<std::size_t>(tuples));
  while (true) {
    std::int64_t s = 0;
    for (std::size_t i : idx) s = checked::add(s, set[i]);
    sums.push_back(s);

    // Next nondecreasing (ordinary) or strictly increasing (restricted) tuple.
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      const std::size_t limit = kind == SumsetKind::ordinary ? k - 1 : k - n + pos;
      if (idx[pos] < limit) break;
      if (pos == 0) {
        pos = n;
        break;
      }
    }
    if (pos == n) break;
    ++idx[pos];
    for (std::size_t j = pos + 1; j < n; ++j)
      idx[j] = kind == SumsetKind::ordinary ? idx[pos] : idx[j - 1] + 1;
  }
  return IntSet(std::move(sums));
}

}  // namespace sumset
