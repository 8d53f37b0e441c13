#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sumset/int_set.hpp"

namespace sumset {

inline constexpr std::uint64_t kMaxBitmapBits = std::uint64_t{1} << 32;

/// Dense set of integers in [offset, offset + width). Bit i stands for offset + i.
class SumBitmap {
 public:
  SumBitmap() = default;

  SumBitmap(std::int64_t offset, std::uint64_t width) : offset_(offset), width_(width) {
    if (width > kMaxBitmapBits)
      throw Error(ErrorCode::overflow, "sum range of " + std::to_string(width) + " values is too wide");
    if (width > 0) checked::add(offset, static_cast<std::int64_t>(width - 1));
    words_.assign(static_cast<std::size_t>((width + 63) / 64), 0);
  }

  static SumBitmap from_set(const IntSet& set) {
    if (set.empty()) return {};
    const std::int64_t span = checked::sub(set.max(), set.min());
    SumBitmap out(set.min(), static_cast<std::uint64_t>(span) + 1);
    for (std::int64_t v : set) out.set(v);
    return out;
  }

  /// The singleton {value}.
  static SumBitmap point(std::int64_t value) {
    SumBitmap out(value, 1);
    out.words_[0] = 1;
    return out;
  }

  std::int64_t offset() const noexcept { return offset_; }
  std::uint64_t width() const noexcept { return width_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  bool in_range(std::int64_t value) const noexcept {
    return width_ > 0 && value >= offset_ &&
           static_cast<std::uint64_t>(value) - static_cast<std::uint64_t>(offset_) < width_;
  }

  bool test(std::int64_t value) const noexcept {
    if (!in_range(value)) return false;
    const auto i = static_cast<std::uint64_t>(value) - static_cast<std::uint64_t>(offset_);
    return (words_[i / 64] >> (i % 64)) & 1u;
  }

  void set(std::int64_t value) {
    if (!in_range(value))
      throw Error(ErrorCode::internal_inconsistency, std::to_string(value) + " outside bitmap range");
    const auto i = static_cast<std::uint64_t>(value) - static_cast<std::uint64_t>(offset_);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  template <typename F>
  void for_each(F&& visit) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w != 0) {
        const int b = std::countr_zero(w);
        visit(offset_ + static_cast<std::int64_t>(wi * 64 + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
  }

  IntSet to_set() const {
    std::vector<std::int64_t> out;
    out.reserve(count());
    for_each([&](std::int64_t v) { out.push_back(v); });
    return IntSet::from_sorted_unique(std::move(out));
  }

  /// this |= (src + shift). Bits that land outside this bitmap's range are discarded.
  void or_shifted(const SumBitmap& src, std::int64_t shift) {
    if (width_ == 0 || src.width_ == 0) return;
    // Bit j of src lands on bit j + delta of this.
    const std::int64_t delta = checked::sub(checked::add(src.offset_, shift), offset_);
    const auto dst_words = static_cast<std::int64_t>(words_.size());
    const auto src_bits = static_cast<std::int64_t>(src.width_);
    if (delta >= static_cast<std::int64_t>(width_) || delta + src_bits <= 0) return;
    const std::int64_t first = std::max<std::int64_t>(0, delta >= 0 ? delta / 64 : 0);
    const std::int64_t last = std::min<std::int64_t>(dst_words, (delta + src_bits + 63) / 64);
    for (std::int64_t w = first; w < last; ++w)
      words_[static_cast<std::size_t>(w)] |= src.extract64(w * 64 - delta);
    clear_tail();
  }

  SumBitmap& operator|=(const SumBitmap& other) {
    or_shifted(other, 0);
    return *this;
  }

  bool is_subset_of(const SumBitmap& other) const {
    bool ok = true;
    for_each([&](std::int64_t v) { ok = ok && other.test(v); });
    return ok;
  }

  friend bool operator==(const SumBitmap& a, const SumBitmap& b) {
    return a.to_set() == b.to_set();
  }

 private:
  // 64 bits of this bitmap starting at bit position pos; zero outside [0, width).
  std::uint64_t extract64(std::int64_t pos) const noexcept {
    if (pos <= -64 || pos >= static_cast<std::int64_t>(width_)) return 0;
    if (pos < 0) return words_[0] << (-pos);
    const auto wi = static_cast<std::size_t>(pos / 64);
    const int b = static_cast<int>(pos % 64);
    std::uint64_t out = words_[wi] >> b;
    if (b != 0 && wi + 1 < words_.size()) out |= words_[wi + 1] << (64 - b);
    return out;
  }

  void clear_tail() noexcept {
    const std::uint64_t used = width_ % 64;
    if (used != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << used) - 1;
  }

  std::int64_t offset_ = 0;
  std::uint64_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

/// X + Y = {x + y}. The result range is exactly [min X + min Y, max X + max Y]
/// when both operands have their end bits set.
inline SumBitmap minkowski_sum(const SumBitmap& x, const SumBitmap& y) {
  if (x.width() == 0 || y.width() == 0) return {};
  SumBitmap out(checked::add(x.offset(), y.offset()), x.width() + y.width() - 1);
  // Shift the denser operand once per bit of the sparser one.
  const bool x_sparser = x.count() <= y.count();
  const SumBitmap& sparse = x_sparser ? x : y;
  const SumBitmap& dense = x_sparser ? y : x;
  sparse.for_each([&](std::int64_t v) { out.or_shifted(dense, v); });
  return out;
}

/// Union of bitmaps with arbitrary ranges.
inline SumBitmap union_of(std::span<const SumBitmap* const> parts) {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool any = false;
  for (const SumBitmap* p : parts) {
    if (p->width() == 0) continue;
    const std::int64_t top = p->offset() + static_cast<std::int64_t>(p->width() - 1);
    lo = any ? std::min(lo, p->offset()) : p->offset();
    hi = any ? std::max(hi, top) : top;
    any = true;
  }
  if (!any) return {};
  SumBitmap out(lo, static_cast<std::uint64_t>(checked::sub(hi, lo)) + 1);
  for (const SumBitmap* p : parts) out |= *p;
  return out;
}

}  // namespace sumset
