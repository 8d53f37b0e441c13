#pragma once

// Text grammar for sets, shared by the CLI input and output:
//
//   set   := "{}" | item ("," item)*
//   item  := [int "*"] range
//   range := int | int ".." int
//
// "1,2,5", "1..10", "3*0..4" and "0,2*3..5" are all valid. Whitespace is
// ignored. Items are unioned.

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sumset/int_set.hpp"

namespace sumset {

inline constexpr std::size_t kMaxParsedElements = std::size_t{1} << 24;

namespace detail {

inline std::int64_t parse_integer(std::string_view token, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last)
    throw Error(ErrorCode::parse,
                "bad integer '" + std::string(token) + "' in '" + std::string(whole) + "'");
  return value;
}

}  // namespace detail

inline IntSet parse_int_set(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (ch != ' ' && ch != '\t' && ch != '\n' && ch != '\r') compact.push_back(ch);
  if (compact == "{}") return IntSet{};
  if (compact.empty()) throw Error(ErrorCode::parse, "empty set expression (use {} for the empty set)");

  std::vector<std::int64_t> values;
  std::string_view rest = compact;
  while (true) {
    const auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    if (item.empty()) throw Error(ErrorCode::parse, "empty item in '" + compact + "'");

    std::int64_t scale = 1;
    if (const auto star = item.find('*'); star != std::string_view::npos) {
      scale = detail::parse_integer(item.substr(0, star), compact);
      item = item.substr(star + 1);
    }

    std::int64_t lo;
    std::int64_t hi;
    if (const auto dots = item.find(".."); dots != std::string_view::npos) {
      lo = detail::parse_integer(item.substr(0, dots), compact);
      hi = detail::parse_integer(item.substr(dots + 2), compact);
      if (lo > hi)
        throw Error(ErrorCode::parse, "descending range '" + std::string(item) + "'");
    } else {
      lo = hi = detail::parse_integer(item, compact);
    }
    // Width computed in unsigned arithmetic: hi - lo can exceed int64.
    const auto width = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (width >= kMaxParsedElements || values.size() + width >= kMaxParsedElements)
      throw Error(ErrorCode::parse, "set expression '" + compact + "' is too large");
    for (std::int64_t v = lo;; ++v) {
      values.push_back(checked::mul(scale, v));
      if (v == hi) break;
    }

    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return IntSet(std::move(values));
}

inline HSet parse_h_set(std::string_view text) { return HSet(parse_int_set(text)); }

/// Canonical text: "{}", "a..b", "d*a..b" for a dilated interval of at least
/// three elements, otherwise runs of three or more become "a..b".
inline std::string format_set(std::span<const std::int64_t> s) {
  if (s.empty()) return "{}";
  const std::size_t k = s.size();
  if (k >= 3) {
    const std::int64_t gap = s[1] - s[0];
    bool uniform = gap > 1;
    for (std::size_t i = 2; uniform && i < k; ++i) uniform = s[i] - s[i - 1] == gap;
    if (uniform && s[0] % gap == 0)
      return std::to_string(gap) + "*" + std::to_string(s[0] / gap) + ".." +
             std::to_string(s[k - 1] / gap);
  }
  std::string out;
  std::size_t i = 0;
  while (i < k) {
    std::size_t j = i;
    while (j + 1 < k && s[j + 1] == s[j] + 1) ++j;
    if (!out.empty()) out += ',';
    if (j - i >= 2) {
      out += std::to_string(s[i]) + ".." + std::to_string(s[j]);
    } else {
      out += std::to_string(s[i]);
      for (std::size_t m = i + 1; m <= j; ++m) out += ',' + std::to_string(s[m]);
    }
    i = j + 1;
  }
  return out;
}

inline std::string format_set(const IntSet& set) { return format_set(set.elements()); }
inline std::string format_set(const HSet& set) { return format_set(set.elements()); }

}  // namespace sumset
