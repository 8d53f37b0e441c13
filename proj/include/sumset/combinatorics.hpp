#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace sumset {

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

/// C(n, k), saturating at kSaturated instead of overflowing.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 c = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    c = c * (n - i) / (i + 1);
    if (c > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(c);
}

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

/// The rank-th k-subset of {0, ..., n-1} in lexicographic order.
inline std::vector<int> unrank_combination(int n, int k, std::uint64_t rank) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k));
  int next = 0;
  for (int pos = 0; pos < k; ++pos) {
    for (int c = next; c < n; ++c) {
      const std::uint64_t below = binomial(static_cast<std::uint64_t>(n - 1 - c),
                                           static_cast<std::uint64_t>(k - 1 - pos));
      if (rank < below) {
        out.push_back(c);
        next = c + 1;
        break;
      }
      rank -= below;
    }
  }
  return out;
}

/// Advances to the lexicographically next k-subset of {0, ..., n-1}.
inline bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j)
    idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

}  // namespace sumset
