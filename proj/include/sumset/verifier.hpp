#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

#include "sumset/bounds.hpp"
#include "sumset/combinatorics.hpp"
#include "sumset/engine.hpp"
#include "sumset/int_set.hpp"
#include "sumset/set_format.hpp"
#include "sumset/structure.hpp"

namespace sumset {

enum class ZeroMode { without_zero, with_zero, both };

inline const char* to_string(ZeroMode m) {
  switch (m) {
    case ZeroMode::without_zero: return "without-zero";
    case ZeroMode::with_zero: return "with-zero";
    case ZeroMode::both: return "both";
  }
  return "unknown";
}

inline ZeroMode parse_zero_mode(std::string_view text) {
  if (text == "without-zero" || text == "without") return ZeroMode::without_zero;
  if (text == "with-zero" || text == "with") return ZeroMode::with_zero;
  if (text == "both") return ZeroMode::both;
  throw Error(ErrorCode::parse, "unknown zero mode '" + std::string(text) + "'");
}

inline constexpr std::uint64_t kDefaultPairCap = 100'000'000;
inline constexpr std::size_t kDefaultEqualityCap = 100'000;

/// Every (A, H, kind) with |A| in [k_min, k_max] and H a subset of [1, h_max]
/// with |H| in [r_min, r_max].
///
/// Without zero, A ranges over subsets of [1, N]. With zero, A = {0} u B with
/// B a subset of [1, N-1], so both modes draw from N candidate elements and
/// |A| counts the 0.
struct SearchSpace {
  std::int64_t universe_max = 1;
  int k_min = 1;
  int k_max = 1;
  std::int64_t h_max = 1;
  int r_min = 1;
  int r_max = 1;
  std::vector<SumsetKind> kinds{SumsetKind::ordinary, SumsetKind::restricted};
  ZeroMode zero_mode = ZeroMode::without_zero;

  void validate() const {
    if (universe_max < 1 || universe_max > 62)
      throw Error(ErrorCode::invalid_range, "universe_max must be in [1, 62]");
    if (k_min < 1) throw Error(ErrorCode::invalid_range, "k_min must be >= 1");
    if (h_max < 1 || h_max > 62) throw Error(ErrorCode::invalid_range, "h_max must be in [1, 62]");
    if (r_min < 1) throw Error(ErrorCode::invalid_range, "r_min must be >= 1");
    if (kinds.empty()) throw Error(ErrorCode::invalid_range, "at least one sumset kind is required");
  }

  std::vector<bool> zero_modes() const {
    switch (zero_mode) {
      case ZeroMode::without_zero: return {false};
      case ZeroMode::with_zero: return {true};
      case ZeroMode::both: return {false, true};
    }
    return {};
  }
};

/// Number of k-sets A in one zero mode: C(N, k) or C(N-1, k-1).
inline std::uint64_t set_count(const SearchSpace& space, bool with_zero, int k) {
  const auto n = static_cast<std::uint64_t>(space.universe_max);
  if (!with_zero) return binomial(n, static_cast<std::uint64_t>(k));
  return k >= 1 ? binomial(n - 1, static_cast<std::uint64_t>(k - 1)) : 0;
}

inline std::uint64_t h_set_count(const SearchSpace& space) {
  std::uint64_t total = 0;
  for (int r = space.r_min; r <= space.r_max; ++r)
    total = saturating_add(total, binomial(static_cast<std::uint64_t>(space.h_max),
                                           static_cast<std::uint64_t>(r)));
  return total;
}

/// Closed-form size of the enumeration.
inline std::uint64_t pair_count(const SearchSpace& space) {
  std::uint64_t sets = 0;
  for (bool z : space.zero_modes())
    for (int k = space.k_min; k <= space.k_max; ++k) sets = saturating_add(sets, set_count(space, z, k));
  return saturating_mul(saturating_mul(sets, h_set_count(space)), space.kinds.size());
}

namespace detail {

inline IntSet set_from_combination(const std::vector<int>& idx, bool with_zero) {
  std::vector<std::int64_t> v;
  v.reserve(idx.size() + 1);
  if (with_zero) v.push_back(0);
  for (int i : idx) v.push_back(i + 1);
  return IntSet::from_sorted_unique(std::move(v));
}

inline std::vector<HSet> all_h_sets(const SearchSpace& space) {
  std::vector<HSet> out;
  const int n = static_cast<int>(space.h_max);
  for (int r = space.r_min; r <= std::min(space.r_max, n); ++r) {
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
    do {
      std::vector<std::int64_t> v;
      for (int i : idx) v.push_back(i + 1);
      out.emplace_back(std::move(v));
    } while (next_combination(idx, n));
  }
  return out;
}

inline void check_cap(const SearchSpace& space, std::uint64_t cap) {
  const std::uint64_t count = pair_count(space);
  if (count > cap)
    throw Error(ErrorCode::space_too_large,
                std::to_string(count) + " pairs exceeds the cap of " + std::to_string(cap));
}

}  // namespace detail

/// Visits every (A, H, kind) exactly once, in lexicographic order of
/// (zero mode, k, A, r, H, kind).
template <typename Visit>
void enumerate(const SearchSpace& space, Visit&& visit, std::uint64_t cap = kDefaultPairCap) {
  space.validate();
  detail::check_cap(space, cap);
  const std::vector<HSet> h_sets = detail::all_h_sets(space);
  for (bool z : space.zero_modes()) {
    const int n = static_cast<int>(space.universe_max) - (z ? 1 : 0);
    for (int k = space.k_min; k <= space.k_max; ++k) {
      const int picks = z ? k - 1 : k;
      if (picks > n) continue;
      std::vector<int> idx(static_cast<std::size_t>(picks));
      for (int i = 0; i < picks; ++i) idx[static_cast<std::size_t>(i)] = i;
      do {
        const IntSet a = detail::set_from_combination(idx, z);
        for (const HSet& h : h_sets)
          for (SumsetKind kind : space.kinds) visit(a, h, kind);
      } while (next_combination(idx, n));
    }
  }
}

// ---------------------------------------------------------------------------
// Report

struct BoundViolation {
  IntSet a;
  HSet h;
  SumsetKind kind;
  std::int64_t size;
  std::int64_t bound;
  BoundFormula formula;
};

struct EqualityCase {
  IntSet a;
  HSet h;
  InverseVerdict verdict;
};

struct WitnessFailure {
  IntSet a;
  HSet h;
  SumsetKind kind;
  std::string message;
};

struct VerificationReport {
  SearchSpace space;
  std::uint64_t predicted_pairs = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t bounds_checked = 0;
  std::uint64_t hypotheses_unmet = 0;
  std::vector<BoundViolation> bound_violations;
  std::uint64_t equality_case_count = 0;
  bool equality_cases_truncated = false;
  std::vector<EqualityCase> equality_cases;
  std::vector<EqualityCase> inverse_inconsistencies;
  std::uint64_t allowed_nonstructured_count = 0;
  std::vector<EqualityCase> allowed_nonstructured_equalities;
  std::uint64_t witness_checked = 0;
  std::vector<WitnessFailure> witness_failures;
  double wall_time_seconds = 0.0;

  /// No bound violation, inverse inconsistency or witness failure.
  bool clean() const {
    return bound_violations.empty() && inverse_inconsistencies.empty() && witness_failures.empty();
  }
};

struct VerifyOptions {
  unsigned workers = 0;  // 0: hardware concurrency
  std::uint64_t cap = kDefaultPairCap;
  std::size_t equality_cap = kDefaultEqualityCap;
  std::uint64_t chunk_sets = 32;  // sets A per work chunk
  bool check_witness = true;
  // Test hook: replaces the bound value before comparison.
  std::function<std::int64_t(BoundFormula, std::int64_t)> bound_transform;
};

namespace detail {

struct Chunk {
  bool with_zero;
  int k;
  std::uint64_t first_rank;
  std::uint64_t end_rank;
};

inline std::vector<Chunk> make_chunks(const SearchSpace& space, std::uint64_t chunk_sets) {
  std::vector<Chunk> out;
  chunk_sets = std::max<std::uint64_t>(chunk_sets, 1);
  for (bool z : space.zero_modes())
    for (int k = space.k_min; k <= space.k_max; ++k) {
      const std::uint64_t total = set_count(space, z, k);
      for (std::uint64_t first = 0; first < total; first += chunk_sets)
        out.push_back({z, k, first, std::min(total, first + chunk_sets)});
    }
  return out;
}

// Partial report for one chunk, folded into the full report in chunk order.
struct ChunkResult {
  std::uint64_t pairs = 0;
  std::uint64_t bounds_checked = 0;
  std::uint64_t hypotheses_unmet = 0;
  std::uint64_t witness_checked = 0;
  std::vector<BoundViolation> violations;
  std::vector<EqualityCase> equalities;
  std::vector<EqualityCase> inconsistencies;
  std::vector<WitnessFailure> witness_failures;
};

inline std::string describe_pair(const IntSet& a, const HSet& h, SumsetKind kind) {
  return "A=" + format_set(a) + " H=" + format_set(h) + " kind=" + to_string(kind);
}

inline void run_witness(const SumsetLayers& layers, const HSet& h, SumsetKind kind,
                        const IntSet& original, ChunkResult& out) {
  ++out.witness_checked;
  try {
    witness_blocks(layers, h, kind);
  } catch (const Error& e) {
    out.witness_failures.push_back({original, h, kind, e.what()});
  }
}

inline ChunkResult run_chunk(const SearchSpace& space, const std::vector<HSet>& h_sets,
                             const Chunk& chunk, const VerifyOptions& options) {
  ChunkResult out;
  const int n = static_cast<int>(space.universe_max) - (chunk.with_zero ? 1 : 0);
  const int picks = chunk.with_zero ? chunk.k - 1 : chunk.k;
  std::vector<int> idx = unrank_combination(n, picks, chunk.first_rank);
  for (std::uint64_t rank = chunk.first_rank; rank < chunk.end_rank; ++rank) {
    if (rank != chunk.first_rank) next_combination(idx, n);
    const IntSet a = set_from_combination(idx, chunk.with_zero);
    const SumsetLayers layers(a, space.h_max);
    std::optional<SumsetLayers> positive_part;
    if (chunk.with_zero && options.check_witness && a.size() > 1)
      positive_part.emplace(IntSet::from_sorted_unique({a.begin() + 1, a.end()}), space.h_max);

    for (const HSet& h : h_sets)
      for (SumsetKind kind : space.kinds) {
        ++out.pairs;
        try {
          const auto size = static_cast<std::int64_t>(layers.union_over(h, kind).count());
          BoundReport report = select_bound(a, h, kind);
          if (!report.hypotheses_met) {
            ++out.hypotheses_unmet;
          } else {
            ++out.bounds_checked;
            std::int64_t bound = *report.bound_value;
            if (options.bound_transform) bound = options.bound_transform(*report.formula, bound);
            if (size < bound) out.violations.push_back({a, h, kind, size, bound, *report.formula});
            if (size == bound) {
              InverseVerdict verdict = judge_inverse(a, h, kind, size);
              if (!verdict.consistent) out.inconsistencies.push_back({a, h, verdict});
              out.equalities.push_back({a, h, std::move(verdict)});
            }
          }

          if (options.check_witness) {
            const auto k = static_cast<std::int64_t>(a.size());
            if (!chunk.with_zero) {
              if (kind == SumsetKind::ordinary || h.max() <= k) run_witness(layers, h, kind, a, out);
            } else if (kind == SumsetKind::restricted && positive_part && h.max() <= k - 1) {
              // Blocks of H^(A \ {0}), which sit inside H^A.
              run_witness(*positive_part, h, kind, a, out);
            }
          }
        } catch (const Error& e) {
          throw Error(e.code(), std::string(e.what()) + " at " + describe_pair(a, h, kind));
        }
      }
  }
  return out;
}

}  // namespace detail

/// Checks every bound and inverse implication on the space. The report is
/// identical for any worker count; only wall_time_seconds varies.
inline VerificationReport verify(const SearchSpace& space, const VerifyOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  space.validate();
  detail::check_cap(space, options.cap);

  VerificationReport report;
  report.space = space;
  report.predicted_pairs = pair_count(space);

  const std::vector<HSet> h_sets = detail::all_h_sets(space);
  const std::vector<detail::Chunk> chunks = detail::make_chunks(space, options.chunk_sets);

  // Results are folded strictly in chunk order as soon as a prefix is complete.
  std::vector<std::optional<detail::ChunkResult>> pending(chunks.size());
  std::vector<std::exception_ptr> errors(chunks.size());
  std::size_t folded = 0;
  std::mutex fold_mutex;

  auto fold = [&](detail::ChunkResult& r) {
    report.pairs_checked += r.pairs;
    report.bounds_checked += r.bounds_checked;
    report.hypotheses_unmet += r.hypotheses_unmet;
    report.witness_checked += r.witness_checked;
    for (auto& v : r.violations) report.bound_violations.push_back(std::move(v));
    for (auto& c : r.inconsistencies) report.inverse_inconsistencies.push_back(std::move(c));
    for (auto& f : r.witness_failures) report.witness_failures.push_back(std::move(f));
    for (auto& c : r.equalities) {
      ++report.equality_case_count;
      if (c.verdict.allowed_nonstructured) {
        ++report.allowed_nonstructured_count;
        if (report.allowed_nonstructured_equalities.size() < options.equality_cap)
          report.allowed_nonstructured_equalities.push_back(c);
      }
      if (report.equality_cases.size() < options.equality_cap)
        report.equality_cases.push_back(std::move(c));
      else
        report.equality_cases_truncated = true;
    }
  };

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  auto work = [&] {
    while (!failed.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= chunks.size()) return;
      detail::ChunkResult result;
      std::exception_ptr error;
      try {
        result = detail::run_chunk(space, h_sets, chunks[i], options);
      } catch (...) {
        error = std::current_exception();
        failed = true;
      }
      std::lock_guard lock(fold_mutex);
      errors[i] = error;
      pending[i] = std::move(result);
      while (folded < chunks.size() && pending[folded]) {
        if (!errors[folded]) fold(*pending[folded]);
        pending[folded].reset();
        ++folded;
      }
    }
  };

  unsigned workers = options.workers != 0 ? options.workers : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(chunks.size(), 1))));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);

  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

struct ExtremalGroup {
  int k;
  int r;
  SumsetKind kind;
  std::vector<EqualityCase> cases;
};

struct ExtremalReport {
  VerificationReport report;
  std::vector<ExtremalGroup> groups;
};

/// All equality cases of the space, grouped by (k, r, kind).
inline ExtremalReport find_extremal(const SearchSpace& space, VerifyOptions options = {}) {
  options.check_witness = false;
  ExtremalReport out{verify(space, options), {}};
  std::map<std::tuple<int, int, int>, std::vector<EqualityCase>> grouped;
  for (const EqualityCase& c : out.report.equality_cases)
    grouped[{static_cast<int>(c.a.size()), static_cast<int>(c.h.count()), static_cast<int>(c.verdict.kind)}]
        .push_back(c);
  for (auto& [key, cases] : grouped)
    out.groups.push_back({std::get<0>(key), std::get<1>(key), static_cast<SumsetKind>(std::get<2>(key)),
                          std::move(cases)});
  return out;
}

}  // namespace sumset
