#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sumset/bounds.hpp"
#include "sumset/engine.hpp"
#include "sumset/int_set.hpp"
#include "sumset/set_format.hpp"

namespace sumset {

struct APDescriptor {
  bool is_ap = true;
  std::int64_t first = 0;
  std::optional<std::int64_t> difference;  // absent for a single element
};

/// Every set with at most two elements counts as an arithmetic progression.
inline APDescriptor ap_descriptor(std::span<const std::int64_t> s) {
  if (s.empty()) throw Error(ErrorCode::arity, "progression test on empty set");
  APDescriptor out;
  out.first = s[0];
  if (s.size() == 1) return out;
  const std::int64_t gap = checked::sub(s[1], s[0]);
  for (std::size_t i = 2; i < s.size(); ++i)
    if (checked::sub(s[i], s[i - 1]) != gap) {
      out.is_ap = false;
      return out;
    }
  out.difference = gap;
  return out;
}

inline APDescriptor ap_descriptor(const IntSet& set) { return ap_descriptor(set.elements()); }
inline APDescriptor ap_descriptor(const HSet& set) { return ap_descriptor(set.elements()); }

/// d with A = d*[1,k], or A = d*[0,k-1] when include_zero.
inline std::optional<std::int64_t> is_dilated_interval(const IntSet& set, bool include_zero) {
  if (set.empty()) throw Error(ErrorCode::arity, "dilated-interval test on empty set");
  const SetClass cls = classify(set);
  const SetClass want = include_zero ? SetClass::zero_rest_positive : SetClass::all_positive;
  if (cls != want)
    throw Error(ErrorCode::unsupported_class,
                std::string("expected ") + to_string(want) + ", got " + to_string(cls));
  if (include_zero && set.size() < 2) return std::nullopt;
  const std::int64_t d = include_zero ? set[1] : set[0];
  const std::int64_t base = include_zero ? 0 : 1;
  for (std::size_t i = 0; i < set.size(); ++i)
    if (set[i] != checked::mul(d, base + static_cast<std::int64_t>(i))) return std::nullopt;
  return d;
}

struct ShiftedInterval {
  std::int64_t first;
  std::int64_t count;
  friend bool operator==(const ShiftedInterval&, const ShiftedInterval&) = default;
};

/// (h_1, r) when H = h_1 + [0, r-1].
inline std::optional<ShiftedInterval> h_shifted_interval(const HSet& hs) {
  if (hs.empty()) throw Error(ErrorCode::arity, "H must be nonempty");
  const auto r = static_cast<std::int64_t>(hs.count());
  if (hs.max() - hs.min() != r - 1) return std::nullopt;
  return ShiftedInterval{hs.min(), r};
}

// ---------------------------------------------------------------------------
// Witness blocks

/// Pairwise disjoint, increasing blocks S_1 < S_2 < ... < S_r inside HA (or
/// H^A) whose sizes add up to at least the lower bound:
///
///   ordinary:   S_1 = h_1 A,   S_i = (h_i - h_{i-1}) A + h_{i-1} a_k
///   restricted: S_1 = h_1^A,   S_i = (h_i - h_{i-1})^A_i + max(h_{i-1}^A),
///               A_i = {a_1, ..., a_{k-h_{i-1}}}
struct BlockDecomposition {
  SumsetKind kind = SumsetKind::ordinary;
  std::vector<IntSet> blocks;

  std::int64_t total_size() const {
    std::int64_t n = 0;
    for (const IntSet& b : blocks) n += static_cast<std::int64_t>(b.size());
    return n;
  }
};

inline BlockDecomposition witness_blocks(const SumsetLayers& layers, const HSet& hs,
                                         SumsetKind kind) {
  const IntSet& a = layers.set();
  if (classify(a) != SetClass::all_positive)
    throw Error(ErrorCode::unsupported_class, "witness blocks need a set of positive integers");
  detail::require_positive_h(hs);
  const auto k = static_cast<std::int64_t>(a.size());
  if (kind == SumsetKind::restricted && hs.max() > k)
    throw Error(ErrorCode::hypothesis, "restricted witness blocks need h_r <= k");
  if (hs.max() > layers.h_max())
    throw Error(ErrorCode::invalid_range, "layers do not reach h_r");

  BlockDecomposition out;
  out.kind = kind;
  std::int64_t prev = 0;
  std::int64_t top_sum = 0;  // max(h_{i-1}^A)
  for (std::int64_t h : hs) {
    const std::int64_t step = h - prev;
    SumBitmap block;
    if (prev == 0) {
      block = layers.layer(h, kind);
    } else if (kind == SumsetKind::ordinary) {
      block = SumBitmap(checked::add(layers.layer(step, kind).offset(), checked::mul(prev, a.max())),
                        layers.layer(step, kind).width());
      block.or_shifted(layers.layer(step, kind), checked::mul(prev, a.max()));
    } else {
      const IntSet prefix = IntSet::from_sorted_unique(
          std::vector<std::int64_t>(a.begin(), a.begin() + (k - prev)));
      const SumBitmap part = h_fold_restricted_bitmap(prefix, step);
      block = SumBitmap(checked::add(part.offset(), top_sum), part.width());
      block.or_shifted(part, top_sum);
    }
    if (kind == SumsetKind::restricted)
      for (std::int64_t j = prev; j < h; ++j) top_sum = checked::add(top_sum, a[static_cast<std::size_t>(k - 1 - j)]);

    IntSet block_set = block.to_set();
    if (block_set.empty())
      throw Error(ErrorCode::internal_inconsistency, "empty witness block for h = " + std::to_string(h));
    if (!block.is_subset_of(layers.layer(h, kind)))
      throw Error(ErrorCode::internal_inconsistency,
                  "witness block " + format_set(block_set) + " not inside the h = " +
                      std::to_string(h) + " sumset");
    if (!out.blocks.empty() && out.blocks.back().max() >= block_set.min())
      throw Error(ErrorCode::internal_inconsistency,
                  "witness blocks overlap: max " + std::to_string(out.blocks.back().max()) +
                      " >= min " + std::to_string(block_set.min()));
    out.blocks.push_back(std::move(block_set));
    prev = h;
  }
  return out;
}

inline BlockDecomposition witness_blocks(const IntSet& set, const HSet& hs, SumsetKind kind) {
  if (set.empty()) throw Error(ErrorCode::arity, "A must be nonempty");
  detail::require_positive_h(hs);
  return witness_blocks(SumsetLayers(set, hs.max()), hs, kind);
}

// ---------------------------------------------------------------------------
// Inverse verdicts

/// Which structural conclusion applies to an equality case.
enum class InverseRule {
  none,
  h_fold_ap,                       // |hA| minimal, h >= 2            => A is an AP
  restricted_h_fold_ap,            // |h^A| minimal, k >= 5, 2<=h<=k-2 => A is an AP
  union_ap,                        // |HA| minimal, A positive, r >= 2 => H AP (d), A AP (d min A)
  restricted_union_interval,       // |H^A| minimal, A positive, k >= 6, r >= 2, h_r <= k-1
  restricted_union_zero_interval,  // |H^A| minimal, 0 in A, k >= 7, r >= 2, h_r <= k-2
};

inline const char* to_string(InverseRule rule) {
  switch (rule) {
    case InverseRule::none: return "none";
    case InverseRule::h_fold_ap: return "h-fold-ap";
    case InverseRule::restricted_h_fold_ap: return "restricted-h-fold-ap";
    case InverseRule::union_ap: return "union-ap";
    case InverseRule::restricted_union_interval: return "restricted-union-interval";
    case InverseRule::restricted_union_zero_interval: return "restricted-union-zero-interval";
  }
  return "unknown";
}

/// Structural facts about (A, H). As a prediction, an absent field is no claim.
struct StructureDescription {
  std::optional<bool> h_is_ap;
  std::optional<std::int64_t> h_difference;
  std::optional<bool> h_is_shifted_interval;
  std::optional<bool> a_is_ap;
  std::optional<std::int64_t> a_difference;
  std::optional<std::int64_t> a_dilation;  // d with A = d*[1,k] or d*[0,k-1]
};

inline bool satisfies(const StructureDescription& observed, const StructureDescription& predicted) {
  auto ok = [](const auto& want, const auto& have) { return !want || want == have; };
  return ok(predicted.h_is_ap, observed.h_is_ap) &&
         ok(predicted.h_difference, observed.h_difference) &&
         ok(predicted.h_is_shifted_interval, observed.h_is_shifted_interval) &&
         ok(predicted.a_is_ap, observed.a_is_ap) &&
         ok(predicted.a_difference, observed.a_difference) &&
         ok(predicted.a_dilation, observed.a_dilation);
}

/// A must be nonnegative.
inline StructureDescription observe_structure(const IntSet& set, const HSet& hs) {
  StructureDescription out;
  const APDescriptor h_ap = ap_descriptor(hs);
  out.h_is_ap = h_ap.is_ap;
  out.h_difference = h_ap.difference;
  out.h_is_shifted_interval = h_shifted_interval(hs).has_value();
  const APDescriptor a_ap = ap_descriptor(set);
  out.a_is_ap = a_ap.is_ap;
  out.a_difference = a_ap.difference;
  out.a_dilation = is_dilated_interval(set, has_zero(set));
  return out;
}

struct InverseVerdict {
  SumsetKind kind = SumsetKind::ordinary;
  BoundReport bound;
  bool equality_holds = false;
  InverseRule rule = InverseRule::none;
  bool hypotheses_hold = false;
  std::vector<std::string> reasons;  // unmet hypotheses
  StructureDescription predicted;
  StructureDescription observed;
  bool structure_matches = true;
  bool consistent = true;
  // Equality outside every inverse hypothesis with A not an AP.
  bool allowed_nonstructured = false;
};

namespace detail {

inline void require(bool condition, std::vector<std::string>& reasons, std::string what) {
  if (!condition) reasons.push_back(std::move(what));
}

}  // namespace detail

/// Verdict for a nonnegative A with a known sumset size.
inline InverseVerdict judge_inverse(const IntSet& a, const HSet& hs, SumsetKind kind,
                                    std::int64_t computed_size) {
  InverseVerdict v;
  v.kind = kind;
  v.bound = assess_bound(a, hs, kind, computed_size);
  v.equality_holds = v.bound.is_equality;
  v.observed = observe_structure(a, hs);

  const auto k = static_cast<std::int64_t>(a.size());
  const bool zero_in_a = has_zero(a);
  auto& why = v.reasons;

  if (hs.has_zero()) {
    why.push_back("0 in H: no inverse result covers it");
  } else if (kind == SumsetKind::ordinary) {
    const auto r = static_cast<std::int64_t>(hs.count());
    if (!zero_in_a && r >= 2) {
      v.rule = InverseRule::union_ap;
      detail::require(k >= 2, why, "k >= 2");
      v.predicted.h_is_ap = true;
      v.predicted.a_is_ap = true;
      if (v.observed.h_difference)
        v.predicted.a_difference = checked::mul(*v.observed.h_difference, a.min());
    } else if (hs.max() >= 2) {
      // Single multiplicity, or 0 in A where HA = h_r A.
      v.rule = InverseRule::h_fold_ap;
      v.predicted.a_is_ap = true;
    } else {
      why.push_back("H = {1}: HA = A");
    }
  } else {
    const auto r = static_cast<std::int64_t>(hs.count());
    if (r >= 2) {
      v.rule = zero_in_a ? InverseRule::restricted_union_zero_interval
                         : InverseRule::restricted_union_interval;
      detail::require(k >= (zero_in_a ? 7 : 6), why, zero_in_a ? "k >= 7" : "k >= 6");
      detail::require(hs.max() <= k - (zero_in_a ? 2 : 1), why,
                      zero_in_a ? "h_r <= k-2" : "h_r <= k-1");
      v.predicted.h_is_shifted_interval = true;
      if (zero_in_a) {
        if (k >= 2) v.predicted.a_dilation = a[1];
      } else {
        v.predicted.a_dilation = a.min();
      }
    } else {
      v.rule = InverseRule::restricted_h_fold_ap;
      const std::int64_t h = hs.min();
      detail::require(k >= 5, why, "k >= 5");
      detail::require(h >= 2 && h <= k - 2, why, "2 <= h <= k-2");
      v.predicted.a_is_ap = true;
    }
  }

  v.hypotheses_hold = v.rule != InverseRule::none && why.empty();
  v.structure_matches = v.rule == InverseRule::none || satisfies(v.observed, v.predicted);
  v.consistent = !(v.equality_holds && v.hypotheses_hold) || v.structure_matches;
  v.allowed_nonstructured = v.equality_holds && !v.hypotheses_hold && !*v.observed.a_is_ap;
  return v;
}

/// Checks the inverse implication "minimal size => predicted structure" on (A, H).
/// consistent == false is a counterexample.
inline InverseVerdict check_inverse(const IntSet& set, const HSet& hs, SumsetKind kind) {
  if (hs.empty()) throw Error(ErrorCode::arity, "H must be nonempty");
  const IntSet a = reflect_to_nonnegative(set);
  const auto size = static_cast<std::int64_t>(union_sumset_bitmap(a, hs, kind).count());
  return judge_inverse(a, hs, kind, size);
}

}  // namespace sumset
