#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumset/engine.hpp"
#include "sumset/int_set.hpp"

namespace sumset {

/// The lower-bound formulas, named by the sumset they bound.
enum class BoundFormula {
  h_fold,                      // |hA|  >= h(k-1)+1
  h_fold_restricted,           // |h^A| >= h(k-h)+1
  union_positive,              // |HA|  >= h_r(k-1)+r,                     A positive
  union_with_zero,             // |HA|  >= h_r(k-1)+1,                     0 in A
  restricted_union_positive,   // |H^A| >= sum (h_i-h_{i-1})(k-h_i)+r,     A positive
  restricted_union_with_zero,  // |H^A| >= sum (h_i-h_{i-1})(k-h_i-1)+h_1+r, 0 in A
};

inline const char* to_string(BoundFormula f) {
  switch (f) {
    case BoundFormula::h_fold: return "hA";
    case BoundFormula::h_fold_restricted: return "hhatA";
    case BoundFormula::union_positive: return "HA-positive";
    case BoundFormula::union_with_zero: return "HA-zero";
    case BoundFormula::restricted_union_positive: return "HhatA-positive";
    case BoundFormula::restricted_union_with_zero: return "HhatA-zero";
  }
  return "unknown";
}

inline std::int64_t bound_hA(std::int64_t k, std::int64_t h) {
  if (k < 1 || h < 1)
    throw Error(ErrorCode::hypothesis, "|hA| bound needs k >= 1 and h >= 1");
  return checked::add(checked::mul(h, k - 1), 1);
}

inline std::int64_t bound_h_hat(std::int64_t k, std::int64_t h) {
  if (h < 1 || h > k)
    throw Error(ErrorCode::hypothesis, "|h^A| bound needs 1 <= h <= k, got h=" + std::to_string(h) +
                                           ", k=" + std::to_string(k));
  return checked::add(checked::mul(h, k - h), 1);
}

namespace detail {

inline void require_positive_h(const HSet& hs) {
  if (hs.empty()) throw Error(ErrorCode::hypothesis, "H must be nonempty");
  if (hs.has_zero()) throw Error(ErrorCode::hypothesis, "bounds assume every h in H is positive");
}

}  // namespace detail

inline std::int64_t bound_HA(std::int64_t k, const HSet& hs, bool zero_in_a) {
  detail::require_positive_h(hs);
  if (k < 1) throw Error(ErrorCode::hypothesis, "k must be positive");
  const auto r = static_cast<std::int64_t>(hs.count());
  return checked::add(checked::mul(hs.max(), k - 1), zero_in_a ? 1 : r);
}

inline std::int64_t bound_H_hat(std::int64_t k, const HSet& hs, bool zero_in_a) {
  detail::require_positive_h(hs);
  const std::int64_t cap = zero_in_a ? k - 1 : k;
  if (hs.max() > cap)
    throw Error(ErrorCode::hypothesis, "h_r = " + std::to_string(hs.max()) + " exceeds " +
                                           (zero_in_a ? "k-1 = " : "k = ") + std::to_string(cap));
  const std::int64_t tail = zero_in_a ? k - 1 : k;
  std::int64_t total = 0;
  std::int64_t prev = 0;
  for (std::int64_t h : hs) {
    total = checked::add(total, checked::mul(h - prev, tail - h));
    prev = h;
  }
  total = checked::add(total, static_cast<std::int64_t>(hs.count()));
  if (zero_in_a) total = checked::add(total, hs.min());
  return total;
}

/// The pair (A, H) on which each union bound is attained:
/// A = [1,k] (or [0,k-1] when zero_in_a) and H = [1,r].
inline std::pair<IntSet, HSet> extremal_example(std::int64_t k, std::int64_t r, SumsetKind kind,
                                                bool zero_in_a) {
  if (k < 1 || r < 1) throw Error(ErrorCode::hypothesis, "extremal example needs k, r >= 1");
  if (kind == SumsetKind::restricted) {
    const std::int64_t cap = zero_in_a ? k - 1 : k;
    if (r > cap)
      throw Error(ErrorCode::hypothesis, "restricted extremal example needs r <= " +
                                             std::string(zero_in_a ? "k-1" : "k"));
  }
  IntSet a = zero_in_a ? make_interval(0, k - 1) : make_interval(1, k);
  return {std::move(a), HSet(make_interval(1, r))};
}

struct BoundReport {
  SumsetKind kind = SumsetKind::ordinary;
  std::int64_t computed_size = 0;
  std::optional<BoundFormula> formula;
  std::optional<std::int64_t> bound_value;
  bool hypotheses_met = false;
  bool is_equality = false;
  std::string reason;
};

/// Which bound, if any, covers (A, H, kind). computed_size is left at zero.
///
/// A multiplicity 0 in H is stripped. When 0 is in A its {0} is already
/// produced by the remaining multiplicities (ordinary kind, or restricted with
/// 1 in H), so the bound for the stripped H applies unchanged. When 0 is not
/// in A only H = [0, r] is covered: the stripped H is [1, r] and {0} adds
/// exactly one element.
inline BoundReport select_bound(const IntSet& set, const HSet& hs, SumsetKind kind) {
  if (set.empty()) throw Error(ErrorCode::arity, "A must be nonempty");
  if (hs.empty()) throw Error(ErrorCode::arity, "H must be nonempty");
  const SetClass cls = classify(set);
  if (cls == SetClass::mixed)
    throw Error(ErrorCode::unsupported_class, "A mixes positive and negative elements");

  BoundReport out;
  out.kind = kind;
  const bool zero_in_a = has_zero(set);
  const auto k = static_cast<std::int64_t>(set.size());
  const HSet positive = hs.without_zero();
  std::int64_t extra = 0;

  if (positive.empty()) {
    out.reason = "H = {0} is not covered by any bound";
    return out;
  }
  if (hs.has_zero()) {
    if (zero_in_a) {
      if (kind == SumsetKind::restricted && !positive.contains(1)) {
        out.reason = "0 in H with 0 in A needs 1 in H for the restricted bound";
        return out;
      }
    } else {
      const auto r = static_cast<std::int64_t>(positive.count());
      if (positive.max() != r) {
        out.reason = "0 in H and 0 not in A is only covered for H = [0, r]";
        return out;
      }
      extra = 1;
    }
  }

  if (kind == SumsetKind::ordinary) {
    out.formula = zero_in_a ? BoundFormula::union_with_zero : BoundFormula::union_positive;
    out.bound_value = checked::add(bound_HA(k, positive, zero_in_a), extra);
  } else {
    const std::int64_t cap = zero_in_a ? k - 1 : k;
    if (positive.max() > cap) {
      out.reason = "h_r = " + std::to_string(positive.max()) + " exceeds " +
                   (zero_in_a ? "k-1" : "k") + " = " + std::to_string(cap);
      return out;
    }
    out.formula = zero_in_a ? BoundFormula::restricted_union_with_zero
                            : BoundFormula::restricted_union_positive;
    out.bound_value = checked::add(bound_H_hat(k, positive, zero_in_a), extra);
  }
  out.hypotheses_met = true;
  return out;
}

/// Completes a BoundReport with a known sumset size.
inline BoundReport assess_bound(const IntSet& set, const HSet& hs, SumsetKind kind,
                                std::int64_t computed_size) {
  BoundReport out = select_bound(set, hs, kind);
  out.computed_size = computed_size;
  out.is_equality = out.hypotheses_met && computed_size == *out.bound_value;
  return out;
}

/// Sign-homogeneous A with nonpositive elements is reflected first: sizes are
/// invariant under A -> -A.
inline IntSet reflect_to_nonnegative(const IntSet& set) {
  const SetClass cls = classify(set);
  if (cls == SetClass::mixed)
    throw Error(ErrorCode::unsupported_class, "A mixes positive and negative elements");
  if (cls == SetClass::all_negative || (cls == SetClass::zero_rest_negative && set.size() > 1))
    return dilate(set, -1);
  return set;
}

inline BoundReport evaluate_kind(const IntSet& set, const HSet& hs, SumsetKind kind) {
  const IntSet a = reflect_to_nonnegative(set);
  const auto size = static_cast<std::int64_t>(union_sumset_bitmap(a, hs, kind).count());
  return assess_bound(a, hs, kind, size);
}

/// One report per kind: ordinary first, then restricted.
inline std::vector<BoundReport> evaluate(const IntSet& set, const HSet& hs) {
  return {evaluate_kind(set, hs, SumsetKind::ordinary),
          evaluate_kind(set, hs, SumsetKind::restricted)};
}

}  // namespace sumset
