#pragma once

// JSON form of verification reports ("sumset-lab-report/1"). Keys are emitted
// in a fixed order so equal reports serialize to identical bytes.

#include <optional>
#include <string>

#include "json.hpp"
#include "sumset/verifier.hpp"

namespace sumset {

inline constexpr const char* kReportVersion = "sumset-lab-report/1";

using Json = nlohmann::ordered_json;

namespace detail {

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace detail

inline Json to_json(const StructureDescription& s) {
  Json j;
  j["H_ap"] = detail::optional_json(s.h_is_ap);
  j["H_difference"] = detail::optional_json(s.h_difference);
  j["H_shifted_interval"] = detail::optional_json(s.h_is_shifted_interval);
  j["A_ap"] = detail::optional_json(s.a_is_ap);
  j["A_difference"] = detail::optional_json(s.a_difference);
  j["A_dilation"] = detail::optional_json(s.a_dilation);
  return j;
}

inline Json to_json(const BoundReport& b) {
  Json j;
  j["kind"] = to_string(b.kind);
  j["size"] = b.computed_size;
  j["bound"] = detail::optional_json(b.bound_value);
  j["formula"] = b.formula ? Json(to_string(*b.formula)) : Json(nullptr);
  j["hypotheses_met"] = b.hypotheses_met;
  j["equality"] = b.is_equality;
  j["reason"] = b.reason;
  return j;
}

inline Json to_json(const InverseVerdict& v) {
  Json j;
  j["kind"] = to_string(v.kind);
  j["size"] = v.bound.computed_size;
  j["bound"] = detail::optional_json(v.bound.bound_value);
  j["formula"] = v.bound.formula ? Json(to_string(*v.bound.formula)) : Json(nullptr);
  j["equality"] = v.equality_holds;
  j["rule"] = to_string(v.rule);
  j["hypotheses_hold"] = v.hypotheses_hold;
  j["unmet_hypotheses"] = v.reasons;
  j["predicted"] = to_json(v.predicted);
  j["observed"] = to_json(v.observed);
  j["structure_matches"] = v.structure_matches;
  j["consistent"] = v.consistent;
  j["allowed_nonstructured"] = v.allowed_nonstructured;
  return j;
}

inline Json to_json(const EqualityCase& c) {
  Json j;
  j["A"] = c.a.vector();
  j["H"] = c.h.vector();
  j["verdict"] = to_json(c.verdict);
  return j;
}

inline Json to_json(const SearchSpace& s) {
  Json j;
  j["universe_max"] = s.universe_max;
  j["k_range"] = {s.k_min, s.k_max};
  j["h_max"] = s.h_max;
  j["r_range"] = {s.r_min, s.r_max};
  Json kinds = Json::array();
  for (SumsetKind k : s.kinds) kinds.push_back(to_string(k));
  j["kinds"] = kinds;
  j["zero_mode"] = to_string(s.zero_mode);
  return j;
}

inline Json report_to_json(const VerificationReport& r, bool include_timing = false) {
  Json j;
  j["version"] = kReportVersion;
  j["space"] = to_json(r.space);
  j["predicted_pairs"] = r.predicted_pairs;
  j["pairs_checked"] = r.pairs_checked;
  j["bounds_checked"] = r.bounds_checked;
  j["hypotheses_unmet"] = r.hypotheses_unmet;

  Json violations = Json::array();
  for (const BoundViolation& v : r.bound_violations) {
    Json e;
    e["A"] = v.a.vector();
    e["H"] = v.h.vector();
    e["kind"] = to_string(v.kind);
    e["size"] = v.size;
    e["bound"] = v.bound;
    e["formula"] = to_string(v.formula);
    violations.push_back(std::move(e));
  }
  j["bound_violations"] = std::move(violations);

  j["equality_case_count"] = r.equality_case_count;
  j["equality_cases_truncated"] = r.equality_cases_truncated;
  Json cases = Json::array();
  for (const EqualityCase& c : r.equality_cases) cases.push_back(to_json(c));
  j["equality_cases"] = std::move(cases);

  Json inconsistent = Json::array();
  for (const EqualityCase& c : r.inverse_inconsistencies) inconsistent.push_back(to_json(c));
  j["inverse_inconsistencies"] = std::move(inconsistent);

  j["allowed_nonstructured_count"] = r.allowed_nonstructured_count;
  Json allowed = Json::array();
  for (const EqualityCase& c : r.allowed_nonstructured_equalities) allowed.push_back(to_json(c));
  j["allowed_nonstructured_equalities"] = std::move(allowed);

  j["witness_checked"] = r.witness_checked;
  Json failures = Json::array();
  for (const WitnessFailure& f : r.witness_failures) {
    Json e;
    e["A"] = f.a.vector();
    e["H"] = f.h.vector();
    e["kind"] = to_string(f.kind);
    e["message"] = f.message;
    failures.push_back(std::move(e));
  }
  j["witness_failures"] = std::move(failures);
  j["clean"] = r.clean();
  if (include_timing) j["wall_time_seconds"] = r.wall_time_seconds;
  return j;
}

inline Json extremal_to_json(const ExtremalReport& e, bool include_timing = false) {
  Json j;
  j["version"] = kReportVersion;
  j["space"] = to_json(e.report.space);
  j["pairs_checked"] = e.report.pairs_checked;
  j["equality_case_count"] = e.report.equality_case_count;
  j["equality_cases_truncated"] = e.report.equality_cases_truncated;
  Json groups = Json::array();
  for (const ExtremalGroup& g : e.groups) {
    Json gj;
    gj["k"] = g.k;
    gj["r"] = g.r;
    gj["kind"] = to_string(g.kind);
    gj["count"] = g.cases.size();
    Json cases = Json::array();
    for (const EqualityCase& c : g.cases) cases.push_back(to_json(c));
    gj["cases"] = std::move(cases);
    groups.push_back(std::move(gj));
  }
  j["groups"] = std::move(groups);
  if (include_timing) j["wall_time_seconds"] = e.report.wall_time_seconds;
  return j;
}

}  // namespace sumset
