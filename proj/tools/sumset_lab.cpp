// sumset-lab: compute sumsets, evaluate lower bounds, check inverse structure
// and run exhaustive verification sweeps.
//
// Exit status: 0 success, 1 usage or input error, 2 verify found a bound
// violation, inverse inconsistency or witness failure.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sumset/sumset.hpp"

namespace {

using sumset::Json;

enum class Format { text, json };

struct Options {
  std::string a_expr;
  std::string h_expr;
  std::string kind;  // empty: subcommand default
  std::optional<std::int64_t> k;
  bool zero_in_a = false;

  std::int64_t universe = 12;
  std::string k_range = "2..6";
  std::int64_t h_max = 6;
  std::string r_range = "1..6";
  std::string kinds = "both";
  std::string zero_mode = "without-zero";
  unsigned workers = 0;
  std::uint64_t cap = sumset::kDefaultPairCap;
  std::size_t equality_cap = sumset::kDefaultEqualityCap;
  bool no_witness = false;
  bool timing = false;

  bool json = false;
  bool text = false;
};

Format output_format(const Options& o) {
  if (o.json) return Format::json;
  if (o.text) return Format::text;
  if (const char* env = std::getenv("SUMSET_LAB_FORMAT")) {
    const std::string v = env;
    if (v == "json") return Format::json;
    if (v == "text" || v.empty()) return Format::text;
    throw sumset::Error(sumset::ErrorCode::parse, "SUMSET_LAB_FORMAT must be 'text' or 'json'");
  }
  return Format::text;
}

std::vector<sumset::SumsetKind> parse_kinds(const std::string& text) {
  if (text == "both") return {sumset::SumsetKind::ordinary, sumset::SumsetKind::restricted};
  return {sumset::parse_kind(text)};
}

// "a..b" or "a". lo > hi is an empty range.
std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw sumset::Error(sumset::ErrorCode::parse, "bad range '" + text + "'");
  }
}

const char* sumset_label(sumset::SumsetKind kind) {
  return kind == sumset::SumsetKind::ordinary ? "HA" : "H^A";
}

std::string bound_text(const sumset::BoundReport& b) {
  if (!b.hypotheses_met) return "none (" + b.reason + ")";
  return std::to_string(*b.bound_value) + " (" + sumset::to_string(*b.formula) + ")";
}

int run_compute(const Options& o, Format fmt) {
  const sumset::IntSet a = sumset::parse_int_set(o.a_expr);
  const sumset::HSet h = sumset::parse_h_set(o.h_expr);
  Json results = Json::array();
  for (sumset::SumsetKind kind : parse_kinds(o.kind)) {
    const sumset::IntSet s = sumset::union_sumset(a, h, kind);
    sumset::BoundReport b;
    if (sumset::classify(a) == sumset::SetClass::mixed) {
      b.kind = kind;
      b.computed_size = static_cast<std::int64_t>(s.size());
      b.reason = "A mixes positive and negative elements";
    } else {
      b = sumset::assess_bound(sumset::reflect_to_nonnegative(a), h, kind,
                               static_cast<std::int64_t>(s.size()));
    }
    if (fmt == Format::text) {
      std::cout << "kind:     " << sumset::to_string(kind) << "\n"
                << "A:        " << sumset::format_set(a) << "\n"
                << "H:        " << sumset::format_set(h) << "\n"
                << sumset_label(kind) << ":" << std::string(kind == sumset::SumsetKind::ordinary ? 7 : 6, ' ')
                << sumset::format_set(s) << "\n"
                << "size:     " << s.size() << "\n"
                << "bound:    " << bound_text(b) << "\n"
                << "equality: " << (b.is_equality ? "yes" : "no") << "\n";
    } else {
      Json j = sumset::to_json(b);
      j["sumset"] = s.vector();
      results.push_back(std::move(j));
    }
  }
  if (fmt == Format::json) {
    Json out;
    out["A"] = a.vector();
    out["H"] = h.vector();
    out["results"] = std::move(results);
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int run_bound(const Options& o, Format fmt) {
  const sumset::HSet h = sumset::parse_h_set(o.h_expr);
  std::int64_t k = 0;
  bool zero = o.zero_in_a;
  if (!o.a_expr.empty()) {
    const sumset::IntSet a = sumset::reflect_to_nonnegative(sumset::parse_int_set(o.a_expr));
    k = static_cast<std::int64_t>(a.size());
    zero = sumset::has_zero(a);
  } else if (o.k) {
    k = *o.k;
  } else {
    throw sumset::Error(sumset::ErrorCode::parse, "bound needs -k or -A");
  }

  Json out;
  out["k"] = k;
  out["H"] = h.vector();
  out["zero_in_A"] = zero;
  Json values = Json::object();
  auto add = [&](const std::string& name, auto&& compute) {
    try {
      values[name] = compute();
    } catch (const sumset::Error& e) {
      values[name] = nullptr;
      if (fmt == Format::text) std::cout << name << ": not applicable (" << e.what() << ")\n";
      return;
    }
    if (fmt == Format::text) std::cout << name << ": " << values[name].get<std::int64_t>() << "\n";
  };
  for (sumset::SumsetKind kind : parse_kinds(o.kind)) {
    if (kind == sumset::SumsetKind::ordinary) {
      add(zero ? "HA-zero" : "HA-positive", [&] { return sumset::bound_HA(k, h, zero); });
      for (std::int64_t m : h)
        add("hA[h=" + std::to_string(m) + "]", [&] { return sumset::bound_hA(k, m); });
    } else {
      add(zero ? "HhatA-zero" : "HhatA-positive", [&] { return sumset::bound_H_hat(k, h, zero); });
      for (std::int64_t m : h)
        add("hhatA[h=" + std::to_string(m) + "]", [&] { return sumset::bound_h_hat(k, m); });
    }
  }
  out["bounds"] = std::move(values);
  if (fmt == Format::json) std::cout << out.dump(2) << "\n";
  return 0;
}

void print_structure(const char* label, const sumset::StructureDescription& s) {
  auto flag = [](const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "-"; };
  auto num = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
  std::cout << label << "H ap=" << flag(s.h_is_ap) << " d=" << num(s.h_difference)
            << " shifted-interval=" << flag(s.h_is_shifted_interval) << "; A ap=" << flag(s.a_is_ap)
            << " d=" << num(s.a_difference) << " dilated-interval=" << num(s.a_dilation) << "\n";
}

int run_check(const Options& o, Format fmt) {
  const sumset::IntSet a = sumset::parse_int_set(o.a_expr);
  const sumset::HSet h = sumset::parse_h_set(o.h_expr);
  Json verdicts = Json::array();
  for (sumset::SumsetKind kind : parse_kinds(o.kind)) {
    const sumset::InverseVerdict v = sumset::check_inverse(a, h, kind);
    if (fmt == Format::json) {
      verdicts.push_back(sumset::to_json(v));
      continue;
    }
    std::cout << "kind:        " << sumset::to_string(kind) << "\n"
              << "size:        " << v.bound.computed_size << "\n"
              << "bound:       " << bound_text(v.bound) << "\n"
              << "equality:    " << (v.equality_holds ? "yes" : "no") << "\n"
              << "rule:        " << sumset::to_string(v.rule) << "\n"
              << "hypotheses:  " << (v.hypotheses_hold ? "hold" : "not met");
    for (const std::string& r : v.reasons) std::cout << " [needs " << r << "]";
    std::cout << "\n";
    print_structure("predicted:   ", v.predicted);
    print_structure("observed:    ", v.observed);
    std::cout << "consistent:  " << (v.consistent ? "yes" : "NO") << "\n";
    if (v.allowed_nonstructured) std::cout << "note:        allowed non-structured equality\n";
  }
  if (fmt == Format::json) {
    Json out;
    out["A"] = a.vector();
    out["H"] = h.vector();
    out["verdicts"] = std::move(verdicts);
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

sumset::SearchSpace make_space(const Options& o) {
  sumset::SearchSpace s;
  s.universe_max = o.universe;
  std::tie(s.k_min, s.k_max) = parse_range(o.k_range);
  s.h_max = o.h_max;
  std::tie(s.r_min, s.r_max) = parse_range(o.r_range);
  s.kinds = parse_kinds(o.kinds);
  s.zero_mode = sumset::parse_zero_mode(o.zero_mode);
  return s;
}

sumset::VerifyOptions make_verify_options(const Options& o) {
  sumset::VerifyOptions v;
  v.workers = o.workers;
  v.cap = o.cap;
  v.equality_cap = o.equality_cap;
  v.check_witness = !o.no_witness;
  return v;
}

void print_case(const sumset::EqualityCase& c) {
  std::cout << "  A=" << sumset::format_set(c.a) << "  H=" << sumset::format_set(c.h)
            << "  kind=" << sumset::to_string(c.verdict.kind) << "  size=" << c.verdict.bound.computed_size
            << "  rule=" << sumset::to_string(c.verdict.rule)
            << (c.verdict.hypotheses_hold ? "" : " (hypotheses not met)") << "\n";
}

int run_verify(const Options& o, Format fmt) {
  const sumset::VerificationReport r = sumset::verify(make_space(o), make_verify_options(o));
  if (fmt == Format::json) {
    std::cout << sumset::report_to_json(r, o.timing).dump(2) << "\n";
  } else {
    std::cout << "pairs checked:            " << r.pairs_checked << " (predicted " << r.predicted_pairs << ")\n"
              << "bounds checked:           " << r.bounds_checked << "\n"
              << "no applicable bound:      " << r.hypotheses_unmet << "\n"
              << "bound violations:         " << r.bound_violations.size() << "\n"
              << "equality cases:           " << r.equality_case_count
              << (r.equality_cases_truncated ? " (stored list truncated)" : "") << "\n"
              << "inverse inconsistencies:  " << r.inverse_inconsistencies.size() << "\n"
              << "allowed non-structured:   " << r.allowed_nonstructured_count << "\n"
              << "witness blocks checked:   " << r.witness_checked << "\n"
              << "witness failures:         " << r.witness_failures.size() << "\n"
              << "wall time:                " << r.wall_time_seconds << " s\n";
    for (const auto& v : r.bound_violations)
      std::cout << "VIOLATION A=" << sumset::format_set(v.a) << " H=" << sumset::format_set(v.h)
                << " kind=" << sumset::to_string(v.kind) << " size=" << v.size << " bound=" << v.bound << "\n";
    for (const auto& c : r.inverse_inconsistencies) {
      std::cout << "INCONSISTENT";
      print_case(c);
    }
    for (const auto& f : r.witness_failures)
      std::cout << "WITNESS FAILURE A=" << sumset::format_set(f.a) << " H=" << sumset::format_set(f.h)
                << ": " << f.message << "\n";
    std::cout << (r.clean() ? "result: clean\n" : "result: THEOREM INCONSISTENCY\n");
  }
  return r.clean() ? 0 : 2;
}

int run_extremal(const Options& o, Format fmt) {
  const sumset::ExtremalReport e = sumset::find_extremal(make_space(o), make_verify_options(o));
  if (fmt == Format::json) {
    std::cout << sumset::extremal_to_json(e, o.timing).dump(2) << "\n";
    return 0;
  }
  std::cout << "equality cases: " << e.report.equality_case_count
            << (e.report.equality_cases_truncated ? " (stored list truncated)" : "") << "\n";
  for (const auto& g : e.groups) {
    std::cout << "k=" << g.k << " r=" << g.r << " kind=" << sumset::to_string(g.kind) << ": "
              << g.cases.size() << " case(s)\n";
    for (const auto& c : g.cases) print_case(c);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sumset-lab: generalized sumsets, lower bounds and inverse structure"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* cmd) {
    auto* json = cmd->add_flag("--json", o.json, "JSON output");
    auto* text = cmd->add_flag("--text", o.text, "text output (default; env SUMSET_LAB_FORMAT)");
    json->excludes(text);
  };
  auto add_pair = [&](CLI::App* cmd) {
    cmd->add_option("-A,--set", o.a_expr, "set A, e.g. 1..5, 1,2,4 or 3*0..4")->required();
    cmd->add_option("-H,--multiplicities", o.h_expr, "multiplicity set H")->required();
    cmd->add_option("--kind", o.kind, "ordinary, restricted or both")
        ->check(CLI::IsMember({"ordinary", "restricted", "both"}));
    add_format(cmd);
  };
  auto add_space = [&](CLI::App* cmd) {
    cmd->add_option("--universe", o.universe, "A drawn from [1,N] (or {0} u [1,N-1])");
    cmd->add_option("--k", o.k_range, "range of |A|, e.g. 2..6");
    cmd->add_option("--hmax", o.h_max, "H drawn from [1,hmax]");
    cmd->add_option("--r", o.r_range, "range of |H|");
    cmd->add_option("--kinds", o.kinds, "ordinary, restricted or both")
        ->check(CLI::IsMember({"ordinary", "restricted", "both"}));
    cmd->add_option("--zero-mode", o.zero_mode, "without-zero, with-zero or both")
        ->check(CLI::IsMember({"without-zero", "with-zero", "both"}));
    cmd->add_option("--workers", o.workers, "worker threads (0: all cores)");
    cmd->add_option("--cap", o.cap, "hard cap on enumerated pairs");
    cmd->add_option("--equality-cap", o.equality_cap, "maximum stored equality cases");
    cmd->add_flag("--no-witness", o.no_witness, "skip witness-block checks");
    cmd->add_flag("--timing", o.timing, "include wall time in JSON output");
    add_format(cmd);
  };

  auto* compute = app.add_subcommand("compute", "compute HA / H^A, its size and the applicable bound");
  add_pair(compute);
  auto* bound = app.add_subcommand("bound", "evaluate lower-bound formulas");
  bound->add_option("-k", o.k, "cardinality of A");
  bound->add_option("-A,--set", o.a_expr, "set A (derives k and whether 0 is in A)");
  bound->add_option("-H,--multiplicities", o.h_expr, "multiplicity set H")->required();
  bound->add_flag("--zero-in-a", o.zero_in_a, "A contains 0 (with -k)");
  bound->add_option("--kind", o.kind, "ordinary, restricted or both")
      ->check(CLI::IsMember({"ordinary", "restricted", "both"}));
  add_format(bound);
  auto* check = app.add_subcommand("check", "check the inverse structure of an equality case");
  add_pair(check);
  auto* verify = app.add_subcommand("verify", "exhaustively verify bounds and inverse results");
  add_space(verify);
  auto* extremal = app.add_subcommand("extremal", "list all equality cases grouped by (k, r, kind)");
  add_space(extremal);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (o.kind.empty()) o.kind = bound->parsed() ? "both" : "ordinary";

  try {
    const Format fmt = output_format(o);
    if (compute->parsed()) return run_compute(o, fmt);
    if (bound->parsed()) return run_bound(o, fmt);
    if (check->parsed()) return run_check(o, fmt);
    if (verify->parsed()) return run_verify(o, fmt);
    if (extremal->parsed()) return run_extremal(o, fmt);
  } catch (const sumset::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
