// setmeans: evaluate means of symbolic real sets and check paper properties.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "setmeans/checks.hpp"
#include "setmeans/dsl.hpp"
#include "setmeans/errors.hpp"
#include "setmeans/fixtures.hpp"
#include "setmeans/means.hpp"

using json = nlohmann::ordered_json;
using namespace setmeans;

namespace {

constexpr int kOk = 0, kUsage = 1, kViolation = 2;

json report_json(const PropertyReport& r) {
  json values = json::object();
  for (const auto& [label, v] : r.values) values[label] = v;
  json j;
  j["property"] = r.property;
  j["mean"] = r.mean;
  j["verdict"] = verdict_name(r.verdict);
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["witness"] = {{"sets", r.sets}, {"values", values}};
  return j;
}

void print_report(const PropertyReport& r) {
  std::cout << r.property << " [" << r.mean << "]: " << verdict_name(r.verdict);
  if (!r.detail.empty()) std::cout << " — " << r.detail;
  std::cout << "\n";
  for (const auto& s : r.sets) std::cout << "  set " << s << "\n";
  for (const auto& [label, v] : r.values) std::cout << "  " << label << " = " << v << "\n";
}

int cmd_eval(const std::string& mean, const std::string& set_text, bool as_json) {
  CanonicalSet h = parse_dsl(set_text);
  MeanResult r = mean_eval(mean, h);
  if (as_json) {
    json j;
    j["mean"] = mean;
    j["set"] = format_set(h);
    j["in_domain"] = r.verdict.in_domain;
    if (r.verdict.in_domain) {
      j["exact"] = r.value->exact;
      j["value"] = rat_to_string(r.value->exact ? r.value->value
                                                : (r.value->lo + r.value->hi) / 2);
      j["lo"] = rat_to_string(r.value->lo);
      j["hi"] = rat_to_string(r.value->hi);
    } else {
      j["reason"] = r.verdict.reason;
    }
    std::cout << j.dump(2) << "\n";
    return r.verdict.in_domain ? kOk : kUsage;
  }
  if (!r.verdict.in_domain) {
    std::cerr << "error: out of domain: " << r.verdict.reason << "\n";
    return kUsage;
  }
  std::cout << format_value(*r.value) << "\n";
  return kOk;
}

int cmd_check(const std::string& property, const std::string& mean,
              const std::string& fixture, unsigned long long seed, long trials,
              bool as_json) {
  PropertyReport decisive;
  long holds = 0, violated = 0, inapplicable = 0, ran = 0;
  if (!fixture.empty()) {
    decisive = run_named_fixture(property, mean, fixture);
    ran = 1;
    (decisive.verdict == Verdict::Holds        ? holds
     : decisive.verdict == Verdict::Violated   ? violated
                                               : inapplicable)++;
  } else {
    bool have = false;
    for (long t = 0; t < trials; ++t) {
      PropertyReport r = run_property_trial(property, mean, seed + t);
      ++ran;
      if (r.verdict == Verdict::Violated) {
        ++violated;
        decisive = r;
        have = true;
        break;  // first violation is the witness
      }
      if (r.verdict == Verdict::Holds) {
        ++holds;
        decisive = r;
        have = true;
      } else {
        ++inapplicable;
        if (!have) decisive = r;
      }
    }
  }
  Verdict overall = violated     ? Verdict::Violated
                    : holds      ? Verdict::Holds
                                 : Verdict::Inapplicable;
  decisive.verdict = overall;
  decisive.trials = ran;
  decisive.seed = seed;
  if (as_json) {
    std::cout << report_json(decisive).dump(2) << "\n";
  } else {
    print_report(decisive);
    std::cout << "trials: " << ran << " (" << holds << " hold, " << violated
              << " violated, " << inapplicable << " inapplicable)\n";
  }
  return overall == Verdict::Violated ? kViolation : kOk;
}

int cmd_scan(const std::string& mean, const std::string& set_text, const std::string& from,
             const std::string& to, const std::string& step, const std::string& side,
             const std::string& out_path) {
  CanonicalSet h = parse_dsl(set_text);
  SliceSide s = side == "ge" ? SliceSide::Ge : SliceSide::Le;
  ScanResult res = slice_scan(mean, h, parse_rat(from), parse_rat(to), parse_rat(step), s);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << out_path << "\n";
    return kUsage;
  }
  out << "x,value,exact,in_domain\n";
  for (const auto& row : res.rows) {
    out << rat_to_string(row.x) << ',';
    if (row.in_domain)
      out << rat_to_string(row.exact ? row.value : (row.lo + row.hi) / 2);
    out << ',' << (row.in_domain && row.exact ? "true" : "false") << ','
        << (row.in_domain ? "true" : "false") << "\n";
  }
  std::cout << "wrote " << res.rows.size() << " rows to " << out_path << "\n";
  for (const auto& [a, b] : res.jumps)
    std::cout << "jump between x = " << rat_to_string(a) << " and x = " << rat_to_string(b)
              << "\n";
  return kOk;
}

int cmd_root(const std::string& mean, const std::string& set_text, const std::string& mode,
             const std::string& tol) {
  CanonicalSet h = parse_dsl(set_text);
  RootResult r = slice_mean_root(mean, h, mode, parse_rat(tol));
  std::cout << "x = " << rat_to_string(r.x) << " (" << rat_to_decimal(r.x) << ")\n";
  std::cout << "residual = " << rat_to_string(r.residual) << "\n";
  std::cout << "bracket = [" << rat_to_string(r.bracket_lo) << ", "
            << rat_to_string(r.bracket_hi) << "]\n";
  if (r.jump) std::cout << "jump = true\n";
  return kOk;
}

int cmd_suite(const std::string& report_path) {
  SuiteReport rep = run_paper_suite();
  for (const auto& f : rep.fixtures) {
    const char* tag = f.flagged ? "FLAG" : (f.pass ? "pass" : "FAIL");
    std::cout << tag << " " << f.name;
    if (!f.detail.empty()) std::cout << " — " << f.detail;
    std::cout << "\n";
  }
  std::cout << rep.passed << " passed, " << rep.failed << " failed, " << rep.flagged
            << " flagged\n";
  if (!report_path.empty()) {
    json j;
    j["fixtures"] = json::array();
    for (const auto& f : rep.fixtures)
      j["fixtures"].push_back(
          {{"name", f.name}, {"pass", f.pass}, {"flagged", f.flagged}, {"detail", f.detail}});
    j["passed"] = rep.passed;
    j["failed"] = rep.failed;
    j["flagged"] = rep.flagged;
    std::ofstream out(report_path, std::ios::binary);
    out << j.dump(2) << "\n";
  }
  return rep.failed == 0 ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"means of symbolic subsets of the real line"};
  app.require_subcommand(1);

  std::string mean, set_text, property, fixture, from, to, step, tol;
  std::string side = "le", mode = "mean-value", out_path, report_path, suite_name;
  unsigned long long seed = 0;
  long trials = 0;
  bool as_json = false;

  auto* eval = app.add_subcommand("eval", "evaluate a mean on a set");
  eval->add_option("--mean", mean)->required();
  eval->add_option("--set", set_text)->required();
  eval->add_flag("--json", as_json);

  auto* check = app.add_subcommand("check", "check a property");
  check->add_option("--property", property)->required();
  check->add_option("--mean", mean)->required();
  auto* fix_opt = check->add_option("--fixture", fixture);
  auto* seed_opt = check->add_option("--seed", seed);
  check->add_option("--trials", trials);
  check->add_flag("--json", as_json);
  fix_opt->excludes(seed_opt);

  auto* scan = app.add_subcommand("scan", "slice-mean scan to CSV");
  scan->add_option("--mean", mean)->required();
  scan->add_option("--set", set_text)->required();
  scan->add_option("--from", from)->required();
  scan->add_option("--to", to)->required();
  scan->add_option("--step", step)->required();
  scan->add_option("--side", side)->check(CLI::IsMember({"le", "ge"}));
  scan->add_option("--out", out_path)->required();

  auto* root = app.add_subcommand("root", "solve the slice-mean equation");
  root->add_option("--mean", mean)->required();
  root->add_option("--set", set_text)->required();
  root->add_option("--mode", mode)->check(CLI::IsMember({"mean-value", "fixed-point"}));
  root->add_option("--tol", tol)->required();

  auto* suite = app.add_subcommand("suite", "run a fixture suite");
  suite->add_option("name", suite_name)->required()->check(CLI::IsMember({"paper"}));
  suite->add_option("--report", report_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(mean, set_text, as_json);
    if (check->parsed()) {
      if (fixture.empty() && trials <= 0) {
        std::cerr << "error: need --fixture or --seed/--trials\n";
        return kUsage;
      }
      return cmd_check(property, mean, fixture, seed, trials, as_json);
    }
    if (scan->parsed()) return cmd_scan(mean, set_text, from, to, step, side, out_path);
    if (root->parsed()) return cmd_root(mean, set_text, mode, tol);
    return cmd_suite(report_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
