#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "prevision/coherence.hpp"
#include "prevision/document.hpp"
#include "prevision/regions.hpp"
#include "prevision/tnorm.hpp"

namespace {

using nlohmann::ordered_json;
using namespace prevision;

constexpr int kExitCoherent = 0;
constexpr int kExitIncoherent = 1;
constexpr int kExitError = 2;

AssessmentDocument read_document(const std::string& path) {
  if (path == "-") return load_document(std::cin);
  return load_document_file(path);
}

std::string pattern_name(FamilyPattern p) {
  switch (p) {
    case FamilyPattern::TwoFull:
      return "two-conditional";
    case FamilyPattern::TwoPrefix:
      return "two-conditional-prefix";
    case FamilyPattern::ThreeFull:
      return "three-conditional";
    case FamilyPattern::ThreeSixPrefix:
      return "three-conditional-prefix";
    case FamilyPattern::SameConsequentFull:
      return "same-consequent";
    case FamilyPattern::SameConsequentPrefix:
      return "same-consequent-prefix";
    case FamilyPattern::DisjointFull:
      return "same-consequent-disjoint";
    case FamilyPattern::DisjointPrefix:
      return "same-consequent-disjoint-prefix";
    default:
      return "none";
  }
}

// Closed-form coherence for a classified family. Prefix families without a
// conjunction value are unconstrained except for the three-conditional one,
// whose pair values must leave room for a triple extension.
bool closed_form_coherent(const FamilyMatch& match) {
  const auto& v = match.values;
  switch (match.pattern) {
    case FamilyPattern::TwoFull:
      return in_pi_two(v[0], v[1], v[2]);
    case FamilyPattern::TwoPrefix:
    case FamilyPattern::SameConsequentPrefix:
    case FamilyPattern::DisjointPrefix:
      return true;
    case FamilyPattern::SameConsequentFull:
      return same_consequent_region(v[0], v[1], v[2]);
    case FamilyPattern::DisjointFull:
      return same_consequent_disjoint(v[0], v[1], v[2]);
    case FamilyPattern::ThreeFull:
      return in_pi_three(v[0], v[1], v[2], v[3], v[4], v[5], v[6]);
    case FamilyPattern::ThreeSixPrefix:
      return !extension_bounds_three(v[0], v[1], v[2], v[3], v[4], v[5]).empty;
    default:
      throw InputError("no closed-form region for this family");
  }
}

ordered_json verdict_json(const CoherenceVerdict& verdict) {
  ordered_json levels = ordered_json::array();
  for (const auto& level : verdict.levels)
    levels.push_back(
        {{"terms", level.terms}, {"starved", level.starved}});
  ordered_json j;
  j["levels"] = std::move(levels);
  if (verdict.coherent) {
    j["failure_level"] = nullptr;
  } else {
    j["failure_level"] = verdict.failure_level;
    j["failure_terms"] = verdict.failure_terms;
    ordered_json y = ordered_json::array();
    for (int i = 0; i < verdict.farkas.size(); ++i)
      y.push_back(rational_string(verdict.farkas[i]));
    j["certificate"] = std::move(y);
  }
  return j;
}

int cmd_check(const std::string& path, std::string mode, bool verify_lp,
              bool as_json) {
  AssessmentDocument doc = read_document(path);
  AssessmentProblem problem = to_problem(doc);
  if (mode.empty()) mode = doc.mode;

  FamilyMatch match = classify_family(problem);
  bool use_closed = false;
  if (mode == "closed-form") {
    if (match.pattern == FamilyPattern::None)
      throw InputError("no closed-form region matches this document");
    use_closed = true;
  } else if (mode == "auto") {
    use_closed = match.pattern != FamilyPattern::None;
  } else if (mode != "lp") {
    throw InputError("unknown mode '" + mode + "'");
  }

  bool coherent;
  std::string method;
  CoherenceVerdict verdict;
  bool have_verdict = false;
  if (use_closed) {
    coherent = closed_form_coherent(match);
    method = "closed-form";
    if (verify_lp) {
      verdict = check_coherence(problem);
      have_verdict = true;
      if (verdict.coherent != coherent)
        throw StateError("closed-form and LP verdicts disagree");
      method = "closed-form+lp";
    }
  } else {
    verdict = check_coherence(problem);
    have_verdict = true;
    coherent = verdict.coherent;
    method = "lp";
  }

  if (as_json) {
    ordered_json j;
    j["command"] = "check";
    j["coherent"] = coherent;
    j["mode"] = mode;
    j["method"] = method;
    j["family"] = pattern_name(match.pattern);
    if (have_verdict) j["recursion"] = verdict_json(verdict);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << (coherent ? "coherent" : "not coherent") << " (" << method
              << ")\n";
    if (have_verdict && !coherent)
      std::cout << "system unsolvable at level " << verdict.failure_level
                << '\n';
  }
  return coherent ? kExitCoherent : kExitIncoherent;
}

int cmd_extend(const std::string& path, const std::vector<int>& target_members,
               std::string mode, bool as_json) {
  AssessmentDocument doc = read_document(path);
  AssessmentProblem problem = to_problem(doc);
  if (mode.empty()) mode = doc.mode;
  Term target(target_members);

  ExtensionInterval interval;
  std::string method = "lp";
  if (mode == "closed-form") {
    FamilyMatch match = classify_family(problem);
    const auto& v = match.values;
    Bounds b;
    if (match.pattern == FamilyPattern::TwoPrefix && target == Term({0, 1})) {
      b = frechet_bounds(v[0], v[1]);
    } else if (match.pattern == FamilyPattern::SameConsequentPrefix &&
               target == Term({0, 1})) {
      b = {v[0] * v[1], std::min(v[0], v[1]), false};
    } else if (match.pattern == FamilyPattern::DisjointPrefix &&
               target == Term({0, 1})) {
      b = {v[0] * v[1], v[0] * v[1], false};
    } else if (match.pattern == FamilyPattern::ThreeSixPrefix &&
               target == Term({0, 1, 2})) {
      b = extension_bounds_three(v[0], v[1], v[2], v[3], v[4], v[5]);
    } else {
      throw InputError("no closed-form extension for this family and target");
    }
    if (b.empty) throw StateError("base assessment is incoherent");
    interval = {b.lower, b.upper, true};
    method = "closed-form";
  } else if (mode == "auto" || mode == "lp") {
    interval = extension_interval(problem, target);
  } else {
    throw InputError("unknown mode '" + mode + "'");
  }

  if (as_json) {
    ordered_json j;
    j["command"] = "extend";
    j["target"] = target.members();
    j["method"] = method;
    j["lower"] = rational_string(interval.lower);
    j["upper"] = rational_string(interval.upper);
    j["lower_decimal"] = to_double(interval.lower);
    j["upper_decimal"] = to_double(interval.upper);
    j["exact"] = interval.exact;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "coherent previsions for " << target.str() << ": ["
              << rational_string(interval.lower) << ", "
              << rational_string(interval.upper) << "]"
              << (interval.exact ? "" : " (approximate)") << '\n';
  }
  return kExitCoherent;
}

std::string lambda_kind_name(LambdaResult::Kind kind) {
  switch (kind) {
    case LambdaResult::Kind::Min:
      return "min";
    case LambdaResult::Kind::Product:
      return "product";
    case LambdaResult::Kind::Lukasiewicz:
      return "lukasiewicz";
    case LambdaResult::Kind::Generic:
      return "generic";
    case LambdaResult::Kind::NotRepresentable:
      return "not-representable";
    default:
      return "underdetermined";
  }
}

int cmd_lambda(const std::string& xs, const std::string& ys,
               const std::string& zs, bool as_json) {
  Rational x = parse_rational(xs), y = parse_rational(ys),
           z = parse_rational(zs);
  LambdaResult r = find_lambda(x, y, z);
  if (as_json) {
    ordered_json j;
    j["command"] = "lambda";
    j["kind"] = lambda_kind_name(r.kind);
    if (r.kind == LambdaResult::Kind::Generic) {
      j["lambda"] = r.lambda.str(30);
      j["lambda_decimal"] = r.lambda.convert_to<double>();
      j["residual"] = r.residual.str(8);
    } else {
      j["lambda"] = nullptr;
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "kind: " << lambda_kind_name(r.kind);
    if (r.kind == LambdaResult::Kind::Generic)
      std::cout << ", lambda = " << r.lambda.str(12)
                << ", residual = " << r.residual.str(4);
    std::cout << '\n';
  }
  return kExitCoherent;
}

// Rows of the value definition of a conjunction term: the all-true case,
// the some-false case, then one row per void pattern that can occur, each
// labeled with its defining formula over the document's events.
int cmd_table(const std::string& path, const std::vector<int>& term_members,
              bool as_json) {
  AssessmentDocument doc = read_document(path);
  AssessmentProblem problem = to_problem(doc);
  Term term(term_members);
  if (term.members().back() >=
      static_cast<int>(problem.conditionals.size()))
    throw InputError("term " + term.str() +
                     " references a conditional outside the family");

  const auto& cs = problem.conditionals;
  auto true_part = [&](int i) {
    return cs[i].consequent & cs[i].antecedent;
  };
  auto false_part = [&](int i) {
    return ~cs[i].consequent & cs[i].antecedent;
  };

  struct Row {
    std::string region;
    std::string value;
  };
  std::vector<Row> rows;

  const auto& members = term.members();
  Event all_true = true_part(members[0]);
  for (std::size_t k = 1; k < members.size(); ++k)
    all_true = all_true & true_part(members[k]);
  if (is_satisfiable(all_true, problem.atoms, problem.atom_cap))
    rows.push_back({all_true.str(), "1"});

  Event some_false = false_part(members[0]);
  for (std::size_t k = 1; k < members.size(); ++k)
    some_false = some_false | false_part(members[k]);
  if (is_satisfiable(some_false, problem.atoms, problem.atom_cap))
    rows.push_back({some_false.str(), "0"});

  // Void patterns in canonical order: by size, then lexicographically.
  const int n = term.size();
  std::vector<std::vector<int>> patterns;
  for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
    std::vector<int> voided;
    for (int k = 0; k < n; ++k)
      if ((bits >> k) & 1u) voided.push_back(members[k]);
    patterns.push_back(std::move(voided));
  }
  std::sort(patterns.begin(), patterns.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  for (const auto& voided : patterns) {
    Event region;
    bool first = true;
    for (int i : members) {
      bool is_void =
          std::find(voided.begin(), voided.end(), i) != voided.end();
      Event factor = is_void ? ~cs[i].antecedent : true_part(i);
      region = first ? factor : region & factor;
      first = false;
    }
    if (!is_satisfiable(region, problem.atoms, problem.atom_cap)) continue;
    rows.push_back(
        {region.str(), rational_string(problem.previsions.at(Term(voided)))});
  }

  if (as_json) {
    ordered_json j;
    j["command"] = "table";
    j["term"] = term.members();
    j["rows"] = ordered_json::array();
    for (const auto& row : rows)
      j["rows"].push_back({{"value", row.value}, {"region", row.region}});
    std::cout << j.dump(2) << '\n';
  } else {
    for (const auto& row : rows)
      std::cout << row.value << "\t" << row.region << '\n';
  }
  return kExitCoherent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coherence of prevision assessments on conjoined conditionals"};
  app.require_subcommand(1);

  std::string path, mode, xs, ys, zs;
  std::vector<int> target, term;
  bool verify_lp = false, as_json = false;

  auto* check = app.add_subcommand("check", "decide coherence of a document");
  check->add_option("document", path, "JSON document path, or - for stdin")
      ->required();
  check->add_option("--mode", mode, "auto, lp, or closed-form");
  check->add_flag("--verify-lp", verify_lp,
                  "cross-check a closed-form verdict against the LP engine");
  check->add_flag("--json", as_json, "machine-readable report");

  auto* extend =
      app.add_subcommand("extend", "coherent interval for a new term");
  extend->add_option("document", path, "JSON document path, or - for stdin")
      ->required();
  extend->add_option("--target", target, "members of the new term")
      ->required()
      ->delimiter(',');
  extend->add_option("--mode", mode, "auto, lp, or closed-form");
  extend->add_flag("--json", as_json, "machine-readable report");

  auto* lambda =
      app.add_subcommand("lambda", "Frank parameter reproducing z = T(x,y)");
  lambda->add_option("--x", xs)->required();
  lambda->add_option("--y", ys)->required();
  lambda->add_option("--z", zs)->required();
  lambda->add_flag("--json", as_json, "machine-readable report");

  auto* table =
      app.add_subcommand("table", "value table of a conjunction term");
  table->add_option("document", path, "JSON document path, or - for stdin")
      ->required();
  table->add_option("--term", term, "members of the term")
      ->required()
      ->delimiter(',');
  table->add_flag("--json", as_json, "machine-readable report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(path, mode, verify_lp, as_json);
    if (extend->parsed()) return cmd_extend(path, target, mode, as_json);
    if (lambda->parsed()) return cmd_lambda(xs, ys, zs, as_json);
    if (table->parsed()) return cmd_table(path, term, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
