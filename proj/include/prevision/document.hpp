#pragma once

#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "prevision/problem.hpp"

namespace prevision {

/// Parses the formula grammar used by documents and reports:
///   expr  := and ('|' and)*
///   and   := unary ('&' unary)*
///   unary := '!' unary | atom | '0' | '1' | '(' expr ')'
/// Atom names are [A-Za-z_][A-Za-z0-9_]*. Throws InputError with the
/// offending position on malformed input.
Event parse_event(const std::string& text);

struct DocConditional {
  std::string consequent;
  std::string antecedent;
};

struct DocTerm {
  std::vector<int> members;
  std::string prevision;
};

/// JSON document shape:
/// {
///   "atoms": ["A", "H"],
///   "conditionals": [{"consequent": "A", "antecedent": "H"}, ...],
///   "terms": [{"members": [0, 1], "prevision": "63/400"}, ...],
///   "options": {"mode": "auto"}            // optional
/// }
struct AssessmentDocument {
  std::vector<std::string> atoms;
  std::vector<DocConditional> conditionals;
  std::vector<DocTerm> terms;
  std::string mode = "auto";
};

AssessmentDocument document_from_json(const nlohmann::json& j);
nlohmann::json document_to_json(const AssessmentDocument& doc);
AssessmentDocument load_document(std::istream& in);
AssessmentDocument load_document_file(const std::string& path);

/// Builds and validates the problem a document describes.
AssessmentProblem to_problem(const AssessmentDocument& doc);

/// Families with a known closed-form coherence region.
enum class FamilyPattern {
  None,
  TwoFull,               // {0},{1},{0,1} over independent events
  TwoPrefix,             // {0},{1} over independent events
  ThreeFull,             // all seven subsets over three conditionals
  ThreeSixPrefix,        // singletons and pairs only
  SameConsequentFull,    // {0},{1},{0,1}, equal consequents
  SameConsequentPrefix,  //
  DisjointFull,          // equal consequents, incompatible antecedents
  DisjointPrefix,        //
};

/// Pattern plus the assessed values in the canonical argument order of the
/// matching region predicate (x,y[,z] or x1,x2,x3,x12,x13,x23[,x123]).
struct FamilyMatch {
  FamilyPattern pattern = FamilyPattern::None;
  std::vector<Rational> values;
};

FamilyMatch classify_family(const AssessmentProblem& problem);

}  // namespace prevision
