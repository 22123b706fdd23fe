#include <doctest.h>

#include <sstream>

#include "prevision/document.hpp"
#include "prevision/errors.hpp"

using namespace prevision;

namespace {

nlohmann::json base_doc() {
  return nlohmann::json::parse(R"({
    "atoms": ["A", "H", "B", "K"],
    "conditionals": [
      {"consequent": "A", "antecedent": "H"},
      {"consequent": "B", "antecedent": "K"}
    ],
    "terms": [
      {"members": [0], "prevision": "7/20"},
      {"members": [1], "prevision": "0.45"},
      {"members": [0, 1], "prevision": "63/400"}
    ]
  })");
}

}  // namespace

TEST_CASE("formula parser handles the grammar") {
  CHECK(parse_event("A & !B | C").str() == "A & !B | C");
  CHECK(parse_event("!(A | B) & C").str() == "!(A | B) & C");
  CHECK(parse_event("((A))").str() == "A");
  CHECK(parse_event(" 1 ").str() == "1");
  CHECK(parse_event("0").str() == "0");
  CHECK(parse_event("!!A").str() == "!!A");
  CHECK(parse_event("alpha_1 & B2").str() == "alpha_1 & B2");
}

TEST_CASE("formula parser rejects malformed input") {
  CHECK_THROWS_AS(parse_event(""), InputError);
  CHECK_THROWS_AS(parse_event("A &"), InputError);
  CHECK_THROWS_AS(parse_event("& A"), InputError);
  CHECK_THROWS_AS(parse_event("(A"), InputError);
  CHECK_THROWS_AS(parse_event("A)"), InputError);
  CHECK_THROWS_AS(parse_event("A B"), InputError);
  CHECK_THROWS_AS(parse_event("A ? B"), InputError);
  CHECK_THROWS_AS(parse_event("2"), InputError);
}

TEST_CASE("documents round-trip through json") {
  AssessmentDocument doc = document_from_json(base_doc());
  CHECK(doc.atoms.size() == 4);
  CHECK(doc.conditionals.size() == 2);
  CHECK(doc.terms.size() == 3);
  CHECK(doc.mode == "auto");
  nlohmann::json back = document_to_json(doc);
  AssessmentDocument again = document_from_json(back);
  CHECK(again.terms[2].prevision == "63/400");
  CHECK(again.conditionals[1].consequent == "B");
}

TEST_CASE("documents accept numeric previsions and options") {
  nlohmann::json j = base_doc();
  j["terms"][1]["prevision"] = 0.25;
  j["options"] = {{"mode", "lp"}};
  AssessmentDocument doc = document_from_json(j);
  CHECK(doc.mode == "lp");
  AssessmentProblem p = to_problem(doc);
  CHECK(p.previsions.at(Term({1})) == Rational(1, 4));
}

TEST_CASE("documents reject structural mistakes") {
  nlohmann::json missing = base_doc();
  missing.erase("conditionals");
  CHECK_THROWS_AS(document_from_json(missing), InputError);

  nlohmann::json bad_mode = base_doc();
  bad_mode["options"] = {{"mode", "fast"}};
  CHECK_THROWS_AS(document_from_json(bad_mode), InputError);

  nlohmann::json bad_value = base_doc();
  bad_value["terms"][0]["prevision"] = "1.2.3";
  CHECK_THROWS_AS(to_problem(document_from_json(bad_value)), InputError);

  std::istringstream broken("{ not json");
  CHECK_THROWS_AS(load_document(broken), InputError);
}

TEST_CASE("to_problem validates semantics") {
  nlohmann::json j = base_doc();
  j["conditionals"][0]["antecedent"] = "H & !H";
  CHECK_THROWS_AS(to_problem(document_from_json(j)), InputError);

  nlohmann::json out_of_range = base_doc();
  out_of_range["terms"][0]["prevision"] = "3/2";
  CHECK_THROWS_AS(to_problem(document_from_json(out_of_range)), InputError);
}

TEST_CASE("classification of two independent conditionals") {
  AssessmentProblem p = to_problem(document_from_json(base_doc()));
  FamilyMatch m = classify_family(p);
  CHECK(m.pattern == FamilyPattern::TwoFull);
  REQUIRE(m.values.size() == 3);
  CHECK(m.values[0] == Rational(7, 20));
  CHECK(m.values[1] == Rational(9, 20));
  CHECK(m.values[2] == Rational(63, 400));

  nlohmann::json prefix = base_doc();
  prefix["terms"].erase(2);
  FamilyMatch mp = classify_family(to_problem(document_from_json(prefix)));
  CHECK(mp.pattern == FamilyPattern::TwoPrefix);
}

TEST_CASE("classification of same-consequent families") {
  nlohmann::json j = nlohmann::json::parse(R"({
    "atoms": ["A", "H", "K"],
    "conditionals": [
      {"consequent": "A", "antecedent": "H"},
      {"consequent": "A", "antecedent": "K"}
    ],
    "terms": [
      {"members": [0], "prevision": "7/20"},
      {"members": [1], "prevision": "9/20"},
      {"members": [0, 1], "prevision": "1/4"}
    ]
  })");
  FamilyMatch m = classify_family(to_problem(document_from_json(j)));
  CHECK(m.pattern == FamilyPattern::SameConsequentFull);

  nlohmann::json disjoint = j;
  disjoint["atoms"] = {"A", "H", "X"};
  disjoint["conditionals"][1]["antecedent"] = "!H & X";
  disjoint["terms"][2]["prevision"] = "63/400";
  FamilyMatch md = classify_family(to_problem(document_from_json(disjoint)));
  CHECK(md.pattern == FamilyPattern::DisjointFull);
}

TEST_CASE("classification of three independent conditionals") {
  nlohmann::json j = nlohmann::json::parse(R"({
    "atoms": ["A", "H", "B", "K", "C", "J"],
    "conditionals": [
      {"consequent": "A", "antecedent": "H"},
      {"consequent": "B", "antecedent": "K"},
      {"consequent": "C", "antecedent": "J"}
    ],
    "terms": [
      {"members": [0], "prevision": "1/2"},
      {"members": [1], "prevision": "3/5"},
      {"members": [2], "prevision": "7/10"},
      {"members": [0, 1], "prevision": "3/10"},
      {"members": [0, 2], "prevision": "7/20"},
      {"members": [1, 2], "prevision": "21/50"}
    ]
  })");
  FamilyMatch m = classify_family(to_problem(document_from_json(j)));
  CHECK(m.pattern == FamilyPattern::ThreeSixPrefix);
  REQUIRE(m.values.size() == 6);
  CHECK(m.values[3] == Rational(3, 10));

  nlohmann::json full = j;
  full["terms"].push_back({{"members", {0, 1, 2}}, {"prevision", "21/100"}});
  FamilyMatch mf = classify_family(to_problem(document_from_json(full)));
  CHECK(mf.pattern == FamilyPattern::ThreeFull);
  CHECK(mf.values.size() == 7);
}

TEST_CASE("families without a closed form stay unclassified") {
  nlohmann::json tied = base_doc();
  tied["conditionals"][1]["antecedent"] = "H";
  tied["conditionals"][1]["consequent"] = "B";
  FamilyMatch m = classify_family(to_problem(document_from_json(tied)));
  CHECK(m.pattern == FamilyPattern::None);
}