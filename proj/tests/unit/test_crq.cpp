#include <doctest.h>

#include "prevision/crq.hpp"
#include "prevision/errors.hpp"
#include "prevision/problem.hpp"

using namespace prevision;

namespace {

AssessmentProblem same_consequent(const Rational& x, const Rational& y,
                                  const Rational& z) {
  AssessmentProblem p;
  p.atoms = AtomList({"A", "H", "K"});
  p.conditionals = {{Event::atom("A"), Event::atom("H")},
                    {Event::atom("A"), Event::atom("K")}};
  p.terms = {Term({0}), Term({1}), Term({0, 1})};
  p.previsions.set(Term({0}), x);
  p.previsions.set(Term({1}), y);
  p.previsions.set(Term({0, 1}), z);
  return p;
}

}  // namespace

TEST_CASE("terms canonicalize and render") {
  Term t({2, 0, 2});
  CHECK(t.members() == std::vector<int>{0, 2});
  CHECK(t.size() == 2);
  CHECK(t.contains(0));
  CHECK_FALSE(t.contains(1));
  CHECK(t.str() == "{0,2}");
  CHECK(Term({1, 0}) == Term({0, 1}));
  CHECK(Term({0}) < Term({1}));
  CHECK_THROWS_AS(Term(std::vector<int>{}), InputError);
  CHECK_THROWS_AS(Term({-1}), InputError);
}

TEST_CASE("prevision map validates range and names missing terms") {
  PrevisionMap m;
  m.set(Term({0}), Rational(7, 20));
  CHECK(m.contains(Term({0})));
  CHECK(m.at(Term({0})) == Rational(7, 20));
  CHECK_THROWS_AS(m.set(Term({1}), Rational(-1, 10)), InputError);
  CHECK_THROWS_AS(m.set(Term({1}), Rational(11, 10)), InputError);
  CHECK_THROWS_WITH_AS(m.at(Term({0, 1})),
                       "missing prevision for sub-conjunction {0,1}",
                       InputError);
}

TEST_CASE("value table of a pair conjunction with common consequent") {
  // Constituent order over atoms (A,H,K):
  //   (F,V) (T,V) (V,F) (V,T) (F,F) (T,T), with C0 = (V,V).
  Rational x(7, 20), y(9, 20), z(3, 10);
  AssessmentProblem p = same_consequent(x, y, z);
  p.validate();
  QSystem sys = q_vectors(p);

  REQUIRE(sys.table.size() == 6);
  REQUIRE(sys.q.rows() == 3);
  REQUIRE(sys.q.cols() == 6);

  RVector pair(6);
  pair << 0, y, 0, x, 0, 1;
  CHECK(sys.q.row(2).transpose() == pair);

  RVector first(6);
  first << 0, 1, x, x, 0, 1;
  CHECK(sys.q.row(0).transpose() == first);

  RVector second(6);
  second << y, y, 0, 1, 0, 1;
  CHECK(sys.q.row(1).transpose() == second);

  REQUIRE(sys.q0.has_value());
  CHECK((*sys.q0)(0) == x);
  CHECK((*sys.q0)(1) == y);
  CHECK((*sys.q0)(2) == z);
}

TEST_CASE("value table reports the missing sub-conjunction") {
  AssessmentProblem p = same_consequent(Rational(1, 2), Rational(1, 2),
                                        Rational(1, 4));
  ConstituentTable table = enumerate_constituents(p.conditionals, p.atoms);
  PrevisionMap only_pair;
  only_pair.set(Term({0, 1}), Rational(1, 4));
  CHECK_THROWS_WITH_AS(
      conjunction_value_table(Term({0, 1}), table, only_pair),
      "missing prevision for sub-conjunction {1}", InputError);
}

TEST_CASE("problem validation rejects structural defects") {
  AssessmentProblem p = same_consequent(Rational(7, 20), Rational(9, 20),
                                        Rational(3, 10));
  CHECK_NOTHROW(p.validate());

  AssessmentProblem out_of_range = p;
  out_of_range.terms.push_back(Term({5}));
  out_of_range.previsions.set(Term({5}), Rational(1, 2));
  CHECK_THROWS_AS(out_of_range.validate(), InputError);

  AssessmentProblem unassessed = p;
  unassessed.terms.push_back(Term({0, 1}));
  CHECK_THROWS_AS(unassessed.validate(), InputError);

  AssessmentProblem undeclared = p;
  undeclared.conditionals[0].consequent = Event::atom("Z");
  CHECK_THROWS_AS(undeclared.validate(), InputError);

  AssessmentProblem impossible = p;
  impossible.conditionals[1].antecedent =
      Event::atom("K") & ~Event::atom("K");
  CHECK_THROWS_AS(impossible.validate(), InputError);
}

TEST_CASE("duplicate terms are rejected") {
  AssessmentProblem p = same_consequent(Rational(7, 20), Rational(9, 20),
                                        Rational(3, 10));
  p.terms.push_back(Term({1, 0}));
  CHECK_THROWS_AS(p.validate(), InputError);
}

TEST_CASE("tautological antecedent leaves no all-void region") {
  AssessmentProblem p;
  p.atoms = AtomList({"A"});
  p.conditionals = {{Event::atom("A"), Event::constant(true)}};
  p.terms = {Term({0})};
  p.previsions.set(Term({0}), Rational(1, 2));
  p.validate();
  QSystem sys = q_vectors(p);
  CHECK(sys.table.size() == 2);
  CHECK_FALSE(sys.q0.has_value());
}
