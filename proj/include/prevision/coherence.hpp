#pragma once

#include <vector>

#include "prevision/problem.hpp"
#include "prevision/simplex.hpp"

namespace prevision {

/// Convex-combination system of a problem: columns are the constituent
/// Q-vectors, target the assessed previsions. A solution is a probability
/// mass over constituents reproducing every assessed prevision.
struct SigmaSystem {
  RMatrix q;
  RVector target;
  std::vector<Term> terms;
  ConstituentTable table;
};

/// Assembles the system. The problem must already be validated.
SigmaSystem build_sigma(const AssessmentProblem& problem);

struct SigmaSolution {
  bool solvable = false;
  RVector lambda;  // convex weights over constituents when solvable
  RVector farkas;  // certificate over term rows + normalization row otherwise
};

SigmaSolution feasible(const SigmaSystem& sigma);

/// Largest mass that solutions of the system can place on constituents
/// where term i's conditioning event (the disjunction of its members'
/// antecedents) holds. Zero means every solution starves the term.
/// Throws StateError when the system is unsolvable.
Rational max_antecedent_mass(const SigmaSystem& sigma, int term_index);

/// One level of the coherence recursion, in original term indices.
struct LevelTrace {
  std::vector<int> terms;
  RVector lambda;
  std::vector<int> starved;
};

struct CoherenceVerdict {
  bool coherent = false;
  std::vector<LevelTrace> levels;
  int failure_level = -1;          // level whose system was unsolvable
  std::vector<int> failure_terms;  // original indices active at that level
  RVector farkas;
};

/// Decides coherence: solve the system, find the starved terms, recurse on
/// the starved sub-assessment (family restricted to the conditionals it
/// references) until nothing is starved. Starvation of every term at once
/// terminates with a coherent verdict, visible in the last trace level.
CoherenceVerdict check_coherence(const AssessmentProblem& problem);

struct ExtensionInterval {
  Rational lower;
  Rational upper;
  /// True when both endpoints are certified coherent previsions (the
  /// interval is exactly the closed set of coherent values). False when an
  /// endpoint had to be approximated by bisection to width 1e-9.
  bool exact = true;
};

/// Interval of coherent prevision values for an unassessed target term over
/// a coherent base. Throws InputError when the target is out of range or
/// already carries a prevision, StateError when the base is incoherent.
ExtensionInterval extension_interval(const AssessmentProblem& problem,
                                     const Term& target);

}  // namespace prevision
