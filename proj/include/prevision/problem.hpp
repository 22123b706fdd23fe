#pragma once

#include <optional>
#include <vector>

#include "prevision/crq.hpp"
#include "prevision/logic.hpp"
#include "prevision/numeric.hpp"

namespace prevision {

/// A prevision assessment: a family of conditionals, the conjunction terms
/// actually assessed, and a prevision map covering those terms plus every
/// sub-conjunction their value tables need.
struct AssessmentProblem {
  AtomList atoms;
  std::vector<ConditionalEvent> conditionals;
  std::vector<Term> terms;
  PrevisionMap previsions;
  int atom_cap = kDefaultAtomCap;

  /// Structural validation: terms non-empty, indices in range, previsions
  /// present for each term, event atoms declared, antecedents satisfiable,
  /// no duplicate terms. Throws InputError / CapacityError.
  void validate() const;
};

/// Q-vector system of a problem: q(i,h) is the value of term i's conjunction
/// on constituent C_h; q0 is the all-void column (equal to the assessed
/// previsions) when C_0 is non-empty.
struct QSystem {
  RMatrix q;
  std::optional<RVector> q0;
  ConstituentTable table;
};

QSystem q_vectors(const AssessmentProblem& problem);

}  // namespace prevision
