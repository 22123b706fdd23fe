#include "prevision/coherence.hpp"

#include <map>
#include <numeric>
#include <set>

namespace prevision {

namespace {

// Bisection endpoints are resolved to this width when a closed endpoint
// cannot be certified exactly.
const Rational kEndpointResolution(1, 1000000000);

RMatrix with_normalization(const RMatrix& q) {
  RMatrix a(q.rows() + 1, q.cols());
  a.topRows(q.rows()) = q;
  a.row(q.rows()).setConstant(1);
  return a;
}

RVector with_one(const RVector& v) {
  RVector b(v.size() + 1);
  b.head(v.size()) = v;
  b[v.size()] = 1;
  return b;
}

// Restriction of a problem to a subset of its terms, the family cut down to
// the conditionals those terms reference. Cells where every antecedent of
// the restricted family is false must fall into C_0, so unreferenced
// conditionals cannot be kept around.
AssessmentProblem restrict_to_terms(const AssessmentProblem& p,
                                    const std::vector<int>& positions) {
  std::set<int> used;
  for (int t : positions)
    for (int c : p.terms[t].members()) used.insert(c);
  std::map<int, int> renum;
  AssessmentProblem sub;
  sub.atoms = p.atoms;
  sub.atom_cap = p.atom_cap;
  for (int old : used) {
    renum[old] = static_cast<int>(sub.conditionals.size());
    sub.conditionals.push_back(p.conditionals[old]);
  }
  auto remap = [&](const Term& t) {
    std::vector<int> ms;
    ms.reserve(t.size());
    for (int c : t.members()) ms.push_back(renum.at(c));
    return Term(std::move(ms));
  };
  for (int t : positions) sub.terms.push_back(remap(p.terms[t]));
  for (const auto& [term, value] : p.previsions.entries()) {
    bool inside = true;
    for (int c : term.members())
      if (!used.count(c)) {
        inside = false;
        break;
      }
    if (inside) sub.previsions.set(remap(term), value);
  }
  return sub;
}

std::vector<int> all_positions(const AssessmentProblem& p) {
  std::vector<int> pos(p.terms.size());
  std::iota(pos.begin(), pos.end(), 0);
  return pos;
}

}  // namespace

SigmaSystem build_sigma(const AssessmentProblem& problem) {
  QSystem qs = q_vectors(problem);
  SigmaSystem sigma;
  sigma.q = std::move(qs.q);
  sigma.table = std::move(qs.table);
  sigma.terms = problem.terms;
  sigma.target.resize(static_cast<int>(problem.terms.size()));
  for (std::size_t i = 0; i < problem.terms.size(); ++i)
    sigma.target[static_cast<int>(i)] = problem.previsions.at(problem.terms[i]);
  return sigma;
}

SigmaSolution feasible(const SigmaSystem& sigma) {
  LpResult r =
      lp_feasible(with_normalization(sigma.q), with_one(sigma.target));
  SigmaSolution s;
  if (r.status == LpStatus::Optimal) {
    s.solvable = true;
    s.lambda = std::move(r.x);
  } else {
    s.farkas = std::move(r.farkas);
  }
  return s;
}

Rational max_antecedent_mass(const SigmaSystem& sigma, int term_index) {
  if (term_index < 0 ||
      term_index >= static_cast<int>(sigma.terms.size()))
    throw InputError("term index out of range");
  RVector c = RVector::Zero(sigma.q.cols());
  for (int h = 0; h < sigma.q.cols(); ++h)
    for (int i : sigma.terms[term_index].members())
      if (sigma.table.constituents[h].tags[i] != Tern::Void) {
        c[h] = 1;
        break;
      }
  LpResult r = lp_maximize(with_normalization(sigma.q),
                           with_one(sigma.target), c);
  if (r.status != LpStatus::Optimal)
    throw StateError("antecedent mass requested on an unsolvable system");
  return r.objective;
}

CoherenceVerdict check_coherence(const AssessmentProblem& problem) {
  problem.validate();
  AssessmentProblem current = restrict_to_terms(problem, all_positions(problem));
  std::vector<int> orig(current.terms.size());
  std::iota(orig.begin(), orig.end(), 0);

  CoherenceVerdict verdict;
  for (int level = 0;; ++level) {
    SigmaSystem sigma = build_sigma(current);
    SigmaSolution sol = feasible(sigma);
    if (!sol.solvable) {
      verdict.coherent = false;
      verdict.failure_level = level;
      verdict.failure_terms = orig;
      verdict.farkas = std::move(sol.farkas);
      return verdict;
    }
    LevelTrace trace;
    trace.terms = orig;
    trace.lambda = std::move(sol.lambda);
    std::vector<int> starved_pos;
    for (int i = 0; i < static_cast<int>(current.terms.size()); ++i)
      if (max_antecedent_mass(sigma, i) == 0) {
        starved_pos.push_back(i);
        trace.starved.push_back(orig[i]);
      }
    verdict.levels.push_back(std::move(trace));
    if (starved_pos.empty() ||
        starved_pos.size() == current.terms.size()) {
      verdict.coherent = true;
      return verdict;
    }
    std::vector<int> next_orig;
    next_orig.reserve(starved_pos.size());
    for (int pos : starved_pos) next_orig.push_back(orig[pos]);
    current = restrict_to_terms(current, starved_pos);
    orig = std::move(next_orig);
  }
}

namespace {

bool extension_coherent(const AssessmentProblem& base, const Term& target,
                        const Rational& z) {
  AssessmentProblem aug = base;
  aug.terms.push_back(target);
  aug.previsions.set(target, z);
  return check_coherence(aug).coherent;
}

// Locates some coherent target value inside [lo, hi]: endpoints and center
// first, then natural candidates from the singleton previsions, then a
// dyadic sweep. The coherent set is a non-empty interval, so this only
// fails when that interval is thinner than the sweep and avoids every
// candidate.
Rational locate_coherent(const AssessmentProblem& base, const Term& target,
                         const Rational& lo, const Rational& hi) {
  std::vector<Rational> candidates{lo, hi, (lo + hi) / 2};
  bool singles = true;
  Rational prod = 1, least = 1, luk = 1;
  for (int i : target.members()) {
    Term single({i});
    if (!base.previsions.contains(single)) {
      singles = false;
      break;
    }
    const Rational& v = base.previsions.at(single);
    prod *= v;
    if (v < least) least = v;
    luk += v - 1;
  }
  if (singles) {
    candidates.push_back(prod);
    candidates.push_back(least);
    candidates.push_back(luk < 0 ? Rational(0) : luk);
  }
  for (const Rational& c : candidates)
    if (c >= lo && c <= hi && extension_coherent(base, target, c)) return c;
  for (int depth = 1; depth <= 12; ++depth)
    for (int k = 1; k < (1 << depth); k += 2) {
      Rational c = lo + (hi - lo) * Rational(k, 1 << depth);
      if (extension_coherent(base, target, c)) return c;
    }
  throw StateError(
      "no coherent value for target " + target.str() +
      " located; the coherent interval is thinner than the probe sweep");
}

}  // namespace

ExtensionInterval extension_interval(const AssessmentProblem& problem,
                                     const Term& target) {
  problem.validate();
  if (target.empty()) throw InputError("empty target term");
  if (target.members().back() >=
      static_cast<int>(problem.conditionals.size()))
    throw InputError("target term " + target.str() +
                     " references a conditional outside the family");
  if (problem.previsions.contains(target))
    throw InputError("target term " + target.str() +
                     " already carries a prevision");
  if (!check_coherence(problem).coherent)
    throw StateError("base assessment is incoherent");

  // Family restricted to the conditionals referenced by the assessed terms
  // plus the target, with the target re-indexed along.
  AssessmentProblem extended = problem;
  extended.terms.push_back(target);
  AssessmentProblem narrowed =
      restrict_to_terms(extended, all_positions(extended));
  Term new_target = narrowed.terms.back();
  narrowed.terms.pop_back();

  // Value row of the target over the narrowed constituents. A cell with
  // every target member void would put the unknown prevision itself into
  // the row; such targets cannot be bounded by a single LP pass.
  SigmaSystem sigma = build_sigma(narrowed);
  const int m = sigma.table.size();
  RVector crow(m);
  bool self_referential = false;
  for (int h = 0; h < m && !self_referential; ++h) {
    const auto& tags = sigma.table.constituents[h].tags;
    std::vector<int> voided;
    bool falsified = false;
    for (int i : new_target.members()) {
      if (tags[i] == Tern::False) {
        falsified = true;
        break;
      }
      if (tags[i] == Tern::Void) voided.push_back(i);
    }
    if (falsified)
      crow[h] = 0;
    else if (voided.empty())
      crow[h] = 1;
    else if (static_cast<int>(voided.size()) == new_target.size())
      self_referential = true;
    else
      crow[h] = narrowed.previsions.at(Term(std::move(voided)));
  }

  Rational lo = 0, hi = 1;
  if (!self_referential) {
    RMatrix a = with_normalization(sigma.q);
    RVector b = with_one(sigma.target);
    LpResult rlo = lp_minimize(a, b, crow);
    LpResult rhi = lp_maximize(a, b, crow);
    if (rlo.status != LpStatus::Optimal || rhi.status != LpStatus::Optimal)
      throw StateError("augmented system unsolvable over a coherent base");
    lo = rlo.objective;
    hi = rhi.objective;
  }

  // Coherent target values form a non-empty closed sub-interval of
  // [lo, hi]. Certify each endpoint; bisect inward from an interior
  // coherent value when certification fails.
  ExtensionInterval out;
  bool lo_ok = extension_coherent(problem, target, lo);
  bool hi_ok = (hi == lo) ? lo_ok : extension_coherent(problem, target, hi);
  if (lo_ok && hi_ok) {
    out.lower = lo;
    out.upper = hi;
    out.exact = true;
    return out;
  }
  Rational inner = locate_coherent(problem, target, lo, hi);
  out.exact = false;
  if (lo_ok) {
    out.lower = lo;
  } else {
    Rational a = lo, b = inner;
    while (b - a > kEndpointResolution) {
      Rational mid = (a + b) / 2;
      if (extension_coherent(problem, target, mid))
        b = mid;
      else
        a = mid;
    }
    out.lower = b;
  }
  if (hi_ok) {
    out.upper = hi;
  } else {
    Rational a = inner, b = hi;
    while (b - a > kEndpointResolution) {
      Rational mid = (a + b) / 2;
      if (extension_coherent(problem, target, mid))
        a = mid;
      else
        b = mid;
    }
    out.upper = a;
  }
  return out;
}

}  // namespace prevision
