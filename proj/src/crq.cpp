#include "prevision/crq.hpp"

#include <algorithm>
#include <set>

#include "prevision/problem.hpp"

namespace prevision {

Term::Term(std::vector<int> members) : members_(std::move(members)) {
  if (members_.empty()) throw InputError("empty conjunction term");
  for (int i : members_)
    if (i < 0) throw InputError("negative conditional index in term");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool Term::contains(int i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

std::string Term::str() const {
  std::string out = "{";
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(members_[k]);
  }
  return out + "}";
}

void PrevisionMap::set(const Term& term, const Rational& value) {
  if (term.empty()) throw InputError("empty conjunction term");
  if (value < 0 || value > 1)
    throw InputError("prevision " + rational_string(value) + " for " +
                     term.str() + " outside [0,1]");
  entries_[term] = value;
}

bool PrevisionMap::contains(const Term& term) const {
  return entries_.count(term) != 0;
}

const Rational& PrevisionMap::at(const Term& term) const {
  auto it = entries_.find(term);
  if (it == entries_.end())
    throw InputError("missing prevision for sub-conjunction " + term.str());
  return it->second;
}

ValueTable conjunction_value_table(const Term& term,
                                   const ConstituentTable& table,
                                   const PrevisionMap& previsions) {
  const int n = table.family_size();
  if (term.empty()) throw InputError("empty conjunction term");
  if (term.members().back() >= n)
    throw InputError("term " + term.str() + " references conditional " +
                     std::to_string(term.members().back()) +
                     " outside the family");

  ValueTable out;
  out.values.resize(table.size());
  for (int h = 0; h < table.size(); ++h) {
    const auto& tags = table.constituents[h].tags;
    std::vector<int> voided;
    bool falsified = false;
    for (int i : term.members()) {
      if (tags[i] == Tern::False) {
        falsified = true;
        break;
      }
      if (tags[i] == Tern::Void) voided.push_back(i);
    }
    if (falsified)
      out.values[h] = 0;
    else if (voided.empty())
      out.values[h] = 1;
    else
      out.values[h] = previsions.at(Term(voided));
  }
  if (table.c0) out.c0_value = previsions.at(term);
  return out;
}

void AssessmentProblem::validate() const {
  if (terms.empty()) throw InputError("no assessed terms");
  std::set<Term> seen;
  for (const auto& term : terms) {
    if (term.empty()) throw InputError("empty conjunction term");
    if (term.members().back() >= static_cast<int>(conditionals.size()))
      throw InputError("term " + term.str() +
                       " references a conditional outside the family");
    if (!seen.insert(term).second)
      throw InputError("duplicate term " + term.str());
    previsions.at(term);  // must be assessed
  }
  std::set<std::string> used;
  for (const auto& ce : conditionals) {
    ce.consequent.collect_atoms(used);
    ce.antecedent.collect_atoms(used);
  }
  for (const auto& name : used) atoms.index(name);
  enumerate_constituents(conditionals, atoms, atom_cap);  // antecedents
}

QSystem q_vectors(const AssessmentProblem& problem) {
  QSystem sys;
  sys.table =
      enumerate_constituents(problem.conditionals, problem.atoms,
                             problem.atom_cap);
  const int rows = static_cast<int>(problem.terms.size());
  sys.q.resize(rows, sys.table.size());
  if (sys.table.c0) sys.q0 = RVector(rows);
  for (int i = 0; i < rows; ++i) {
    ValueTable vt =
        conjunction_value_table(problem.terms[i], sys.table,
                                problem.previsions);
    sys.q.row(i) = vt.values.transpose();
    if (sys.q0) (*sys.q0)[i] = *vt.c0_value;
  }
  return sys;
}

}  // namespace prevision
