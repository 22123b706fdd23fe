#include "prevision/document.hpp"

#include <cctype>
#include <fstream>
#include <set>

namespace prevision {

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_space();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw InputError("formula error at position " + std::to_string(pos) +
                     " in '" + text + "': " + what);
  }

  Event expr() {
    Event e = conjunction();
    while (eat('|')) e = e | conjunction();
    return e;
  }

  Event conjunction() {
    Event e = unary();
    while (eat('&')) e = e & unary();
    return e;
  }

  Event unary() {
    if (eat('!')) return ~unary();
    skip_space();
    if (pos >= text.size()) fail("unexpected end of formula");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Event e = expr();
      if (!eat(')')) fail("missing ')'");
      return e;
    }
    if (c == '0' || c == '1') {
      ++pos;
      return Event::constant(c == '1');
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) ||
              text[pos] == '_'))
        ++pos;
      return Event::atom(text.substr(start, pos - start));
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

const nlohmann::json& field(const nlohmann::json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end())
    throw InputError(std::string("document missing field '") + name + "'");
  return *it;
}

}  // namespace

Event parse_event(const std::string& text) {
  Parser p{text};
  Event e = p.expr();
  p.skip_space();
  if (p.pos != text.size()) p.fail("trailing input");
  return e;
}

AssessmentDocument document_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("document must be a JSON object");
  AssessmentDocument doc;
  for (const auto& a : field(j, "atoms")) {
    if (!a.is_string()) throw InputError("atoms must be strings");
    doc.atoms.push_back(a.get<std::string>());
  }
  for (const auto& c : field(j, "conditionals")) {
    if (!c.is_object())
      throw InputError("each conditional must be an object");
    DocConditional dc;
    dc.consequent = field(c, "consequent").get<std::string>();
    dc.antecedent = field(c, "antecedent").get<std::string>();
    doc.conditionals.push_back(std::move(dc));
  }
  for (const auto& t : field(j, "terms")) {
    if (!t.is_object()) throw InputError("each term must be an object");
    DocTerm dt;
    for (const auto& m : field(t, "members")) {
      if (!m.is_number_integer())
        throw InputError("term members must be integers");
      dt.members.push_back(m.get<int>());
    }
    const auto& p = field(t, "prevision");
    if (p.is_string())
      dt.prevision = p.get<std::string>();
    else if (p.is_number())
      dt.prevision = p.dump();
    else
      throw InputError("prevision must be a string or number");
    doc.terms.push_back(std::move(dt));
  }
  if (auto opt = j.find("options"); opt != j.end()) {
    if (auto m = opt->find("mode"); m != opt->end())
      doc.mode = m->get<std::string>();
  }
  if (doc.mode != "auto" && doc.mode != "lp" && doc.mode != "closed-form")
    throw InputError("unknown mode '" + doc.mode + "'");
  return doc;
}

nlohmann::json document_to_json(const AssessmentDocument& doc) {
  nlohmann::ordered_json j;
  j["atoms"] = doc.atoms;
  j["conditionals"] = nlohmann::ordered_json::array();
  for (const auto& c : doc.conditionals)
    j["conditionals"].push_back(
        {{"consequent", c.consequent}, {"antecedent", c.antecedent}});
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& t : doc.terms)
    j["terms"].push_back(
        {{"members", t.members}, {"prevision", t.prevision}});
  j["options"] = {{"mode", doc.mode}};
  return j;
}

AssessmentDocument load_document(std::istream& in) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return document_from_json(j);
}

AssessmentDocument load_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return load_document(in);
}

AssessmentProblem to_problem(const AssessmentDocument& doc) {
  AssessmentProblem problem;
  problem.atoms = AtomList(doc.atoms);
  for (const auto& c : doc.conditionals)
    problem.conditionals.push_back(
        {parse_event(c.consequent), parse_event(c.antecedent)});
  for (const auto& t : doc.terms) {
    Term term(t.members);
    problem.terms.push_back(term);
    problem.previsions.set(term, parse_rational(t.prevision));
  }
  problem.validate();
  return problem;
}

namespace {

bool terms_are(const std::vector<Term>& terms,
               const std::vector<Term>& expected) {
  return std::set<Term>(terms.begin(), terms.end()) ==
         std::set<Term>(expected.begin(), expected.end());
}

std::vector<Rational> collect(const PrevisionMap& previsions,
                              const std::vector<Term>& order) {
  std::vector<Rational> values;
  values.reserve(order.size());
  for (const auto& t : order) values.push_back(previsions.at(t));
  return values;
}

}  // namespace

FamilyMatch classify_family(const AssessmentProblem& problem) {
  FamilyMatch match;
  const auto& cs = problem.conditionals;
  const auto& atoms = problem.atoms;
  const int cap = problem.atom_cap;

  if (cs.size() == 2) {
    const Term t0({0}), t1({1}), t01({0, 1});
    bool full = terms_are(problem.terms, {t0, t1, t01});
    bool prefix = !full && terms_are(problem.terms, {t0, t1});
    if (!full && !prefix) return match;
    std::vector<Term> order = full ? std::vector<Term>{t0, t1, t01}
                                   : std::vector<Term>{t0, t1};

    const Event events4[] = {cs[0].consequent, cs[0].antecedent,
                             cs[1].consequent, cs[1].antecedent};
    if (logically_independent(events4, atoms, cap)) {
      match.pattern = full ? FamilyPattern::TwoFull : FamilyPattern::TwoPrefix;
      match.values = collect(problem.previsions, order);
      return match;
    }
    if (!equivalent(cs[0].consequent, cs[1].consequent, atoms, cap))
      return match;
    const Event& a = cs[0].consequent;
    const Event& h = cs[0].antecedent;
    const Event& k = cs[1].antecedent;
    const Event events3[] = {a, h, k};
    if (logically_independent(events3, atoms, cap)) {
      match.pattern = full ? FamilyPattern::SameConsequentFull
                           : FamilyPattern::SameConsequentPrefix;
      match.values = collect(problem.previsions, order);
      return match;
    }
    if (!is_satisfiable(h & k, atoms, cap) &&
        is_satisfiable(~a & ~h & k, atoms, cap) &&
        is_satisfiable(~a & h & ~k, atoms, cap) &&
        is_satisfiable(a & ~h & k, atoms, cap) &&
        is_satisfiable(a & h & ~k, atoms, cap)) {
      match.pattern =
          full ? FamilyPattern::DisjointFull : FamilyPattern::DisjointPrefix;
      match.values = collect(problem.previsions, order);
    }
    return match;
  }

  if (cs.size() == 3) {
    const std::vector<Term> singles{Term({0}), Term({1}), Term({2})};
    const std::vector<Term> pairs{Term({0, 1}), Term({0, 2}), Term({1, 2})};
    std::vector<Term> six = singles;
    six.insert(six.end(), pairs.begin(), pairs.end());
    std::vector<Term> seven = six;
    seven.push_back(Term({0, 1, 2}));
    bool full = terms_are(problem.terms, seven);
    bool prefix = !full && terms_are(problem.terms, six);
    if (!full && !prefix) return match;
    const Event events6[] = {cs[0].consequent, cs[1].consequent,
                             cs[2].consequent, cs[0].antecedent,
                             cs[1].antecedent, cs[2].antecedent};
    if (!logically_independent(events6, atoms, cap)) return match;
    match.pattern =
        full ? FamilyPattern::ThreeFull : FamilyPattern::ThreeSixPrefix;
    match.values = collect(problem.previsions, full ? seven : six);
    return match;
  }

  return match;
}

}  // namespace prevision
