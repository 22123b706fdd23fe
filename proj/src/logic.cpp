#include "prevision/logic.hpp"

#include <algorithm>
#include <map>

namespace prevision {

AtomList::AtomList(std::vector<std::string> names) : names_(std::move(names)) {
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    if (names_[i].empty()) throw InputError("empty atom name");
    auto [_, fresh] = index_.emplace(names_[i], i);
    if (!fresh) throw InputError("duplicate atom '" + names_[i] + "'");
  }
}

std::optional<int> AtomList::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int AtomList::index(const std::string& name) const {
  auto i = find(name);
  if (!i) throw InputError("unknown atom '" + name + "'");
  return *i;
}

Event::Event() : node_(std::make_shared<Node>(Node{Kind::True, {}, {}, {}})) {}

Event Event::atom(std::string name) {
  if (name.empty()) throw InputError("empty atom name");
  return Event(
      std::make_shared<Node>(Node{Kind::Atom, std::move(name), {}, {}}));
}

Event Event::constant(bool value) {
  return Event(std::make_shared<Node>(
      Node{value ? Kind::True : Kind::False, {}, {}, {}}));
}

Event Event::wrap(Kind kind, const Event& a, const Event& b) {
  return Event(std::make_shared<Node>(Node{kind, {}, a.node_, b.node_}));
}

const std::string& Event::atom_name() const {
  if (node_->kind != Kind::Atom) throw StateError("not an atom");
  return node_->name;
}

Event Event::child(int i) const {
  auto node = (i == 0) ? node_->a : node_->b;
  if (!node) throw StateError("no such child");
  return Event(std::move(node));
}

Event operator~(const Event& e) {
  return Event::wrap(Event::Kind::Not, e, Event::constant(false));
}

Event operator&(const Event& a, const Event& b) {
  return Event::wrap(Event::Kind::And, a, b);
}

Event operator|(const Event& a, const Event& b) {
  return Event::wrap(Event::Kind::Or, a, b);
}

namespace {

bool eval_node(const Event& e,
               const std::unordered_map<std::string, bool>& assignment) {
  switch (e.kind()) {
    case Event::Kind::True:
      return true;
    case Event::Kind::False:
      return false;
    case Event::Kind::Atom: {
      auto it = assignment.find(e.atom_name());
      if (it == assignment.end())
        throw InputError("unassigned atom '" + e.atom_name() + "'");
      return it->second;
    }
    case Event::Kind::Not:
      return !eval_node(e.child(0), assignment);
    case Event::Kind::And:
      return eval_node(e.child(0), assignment) &&
             eval_node(e.child(1), assignment);
    case Event::Kind::Or:
      return eval_node(e.child(0), assignment) ||
             eval_node(e.child(1), assignment);
  }
  throw StateError("corrupt event node");
}

// Precedence for rendering: | lowest, & middle, ! highest.
int precedence(Event::Kind k) {
  switch (k) {
    case Event::Kind::Or:
      return 1;
    case Event::Kind::And:
      return 2;
    default:
      return 3;
  }
}

void render(const Event& e, int parent_prec, std::string& out) {
  int prec = precedence(e.kind());
  bool parens = prec < parent_prec;
  if (parens) out += '(';
  switch (e.kind()) {
    case Event::Kind::True:
      out += '1';
      break;
    case Event::Kind::False:
      out += '0';
      break;
    case Event::Kind::Atom:
      out += e.atom_name();
      break;
    case Event::Kind::Not:
      out += '!';
      render(e.child(0), 3, out);
      break;
    case Event::Kind::And:
      render(e.child(0), 2, out);
      out += " & ";
      render(e.child(1), 2, out);
      break;
    case Event::Kind::Or:
      render(e.child(0), 1, out);
      out += " | ";
      render(e.child(1), 1, out);
      break;
  }
  if (parens) out += ')';
}

void check_cap(const AtomList& atoms, int atom_cap) {
  if (atoms.size() > atom_cap)
    throw CapacityError("atom count " + std::to_string(atoms.size()) +
                        " exceeds enumeration cap " + std::to_string(atom_cap));
}

}  // namespace

std::string Event::str() const {
  std::string out;
  render(*this, 0, out);
  return out;
}

void Event::collect_atoms(std::set<std::string>& out) const {
  switch (kind()) {
    case Kind::Atom:
      out.insert(atom_name());
      break;
    case Kind::Not:
      child(0).collect_atoms(out);
      break;
    case Kind::And:
    case Kind::Or:
      child(0).collect_atoms(out);
      child(1).collect_atoms(out);
      break;
    default:
      break;
  }
}

bool evaluate(const Event& e,
              const std::unordered_map<std::string, bool>& assignment) {
  return eval_node(e, assignment);
}

bool evaluate(const Event& e, const AtomList& atoms, std::uint32_t mask) {
  switch (e.node_->kind) {
    case Event::Kind::True:
      return true;
    case Event::Kind::False:
      return false;
    case Event::Kind::Atom:
      return (mask >> atoms.index(e.node_->name)) & 1u;
    case Event::Kind::Not:
      return !evaluate(Event(e.node_->a), atoms, mask);
    case Event::Kind::And:
      return evaluate(Event(e.node_->a), atoms, mask) &&
             evaluate(Event(e.node_->b), atoms, mask);
    case Event::Kind::Or:
      return evaluate(Event(e.node_->a), atoms, mask) ||
             evaluate(Event(e.node_->b), atoms, mask);
  }
  throw StateError("corrupt event node");
}

bool is_satisfiable(const Event& e, const AtomList& atoms, int atom_cap) {
  check_cap(atoms, atom_cap);
  std::set<std::string> used;
  e.collect_atoms(used);
  for (const auto& name : used) atoms.index(name);
  const std::uint32_t count = 1u << atoms.size();
  for (std::uint32_t mask = 0; mask < count; ++mask)
    if (evaluate(e, atoms, mask)) return true;
  return false;
}

bool equivalent(const Event& a, const Event& b, const AtomList& atoms,
                int atom_cap) {
  check_cap(atoms, atom_cap);
  const std::uint32_t count = 1u << atoms.size();
  for (std::uint32_t mask = 0; mask < count; ++mask)
    if (evaluate(a, atoms, mask) != evaluate(b, atoms, mask)) return false;
  return true;
}

bool logically_independent(std::span<const Event> events, const AtomList& atoms,
                           int atom_cap) {
  if (events.size() > 20)
    throw CapacityError("too many events for independence check");
  for (std::uint32_t signs = 0; signs < (1u << events.size()); ++signs) {
    Event conj = Event::constant(true);
    for (std::size_t i = 0; i < events.size(); ++i)
      conj = conj & (((signs >> i) & 1u) ? ~events[i] : events[i]);
    if (!is_satisfiable(conj, atoms, atom_cap)) return false;
  }
  return true;
}

int ConstituentTable::family_size() const {
  if (!constituents.empty())
    return static_cast<int>(constituents.front().tags.size());
  if (c0) return static_cast<int>(c0->tags.size());
  return 0;
}

ConstituentTable enumerate_constituents(
    const std::vector<ConditionalEvent>& family, const AtomList& atoms,
    int atom_cap) {
  if (family.empty()) throw InputError("empty family of conditionals");
  check_cap(atoms, atom_cap);

  const int n = static_cast<int>(family.size());
  std::map<std::vector<Tern>, std::vector<std::uint32_t>> groups;
  std::vector<bool> antecedent_seen(n, false);

  const std::uint32_t count = 1u << atoms.size();
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    std::vector<Tern> tags(n);
    for (int i = 0; i < n; ++i) {
      if (!evaluate(family[i].antecedent, atoms, mask)) {
        tags[i] = Tern::Void;
      } else {
        antecedent_seen[i] = true;
        tags[i] = evaluate(family[i].consequent, atoms, mask) ? Tern::True
                                                              : Tern::False;
      }
    }
    groups[std::move(tags)].push_back(mask);
  }

  for (int i = 0; i < n; ++i)
    if (!antecedent_seen[i])
      throw InputError("antecedent of conditional " + std::to_string(i) +
                       " is unsatisfiable");

  ConstituentTable table;
  table.atom_count = atoms.size();
  const std::vector<Tern> all_void(n, Tern::Void);
  for (auto& [tags, masks] : groups) {
    Constituent c{tags, std::move(masks)};
    if (tags == all_void)
      table.c0 = std::move(c);
    else
      table.constituents.push_back(std::move(c));
  }
  std::sort(table.constituents.begin(), table.constituents.end(),
            [](const Constituent& a, const Constituent& b) {
              return a.assignments.front() < b.assignments.front();
            });
  return table;
}

}  // namespace prevision
