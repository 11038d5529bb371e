#include "ifol/concepts.hpp"

#include <algorithm>

#include "ifol/error.hpp"

namespace ifol {

bool operator==(const DependentArg& a, const DependentArg& b) {
  return a.beta_slots == b.beta_slots && a.term == b.term;
}

std::uint32_t Concept::id() const { return node_->id; }
std::size_t Concept::degree() const { return node_->degree; }
ConceptKind Concept::kind() const { return node_->kind; }

namespace {

std::string pairs_text(const ColumnPairs& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [a, b] : s) {
    if (!first) out += ",";
    first = false;
    out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return out + "}";
}

std::string arg_text(const AtomArg& a) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Slot>) {
          return "_" + std::to_string(v.index);
        } else if constexpr (std::is_same_v<T, DomainElement>) {
          return v.to_string();
        } else if constexpr (std::is_same_v<T, ConstantArg>) {
          return v.name;
        } else {
          std::string out = "(abs " + to_string(Term{v.term});
          for (std::size_t s : v.beta_slots) out += " _" + std::to_string(s);
          return out + ")";
        }
      },
      a);
}

// Intern key: structure of this node with children referenced by id.
std::string key_of(const ConceptNode& n) {
  std::string key;
  switch (n.kind) {
    case ConceptKind::Truth:
      return "T";
    case ConceptKind::Identity:
      return "I";
    case ConceptKind::Atom:
      key = "A " + n.predicate.to_string();
      for (const AtomArg& a : n.args) {
        // element args are tagged so a particular named "_1" cannot collide with a slot
        key += std::holds_alternative<DomainElement>(a) ? " e:" : " ";
        if (std::holds_alternative<ConstantArg>(a)) key += "c:";
        key += arg_text(a);
      }
      return key;
    case ConceptKind::Conj:
      return "C " + pairs_text(n.pairs) + " " + std::to_string(n.children[0].id()) + " " +
             std::to_string(n.children[1].id());
    case ConceptKind::Neg:
      return "N " + std::to_string(n.children[0].id());
    case ConceptKind::Exists:
      return "E " + std::to_string(n.column) + " " + std::to_string(n.children[0].id());
    case ConceptKind::Necess:
      return "L " + std::to_string(n.children[0].id());
    case ConceptKind::Union:
      key = "U";
      for (Concept c : n.children) key += " " + std::to_string(c.id());
      return key;
  }
  return key;
}

}  // namespace

Concept ConceptRegistry::intern(ConceptNode proto) {
  std::string key = key_of(proto);
  std::lock_guard<std::mutex> lock(mutex_);
  if (auto it = table_.find(key); it != table_.end()) return Concept(it->second);
  proto.id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(std::make_unique<ConceptNode>(std::move(proto)));
  const ConceptNode* node = nodes_.back().get();
  table_.emplace(std::move(key), node);
  return Concept(node);
}

Concept ConceptRegistry::by_id(std::uint32_t id) const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (id >= nodes_.size()) throw DomainError("no concept with id " + std::to_string(id));
  return Concept(nodes_[id].get());
}

std::size_t ConceptRegistry::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return nodes_.size();
}

Concept ConceptRegistry::identity() {
  ConceptNode n;
  n.kind = ConceptKind::Identity;
  n.degree = 2;
  n.predicate = identity_predicate();
  return intern(std::move(n));
}

Concept ConceptRegistry::truth() {
  ConceptNode n;
  n.kind = ConceptKind::Truth;
  n.degree = 0;
  n.predicate = truth_predicate();
  return intern(std::move(n));
}

Concept ConceptRegistry::atom(const PredicateSymbol& p, std::vector<AtomArg> args) {
  if (args.size() != p.arity) {
    throw ArityError("atomic concept for " + p.to_string() + " given " + std::to_string(args.size()) +
                     " arguments");
  }
  if (p == truth_predicate()) return truth();

  std::size_t seen = 0;
  auto visit_slot = [&](std::size_t s) {
    if (s == 0 || s > seen + 1) {
      throw Error("atom slots must be numbered by first occurrence; got _" + std::to_string(s) +
                  " after " + std::to_string(seen) + " slots");
    }
    if (s == seen + 1) ++seen;
  };
  for (const AtomArg& a : args) {
    if (const auto* s = std::get_if<Slot>(&a)) {
      visit_slot(s->index);
    } else if (const auto* d = std::get_if<DependentArg>(&a)) {
      if (d->beta_slots.size() != d->term.beta.size()) {
        throw Error("dependent abstraction argument needs one slot per beta variable");
      }
      for (std::size_t s : d->beta_slots) visit_slot(s);
    }
  }

  if (p == identity_predicate() && args[0] == AtomArg{Slot{1}} && args[1] == AtomArg{Slot{2}}) {
    return identity();
  }

  ConceptNode n;
  n.kind = ConceptKind::Atom;
  n.degree = seen;
  n.predicate = p;
  n.args = std::move(args);
  return intern(std::move(n));
}

Concept ConceptRegistry::conj(const ColumnPairs& s, Concept u, Concept v) {
  ConceptNode n;
  n.kind = ConceptKind::Conj;
  n.degree = joined_arity(s, u.degree(), v.degree());
  n.pairs = s;
  n.children = {u, v};
  return intern(std::move(n));
}

Concept ConceptRegistry::neg(Concept u) {
  if (u.kind() == ConceptKind::Neg) return u.node().children[0];
  ConceptNode n;
  n.kind = ConceptKind::Neg;
  n.degree = u.degree();
  n.children = {u};
  return intern(std::move(n));
}

Concept ConceptRegistry::exists(std::size_t col, Concept u) {
  if (col < 1 || col > u.degree()) return u;
  ConceptNode n;
  n.kind = ConceptKind::Exists;
  n.degree = u.degree() - 1;
  n.column = col;
  n.children = {u};
  return intern(std::move(n));
}

Concept ConceptRegistry::union_of(std::vector<Concept> members) {
  if (members.empty()) throw Error("union of an empty set of concepts");
  const std::size_t degree = members.front().degree();
  for (Concept c : members) {
    if (c.degree() != degree) throw ArityError("union members must share one degree");
  }
  std::sort(members.begin(), members.end(), [](Concept a, Concept b) { return a.id() < b.id(); });
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.size() == 1) return members.front();

  ConceptNode n;
  n.kind = ConceptKind::Union;
  n.degree = degree;
  n.children = std::move(members);
  return intern(std::move(n));
}

Concept ConceptRegistry::union_expansion(const std::vector<Concept>& members) {
  if (members.empty()) throw Error("union of an empty set of concepts");
  const std::size_t degree = members.front().degree();
  for (Concept c : members) {
    if (c.degree() != degree) throw ArityError("union members must share one degree");
  }
  std::vector<Concept> distinct = members;
  std::sort(distinct.begin(), distinct.end(), [](Concept a, Concept b) { return a.id() < b.id(); });
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() == 1) return distinct.front();

  ColumnPairs all_columns;
  for (std::size_t l = 1; l <= degree; ++l) all_columns.insert({l, l});

  Concept inner = neg(distinct.back());
  for (std::size_t i = distinct.size() - 1; i-- > 0;) {
    inner = conj(all_columns, neg(distinct[i]), inner);
  }
  return neg(inner);
}

Concept ConceptRegistry::necess(Concept u) {
  ConceptNode n;
  n.kind = ConceptKind::Necess;
  n.degree = u.degree();
  n.children = {u};
  return intern(std::move(n));
}

std::string to_sexpr(Concept u) {
  const ConceptNode& n = u.node();
  switch (n.kind) {
    case ConceptKind::Truth:
      return "Truth";
    case ConceptKind::Identity:
      return "Id";
    case ConceptKind::Atom: {
      std::string out = "(atom " + n.predicate.to_string();
      for (const AtomArg& a : n.args) out += " " + arg_text(a);
      return out + ")";
    }
    case ConceptKind::Conj:
      return "(conj " + pairs_text(n.pairs) + " " + to_sexpr(n.children[0]) + " " +
             to_sexpr(n.children[1]) + ")";
    case ConceptKind::Neg:
      return "(neg " + to_sexpr(n.children[0]) + ")";
    case ConceptKind::Exists:
      return "(exists " + std::to_string(n.column) + " " + to_sexpr(n.children[0]) + ")";
    case ConceptKind::Necess:
      return "(necess " + to_sexpr(n.children[0]) + ")";
    case ConceptKind::Union: {
      std::string out = "(union";
      for (Concept c : n.children) out += " " + to_sexpr(c);
      return out + ")";
    }
  }
  return {};
}

}  // namespace ifol
