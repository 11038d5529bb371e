#include "ifol/semantics.hpp"

#include <algorithm>
#include <set>

#include "ifol/error.hpp"
#include "ifol/worlds.hpp"

namespace ifol {

// ---------------------------------------------------------------------------
// World

World::World(std::string name, std::vector<DomainElement> domain,
             std::map<std::string, DomainElement> constants,
             std::map<PredicateSymbol, Relation> relations)
    : name_(std::move(name)),
      domain_(std::move(domain)),
      constants_(std::move(constants)),
      relations_(std::move(relations)) {
  std::sort(domain_.begin(), domain_.end());
  domain_.erase(std::unique(domain_.begin(), domain_.end()), domain_.end());
  if (domain_.empty()) throw DomainError("world '" + name_ + "' has an empty domain");
  for (const DomainElement& d : domain_) {
    if (d.kind() == DomainElement::Kind::Empty) {
      throw DomainError("the empty tuple <> cannot be a domain element");
    }
  }

  for (const auto& [c, value] : constants_) {
    if (!in_domain(value)) {
      throw DomainError("constant '" + c + "' denotes '" + value.to_string() +
                        "', which is outside the domain of world '" + name_ + "'");
    }
  }
  for (const auto& [p, rel] : relations_) {
    if (is_builtin(p)) {
      throw DomainError("world '" + name_ + "' must not interpret the built-in predicate " +
                        p.to_string());
    }
    if (rel.arity() != p.arity) {
      throw DomainError("relation for " + p.to_string() + " has arity " + std::to_string(rel.arity()));
    }
    for (const Tuple& t : rel.tuples()) {
      for (const DomainElement& e : t) {
        if (!in_domain(e)) {
          throw DomainError("relation for " + p.to_string() + " mentions '" + e.to_string() +
                            "', which is outside the domain of world '" + name_ + "'");
        }
      }
    }
  }
  identity_ = identity_relation(domain_);
}

bool World::in_domain(const DomainElement& e) const {
  return std::binary_search(domain_.begin(), domain_.end(), e);
}

const Relation& World::relation(const PredicateSymbol& p) const {
  static const Relation truth = Relation::truth();
  if (p == identity_predicate()) return identity_;
  if (p == truth_predicate()) return truth;
  auto it = relations_.find(p);
  if (it == relations_.end()) {
    throw DomainError("world '" + name_ + "' does not interpret predicate " + p.to_string());
  }
  return it->second;
}

const DomainElement& World::constant(const std::string& name) const {
  auto it = constants_.find(name);
  if (it == constants_.end()) {
    throw DomainError("world '" + name_ + "' does not interpret constant '" + name + "'");
  }
  return it->second;
}

std::vector<Assignment> all_assignments(const VarTuple& vars, std::span<const DomainElement> domain) {
  std::vector<Assignment> out;
  for (const Tuple& values : all_tuples(domain, vars.size())) {
    Assignment g;
    for (std::size_t i = 0; i < vars.size(); ++i) g[vars[i]] = values[i];
    out.push_back(std::move(g));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Intensional interpretation

namespace {

std::size_t position_of(const VarTuple& vars, const std::string& v) {
  auto it = std::find(vars.begin(), vars.end(), v);
  return it == vars.end() ? 0 : static_cast<std::size_t>(it - vars.begin()) + 1;
}

Concept interpret_atom(const Atom& a, ConceptRegistry& reg) {
  VarTuple slots;
  auto slot_for = [&](const std::string& v) {
    std::size_t pos = position_of(slots, v);
    if (pos == 0) {
      slots.push_back(v);
      pos = slots.size();
    }
    return pos;
  };

  std::vector<AtomArg> args;
  args.reserve(a.args.size());
  for (const Term& t : a.args) {
    if (const auto* v = std::get_if<Variable>(&t)) {
      args.emplace_back(Slot{slot_for(v->name)});
    } else if (const auto* c = std::get_if<Constant>(&t)) {
      args.emplace_back(ConstantArg{c->name});
    } else if (const auto* e = std::get_if<ElementRef>(&t)) {
      args.emplace_back(e->element);
    } else {
      const auto& abs = std::get<Abstraction>(t);
      if (abs.beta.empty()) {
        args.emplace_back(DomainElement::concept_handle(interpret(*abs.body, reg).id()));
      } else {
        DependentArg dep{abs, {}};
        for (const std::string& v : abs.beta) dep.beta_slots.push_back(slot_for(v));
        args.emplace_back(std::move(dep));
      }
    }
  }
  return reg.atom(a.predicate, std::move(args));
}

void check_partition(const Abstraction& t) {
  const VarTuple fv = free_vars(*t.body);
  std::set<std::string> free(fv.begin(), fv.end());
  std::set<std::string> listed(t.alpha.begin(), t.alpha.end());
  bool disjoint = true;
  for (const std::string& b : t.beta) disjoint = disjoint && listed.insert(b).second;
  if (!disjoint || listed != free || listed.size() != t.alpha.size() + t.beta.size()) {
    throw AbstractionError("abstraction " + to_string(Term{t}) +
                           " is malformed: alpha and beta must partition the free variables " +
                           to_string(fv) + " of its body (the abstract otherwise denotes <>)");
  }
}

}  // namespace

Concept interpret(const Formula& f, ConceptRegistry& reg) {
  return std::visit(
      [&](const auto& n) -> Concept {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Atom>) {
          return interpret_atom(n, reg);
        } else if constexpr (std::is_same_v<T, Conj>) {
          const VarTuple left = free_vars(*n.left);
          const VarTuple right = free_vars(*n.right);
          ColumnPairs s;
          for (std::size_t i = 0; i < left.size(); ++i) {
            if (std::size_t j = position_of(right, left[i]); j != 0) s.insert({i + 1, j});
          }
          return reg.conj(s, interpret(*n.left, reg), interpret(*n.right, reg));
        } else if constexpr (std::is_same_v<T, Neg>) {
          return reg.neg(interpret(*n.sub, reg));
        } else if constexpr (std::is_same_v<T, Exists>) {
          return reg.exists(position_of(free_vars(*n.sub), n.var), interpret(*n.sub, reg));
        } else {
          return reg.necess(interpret(*n.sub, reg));
        }
      },
      f.node);
}

Concept interpret_abstraction(const Abstraction& t, const World& w, ConceptRegistry& reg) {
  check_partition(t);
  if (t.beta.empty()) return interpret(*t.body, reg);
  std::vector<Concept> members;
  for (const Tuple& values : all_tuples(w.domain(), t.beta.size())) {
    members.push_back(interpret(*substitute_elements(t.body, t.beta, values), reg));
  }
  return reg.union_of(std::move(members));
}

DomainElement assignment_extend(const Term& t, const Assignment& g, const World& w,
                                ConceptRegistry& reg) {
  return std::visit(
      [&](const auto& n) -> DomainElement {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Variable>) {
          auto it = g.find(n.name);
          if (it == g.end()) throw AssignmentError("variable '" + n.name + "' is unbound");
          return it->second;
        } else if constexpr (std::is_same_v<T, Constant>) {
          return w.constant(n.name);
        } else if constexpr (std::is_same_v<T, ElementRef>) {
          return n.element;
        } else {
          Tuple values;
          for (const std::string& v : n.beta) {
            auto it = g.find(v);
            if (it == g.end()) throw AssignmentError("variable '" + v + "' is unbound");
            values.push_back(it->second);
          }
          Concept c = interpret(*substitute_elements(n.body, n.beta, values), reg);
          return DomainElement::concept_handle(c.id());
        }
      },
      t);
}

// ---------------------------------------------------------------------------
// Extensionalization

EvalContext::EvalContext(ConceptRegistry& reg, const World& world, const WorldSet* modal,
                         bool memoize)
    : reg_(reg), world_(world), modal_(modal), memoize_(memoize) {}

EvalContext::EvalContext(ConceptRegistry& reg, const World& world, WorldContexts& shared,
                         bool memoize)
    : reg_(reg), world_(world), modal_(&shared.worlds()), memoize_(memoize), shared_(&shared) {}

EvalContext::~EvalContext() = default;

WorldContexts& EvalContext::modal_contexts() {
  if (shared_ != nullptr) return *shared_;
  std::lock_guard<std::mutex> lock(memo_mutex_);
  if (!owned_) owned_ = std::make_unique<WorldContexts>(reg_, *modal_, memoize_);
  return *owned_;
}

WorldContexts::WorldContexts(ConceptRegistry& reg, const WorldSet& ws, bool memoize)
    : reg_(reg), ws_(ws), memoize_(memoize), contexts_(ws.size()) {}

WorldContexts::~WorldContexts() = default;

EvalContext& WorldContexts::operator[](std::size_t i) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto& slot = contexts_.at(i);
  if (!slot) slot.reset(new EvalContext(reg_, ws_[i], *this, memoize_));
  return *slot;
}

Relation WorldContexts::necessity(Concept u) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = necessity_.find(u.id()); it != necessity_.end()) return it->second;
  }
  // computed without the lock: the worlds' contexts may come back here for nested necess
  std::optional<Relation> out;
  for (std::size_t i = 0; i < ws_.size(); ++i) {
    Relation r = (*this)[i].extension(u);
    out = out ? set_intersection(*out, r) : std::move(r);
  }
  std::lock_guard<std::mutex> lock(mutex_);
  return necessity_.try_emplace(u.id(), std::move(*out)).first->second;
}

Relation EvalContext::extension(Concept u) {
  if (memoize_) {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    if (auto it = memo_.find(u.id()); it != memo_.end()) return it->second;
  }
  Relation r = compute(u);
  if (memoize_) {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    memo_.try_emplace(u.id(), r);
  }
  return r;
}

Relation EvalContext::compute(Concept u) {
  const ConceptNode& n = u.node();
  switch (n.kind) {
    case ConceptKind::Truth:
      return Relation::truth();
    case ConceptKind::Identity:
      return identity_relation(world_.domain());
    case ConceptKind::Atom:
      return atom_extension(n);
    case ConceptKind::Conj:
      return natural_join(extension(n.children[0]), extension(n.children[1]), n.pairs);
    case ConceptKind::Neg:
      return complement(extension(n.children[0]), world_.domain());
    case ConceptKind::Exists:
      return project_out(extension(n.children[0]), n.column);
    case ConceptKind::Union: {
      Relation out(n.degree);
      for (Concept c : n.children) out = set_union(out, extension(c));
      return out;
    }
    case ConceptKind::Necess:
      if (modal_ == nullptr) throw Error("necess needs a world set to quantify over");
      return modal_contexts().necessity(n.children[0]);
  }
  return Relation(n.degree);
}

Relation EvalContext::atom_extension(const ConceptNode& n) {
  const Relation& rel = world_.relation(n.predicate);
  const std::size_t degree = n.degree;

  // constants resolve to their (rigid) denotations
  std::vector<AtomArg> args = n.args;
  bool dependent = false;
  for (AtomArg& a : args) {
    if (const auto* c = std::get_if<ConstantArg>(&a)) a = world_.constant(c->name);
    dependent = dependent || std::holds_alternative<DependentArg>(a);
  }

  Relation out(degree);
  if (!dependent) {
    // selection on fixed positions and repeated slots, then one column per slot
    for (const Tuple& t : rel.tuples()) {
      std::vector<const DomainElement*> values(degree, nullptr);
      bool match = true;
      for (std::size_t i = 0; i < args.size() && match; ++i) {
        if (const auto* s = std::get_if<Slot>(&args[i])) {
          const DomainElement*& slot = values[s->index - 1];
          if (slot == nullptr) {
            slot = &t[i];
          } else {
            match = *slot == t[i];
          }
        } else {
          match = std::get<DomainElement>(args[i]) == t[i];
        }
      }
      if (!match) continue;
      Tuple row;
      row.reserve(degree);
      for (const DomainElement* v : values) row.push_back(*v);
      out.insert(std::move(row));
    }
    return out;
  }

  // an abstraction argument's value depends on its beta slots
  for (const Tuple& values : all_tuples(world_.domain(), degree)) {
    Tuple row;
    row.reserve(args.size());
    for (const AtomArg& a : args) {
      if (const auto* s = std::get_if<Slot>(&a)) {
        row.push_back(values[s->index - 1]);
      } else if (const auto* e = std::get_if<DomainElement>(&a)) {
        row.push_back(*e);
      } else {
        const auto& dep = std::get<DependentArg>(a);
        Tuple beta_values;
        for (std::size_t s : dep.beta_slots) beta_values.push_back(values[s - 1]);
        Concept c = interpret(*substitute_elements(dep.term.body, dep.term.beta, beta_values), reg_);
        row.push_back(DomainElement::concept_handle(c.id()));
      }
    }
    if (rel.contains(row)) out.insert(values);
  }
  return out;
}

Relation extensionalize(Concept u, const World& w, ConceptRegistry& reg, const WorldSet* modal) {
  return EvalContext(reg, w, modal).extension(u);
}

Relation extension_of(const Formula& f, const World& w, ConceptRegistry& reg,
                      const WorldSet* modal) {
  return extensionalize(interpret(f, reg), w, reg, modal).with_attrs(free_vars(f));
}

// ---------------------------------------------------------------------------
// Tarski evaluation

namespace {

bool satisfies_in(const Formula& f, Assignment& g, const World& w, ConceptRegistry& reg,
                  const WorldSet* modal) {
  return std::visit(
      [&](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Atom>) {
          if (n.predicate == truth_predicate()) return true;
          Tuple values;
          values.reserve(n.args.size());
          for (const Term& t : n.args) values.push_back(assignment_extend(t, g, w, reg));
          return w.relation(n.predicate).contains(values);
        } else if constexpr (std::is_same_v<T, Conj>) {
          return satisfies_in(*n.left, g, w, reg, modal) && satisfies_in(*n.right, g, w, reg, modal);
        } else if constexpr (std::is_same_v<T, Neg>) {
          return !satisfies_in(*n.sub, g, w, reg, modal);
        } else if constexpr (std::is_same_v<T, Exists>) {
          // g' differs from g at most on the quantified variable
          std::optional<DomainElement> saved;
          if (auto it = g.find(n.var); it != g.end()) saved = it->second;
          bool found = false;
          for (const DomainElement& d : w.domain()) {
            g[n.var] = d;
            if (satisfies_in(*n.sub, g, w, reg, modal)) {
              found = true;
              break;
            }
          }
          if (saved) {
            g[n.var] = *saved;
          } else {
            g.erase(n.var);
          }
          return found;
        } else {
          if (modal == nullptr) throw Error("[] needs a world set to quantify over");
          for (const World& other : modal->worlds()) {
            if (!satisfies_in(*n.sub, g, other, reg, modal)) return false;
          }
          return true;
        }
      },
      f.node);
}

}  // namespace

bool tarski_satisfies(const Formula& f, const Assignment& g, const World& w, ConceptRegistry& reg,
                      const WorldSet* modal) {
  Assignment local = g;
  return satisfies_in(f, local, w, reg, modal);
}

Relation tarski_eval(const Formula& f, const World& w, ConceptRegistry& reg, const WorldSet* modal) {
  const VarTuple fv = free_vars(f);
  Relation out(fv.size(), fv);
  for (const Tuple& values : all_tuples(w.domain(), fv.size())) {
    Assignment g;
    for (std::size_t i = 0; i < fv.size(); ++i) g[fv[i]] = values[i];
    if (satisfies_in(f, g, w, reg, modal)) out.insert(values);
  }
  return out;
}

DiagramReport compare_extensions(Relation tarski, Relation algebraic) {
  DiagramReport report;
  if (tarski.arity() != algebraic.arity()) {
    report.arity_mismatch = true;
    report.tarski = std::move(tarski);
    report.algebraic = std::move(algebraic);
    return report;
  }
  if (tarski.attrs() && algebraic.attrs() && tarski.attrs() != algebraic.attrs()) {
    algebraic = permute_to(algebraic, *tarski.attrs());
  }
  report.commutes = tarski.tuples() == algebraic.tuples();
  if (!report.commutes) {
    for (const Tuple& t : tarski.tuples()) {
      if (!algebraic.contains(t)) {
        report.witness = t;
        report.witness_in_tarski = true;
        break;
      }
    }
    if (!report.witness) {
      for (const Tuple& t : algebraic.tuples()) {
        if (!tarski.contains(t)) {
          report.witness = t;
          break;
        }
      }
    }
  }
  report.tarski = std::move(tarski);
  report.algebraic = std::move(algebraic);
  return report;
}

DiagramReport check_diagram(const Formula& f, const World& w, ConceptRegistry& reg,
                            const WorldSet* modal) {
  return compare_extensions(tarski_eval(f, w, reg, modal), extension_of(f, w, reg, modal));
}

bool check_tarski_constraint(const Formula& f, const Assignment& g, EvalContext& ctx) {
  auto shared = std::shared_ptr<const Formula>(std::shared_ptr<const Formula>{}, &f);
  ConceptRegistry& reg = ctx.registry();
  const bool lhs = ctx.extension(interpret(*ground(shared, g), reg)).is_truth();

  Tuple values;
  for (const std::string& v : free_vars(f)) values.push_back(g.at(v));
  const bool rhs = ctx.extension(interpret(f, reg)).contains(values);
  return lhs == rhs;
}

bool check_tarski_constraint(const Formula& f, const Assignment& g, const World& w,
                             ConceptRegistry& reg, const WorldSet* modal) {
  EvalContext ctx(reg, w, modal);
  return check_tarski_constraint(f, g, ctx);
}

}  // namespace ifol
