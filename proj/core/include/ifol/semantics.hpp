#pragma once

// Two-step semantics: the fixed intensional interpretation I maps formulas to
// concepts; a world's extensionalization h maps concepts to relations. The
// direct Tarski evaluator is kept separate so the two routes can be compared.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ifol/concepts.hpp"
#include "ifol/relalg.hpp"
#include "ifol/syntax.hpp"

namespace ifol {

class WorldSet;

/// A Tarski interpretation: non-empty domain, constant denotations and one
/// relation per predicate letter. The identity relation is added automatically.
class World {
 public:
  World(std::string name, std::vector<DomainElement> domain,
        std::map<std::string, DomainElement> constants,
        std::map<PredicateSymbol, Relation> relations);

  const std::string& name() const { return name_; }
  /// Sorted, duplicate-free.
  const std::vector<DomainElement>& domain() const { return domain_; }
  const std::map<std::string, DomainElement>& constants() const { return constants_; }
  /// The world's own predicates. The built-ins are served by relation().
  const std::map<PredicateSymbol, Relation>& relations() const { return relations_; }

  bool in_domain(const DomainElement& e) const;
  /// Throws DomainError for predicates the world does not interpret.
  const Relation& relation(const PredicateSymbol& p) const;
  const DomainElement& constant(const std::string& name) const;

 private:
  std::string name_;
  std::vector<DomainElement> domain_;
  std::map<std::string, DomainElement> constants_;
  std::map<PredicateSymbol, Relation> relations_;
  Relation identity_;
};

/// I(f). World-independent; homomorphic over conj/neg/exists, with conj's
/// column pairs and exists' column read off the free-variable tuples.
Concept interpret(const Formula& f, ConceptRegistry& reg);

/// I(<< phi >>_alpha^beta) = union{ I(phi[beta/g(beta)]) | g in D^beta }.
/// Throws AbstractionError when alpha and beta do not partition phi's free variables.
Concept interpret_abstraction(const Abstraction& t, const World& w, ConceptRegistry& reg);

/// g*(t): variables through g, constants through the world, abstractions to
/// the handle of I(phi[beta/g(beta)]).
DomainElement assignment_extend(const Term& t, const Assignment& g, const World& w,
                                ConceptRegistry& reg);

class WorldContexts;

/// Memoizing extensionalization h = is(w) for one world. `modal` supplies
/// the worlds quantified over by necess; without it necess is an error.
class EvalContext {
 public:
  EvalContext(ConceptRegistry& reg, const World& world, const WorldSet* modal = nullptr,
              bool memoize = true);
  ~EvalContext();

  Relation extension(Concept u);

  const World& world() const { return world_; }
  ConceptRegistry& registry() const { return reg_; }

 private:
  friend class WorldContexts;
  EvalContext(ConceptRegistry& reg, const World& world, WorldContexts& shared, bool memoize);

  Relation compute(Concept u);
  Relation atom_extension(const ConceptNode& n);
  WorldContexts& modal_contexts();

  ConceptRegistry& reg_;
  const World& world_;
  const WorldSet* modal_;
  bool memoize_;
  std::mutex memo_mutex_;
  std::unordered_map<std::uint32_t, Relation> memo_;
  WorldContexts* shared_ = nullptr;
  std::unique_ptr<WorldContexts> owned_;
};

/// One evaluation context per world of a set, created on first use. The
/// contexts share the extensions of necess concepts, which are the same in
/// every world, so nested modalities are evaluated once per set rather than
/// once per world. Safe to use from several threads.
class WorldContexts {
 public:
  WorldContexts(ConceptRegistry& reg, const WorldSet& ws, bool memoize = true);
  ~WorldContexts();
  WorldContexts(const WorldContexts&) = delete;
  WorldContexts& operator=(const WorldContexts&) = delete;

  const WorldSet& worlds() const { return ws_; }
  EvalContext& operator[](std::size_t i);

  /// Intersection of h(u) over all worlds, computed once per concept.
  Relation necessity(Concept u);

 private:
  ConceptRegistry& reg_;
  const WorldSet& ws_;
  bool memoize_;
  std::mutex mutex_;
  std::vector<std::unique_ptr<EvalContext>> contexts_;
  std::unordered_map<std::uint32_t, Relation> necessity_;
};

Relation extensionalize(Concept u, const World& w, ConceptRegistry& reg,
                        const WorldSet* modal = nullptr);

/// h(I(f)) with columns labelled by free_vars(f).
Relation extension_of(const Formula& f, const World& w, ConceptRegistry& reg,
                      const WorldSet* modal = nullptr);

/// I_T*(f) by brute-force enumeration of assignments over the free
/// variables, labelled by free_vars(f). Uses no relational operators.
Relation tarski_eval(const Formula& f, const World& w, ConceptRegistry& reg,
                     const WorldSet* modal = nullptr);

/// Whether g satisfies f in w (Tarski clauses).
bool tarski_satisfies(const Formula& f, const Assignment& g, const World& w, ConceptRegistry& reg,
                      const WorldSet* modal = nullptr);

struct DiagramReport {
  bool commutes = false;
  Relation tarski;
  Relation algebraic;
  /// First tuple in the symmetric difference, when they differ.
  std::optional<Tuple> witness;
  bool witness_in_tarski = false;
  bool arity_mismatch = false;
};

/// Compares I_T*(f) against h(I(f)).
DiagramReport check_diagram(const Formula& f, const World& w, ConceptRegistry& reg,
                            const WorldSet* modal = nullptr);
DiagramReport compare_extensions(Relation tarski, Relation algebraic);

/// h(I(f/g)) = t  iff  (g(x1), ..., g(xk)) in h(I(f)).
bool check_tarski_constraint(const Formula& f, const Assignment& g, const World& w,
                             ConceptRegistry& reg, const WorldSet* modal = nullptr);
/// Same, reusing a context's memo (and its world set for necess).
bool check_tarski_constraint(const Formula& f, const Assignment& g, EvalContext& ctx);

/// Every assignment of `vars` over the domain, in canonical order.
std::vector<Assignment> all_assignments(const VarTuple& vars, std::span<const DomainElement> domain);

}  // namespace ifol
