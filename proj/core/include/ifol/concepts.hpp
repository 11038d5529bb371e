#pragma once

// The intensional algebra: concepts are hash-consed expressions built from
// atomic concepts by conj_S, neg, exists_n, union and necess. A concept of
// degree n lives in D_n; degree 0 concepts are propositions.
//
// Two concepts are the same intension exactly when their canonical trees are
// equal, which the registry reduces to pointer (and id) equality. The only
// rewrite applied is neg(neg(u)) = u.

#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ifol/relalg.hpp"
#include "ifol/syntax.hpp"

namespace ifol {

/// A column of the atom's extension, numbered by first occurrence (1-based).
struct Slot {
  std::size_t index = 0;
  friend bool operator==(const Slot&, const Slot&) = default;
};

/// A constant argument, resolved through the world's constant map.
struct ConstantArg {
  std::string name;
  friend bool operator==(const ConstantArg&, const ConstantArg&) = default;
};

/// An abstraction term << body >>_alpha^beta whose beta variables are bound
/// by slots of the enclosing atom. Its value under a slot assignment g is the
/// concept handle of I(body[beta/g(beta)]).
struct DependentArg {
  Abstraction term;
  std::vector<std::size_t> beta_slots;
};
bool operator==(const DependentArg& a, const DependentArg& b);

using AtomArg = std::variant<Slot, DomainElement, ConstantArg, DependentArg>;

enum class ConceptKind : std::uint8_t { Atom, Conj, Neg, Exists, Union, Necess, Identity, Truth };

class ConceptNode;

/// Lightweight handle to an interned concept. Valid while its registry lives.
class Concept {
 public:
  Concept() = default;

  std::uint32_t id() const;
  std::size_t degree() const;
  ConceptKind kind() const;
  const ConceptNode& node() const { return *node_; }
  bool valid() const noexcept { return node_ != nullptr; }

  friend bool operator==(Concept a, Concept b) noexcept { return a.node_ == b.node_; }

 private:
  friend class ConceptRegistry;
  explicit Concept(const ConceptNode* n) : node_(n) {}
  const ConceptNode* node_ = nullptr;
};

class ConceptNode {
 public:
  std::uint32_t id = 0;
  std::size_t degree = 0;
  ConceptKind kind = ConceptKind::Truth;

  // Atom
  PredicateSymbol predicate;
  std::vector<AtomArg> args;
  // Conj
  ColumnPairs pairs;
  // Exists
  std::size_t column = 0;
  // Conj: {left, right}; Neg/Exists/Necess: {sub}; Union: members sorted by id
  std::vector<Concept> children;
};

class ConceptRegistry {
 public:
  ConceptRegistry() = default;
  ConceptRegistry(const ConceptRegistry&) = delete;
  ConceptRegistry& operator=(const ConceptRegistry&) = delete;

  /// The binary identity concept Id in D_2.
  Concept identity();
  /// The tautology concept Truth in D_0.
  Concept truth();

  /// Atomic concept p(args). Slots must be numbered 1, 2, ... in order of
  /// first occurrence. `==` applied to (_1, _2) is Id; `true` is Truth.
  Concept atom(const PredicateSymbol& p, std::vector<AtomArg> args);
  Concept conj(const ColumnPairs& s, Concept u, Concept v);
  Concept neg(Concept u);
  /// exists_n(u); the identity when n is out of range for u's degree.
  Concept exists(std::size_t n, Concept u);
  /// union(B) over a non-empty set of same-degree concepts.
  Concept union_of(std::vector<Concept> members);
  Concept necess(Concept u);

  /// union(B) spelled out as neg(conj_S(neg u1, conj_S(..., neg un))) with
  /// S = {(l, l) | 1 <= l <= degree}.
  Concept union_expansion(const std::vector<Concept>& members);

  /// Handle to the concept with the given id (as found in a DomainElement).
  Concept by_id(std::uint32_t id) const;

  std::size_t size() const;

 private:
  Concept intern(ConceptNode proto);

  mutable std::mutex mutex_;
  std::deque<std::unique_ptr<ConceptNode>> nodes_;
  std::unordered_map<std::string, const ConceptNode*> table_;
};

/// S-expression form, e.g. `(conj {(1,1)} (atom p1/1 _1) (neg (atom p2/1 _1)))`.
std::string to_sexpr(Concept u);

}  // namespace ifol
