#pragma once

// Finite world sets standing in for the set of all extensionalization
// functions, with S5 accessibility (every world sees every world). Modal
// answers are always relative to the worlds in the set.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ifol/concepts.hpp"
#include "ifol/semantics.hpp"

namespace ifol {

class WorldSet {
 public:
  /// All worlds must share one domain and one constant map.
  explicit WorldSet(std::vector<World> worlds);

  const std::vector<World>& worlds() const { return worlds_; }
  std::size_t size() const { return worlds_.size(); }
  const std::vector<DomainElement>& domain() const { return worlds_.front().domain(); }

  const World& operator[](std::size_t i) const { return worlds_[i]; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  /// True when `w` is one of this set's worlds (by identity or by name).
  bool contains(const World& w) const;

 private:
  std::vector<World> worlds_;
};

inline constexpr std::uint64_t kDefaultWorldLimit = std::uint64_t{1} << 20;

/// Number of worlds enumerate_worlds would produce, or nullopt on overflow of 2^63.
std::optional<std::uint64_t> count_worlds(const Signature& sig, std::size_t domain_size);

/// Every assignment of extensions to the signature's predicates over `domain`.
/// Order: predicates by (name, arity), first predicate most significant;
/// subsets by bitmask over D^k in canonical tuple order, ascending.
/// Throws LimitError when the count exceeds `limit`.
WorldSet enumerate_worlds(const Signature& sig, std::vector<DomainElement> domain,
                          std::map<std::string, DomainElement> constants = {},
                          std::uint64_t limit = kDefaultWorldLimit);

/// Montague intension: the extension of a formula in every world of a set.
struct Intension {
  Concept meaning;
  std::vector<Relation> table;
};

Intension montague_intension(const Formula& f, const WorldSet& ws, ConceptRegistry& reg);

/// Intersection over all worlds of h(u).
Relation box_extension(Concept u, const WorldSet& ws, ConceptRegistry& reg);
/// Union over all worlds of h(u).
Relation diamond_extension(Concept u, const WorldSet& ws, ConceptRegistry& reg);

/// Kripke satisfaction M |=_{w,g} f, with [] ranging over all of `ws`.
/// Throws Error when `w` is not in `ws`.
bool satisfies(const WorldSet& ws, const World& w, const Assignment& g, const Formula& f,
               ConceptRegistry& reg);

struct EquivalenceResult {
  bool equivalent = false;
  /// The two grounded bodies compile to the same interned concept.
  bool concepts_identical = false;
  std::optional<std::string> witness_world;
  std::optional<Tuple> witness_tuple;
  std::size_t worlds_checked = 0;
};

/// << phi >>_alpha^beta1 / g  ~=  << psi >>_alpha'^beta2 / g  in every world.
/// Columns are matched positionally through the two alpha lists.
EquivalenceResult strong_equiv(const Abstraction& t1, const Abstraction& t2, const Assignment& g,
                               const WorldSet& ws, ConceptRegistry& reg);

/// Same, comparing the diamond (union over worlds) extensions.
EquivalenceResult weak_equiv(const Abstraction& t1, const Abstraction& t2, const Assignment& g,
                             const WorldSet& ws, ConceptRegistry& reg);

}  // namespace ifol
