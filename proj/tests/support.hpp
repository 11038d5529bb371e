#pragma once

// Shared fixtures and brute-force oracles. The oracles are written straight
// from the definitions (nested loops, no library relational operators) so
// the library can be checked against them.

#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "ifol/concepts.hpp"
#include "ifol/relalg.hpp"
#include "ifol/semantics.hpp"
#include "ifol/syntax.hpp"
#include "ifol/worlds.hpp"

#ifndef IFOL_TEST_DATA_DIR
#define IFOL_TEST_DATA_DIR "data"
#endif

namespace ifol::test {

inline std::string data_path(const std::string& rel) { return std::string(IFOL_TEST_DATA_DIR) + "/" + rel; }

inline DomainElement el(const std::string& name) { return DomainElement::particular(name); }

inline std::vector<DomainElement> dom(std::initializer_list<const char*> names) {
  std::vector<DomainElement> out;
  for (const char* n : names) out.push_back(el(n));
  return out;
}

inline Tuple tup(std::initializer_list<const char*> names) { return dom(names); }

inline Relation rel(std::size_t arity, std::initializer_list<std::initializer_list<const char*>> rows) {
  Relation r(arity);
  for (const auto& row : rows) r.insert(tup(row));
  return r;
}

inline Relation rel(std::size_t arity, std::initializer_list<std::initializer_list<const char*>> rows,
                    VarTuple attrs) {
  return rel(arity, rows).with_attrs(std::move(attrs));
}

/// D^k by recursion, independent of all_tuples.
inline std::vector<Tuple> oracle_power(const std::vector<DomainElement>& d, std::size_t k) {
  if (k == 0) return {Tuple{}};
  std::vector<Tuple> out;
  for (const Tuple& prefix : oracle_power(d, k - 1)) {
    for (const DomainElement& e : d) {
      Tuple t = prefix;
      t.push_back(e);
      out.push_back(t);
    }
  }
  return out;
}

/// Every relation of arity k over d (2^(|d|^k) of them).
inline std::vector<Relation> oracle_all_relations(const std::vector<DomainElement>& d, std::size_t k) {
  const std::vector<Tuple> cells = oracle_power(d, k);
  std::vector<Relation> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << cells.size()); ++mask) {
    Relation r(k);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (mask >> i & 1) r.insert(cells[i]);
    }
    out.push_back(r);
  }
  return out;
}

/// The join as defined: every pair of tuples, kept when each (i1, i2) pair
/// agrees, written as all r1 columns followed by r2's unpaired columns.
inline std::set<Tuple> oracle_join(const Relation& r1, const Relation& r2, const ColumnPairs& s) {
  bool valid = !s.empty();
  std::set<std::size_t> right_used;
  for (const auto& [i1, i2] : s) {
    if (i1 < 1 || i1 > r1.arity() || i2 < 1 || i2 > r2.arity() || !right_used.insert(i2).second) valid = false;
  }
  std::set<Tuple> out;
  for (const Tuple& a : r1.tuples()) {
    for (const Tuple& b : r2.tuples()) {
      bool keep = true;
      if (valid) {
        for (const auto& [i1, i2] : s) keep = keep && a[i1 - 1] == b[i2 - 1];
      }
      if (!keep) continue;
      Tuple t = a;
      for (std::size_t j = 1; j <= b.size(); ++j) {
        if (!valid || !right_used.count(j)) t.push_back(b[j - 1]);
      }
      out.insert(t);
    }
  }
  return out;
}

inline std::set<Tuple> oracle_complement(const Relation& r, const std::vector<DomainElement>& d) {
  std::set<Tuple> out;
  for (const Tuple& t : oracle_power(d, r.arity())) {
    if (!r.contains(t)) out.insert(t);
  }
  return out;
}

/// The sweep signature {p/1, q/2, c}.
inline Signature sweep_signature() {
  Signature sig;
  sig.add_predicate("p", 1);
  sig.add_predicate("q", 2);
  sig.add_constant("c");
  return sig;
}

inline World make_world(const std::string& name, std::vector<DomainElement> d,
                        std::map<PredicateSymbol, Relation> rels,
                        std::map<std::string, DomainElement> consts = {}) {
  return World(name, std::move(d), std::move(consts), std::move(rels));
}

inline PredicateSymbol pred(const std::string& name, std::size_t arity) { return PredicateSymbol{name, arity}; }

/// The 64-world set for {p/1, q/2} over {a, b} with c = a.
inline const WorldSet& sweep_worlds() {
  static const WorldSet ws = enumerate_worlds(sweep_signature(), dom({"a", "b"}), {{"c", el("a")}});
  return ws;
}

/// Formulas of the bundled corpus file.
std::vector<FormulaPtr> load_corpus(const Signature& sig);

}  // namespace ifol::test
