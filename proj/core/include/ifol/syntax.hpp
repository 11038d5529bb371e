#pragma once

// Terms and formulas of first-order logic with the intensional abstraction
// operator << phi >>_{alpha}^{beta}.
//
// Formulas are immutable trees shared through FormulaPtr. The parser and the
// derived-connective builders only ever produce the core node kinds
// (Atom, Conj, Neg, Exists, Box); everything else is desugared on the way in.

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ifol/relalg.hpp"

namespace ifol {

struct PredicateSymbol {
  std::string name;
  std::size_t arity = 0;

  friend auto operator<=>(const PredicateSymbol&, const PredicateSymbol&) = default;
  friend bool operator==(const PredicateSymbol&, const PredicateSymbol&) = default;

  std::string to_string() const { return name + "/" + std::to_string(arity); }
};

/// The built-in identity predicate, written `t1 == t2`.
const PredicateSymbol& identity_predicate();
/// The 0-ary tautology predicate, written `true`.
const PredicateSymbol& truth_predicate();
bool is_builtin(const PredicateSymbol& p);

/// Declared predicate letters, constants and extra variable names.
class Signature {
 public:
  void add_predicate(const std::string& name, std::size_t arity);
  void add_constant(const std::string& name);
  void add_variable(const std::string& name);

  bool has_predicate(const std::string& name, std::size_t arity) const;
  bool has_predicate_name(const std::string& name) const;
  std::vector<std::size_t> arities(const std::string& name) const;

  bool is_constant(const std::string& name) const { return constants_.count(name) != 0; }
  /// Lexical variables (x, y, z with an optional digit or `_suffix`) and
  /// names declared with `var`.
  bool is_variable(const std::string& name) const;

  /// Non-builtin predicates, ordered by (name, arity).
  const std::set<PredicateSymbol>& predicates() const { return predicates_; }
  const std::set<std::string>& constants() const { return constants_; }

  /// Lines `pred <name>/<arity>`, `const <name>`, `var <name>`; `#` starts a comment.
  static Signature parse(std::string_view text);
  static Signature load(const std::string& path);

 private:
  std::set<PredicateSymbol> predicates_;
  std::set<std::string> constants_;
  std::set<std::string> variables_;
};

bool is_lexical_variable(std::string_view name);

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Variable {
  std::string name;
  friend bool operator==(const Variable&, const Variable&) = default;
};

struct Constant {
  std::string name;
  friend bool operator==(const Constant&, const Constant&) = default;
};

/// A domain element embedded in a term, written `#a` (or `#@7` for a concept handle).
struct ElementRef {
  DomainElement element;
  friend bool operator==(const ElementRef&, const ElementRef&) = default;
};

struct Abstraction {
  FormulaPtr body;
  VarTuple alpha;
  VarTuple beta;
};
bool operator==(const Abstraction& a, const Abstraction& b);

using Term = std::variant<Variable, Constant, ElementRef, Abstraction>;

struct Atom {
  PredicateSymbol predicate;
  std::vector<Term> args;
  friend bool operator==(const Atom&, const Atom&) = default;
};

struct Conj {
  FormulaPtr left;
  FormulaPtr right;
};
bool operator==(const Conj& a, const Conj& b);

struct Neg {
  FormulaPtr sub;
};
bool operator==(const Neg& a, const Neg& b);

struct Exists {
  std::string var;
  FormulaPtr sub;
};
bool operator==(const Exists& a, const Exists& b);

/// Necessity over the accessible worlds (S5: all of them).
struct Box {
  FormulaPtr sub;
};
bool operator==(const Box& a, const Box& b);

struct Formula {
  std::variant<Atom, Conj, Neg, Exists, Box> node;
};
bool operator==(const Formula& a, const Formula& b);

// Core constructors.
FormulaPtr make_atom(PredicateSymbol p, std::vector<Term> args);
FormulaPtr make_conj(FormulaPtr left, FormulaPtr right);
FormulaPtr make_neg(FormulaPtr sub);
FormulaPtr make_exists(std::string var, FormulaPtr sub);
FormulaPtr make_box(FormulaPtr sub);
FormulaPtr make_truth();
FormulaPtr make_identity(Term left, Term right);

// Derived connectives, desugared into the core.
FormulaPtr make_forall(std::string var, FormulaPtr sub);           // ~exists x ~phi
FormulaPtr make_disj(FormulaPtr left, FormulaPtr right);           // ~(~phi & ~psi)
FormulaPtr make_implies(FormulaPtr left, FormulaPtr right);        // ~phi | psi
FormulaPtr make_equiv(FormulaPtr left, FormulaPtr right);          // (phi -> psi) & (psi -> phi)
FormulaPtr make_diamond(FormulaPtr sub);                           // ~[]~phi
FormulaPtr make_exists_unique(const std::string& var, FormulaPtr sub);

/// Builds << body >>_{alpha}^{beta}, validating that alpha is a distinct
/// sublist of the body's free variables and beta is exactly the rest in body
/// order. Throws AbstractionError otherwise.
Abstraction make_abstraction(FormulaPtr body, VarTuple alpha, VarTuple beta);
/// Same, with beta computed as the remainder.
Abstraction make_abstraction(FormulaPtr body, VarTuple alpha);

/// Canonical tuple of free variables, by first free occurrence left to right.
VarTuple free_vars(const Formula& f);
VarTuple free_vars(const Term& t);
bool is_sentence(const Formula& f);

/// Every variable name occurring anywhere (free, bound, or in alpha/beta lists).
std::set<std::string> all_variables(const Formula& f);

/// f[var/t], capture-avoiding. Throws CaptureError when a free variable of
/// `t` would be bound by an existential or an abstraction's alpha list.
FormulaPtr substitute(const FormulaPtr& f, const std::string& var, const Term& t);
Term substitute(const Term& term, const std::string& var, const Term& t);

/// f[beta/values]: sequential replacement of each beta_i by the element values_i.
FormulaPtr substitute_elements(const FormulaPtr& f, const VarTuple& vars, const Tuple& values);

using Assignment = std::map<std::string, DomainElement>;

/// phi/g. Throws AssignmentError if g misses a free variable.
FormulaPtr ground(const FormulaPtr& f, const Assignment& g);
Term ground(const Term& t, const Assignment& g);

/// Prints core syntax that parses back to a structurally equal formula.
std::string to_string(const Formula& f);
std::string to_string(const Term& t);
std::string to_string(const VarTuple& vars);

/// Human-readable indented tree.
std::string dump_tree(const Formula& f);

/// Parses against a fixed signature; unknown symbols are errors.
FormulaPtr parse_formula(std::string_view text, const Signature& sig);
Term parse_term(std::string_view text, const Signature& sig);

/// Parses and declares unknown predicates (with the arity of first use) and
/// unknown constants into `sig`.
FormulaPtr parse_formula_inferring(std::string_view text, Signature& sig);
Term parse_term_inferring(std::string_view text, Signature& sig);

/// Visits every abstraction term in f (outermost first, left to right).
std::vector<Abstraction> collect_abstractions(const Formula& f);

}  // namespace ifol
