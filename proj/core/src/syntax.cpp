#include "ifol/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "ifol/error.hpp"

namespace ifol {

const PredicateSymbol& identity_predicate() {
  static const PredicateSymbol p{"==", 2};
  return p;
}

const PredicateSymbol& truth_predicate() {
  static const PredicateSymbol p{"true", 0};
  return p;
}

bool is_builtin(const PredicateSymbol& p) {
  return p == identity_predicate() || p == truth_predicate();
}

bool is_lexical_variable(std::string_view name) {
  if (name.empty()) return false;
  if (name[0] != 'x' && name[0] != 'y' && name[0] != 'z') return false;
  std::string_view rest = name.substr(1);
  if (rest.empty()) return true;
  if (rest[0] == '_') {
    if (rest.size() == 1) return false;
    return std::all_of(rest.begin() + 1, rest.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
  }
  return std::all_of(rest.begin(), rest.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// ---------------------------------------------------------------------------
// Signature

void Signature::add_predicate(const std::string& name, std::size_t arity) {
  PredicateSymbol p{name, arity};
  if (is_builtin(p) || name == "true" || name == "false") {
    throw Error("'" + name + "' is reserved and cannot be declared");
  }
  predicates_.insert(std::move(p));
}

void Signature::add_constant(const std::string& name) {
  if (is_variable(name)) throw Error("'" + name + "' is a variable name, not a constant");
  constants_.insert(name);
}

void Signature::add_variable(const std::string& name) {
  if (constants_.count(name)) throw Error("'" + name + "' is already declared as a constant");
  variables_.insert(name);
}

bool Signature::has_predicate(const std::string& name, std::size_t arity) const {
  return predicates_.count(PredicateSymbol{name, arity}) != 0;
}

bool Signature::has_predicate_name(const std::string& name) const {
  auto it = predicates_.lower_bound(PredicateSymbol{name, 0});
  return it != predicates_.end() && it->name == name;
}

std::vector<std::size_t> Signature::arities(const std::string& name) const {
  std::vector<std::size_t> out;
  for (auto it = predicates_.lower_bound(PredicateSymbol{name, 0});
       it != predicates_.end() && it->name == name; ++it) {
    out.push_back(it->arity);
  }
  return out;
}

bool Signature::is_variable(const std::string& name) const {
  return variables_.count(name) != 0 || (is_lexical_variable(name) && !constants_.count(name));
}

Signature Signature::parse(std::string_view text) {
  Signature sig;
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind, arg, extra;
    if (!(ls >> kind)) continue;
    if (!(ls >> arg) || (ls >> extra)) {
      throw Error("signature line " + std::to_string(lineno) + ": expected '<kind> <name>'");
    }
    if (kind == "pred") {
      auto slash = arg.rfind('/');
      if (slash == std::string::npos || slash == 0 || slash + 1 == arg.size()) {
        throw Error("signature line " + std::to_string(lineno) + ": expected 'pred <name>/<arity>'");
      }
      std::size_t arity = 0;
      try {
        std::size_t used = 0;
        arity = std::stoul(arg.substr(slash + 1), &used);
        if (used != arg.size() - slash - 1) throw std::invalid_argument(arg);
      } catch (const std::exception&) {
        throw Error("signature line " + std::to_string(lineno) + ": bad arity in '" + arg + "'");
      }
      sig.add_predicate(arg.substr(0, slash), arity);
    } else if (kind == "const") {
      sig.add_constant(arg);
    } else if (kind == "var") {
      sig.add_variable(arg);
    } else {
      throw Error("signature line " + std::to_string(lineno) + ": unknown declaration '" + kind + "'");
    }
  }
  return sig;
}

Signature Signature::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open signature file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

// ---------------------------------------------------------------------------
// Structural equality

bool operator==(const Abstraction& a, const Abstraction& b) {
  return a.alpha == b.alpha && a.beta == b.beta && *a.body == *b.body;
}
bool operator==(const Conj& a, const Conj& b) { return *a.left == *b.left && *a.right == *b.right; }
bool operator==(const Neg& a, const Neg& b) { return *a.sub == *b.sub; }
bool operator==(const Exists& a, const Exists& b) { return a.var == b.var && *a.sub == *b.sub; }
bool operator==(const Box& a, const Box& b) { return *a.sub == *b.sub; }
bool operator==(const Formula& a, const Formula& b) {
  if (&a == &b) return true;
  return a.node == b.node;
}

// ---------------------------------------------------------------------------
// Constructors

FormulaPtr make_atom(PredicateSymbol p, std::vector<Term> args) {
  if (args.size() != p.arity) {
    throw ArityError("predicate " + p.to_string() + " applied to " + std::to_string(args.size()) +
                     " arguments");
  }
  return std::make_shared<const Formula>(Formula{Atom{std::move(p), std::move(args)}});
}

FormulaPtr make_conj(FormulaPtr left, FormulaPtr right) {
  return std::make_shared<const Formula>(Formula{Conj{std::move(left), std::move(right)}});
}

FormulaPtr make_neg(FormulaPtr sub) {
  return std::make_shared<const Formula>(Formula{Neg{std::move(sub)}});
}

FormulaPtr make_exists(std::string var, FormulaPtr sub) {
  return std::make_shared<const Formula>(Formula{Exists{std::move(var), std::move(sub)}});
}

FormulaPtr make_box(FormulaPtr sub) {
  return std::make_shared<const Formula>(Formula{Box{std::move(sub)}});
}

FormulaPtr make_truth() { return make_atom(truth_predicate(), {}); }

FormulaPtr make_identity(Term left, Term right) {
  return make_atom(identity_predicate(), {std::move(left), std::move(right)});
}

FormulaPtr make_forall(std::string var, FormulaPtr sub) {
  return make_neg(make_exists(std::move(var), make_neg(std::move(sub))));
}

FormulaPtr make_disj(FormulaPtr left, FormulaPtr right) {
  return make_neg(make_conj(make_neg(std::move(left)), make_neg(std::move(right))));
}

FormulaPtr make_implies(FormulaPtr left, FormulaPtr right) {
  return make_disj(make_neg(std::move(left)), std::move(right));
}

FormulaPtr make_equiv(FormulaPtr left, FormulaPtr right) {
  return make_conj(make_implies(left, right), make_implies(right, left));
}

FormulaPtr make_diamond(FormulaPtr sub) { return make_neg(make_box(make_neg(std::move(sub)))); }

FormulaPtr make_exists_unique(const std::string& var, FormulaPtr sub) {
  std::set<std::string> used = all_variables(*sub);
  used.insert(var);
  std::string fresh = "y";
  for (int i = 1; used.count(fresh); ++i) fresh = "y" + std::to_string(i);

  FormulaPtr renamed = substitute(sub, var, Variable{fresh});
  FormulaPtr uniqueness = make_forall(
      var, make_forall(fresh, make_implies(make_conj(sub, renamed),
                                           make_identity(Variable{var}, Variable{fresh}))));
  return make_conj(make_exists(var, sub), uniqueness);
}

Abstraction make_abstraction(FormulaPtr body, VarTuple alpha, VarTuple beta) {
  const VarTuple fv = free_vars(*body);
  std::set<std::string> seen;
  for (const std::string& a : alpha) {
    if (!seen.insert(a).second) {
      throw AbstractionError("abstraction alpha list repeats variable '" + a + "'");
    }
    if (std::find(fv.begin(), fv.end(), a) == fv.end()) {
      throw AbstractionError("abstraction alpha variable '" + a +
                             "' is not free in the body; alpha and beta must partition the "
                             "free variables " + to_string(fv));
    }
  }
  VarTuple rest;
  for (const std::string& v : fv) {
    if (!seen.count(v)) rest.push_back(v);
  }
  if (beta != rest) {
    throw AbstractionError("abstraction beta list " + to_string(beta) +
                           " must be the free variables not in alpha, in body order: " +
                           to_string(rest));
  }
  return Abstraction{std::move(body), std::move(alpha), std::move(beta)};
}

Abstraction make_abstraction(FormulaPtr body, VarTuple alpha) {
  const VarTuple fv = free_vars(*body);
  VarTuple rest;
  for (const std::string& v : fv) {
    if (std::find(alpha.begin(), alpha.end(), v) == alpha.end()) rest.push_back(v);
  }
  return make_abstraction(std::move(body), std::move(alpha), std::move(rest));
}

// ---------------------------------------------------------------------------
// Free variables

namespace {

void push_unique(VarTuple& out, const std::string& v) {
  if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
}

void collect_free(const Term& t, VarTuple& out);

void collect_free(const Formula& f, VarTuple& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Atom>) {
          for (const Term& t : n.args) collect_free(t, out);
        } else if constexpr (std::is_same_v<T, Conj>) {
          collect_free(*n.left, out);
          collect_free(*n.right, out);
        } else if constexpr (std::is_same_v<T, Exists>) {
          for (const std::string& v : free_vars(*n.sub)) {
            if (v != n.var) push_unique(out, v);
          }
        } else {
          collect_free(*n.sub, out);
        }
      },
      f.node);
}

void collect_free(const Term& t, VarTuple& out) {
  if (const auto* v = std::get_if<Variable>(&t)) {
    push_unique(out, v->name);
  } else if (const auto* a = std::get_if<Abstraction>(&t)) {
    for (const std::string& v : free_vars(*a->body)) {
      if (std::find(a->alpha.begin(), a->alpha.end(), v) == a->alpha.end()) push_unique(out, v);
    }
  }
}

void collect_all(const Formula& f, std::set<std::string>& out);

void collect_all(const Term& t, std::set<std::string>& out) {
  if (const auto* v = std::get_if<Variable>(&t)) {
    out.insert(v->name);
  } else if (const auto* a = std::get_if<Abstraction>(&t)) {
    out.insert(a->alpha.begin(), a->alpha.end());
    out.insert(a->beta.begin(), a->beta.end());
    collect_all(*a->body, out);
  }
}

void collect_all(const Formula& f, std::set<std::string>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Atom>) {
          for (const Term& t : n.args) collect_all(t, out);
        } else if constexpr (std::is_same_v<T, Conj>) {
          collect_all(*n.left, out);
          collect_all(*n.right, out);
        } else if constexpr (std::is_same_v<T, Exists>) {
          out.insert(n.var);
          collect_all(*n.sub, out);
        } else {
          collect_all(*n.sub, out);
        }
      },
      f.node);
}

bool contains(const VarTuple& vs, const std::string& v) {
  return std::find(vs.begin(), vs.end(), v) != vs.end();
}

}  // namespace

VarTuple free_vars(const Formula& f) {
  VarTuple out;
  collect_free(f, out);
  return out;
}

VarTuple free_vars(const Term& t) {
  VarTuple out;
  collect_free(t, out);
  return out;
}

bool is_sentence(const Formula& f) { return free_vars(f).empty(); }

std::set<std::string> all_variables(const Formula& f) {
  std::set<std::string> out;
  collect_all(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Substitution

Term substitute(const Term& term, const std::string& var, const Term& t) {
  if (const auto* v = std::get_if<Variable>(&term)) {
    return v->name == var ? t : term;
  }
  if (const auto* a = std::get_if<Abstraction>(&term)) {
    if (contains(a->alpha, var) || !contains(free_vars(*a->body), var)) return term;
    for (const std::string& fv : free_vars(t)) {
      if (contains(a->alpha, fv)) {
        throw CaptureError("substituting for '" + var + "' would capture '" + fv +
                           "' in the alpha list of an abstraction");
      }
    }
    FormulaPtr body = substitute(a->body, var, t);
    VarTuple beta;
    for (const std::string& v : free_vars(*body)) {
      if (!contains(a->alpha, v)) beta.push_back(v);
    }
    return Abstraction{std::move(body), a->alpha, std::move(beta)};
  }
  return term;
}

FormulaPtr substitute(const FormulaPtr& f, const std::string& var, const Term& t) {
  return std::visit(
      [&](const auto& n) -> FormulaPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Atom>) {
          std::vector<Term> args;
          args.reserve(n.args.size());
          bool changed = false;
          for (const Term& a : n.args) {
            args.push_back(substitute(a, var, t));
            changed = changed || !(args.back() == a);
          }
          return changed ? make_atom(n.predicate, std::move(args)) : f;
        } else if constexpr (std::is_same_v<T, Conj>) {
          FormulaPtr l = substitute(n.left, var, t);
          FormulaPtr r = substitute(n.right, var, t);
          return (l == n.left && r == n.right) ? f : make_conj(l, r);
        } else if constexpr (std::is_same_v<T, Neg>) {
          FormulaPtr s = substitute(n.sub, var, t);
          return s == n.sub ? f : make_neg(s);
        } else if constexpr (std::is_same_v<T, Box>) {
          FormulaPtr s = substitute(n.sub, var, t);
          return s == n.sub ? f : make_box(s);
        } else {
          if (n.var == var || !contains(free_vars(*n.sub), var)) return f;
          if (contains(free_vars(t), n.var)) {
            throw CaptureError("substituting for '" + var + "' would capture '" + n.var +
                               "' under its existential quantifier");
          }
          return make_exists(n.var, substitute(n.sub, var, t));
        }
      },
      f->node);
}

FormulaPtr substitute_elements(const FormulaPtr& f, const VarTuple& vars, const Tuple& values) {
  if (vars.size() != values.size()) {
    throw AssignmentError("substitution lists have different lengths");
  }
  FormulaPtr out = f;
  for (std::size_t i = 0; i < vars.size(); ++i) out = substitute(out, vars[i], ElementRef{values[i]});
  return out;
}

FormulaPtr ground(const FormulaPtr& f, const Assignment& g) {
  FormulaPtr out = f;
  for (const std::string& v : free_vars(*f)) {
    auto it = g.find(v);
    if (it == g.end()) throw AssignmentError("assignment does not bind free variable '" + v + "'");
    out = substitute(out, v, ElementRef{it->second});
  }
  return out;
}

Term ground(const Term& t, const Assignment& g) {
  Term out = t;
  for (const std::string& v : free_vars(t)) {
    auto it = g.find(v);
    if (it == g.end()) throw AssignmentError("assignment does not bind free variable '" + v + "'");
    out = substitute(out, v, ElementRef{it->second});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Printing

std::string to_string(const VarTuple& vars) {
  std::string out = "(";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ",";
    out += vars[i];
  }
  return out + ")";
}

namespace {

std::string join_vars(const VarTuple& vars) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ",";
    out += vars[i];
  }
  return out;
}

}  // namespace

std::string to_string(const Term& t) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Variable>) {
          return n.name;
        } else if constexpr (std::is_same_v<T, Constant>) {
          return n.name;
        } else if constexpr (std::is_same_v<T, ElementRef>) {
          return "#" + n.element.to_string();
        } else {
          std::string out = "<< " + to_string(*n.body) + " >>_{" + join_vars(n.alpha) + "}";
          if (!n.beta.empty()) out += "^{" + join_vars(n.beta) + "}";
          return out;
        }
      },
      t);
}

std::string to_string(const Formula& f) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Atom>) {
          if (n.predicate == truth_predicate()) return "true";
          if (n.predicate == identity_predicate()) {
            return to_string(n.args[0]) + " == " + to_string(n.args[1]);
          }
          if (n.args.empty()) return n.predicate.name;
          std::string out = n.predicate.name + "(";
          for (std::size_t i = 0; i < n.args.size(); ++i) {
            if (i) out += ", ";
            out += to_string(n.args[i]);
          }
          return out + ")";
        } else if constexpr (std::is_same_v<T, Conj>) {
          return "(" + to_string(*n.left) + " & " + to_string(*n.right) + ")";
        } else if constexpr (std::is_same_v<T, Neg>) {
          return "~" + to_string(*n.sub);
        } else if constexpr (std::is_same_v<T, Box>) {
          return "[]" + to_string(*n.sub);
        } else {
          return "(exists " + n.var + " . " + to_string(*n.sub) + ")";
        }
      },
      f.node);
}

namespace {

void dump(const Formula& f, int depth, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Atom>) {
          os << pad << "Atom " << to_string(f) << '\n';
        } else if constexpr (std::is_same_v<T, Conj>) {
          os << pad << "Conj\n";
          dump(*n.left, depth + 1, os);
          dump(*n.right, depth + 1, os);
        } else if constexpr (std::is_same_v<T, Neg>) {
          os << pad << "Neg\n";
          dump(*n.sub, depth + 1, os);
        } else if constexpr (std::is_same_v<T, Box>) {
          os << pad << "Box\n";
          dump(*n.sub, depth + 1, os);
        } else {
          os << pad << "Exists " << n.var << '\n';
          dump(*n.sub, depth + 1, os);
        }
      },
      f.node);
}

void collect_abs(const Formula& f, std::vector<Abstraction>& out);

void collect_abs(const Term& t, std::vector<Abstraction>& out) {
  if (const auto* a = std::get_if<Abstraction>(&t)) {
    out.push_back(*a);
    collect_abs(*a->body, out);
  }
}

void collect_abs(const Formula& f, std::vector<Abstraction>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Atom>) {
          for (const Term& t : n.args) collect_abs(t, out);
        } else if constexpr (std::is_same_v<T, Conj>) {
          collect_abs(*n.left, out);
          collect_abs(*n.right, out);
        } else {
          collect_abs(*n.sub, out);
        }
      },
      f.node);
}

}  // namespace

std::string dump_tree(const Formula& f) {
  std::ostringstream os;
  dump(f, 0, os);
  return os.str();
}

std::vector<Abstraction> collect_abstractions(const Formula& f) {
  std::vector<Abstraction> out;
  collect_abs(f, out);
  return out;
}

}  // namespace ifol
