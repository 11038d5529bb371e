#include "ifol/worlds.hpp"

#include <algorithm>
#include <memory>
#include <set>

#include "ifol/error.hpp"

namespace ifol {

WorldSet::WorldSet(std::vector<World> worlds) : worlds_(std::move(worlds)) {
  if (worlds_.empty()) throw Error("a world set needs at least one world");
  const World& first = worlds_.front();
  std::set<std::string> names;
  for (const World& w : worlds_) {
    if (!names.insert(w.name()).second) throw Error("duplicate world name '" + w.name() + "'");
    if (w.domain() != first.domain()) {
      throw DomainError("world '" + w.name() + "' has a different domain from '" + first.name() + "'");
    }
    if (w.constants() != first.constants()) {
      throw DomainError("world '" + w.name() + "' interprets constants differently from '" +
                        first.name() + "'");
    }
  }
}

std::optional<std::size_t> WorldSet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < worlds_.size(); ++i) {
    if (worlds_[i].name() == name) return i;
  }
  return std::nullopt;
}

bool WorldSet::contains(const World& w) const {
  for (const World& x : worlds_) {
    if (&x == &w) return true;
  }
  return index_of(w.name()).has_value();
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

std::optional<std::uint64_t> total_bits(const Signature& sig, std::size_t domain_size) {
  std::uint64_t bits = 0;
  for (const PredicateSymbol& p : sig.predicates()) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < p.arity; ++i) {
      n *= domain_size;
      if (n > 64) return std::nullopt;
    }
    bits += n;
    if (bits > 63) return std::nullopt;
  }
  return bits;
}

}  // namespace

std::optional<std::uint64_t> count_worlds(const Signature& sig, std::size_t domain_size) {
  auto bits = total_bits(sig, domain_size);
  if (!bits) return std::nullopt;
  return std::uint64_t{1} << *bits;
}

WorldSet enumerate_worlds(const Signature& sig, std::vector<DomainElement> domain,
                          std::map<std::string, DomainElement> constants, std::uint64_t limit) {
  std::sort(domain.begin(), domain.end());
  domain.erase(std::unique(domain.begin(), domain.end()), domain.end());

  auto count = count_worlds(sig, domain.size());
  if (!count || *count > limit) {
    std::string n = "more than 2^63";
    if (auto bits = total_bits(sig, domain.size())) n = "2^" + std::to_string(*bits);
    else {
      std::uint64_t b = 0;
      for (const PredicateSymbol& p : sig.predicates()) {
        std::uint64_t t = 1;
        for (std::size_t i = 0; i < p.arity && t < (std::uint64_t{1} << 40); ++i) t *= domain.size();
        b += t;
      }
      n = "2^" + std::to_string(b);
    }
    throw LimitError("enumerating " + n + " worlds exceeds the limit of " + std::to_string(limit));
  }

  std::vector<PredicateSymbol> preds(sig.predicates().begin(), sig.predicates().end());
  std::vector<std::vector<Tuple>> tuples;
  for (const PredicateSymbol& p : preds) tuples.push_back(all_tuples(domain, p.arity));

  std::vector<World> worlds;
  worlds.reserve(*count);
  for (std::uint64_t index = 0; index < *count; ++index) {
    std::map<PredicateSymbol, Relation> relations;
    std::uint64_t rest = index;
    for (std::size_t k = preds.size(); k-- > 0;) {
      const std::size_t width = tuples[k].size();
      const std::uint64_t mask = width >= 64 ? rest : rest & ((std::uint64_t{1} << width) - 1);
      rest = width >= 64 ? 0 : rest >> width;
      Relation r(preds[k].arity);
      for (std::size_t bit = 0; bit < width; ++bit) {
        if (mask & (std::uint64_t{1} << bit)) r.insert(tuples[k][bit]);
      }
      relations.emplace(preds[k], std::move(r));
    }
    worlds.emplace_back("w" + std::to_string(index), domain, constants, std::move(relations));
  }
  return WorldSet(std::move(worlds));
}

// ---------------------------------------------------------------------------
// Intensions and modal extensions

Intension montague_intension(const Formula& f, const WorldSet& ws, ConceptRegistry& reg) {
  Intension out{interpret(f, reg), {}};
  const VarTuple fv = free_vars(f);
  WorldContexts contexts(reg, ws);
  for (std::size_t i = 0; i < ws.size(); ++i) {
    out.table.push_back(contexts[i].extension(out.meaning).with_attrs(fv));
  }
  return out;
}

Relation box_extension(Concept u, const WorldSet& ws, ConceptRegistry& reg) {
  return WorldContexts(reg, ws).necessity(u);
}

Relation diamond_extension(Concept u, const WorldSet& ws, ConceptRegistry& reg) {
  Relation out(u.degree());
  WorldContexts contexts(reg, ws);
  for (std::size_t i = 0; i < ws.size(); ++i) out = set_union(out, contexts[i].extension(u));
  return out;
}

// ---------------------------------------------------------------------------
// Kripke satisfaction

namespace {

class Kripke {
 public:
  Kripke(const WorldSet& ws, ConceptRegistry& reg) : ws_(ws), reg_(reg), contexts_(reg, ws) {}

  bool sat(const Formula& f, const Assignment& g, std::size_t w) {
    return std::visit(
        [&](const auto& n) -> bool {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Atom>) {
            // V(w, p)(u1..un) = h(I(p(u1..un)))
            std::vector<Term> args;
            for (const Term& t : n.args) {
              args.emplace_back(ElementRef{assignment_extend(t, g, ws_[w], reg_)});
            }
            FormulaPtr ground_atom = make_atom(n.predicate, std::move(args));
            return contexts_[w].extension(interpret(*ground_atom, reg_)).is_truth();
          } else if constexpr (std::is_same_v<T, Conj>) {
            return sat(*n.left, g, w) && sat(*n.right, g, w);
          } else if constexpr (std::is_same_v<T, Neg>) {
            return !sat(*n.sub, g, w);
          } else if constexpr (std::is_same_v<T, Exists>) {
            const VarTuple fv = free_vars(*n.sub);
            if (std::find(fv.begin(), fv.end(), n.var) == fv.end()) return sat(*n.sub, g, w);
            for (const DomainElement& u : ws_.domain()) {
              if (sat(*substitute(n.sub, n.var, ElementRef{u}), g, w)) return true;
            }
            return false;
          } else {
            for (std::size_t other = 0; other < ws_.size(); ++other) {
              if (!sat(*n.sub, g, other)) return false;
            }
            return true;
          }
        },
        f.node);
  }

 private:
  const WorldSet& ws_;
  ConceptRegistry& reg_;
  WorldContexts contexts_;
};

}  // namespace

bool satisfies(const WorldSet& ws, const World& w, const Assignment& g, const Formula& f,
               ConceptRegistry& reg) {
  std::optional<std::size_t> index;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (&ws[i] == &w) index = i;
  }
  if (!index) index = ws.index_of(w.name());
  if (!index) throw Error("world '" + w.name() + "' is not in the world set");
  for (const std::string& v : free_vars(f)) {
    if (!g.count(v)) throw AssignmentError("assignment does not bind free variable '" + v + "'");
  }
  return Kripke(ws, reg).sat(f, g, *index);
}

// ---------------------------------------------------------------------------
// Intensional equivalence

namespace {

struct Grounded {
  Concept handle;
  VarTuple columns;  // labels, renamed into the first term's alpha names
};

Grounded ground_abstraction(const Abstraction& t, const Assignment& g, const VarTuple& rename_to,
                            ConceptRegistry& reg) {
  (void)make_abstraction(t.body, t.alpha, t.beta);  // throws on a malformed partition
  Tuple values;
  for (const std::string& v : t.beta) {
    auto it = g.find(v);
    if (it == g.end()) throw AssignmentError("assignment does not bind beta variable '" + v + "'");
    values.push_back(it->second);
  }
  FormulaPtr body = substitute_elements(t.body, t.beta, values);
  Grounded out{interpret(*body, reg), {}};
  for (const std::string& v : free_vars(*body)) {
    auto pos = std::find(t.alpha.begin(), t.alpha.end(), v) - t.alpha.begin();
    out.columns.push_back(rename_to[static_cast<std::size_t>(pos)]);
  }
  return out;
}

std::optional<Tuple> first_difference(const Relation& a, const Relation& b) {
  for (const Tuple& t : a.tuples()) {
    if (!b.contains(t)) return t;
  }
  for (const Tuple& t : b.tuples()) {
    if (!a.contains(t)) return t;
  }
  return std::nullopt;
}

std::pair<Grounded, Grounded> ground_pair(const Abstraction& t1, const Abstraction& t2,
                                          const Assignment& g, ConceptRegistry& reg) {
  if (t1.alpha.size() != t2.alpha.size()) {
    throw ArityError("abstractions have alpha lists of different lengths (" +
                     std::to_string(t1.alpha.size()) + " vs " + std::to_string(t2.alpha.size()) + ")");
  }
  Grounded a = ground_abstraction(t1, g, t1.alpha, reg);
  Grounded b = ground_abstraction(t2, g, t1.alpha, reg);
  return {a, b};
}

}  // namespace

EquivalenceResult strong_equiv(const Abstraction& t1, const Abstraction& t2, const Assignment& g,
                               const WorldSet& ws, ConceptRegistry& reg) {
  auto [a, b] = ground_pair(t1, t2, g, reg);
  EquivalenceResult out;
  out.concepts_identical = a.handle == b.handle;
  out.equivalent = true;
  WorldContexts contexts(reg, ws);
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const World& w = ws[i];
    ++out.worlds_checked;
    Relation ra = contexts[i].extension(a.handle).with_attrs(a.columns);
    Relation rb = contexts[i].extension(b.handle).with_attrs(b.columns);
    if (!rel_equiv(ra, rb)) {
      out.equivalent = false;
      out.witness_world = w.name();
      out.witness_tuple = first_difference(ra, permute_to(rb, ra.attrs().value_or(VarTuple{})));
      break;
    }
  }
  return out;
}

EquivalenceResult weak_equiv(const Abstraction& t1, const Abstraction& t2, const Assignment& g,
                             const WorldSet& ws, ConceptRegistry& reg) {
  auto [a, b] = ground_pair(t1, t2, g, reg);
  EquivalenceResult out;
  out.concepts_identical = a.handle == b.handle;
  out.worlds_checked = ws.size();
  Relation ra = diamond_extension(a.handle, ws, reg).with_attrs(a.columns);
  Relation rb = diamond_extension(b.handle, ws, reg).with_attrs(b.columns);
  out.equivalent = rel_equiv(ra, rb);
  if (!out.equivalent) out.witness_tuple = first_difference(ra, permute_to(rb, ra.attrs().value_or(VarTuple{})));
  return out;
}

}  // namespace ifol
