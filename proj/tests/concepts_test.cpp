#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "ifol/error.hpp"
#include "support.hpp"

namespace ifol {
namespace {

using test::el;
using test::pred;

class Concepts : public ::testing::Test {
 protected:
  // An atom p/k over fresh slots _1.._k.
  Concept open_atom(const std::string& name, std::size_t k) {
    std::vector<AtomArg> args;
    for (std::size_t i = 1; i <= k; ++i) args.emplace_back(Slot{i});
    return reg.atom(pred(name, k), std::move(args));
  }

  ConceptRegistry reg;
};

TEST_F(Concepts, DistinctPredicatesGiveDistinctConcepts) {
  const Concept u = open_atom("p1", 1);
  const Concept v = open_atom("p2", 1);
  EXPECT_NE(u.id(), v.id());
  EXPECT_FALSE(u == v);
  EXPECT_EQ(u, open_atom("p1", 1));
}

TEST_F(Concepts, BuiltinAtoms) {
  EXPECT_EQ(reg.atom(identity_predicate(), {Slot{1}, Slot{2}}), reg.identity());
  EXPECT_EQ(reg.identity().degree(), 2u);
  EXPECT_EQ(reg.atom(truth_predicate(), {}), reg.truth());
  EXPECT_EQ(reg.truth().degree(), 0u);
  // x == x is a one-slot atom, not Id
  EXPECT_EQ(reg.atom(identity_predicate(), {Slot{1}, Slot{1}}).degree(), 1u);
}

TEST_F(Concepts, AtomDegreeCountsDistinctSlots) {
  EXPECT_EQ(reg.atom(pred("p", 2), {el("a"), el("b")}).degree(), 0u);
  EXPECT_EQ(reg.atom(pred("p", 3), {Slot{1}, el("a"), Slot{1}}).degree(), 1u);
  EXPECT_EQ(reg.atom(pred("p", 3), {Slot{1}, Slot{2}, Slot{1}}).degree(), 2u);
  EXPECT_THROW(reg.atom(pred("p", 2), {Slot{1}}), ArityError);
  EXPECT_THROW(reg.atom(pred("p", 2), {Slot{2}, Slot{1}}), Error);
}

TEST_F(Concepts, ConjDegrees) {
  const Concept u = open_atom("p", 5);
  const Concept v = open_atom("q", 4);
  EXPECT_EQ(reg.conj({{4, 1}, {2, 3}}, u, v).degree(), 7u);
  EXPECT_EQ(reg.conj({}, reg.truth(), reg.neg(reg.truth())).degree(), 0u);
  EXPECT_EQ(reg.conj({{1, 1}}, open_atom("p1", 1), open_atom("p2", 1)).degree(), 1u);
  // out-of-range pairs fall back to the cartesian product
  EXPECT_EQ(reg.conj({{6, 1}}, u, v).degree(), 9u);
}

TEST_F(Concepts, NegAndExistsDegrees) {
  const Concept u = open_atom("p", 5);
  EXPECT_EQ(reg.neg(u).degree(), 5u);
  EXPECT_EQ(reg.neg(reg.neg(u)), u);
  EXPECT_EQ(reg.neg(reg.truth()).degree(), 0u);
  EXPECT_EQ(reg.exists(3, u).degree(), 4u);
  EXPECT_EQ(reg.exists(0, u), u);
  EXPECT_EQ(reg.exists(6, u), u);
  EXPECT_EQ(reg.exists(1, open_atom("p", 1)).degree(), 0u);
}

TEST_F(Concepts, UnionShapes) {
  const Concept u = open_atom("p1", 1);
  const Concept v = open_atom("p2", 1);
  EXPECT_EQ(reg.union_of({u}), u);
  EXPECT_EQ(reg.union_of({u, u}), u);
  EXPECT_EQ(reg.union_of({u, v}), reg.union_of({v, u}));
  EXPECT_EQ(reg.union_of({u, v}).degree(), 1u);
  EXPECT_THROW(reg.union_of({}), Error);
  EXPECT_THROW(reg.union_of({u, open_atom("q", 2)}), ArityError);
}

TEST_F(Concepts, NoCommutativityCollapse) {
  const Concept u = open_atom("p1", 1);
  const Concept v = open_atom("p2", 1);
  EXPECT_NE(reg.conj({{1, 1}}, u, v), reg.conj({{1, 1}}, v, u));
}

TEST_F(Concepts, SexprAndLookup) {
  const Concept c = reg.conj({{1, 1}}, open_atom("p1", 1), reg.neg(open_atom("p2", 1)));
  EXPECT_EQ(to_sexpr(c), "(conj {(1,1)} (atom p1/1 _1) (neg (atom p2/1 _1)))");
  EXPECT_EQ(reg.by_id(c.id()), c);
  EXPECT_EQ(to_sexpr(reg.necess(reg.truth())), "(necess Truth)");
  EXPECT_THROW(reg.by_id(100000), DomainError);
}

// Random concept trees with an independently tracked expected degree.

struct Built {
  Concept value;
  std::size_t expected_degree;
};

bool pairs_valid_oracle(const ColumnPairs& s, std::size_t k, std::size_t j) {
  if (s.empty()) return false;
  std::set<std::size_t> right;
  for (const auto& [a, b] : s) {
    if (a < 1 || a > k || b < 1 || b > j || !right.insert(b).second) return false;
  }
  return true;
}

Built random_concept(ConceptRegistry& reg, std::mt19937_64& rng, int depth) {
  auto below = [&](std::uint64_t n) { return static_cast<std::size_t>(rng() % n); };
  if (depth == 0 || below(4) == 0) {
    switch (below(5)) {
      case 0:
        return {reg.atom(pred("p", 1), {Slot{1}}), 1};
      case 1:
        return {reg.atom(pred("q", 2), {Slot{1}, Slot{2}}), 2};
      case 2:
        return {reg.atom(pred("q", 2), {Slot{1}, Slot{1}}), 1};
      case 3:
        return {reg.atom(pred("q", 2), {el("a"), Slot{1}}), 1};
      default:
        return {reg.atom(pred("p", 1), {el("b")}), 0};
    }
  }
  switch (below(4)) {
    case 0: {
      Built u = random_concept(reg, rng, depth - 1);
      Built v = random_concept(reg, rng, depth - 1);
      ColumnPairs s;
      const std::size_t n = below(3);
      for (std::size_t i = 0; i < n; ++i) s.insert({below(4), below(4)});
      const std::size_t d = u.expected_degree + v.expected_degree -
                            (pairs_valid_oracle(s, u.expected_degree, v.expected_degree) ? s.size() : 0);
      return {reg.conj(s, u.value, v.value), d};
    }
    case 1: {
      Built u = random_concept(reg, rng, depth - 1);
      return {reg.neg(u.value), u.expected_degree};
    }
    case 2: {
      Built u = random_concept(reg, rng, depth - 1);
      const std::size_t n = below(4);
      const bool in_range = n >= 1 && n <= u.expected_degree;
      return {reg.exists(n, u.value), in_range ? u.expected_degree - 1 : u.expected_degree};
    }
    default: {
      Built u = random_concept(reg, rng, depth - 1);
      return {reg.necess(u.value), u.expected_degree};
    }
  }
}

TEST(ConceptProperties, DegreeArithmetic) {
  ConceptRegistry reg;
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 2000; ++i) {
    const Built b = random_concept(reg, rng, 5);
    ASSERT_EQ(b.value.degree(), b.expected_degree) << to_sexpr(b.value);
  }
}

TEST(ConceptProperties, InternSoundness) {
  ConceptRegistry reg;
  std::vector<Concept> pool;
  {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 400; ++i) pool.push_back(random_concept(reg, rng, 4).value);
  }
  // Rebuilding from the same seed yields the very same handles.
  std::mt19937_64 rng(5);
  for (int i = 0; i < 400; ++i) ASSERT_EQ(random_concept(reg, rng, 4).value, pool[i]);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      ASSERT_EQ(to_sexpr(pool[i]) == to_sexpr(pool[j]), pool[i] == pool[j]);
    }
  }
}

TEST(ConceptProperties, ConcurrentInterningAgrees) {
  ConceptRegistry reg;
  constexpr int kThreads = 8;
  std::vector<std::vector<std::uint32_t>> ids(kThreads);
  std::vector<std::thread> pool;
  for (int t = 0; t < kThreads; ++t) {
    pool.emplace_back([&, t] {
      std::mt19937_64 rng(77);
      for (int i = 0; i < 300; ++i) ids[t].push_back(random_concept(reg, rng, 4).value.id());
    });
  }
  for (std::thread& th : pool) th.join();
  for (int t = 1; t < kThreads; ++t) EXPECT_EQ(ids[t], ids[0]);
}

TEST(ConceptProperties, UnionExtensionLaws) {
  ConceptRegistry reg;
  const WorldSet& ws = test::sweep_worlds();
  std::mt19937_64 rng(31);
  int checked = 0;
  while (checked < 60) {
    std::vector<Concept> a;
    std::vector<Concept> b;
    const std::size_t degree = 1 + rng() % 2;
    for (int i = 0; i < 40 && (a.size() < 2 || b.size() < 2); ++i) {
      const Built c = random_concept(reg, rng, 3);
      if (c.expected_degree != degree) continue;
      (a.size() <= b.size() ? a : b).push_back(c.value);
    }
    if (a.empty() || b.empty()) continue;
    ++checked;
    std::vector<Concept> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    const Concept ua = reg.union_of(a);
    const Concept ub = reg.union_of(b);
    const Concept uab = reg.union_of(ab);
    const Concept expanded = reg.union_expansion(ab);
    WorldContexts contexts(reg, ws);
    for (std::size_t i = 0; i < ws.size(); ++i) {
      EvalContext& ctx = contexts[i];
      std::set<Tuple> plain;
      for (Concept c : ab) {
        const Relation r = ctx.extension(c);
        plain.insert(r.tuples().begin(), r.tuples().end());
      }
      ASSERT_EQ(ctx.extension(uab).tuples(), plain);
      ASSERT_EQ(ctx.extension(expanded).tuples(), plain);
      ASSERT_EQ(set_union(ctx.extension(ua), ctx.extension(ub)).tuples(), plain);
    }
  }
}

TEST(ConceptExamples, UnionOfTwoUnaryConcepts) {
  ConceptRegistry reg;
  const World w = test::make_world("w", test::dom({"a", "b"}),
                                   {{pred("p1", 1), test::rel(1, {{"a"}})},
                                    {pred("p2", 1), test::rel(1, {{"b"}})}});
  const Concept u1 = reg.atom(pred("p1", 1), {Slot{1}});
  const Concept u2 = reg.atom(pred("p2", 1), {Slot{1}});
  const Relation want = test::rel(1, {{"a"}, {"b"}});
  EXPECT_EQ(extensionalize(reg.union_expansion({u1, u2}), w, reg).tuples(), want.tuples());
  EXPECT_EQ(extensionalize(reg.union_of({u1, u2}), w, reg).tuples(), want.tuples());
}

}  // namespace
}  // namespace ifol
