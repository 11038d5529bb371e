#include <gtest/gtest.h>

#include "ifol/error.hpp"
#include "ifol/relalg.hpp"
#include "support.hpp"

namespace ifol {
namespace {

using test::dom;
using test::el;
using test::rel;
using test::tup;

TEST(DomainElement, CanonicalOrder) {
  const DomainElement empty;
  const DomainElement a = el("a"), b = el("b");
  const DomainElement c0 = DomainElement::concept_handle(0), c7 = DomainElement::concept_handle(7);
  EXPECT_LT(empty, a);
  EXPECT_LT(a, b);
  EXPECT_LT(b, c0);
  EXPECT_LT(c0, c7);
  EXPECT_EQ(empty.to_string(), "<>");
  EXPECT_EQ(c7.to_string(), "@7");
  EXPECT_EQ(a.to_string(), "a");
}

TEST(Relation, ZeroAryRelationsAreFalsityAndTruth) {
  EXPECT_TRUE(Relation::truth().is_truth());
  EXPECT_FALSE(Relation::falsity().is_truth());
  EXPECT_EQ(Relation::truth().size(), 1u);
  EXPECT_EQ(Relation::falsity().size(), 0u);
}

TEST(Relation, RejectsWrongTupleLengthAndBadLabels) {
  Relation r(2);
  EXPECT_THROW(r.insert(tup({"a"})), Error);
  EXPECT_THROW(Relation(2, VarTuple{"x"}), Error);
  EXPECT_THROW(Relation(2, VarTuple{"x", "x"}), Error);
}

TEST(NaturalJoin, AttributeOrderingOfTheFiveFourExample) {
  Relation r1(5, VarTuple{"x_i", "x_j", "x_k", "x_l", "x_m"});
  Relation r2(4, VarTuple{"x_l", "y_i", "x_j", "y_j"});
  const Relation j = natural_join(r1, r2, {{4, 1}, {2, 3}});
  ASSERT_TRUE(j.attrs().has_value());
  EXPECT_EQ(*j.attrs(), (VarTuple{"x_i", "x_j", "x_k", "x_l", "x_m", "y_i", "y_j"}));
  EXPECT_EQ(j.arity(), 7u);
}

TEST(NaturalJoin, TruthIsTheUnitOfTheCartesianProduct) {
  const Relation r = rel(2, {{"a", "b"}, {"b", "b"}});
  const Relation j = natural_join(Relation::truth(), r, {});
  EXPECT_EQ(j.arity(), 2u);
  EXPECT_EQ(j.tuples(), r.tuples());
}

TEST(NaturalJoin, SharedColumnKeepsMatches) {
  // frozen from the nested-loop oracle: only b is in both
  const Relation r1 = rel(1, {{"a"}, {"b"}});
  const Relation r2 = rel(1, {{"b"}, {"c"}});
  const std::set<Tuple> expected{tup({"b"})};
  EXPECT_EQ(test::oracle_join(r1, r2, {{1, 1}}), expected);
  EXPECT_EQ(natural_join(r1, r2, {{1, 1}}).tuples(), expected);
}

TEST(NaturalJoin, InvalidPairsDegradeToCartesianProduct) {
  const Relation r1 = rel(1, {{"a"}, {"b"}});
  const Relation r2 = rel(1, {{"c"}});
  for (const ColumnPairs& s : {ColumnPairs{}, ColumnPairs{{2, 1}}, ColumnPairs{{1, 3}}, ColumnPairs{{0, 1}}}) {
    const Relation j = natural_join(r1, r2, s);
    EXPECT_EQ(j.arity(), 2u);
    EXPECT_EQ(j.tuples(), (std::set<Tuple>{tup({"a", "c"}), tup({"b", "c"})}));
  }
  EXPECT_FALSE(join_pairs_valid({{1, 1}, {2, 1}}, 2, 1));
  EXPECT_EQ(joined_arity({{1, 1}, {2, 1}}, 2, 1), 3u);
}

TEST(Complement, Examples) {
  const auto d = dom({"a", "b"});
  EXPECT_TRUE(complement(Relation::truth(), d).empty());
  EXPECT_TRUE(complement(Relation::falsity(), d).is_truth());
  EXPECT_EQ(complement(rel(1, {{"a"}}), d).tuples(), (std::set<Tuple>{tup({"b"})}));
  const Relation all = complement(Relation(2), d);
  EXPECT_EQ(all.size(), 4u);
  EXPECT_EQ(all.tuples(), test::oracle_complement(Relation(2), d));
}

TEST(Complement, KeepsLabelsAndRejectsForeignElements) {
  const auto d = dom({"a", "b"});
  EXPECT_EQ(complement(rel(1, {{"a"}}, {"x"}), d).attrs(), VarTuple{"x"});
  EXPECT_THROW(complement(rel(1, {{"z"}}), d), DomainError);
}

TEST(ProjectOut, Examples) {
  Relation r(5, VarTuple{"x_i", "x_j", "x_k", "x_l", "x_m"});
  r.insert(tup({"a", "b", "a", "b", "a"}));
  const Relation p = project_out(r, 3);
  EXPECT_EQ(*p.attrs(), (VarTuple{"x_i", "x_j", "x_l", "x_m"}));
  EXPECT_EQ(p.tuples(), (std::set<Tuple>{tup({"a", "b", "b", "a"})}));

  EXPECT_TRUE(project_out(rel(1, {{"a"}, {"b"}}), 1).is_truth());
  EXPECT_TRUE(project_out(Relation(1), 1).empty());
  EXPECT_EQ(project_out(project_out(Relation(1), 1), 1).arity(), 0u);

  const Relation two = rel(2, {{"a", "b"}});
  EXPECT_EQ(project_out(two, 5), two);
  EXPECT_EQ(project_out(two, 0), two);
}

TEST(ProjectOut, CollapsesDuplicates) {
  const Relation r = rel(2, {{"a", "a"}, {"a", "b"}});
  EXPECT_EQ(project_out(r, 2).tuples(), (std::set<Tuple>{tup({"a"})}));
}

TEST(FTruth, Examples) {
  EXPECT_TRUE(f_truth(Relation(2)).empty());
  EXPECT_EQ(f_truth(Relation(2)).arity(), 0u);
  EXPECT_TRUE(f_truth(rel(2, {{"a", "b"}})).is_truth());
  EXPECT_TRUE(f_truth(Relation::truth()).is_truth());
}

TEST(ProjectOutMany, Examples) {
  const Relation r = rel(2, {{"a", "b"}, {"b", "b"}}, {"x", "y"});
  const VarTuple y{"y"};
  const Relation p = project_out_many(r, y);
  EXPECT_EQ(*p.attrs(), VarTuple{"x"});
  EXPECT_EQ(p.tuples(), (std::set<Tuple>{tup({"a"}), tup({"b"})}));

  EXPECT_EQ(project_out_many(r, VarTuple{}), r);

  const VarTuple x{"x"};
  EXPECT_TRUE(project_out_many(rel(1, {{"a"}}, {"x"}), x).is_truth());
  EXPECT_THROW(project_out_many(r, VarTuple{"z"}), Error);
  EXPECT_THROW(project_out_many(rel(1, {{"a"}}), x), Error);
}

TEST(IdentityRelation, Examples) {
  EXPECT_EQ(identity_relation(dom({"a"})).tuples(), (std::set<Tuple>{tup({"a", "a"})}));
  EXPECT_EQ(identity_relation(dom({"a", "b"})).tuples(),
            (std::set<Tuple>{tup({"a", "a"}), tup({"b", "b"})}));
  EXPECT_TRUE(identity_relation(std::vector<DomainElement>{}).empty());
  EXPECT_EQ(identity_relation(std::vector<DomainElement>{}).arity(), 2u);
}

TEST(RelEquiv, Examples) {
  const Relation r1 = rel(2, {{"a", "b"}}, {"x", "y"});
  EXPECT_TRUE(rel_equiv(r1, rel(2, {{"b", "a"}}, {"y", "x"})));
  EXPECT_TRUE(rel_equiv(r1, r1));
  EXPECT_FALSE(rel_equiv(r1, rel(2, {{"a", "b"}}, {"y", "x"})));
  EXPECT_THROW(rel_equiv(r1, rel(2, {{"a", "b"}}, {"x", "z"})), Error);
}

TEST(RelationText, FormatAndParseRoundTrip) {
  const Relation r = rel(2, {{"a", "b"}, {"b", "b"}}, {"x", "y"});
  EXPECT_EQ(format_relation(r), "rel 2 x y\na b\nb b\n");
  EXPECT_EQ(parse_relation(format_relation(r)), r);
  EXPECT_EQ(format_relation(Relation::truth()), "rel 0\n()\n");
  EXPECT_EQ(parse_relation("rel 0\n()\n"), Relation::truth());
  EXPECT_EQ(parse_relation("rel 0\n"), Relation::falsity());
  Relation h(1);
  h.insert({DomainElement::concept_handle(3)});
  EXPECT_EQ(parse_relation(format_relation(h)), h);
}

TEST(AllTuples, CanonicalOrder) {
  const auto d = dom({"b", "a"});
  const std::vector<Tuple> t = all_tuples(dom({"a", "b"}), 2);
  EXPECT_EQ(t, (std::vector<Tuple>{tup({"a", "a"}), tup({"a", "b"}), tup({"b", "a"}), tup({"b", "b"})}));
  EXPECT_EQ(all_tuples(d, 0), std::vector<Tuple>{Tuple{}});
}

// Exhaustive laws over every relation on D = {a, b} up to arity 2.

class RelalgLaws : public ::testing::Test {
 protected:
  const std::vector<DomainElement> d = dom({"a", "b"});
  std::vector<Relation> of_arity(std::size_t k) const { return test::oracle_all_relations(d, k); }
};

TEST_F(RelalgLaws, ComplementIsAnInvolution) {
  for (std::size_t k = 0; k <= 2; ++k) {
    for (const Relation& r : of_arity(k)) {
      EXPECT_EQ(complement(complement(r, d), d), r);
      EXPECT_EQ(complement(r, d).tuples(), test::oracle_complement(r, d));
    }
  }
}

TEST_F(RelalgLaws, JoinMatchesOracleAndArityLaw) {
  for (std::size_t k = 0; k <= 2; ++k) {
    for (std::size_t j = 0; j <= 2; ++j) {
      std::vector<ColumnPairs> pair_sets{{}};
      for (std::size_t a = 1; a <= k; ++a) {
        for (std::size_t b = 1; b <= j; ++b) pair_sets.push_back({{a, b}});
      }
      if (k == 2 && j == 2) {
        pair_sets.push_back({{1, 1}, {2, 2}});
        pair_sets.push_back({{1, 2}, {2, 1}});
      }
      for (const ColumnPairs& s : pair_sets) {
        const std::size_t expected_arity = s.empty() ? k + j : k + j - s.size();
        for (const Relation& r1 : of_arity(k)) {
          for (const Relation& r2 : of_arity(j)) {
            const Relation out = natural_join(r1, r2, s);
            ASSERT_EQ(out.arity(), expected_arity);
            ASSERT_EQ(out.tuples(), test::oracle_join(r1, r2, s));
          }
        }
      }
    }
  }
}

TEST_F(RelalgLaws, SelfJoinOnAllColumnsReproducesTheRelation) {
  for (const Relation& r : of_arity(2)) {
    EXPECT_EQ(natural_join(r, r, {{1, 1}, {2, 2}}).tuples(), r.tuples());
  }
}

TEST_F(RelalgLaws, FTruthIsIdempotent) {
  for (std::size_t k = 0; k <= 2; ++k) {
    for (const Relation& r : of_arity(k)) {
      EXPECT_EQ(f_truth(f_truth(r)), f_truth(r));
      EXPECT_EQ(f_truth(r).is_truth(), !r.empty());
    }
  }
}

TEST_F(RelalgLaws, ProjectOutCommutes) {
  for (const Relation& raw : of_arity(2)) {
    const Relation r = raw.with_attrs({"y1", "y2"});
    const VarTuple both{"y1", "y2"}, reversed{"y2", "y1"};
    const Relation by_name = project_out_many(r, both);
    EXPECT_EQ(by_name, project_out_many(r, reversed));
    // index-adjusted sequential removal in either order
    EXPECT_EQ(by_name.tuples(), project_out(project_out(r, 1), 1).tuples());
    EXPECT_EQ(by_name.tuples(), project_out(project_out(r, 2), 1).tuples());
  }
}

}  // namespace
}  // namespace ifol
