#include <gtest/gtest.h>

#include "ifol/error.hpp"
#include "ifol/io.hpp"
#include "support.hpp"

namespace ifol {
namespace {

using test::dom;
using test::el;
using test::pred;
using test::rel;

std::string error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST(WorldFile, ParsesDirectives) {
  ConceptRegistry reg;
  const World w = parse_world(
      "# a comment line\n"
      "domain a b   # trailing comment\n"
      "const c = a\n"
      "rel p/1 = (a)\n"
      "rel q/2 = (a,b) (b, b)\n"
      "rel r/0 = ()\n"
      "rel s/0 =\n",
      reg, nullptr, "home");
  EXPECT_EQ(w.name(), "home");
  EXPECT_EQ(w.domain(), dom({"a", "b"}));
  EXPECT_EQ(w.constant("c"), el("a"));
  EXPECT_EQ(w.relation(pred("q", 2)).tuples(), rel(2, {{"a", "b"}, {"b", "b"}}).tuples());
  EXPECT_EQ(w.relation(pred("r", 0)), Relation::truth());
  EXPECT_EQ(w.relation(pred("s", 0)), Relation::falsity());
}

TEST(WorldFile, ReifiedTermsJoinTheDomain) {
  ConceptRegistry reg;
  const World w = parse_world(
      "domain a b\n"
      "reify k = << q(x,#b) >>_{x}\n"
      "rel q/2 = (a,b)\n"
      "rel p/1 = (k)\n",
      reg);
  ASSERT_EQ(w.domain().size(), 3u);
  const DomainElement k = w.domain().back();
  ASSERT_TRUE(k.is_concept());
  EXPECT_EQ(to_sexpr(reg.by_id(k.concept_id())), "(atom q/2 _1 b)");
  EXPECT_TRUE(w.relation(pred("p", 1)).contains({k}));

  // the same handle can be written back as @id
  const World again = parse_world(format_world(w), reg, nullptr, "w");
  EXPECT_EQ(again.domain(), w.domain());
  EXPECT_EQ(again.relations(), w.relations());

  EXPECT_NE(error_of([&] { parse_world("domain a\nreify k = << q(x,y) >>_{x}\n", reg); }).find("beta"),
            std::string::npos);
}

TEST(WorldFile, ErrorsNameTheLine) {
  ConceptRegistry reg;
  EXPECT_EQ(error_of([&] { parse_world("domain a\nrel p/1 = (b)\n", reg); }),
            "world file line 2: unknown element 'b'");
  EXPECT_EQ(error_of([&] { parse_world("domain a\nrel p/2 = (a)\n", reg); }),
            "world file line 2: tuple of length 1 for p/2");
  EXPECT_NE(error_of([&] { parse_world("rel p/1 = (a)\n", reg); }).find("line 1"), std::string::npos);
  EXPECT_NE(error_of([&] { parse_world("domain a\nrel ==/2 = (a,a)\n", reg); }).find("built in"),
            std::string::npos);
  EXPECT_NE(error_of([&] { parse_world("domain a\nfrob x\n", reg); }).find("unknown directive"),
            std::string::npos);
  EXPECT_NE(error_of([&] { parse_world("domain a\nrel p/1 = (a)\nrel p/1 = (a)\n", reg); }).find("twice"),
            std::string::npos);
  EXPECT_NE(error_of([&] { parse_world("# nothing\n", reg); }).find("missing 'domain'"), std::string::npos);
  EXPECT_NE(error_of([&] { parse_world("domain a\nrel p/x = (a)\n", reg); }).find("bad arity"), std::string::npos);
}

TEST(WorldFile, SignatureChecksAndDefaults) {
  ConceptRegistry reg;
  const Signature sig = test::sweep_signature();
  const World w = parse_world("domain a b\nconst c = b\nrel p/1 = (b)\n", reg, &sig);
  EXPECT_TRUE(w.relation(pred("q", 2)).empty());
  EXPECT_NE(error_of([&] { parse_world("domain a\nrel r/1 = (a)\n", reg, &sig); }).find("not declared"),
            std::string::npos);
  EXPECT_NE(error_of([&] { parse_world("domain a\nconst d = a\n", reg, &sig); }).find("not declared"),
            std::string::npos);
}

TEST(WorldFile, LoadUsesTheFileStem) {
  ConceptRegistry reg;
  const World w = load_world(test::data_path("worlds/pq.world"), reg);
  EXPECT_EQ(w.name(), "pq");
  EXPECT_EQ(w.relation(pred("q", 2)).tuples(), rel(2, {{"a", "b"}, {"b", "b"}}).tuples());
  const Signature sig = signature_of(w);
  EXPECT_TRUE(sig.has_predicate("p", 1));
  EXPECT_TRUE(sig.has_predicate("q", 2));
  EXPECT_FALSE(sig.has_predicate("==", 2));
  EXPECT_TRUE(sig.is_constant("c"));
  EXPECT_THROW(load_world(test::data_path("worlds/missing.world"), reg), Error);
}

TEST(WorldSetFile, ParsesBlocks) {
  ConceptRegistry reg;
  const WorldSet ws = load_world_set(test::data_path("worlds/bought_sold.worlds"), reg);
  ASSERT_EQ(ws.size(), 3u);
  EXPECT_EQ(ws[1].name(), "w2");
  EXPECT_EQ(ws[1].relation(pred("sold", 1)).tuples(), rel(1, {{"bob"}, {"cid"}}).tuples());
  EXPECT_TRUE(ws[2].relation(pred("bought", 1)).empty());
  EXPECT_EQ(ws.domain(), dom({"ann", "bob", "cid"}));
}

TEST(WorldSetFile, Errors) {
  ConceptRegistry reg;
  EXPECT_NE(error_of([&] { parse_world_set("domain a\nworld w\n", reg); }).find("start with 'worlds'"),
            std::string::npos);
  EXPECT_NE(error_of([&] { parse_world_set("worlds\ndomain a\nworld w\ndomain a b\n", reg); })
                .find("domain differs from the shared domain"),
            std::string::npos);
  EXPECT_NO_THROW(parse_world_set("worlds\ndomain a b\nworld w\ndomain b a\n", reg));
  EXPECT_NE(error_of([&] { parse_world_set("worlds\ndomain a\nworld w\nconst c = a\n", reg); })
                .find("shared preamble"),
            std::string::npos);
  EXPECT_NE(error_of([&] { parse_world_set("worlds\ndomain a\nrel p/1 = (a)\n", reg); }).find("inside a 'world'"),
            std::string::npos);
  EXPECT_NE(error_of([&] { parse_world_set("worlds\ndomain a\n", reg); }).find("no worlds"), std::string::npos);
  EXPECT_THROW(parse_world_set("worlds\ndomain a\nworld w\nworld w\n", reg), Error);
}

TEST(WorldSetFile, FormatRoundTripsTheEnumeration) {
  ConceptRegistry reg;
  const WorldSet& ws = test::sweep_worlds();
  const std::string text = format_world_set(ws);
  const WorldSet back = parse_world_set(text, reg);
  ASSERT_EQ(back.size(), ws.size());
  for (std::size_t i = 0; i < ws.size(); ++i) {
    EXPECT_EQ(back[i].name(), ws[i].name());
    EXPECT_EQ(back[i].relations(), ws[i].relations());
    EXPECT_EQ(back[i].constants(), ws[i].constants());
  }
  EXPECT_EQ(format_world_set(back), text);
}

}  // namespace
}  // namespace ifol
