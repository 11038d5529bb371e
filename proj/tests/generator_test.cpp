#include <gtest/gtest.h>

#include "ifol/generator.hpp"
#include "support.hpp"

namespace ifol {
namespace {

std::vector<std::string> texts(const std::vector<FormulaPtr>& fs) {
  std::vector<std::string> out;
  for (const FormulaPtr& f : fs) out.push_back(to_string(*f));
  return out;
}

bool has_box(const Formula& f) {
  return std::visit(
      [](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Box>) {
          return true;
        } else if constexpr (std::is_same_v<T, Conj>) {
          return has_box(*n.left) || has_box(*n.right);
        } else if constexpr (std::is_same_v<T, Neg> || std::is_same_v<T, Exists>) {
          return has_box(*n.sub);
        } else {
          return false;
        }
      },
      f.node);
}

TEST(Generator, SameSeedSameFormulas) {
  const Signature sig = test::sweep_signature();
  GeneratorOptions o;
  EXPECT_EQ(texts(random_formulas(sig, o, 11, 200)), texts(random_formulas(sig, o, 11, 200)));
  EXPECT_NE(texts(random_formulas(sig, o, 11, 50)), texts(random_formulas(sig, o, 12, 50)));

  FormulaGenerator g(sig, o, 11);
  const auto batch = texts(random_formulas(sig, o, 11, 3));
  EXPECT_EQ(to_string(*g.next()), batch[0]);
  EXPECT_EQ(to_string(*g.next()), batch[1]);
}

TEST(Generator, StaysInsideTheRequestedVocabulary) {
  const Signature sig = test::sweep_signature();
  GeneratorOptions o;
  o.elements = {"a", "b"};
  std::size_t abstractions = 0;
  for (const FormulaPtr& f : random_formulas(sig, o, 3, 1000)) {
    for (const std::string& v : free_vars(*f)) {
      ASSERT_TRUE(v == "x" || v == "y" || v == "z") << to_string(*f);
    }
    ASSERT_FALSE(has_box(*f));
    // well-formed over the signature: printing and reparsing succeeds
    ASSERT_NO_THROW(parse_formula(to_string(*f), sig)) << to_string(*f);
    abstractions += collect_abstractions(*f).size();
  }
  EXPECT_GT(abstractions, 0u);
}

TEST(Generator, ZeroProbabilityMeansNoAbstractions) {
  GeneratorOptions o;
  o.abstraction_prob = 0;
  for (const FormulaPtr& f : random_formulas(test::sweep_signature(), o, 5, 500)) {
    ASSERT_TRUE(collect_abstractions(*f).empty()) << to_string(*f);
  }
}

TEST(Generator, ModalOptionProducesBoxes) {
  GeneratorOptions o;
  o.modal = true;
  std::size_t boxed = 0;
  for (const FormulaPtr& f : random_formulas(test::sweep_signature(), o, 5, 300)) boxed += has_box(*f);
  EXPECT_GT(boxed, 0u);
}

TEST(Generator, RespectsPredicateSubset) {
  GeneratorOptions o;
  o.predicates = {PredicateSymbol{"p", 1}};
  o.abstraction_prob = 0;
  for (const FormulaPtr& f : random_formulas(test::sweep_signature(), o, 9, 200)) {
    ASSERT_EQ(to_string(*f).find("q("), std::string::npos) << to_string(*f);
  }
}

}  // namespace
}  // namespace ifol
