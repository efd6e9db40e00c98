#include <gtest/gtest.h>

#include "mdtree/bijections.hpp"
#include "mdtree/error.hpp"
#include "mdtree/text.hpp"

using namespace mdtree;

namespace {

BalancedPair pair_of(const char* x, const char* y, unsigned k) {
  return BalancedPair(parse_forest(x), parse_forest(y), k);
}

std::string seq_text(const CnkSequence& c) { return to_string(c.forests()); }

const char* kBetaForest = "10(4);15;1(3);13(17);8(18,19);16;12;5(6);7(14(2,9));11";
const char* kGammaSequence = "10(4);13(17)|15|1(3);8(18,19);16|6|11(2);14|9|7|5|12";

}  // namespace

TEST(KGood, Examples) {
  EXPECT_TRUE(is_k_good(parse_forest("10(4);13(17)"), 7));
  EXPECT_TRUE(is_k_good(parse_forest("15"), 7));
  EXPECT_TRUE(is_k_good(parse_forest("13(17)"), 7));
  EXPECT_TRUE(is_k_good(parse_forest("4(10);13(17)"), 7));
}

TEST(KGood, Rejections) {
  EXPECT_FALSE(is_k_good(OrderedForest(), 7));
  EXPECT_FALSE(is_k_good(parse_forest("4(10)"), 7));
  EXPECT_FALSE(is_k_good(parse_forest("10(4);3(17)"), 7));
  EXPECT_FALSE(is_k_good(parse_forest("10;13(17)"), 7));
  EXPECT_FALSE(is_k_good(parse_forest("10(4,5);13(17)"), 7));
  EXPECT_FALSE(is_k_good(parse_forest("10(4);13(17);2(8)"), 7));
  EXPECT_THROW(KGoodForest(parse_forest("4(10)"), 7), ValidationError);
}

TEST(BalancedPairType, Validation) {
  EXPECT_THROW(pair_of("1", "2(1)", 2), ValidationError);
  EXPECT_THROW(pair_of("1", "3", 7), ValidationError);
  EXPECT_THROW(pair_of("3(1)", "", 2), ValidationError);
  EXPECT_NO_THROW(pair_of("3(1)", "4", 2));
  EXPECT_TRUE(BalancedPair::empty(3).is_empty());
}

TEST(FStep, CaseTwoFirstStep) {
  const StepResult r = f_step(pair_of("10(4);15;1(3)", "13(17);8(18,19);16;12;5(6);7(14(2,9));11", 7));
  EXPECT_EQ(to_string(r.atom.forest()), "10(4);13(17)");
  EXPECT_EQ(to_string(r.rest.x()), "15;1(3)");
  EXPECT_EQ(to_string(r.rest.y()), "8(18,19);16;12;5(6);7(14(2,9));11");
}

TEST(FStep, CaseThree) {
  const StepResult r = f_step(pair_of("", "12;5(6);7(14(2,9));11", 7));
  EXPECT_EQ(to_string(r.atom.forest()), "6");
  EXPECT_EQ(to_string(r.rest.x()), "11(2);9");
  EXPECT_EQ(to_string(r.rest.y()), "14;5(7);12");
}

TEST(FStep, CaseOne) {
  const StepResult r = f_step(pair_of("15;1(3)", "8(18,19);16;12;5(6);7(14(2,9));11", 7));
  EXPECT_EQ(to_string(r.atom.forest()), "15");
  EXPECT_EQ(to_string(r.rest.x()), "1(3)");
  EXPECT_EQ(to_string(r.rest.y()), "8(18,19);16;12;5(6);7(14(2,9));11");
}

TEST(FStep, EmptyPairRejected) { EXPECT_THROW(f_step(BalancedPair::empty(3)), ValidationError); }

TEST(GStep, InvertsCaseThree) {
  const BalancedPair p = g_step(KGoodForest(parse_forest("6"), 7), pair_of("11(2);9", "14;5(7);12", 7));
  EXPECT_TRUE(p.x().empty());
  EXPECT_EQ(to_string(p.y()), "12;5(6);7(14(2,9));11");
}

TEST(GStep, InvertsCaseOne) {
  const BalancedPair p = g_step(KGoodForest(parse_forest("15"), 7), pair_of("1(3)", "8(18,19);16;12;5(6);7(14(2,9));11", 7));
  EXPECT_EQ(to_string(p.x()), "15;1(3)");
  EXPECT_EQ(to_string(p.y()), "8(18,19);16;12;5(6);7(14(2,9));11");
}

TEST(GStep, LastStepOfRunningExample) {
  const BalancedPair p = g_step(KGoodForest(parse_forest("12"), 7), BalancedPair::empty(7));
  EXPECT_EQ(to_string(p.x()), "12");
  EXPECT_TRUE(p.y().empty());
}

TEST(GStep, RejectsOverlap) {
  EXPECT_THROW(g_step(KGoodForest(parse_forest("15"), 7), pair_of("15", "", 7)), ValidationError);
}

TEST(Gamma, RunningExample) {
  const CnkSequence c = gamma(BnkForest(parse_forest(kBetaForest), 19, 7));
  EXPECT_EQ(seq_text(c), kGammaSequence);
  EXPECT_EQ(to_string(gamma_inv(c).forest()), kBetaForest);
}

TEST(Gamma, RunningExampleTrace) {
  Trace trace;
  gamma(BnkForest(parse_forest(kBetaForest), 19, 7), &trace);
  std::vector<std::string> atoms;
  for (const TraceLine& line : trace)
    if (line.stage.rfind("gamma.A", 0) == 0) atoms.push_back(line.text);
  EXPECT_EQ(atoms, (std::vector<std::string>{"10(4);13(17)", "15", "1(3);8(18,19);16", "6", "11(2);14", "9", "7",
                                             "5", "12"}));
}

TEST(Gamma, Singletons) {
  EXPECT_EQ(seq_text(gamma(BnkForest(parse_forest("1"), 1, 0))), "1");
  EXPECT_EQ(seq_text(gamma(BnkForest(parse_forest("1"), 1, 1))), "1");
}

TEST(GammaInverse, Validation) {
  EXPECT_THROW(CnkSequence(parse_sequence("2(1)"), 2, 1), ValidationError);
  EXPECT_THROW(CnkSequence(parse_sequence("1|3"), 3, 0), ValidationError);
}
