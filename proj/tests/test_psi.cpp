#include <gtest/gtest.h>

#include "mdtree/bijections.hpp"
#include "mdtree/error.hpp"
#include "mdtree/text.hpp"

using namespace mdtree;

namespace {

std::string psi_text(const char* forest, unsigned k) { return to_string(psi(KGoodForest(parse_forest(forest), k))); }
std::string psi_inv_text(const char* tree, unsigned k) { return to_string(psi_inv(parse_tree(tree), k).forest()); }

const char* kGammaSequence = "10(4);13(17)|15|1(3);8(18,19);16|6|11(2);14|9|7|5|12";
const char* kFinalTree = "10(4(13,17),15(1(6(11(2(14),9(7(5(12(20)))))),8(3(16)),18,19)))";

}  // namespace

TEST(Psi, Examples) {
  EXPECT_EQ(psi_text("10(4);13(17)", 7), "10(4(13,17))");
  EXPECT_EQ(psi_text("1(3);8(18,19);16", 7), "1(8(3(16)),18,19)");
  EXPECT_EQ(psi_text("11(2);14", 7), "11(2(14))");
}

TEST(PsiInverse, Examples) {
  EXPECT_EQ(psi_inv_text("10(4(13,17))", 7), "10(4);13(17)");
  EXPECT_EQ(psi_inv_text("1(8(3(16)),18,19)", 7), "1(3);8(18,19);16");
  EXPECT_EQ(psi_inv_text("11(2(14))", 7), "11(2);14");
}

TEST(Psi, PreconditionErrors) {
  EXPECT_THROW(psi(KGoodForest(parse_forest("3"), 7)), ValidationError);
  EXPECT_THROW(psi_inv(parse_tree("5(3)"), 7), ValidationError);
  EXPECT_THROW(psi_inv(parse_tree("5"), 7), ValidationError);
}

TEST(Zeta, RunningExample) {
  const FnkTree t = zeta(CnkSequence(parse_sequence(kGammaSequence), 19, 7));
  EXPECT_EQ(to_string(t.tree()), kFinalTree);
  EXPECT_EQ(to_string(zeta_inv(t).forests()), kGammaSequence);
}

TEST(Zeta, SmallCases) {
  EXPECT_EQ(to_string(zeta(CnkSequence(parse_sequence("1"), 1, 0)).tree()), "1(2)");
  EXPECT_EQ(to_string(zeta(CnkSequence(parse_sequence("1"), 1, 1)).tree()), "1(2)");
  EXPECT_EQ(to_string(zeta(CnkSequence({}, 0, 0)).tree()), "1");
}

TEST(ZetaInverse, SmallCases) {
  EXPECT_EQ(to_string(zeta_inv(FnkTree(parse_tree("1(2)"), 1, 1)).forests()), "1");
  EXPECT_EQ(to_string(zeta_inv(FnkTree(parse_tree("1"), 0, 0)).forests()), "");
}
