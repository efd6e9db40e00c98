#include <gtest/gtest.h>

#include "mdtree/bijections.hpp"
#include "mdtree/enumerate.hpp"
#include "mdtree/error.hpp"
#include "mdtree/prufer.hpp"
#include "mdtree/text.hpp"

using namespace mdtree;

namespace {

const char* kRunningTree = "16(12(5(6),7(14(2,9)),11(10(15(1(3,20(4)))))),13(8(18,19),17))";
const char* kRunningCycle = "[10(15(1(3,20(4))));13(17);8(18,19);16;12;5(6);7(14(2,9));11]";
const char* kBetaForest = "10(4);15;1(3);13(17);8(18,19);16;12;5(6);7(14(2,9));11";

// Preorder of md_subtree(t) visiting children in ascending order.
void preorder(const RootedTree& md, Label v, std::vector<Label>& out) {
  out.push_back(v);
  for (Label c : md.children(v)) preorder(md, c, out);
}

}  // namespace

TEST(Alpha, RunningExample) {
  const AnkCycle c = alpha(TnkTree::classify(parse_tree(kRunningTree)));
  EXPECT_EQ(to_string(c.cycle()), kRunningCycle);
  EXPECT_EQ(cycle_root_word(c.cycle()), (std::vector<Label>{16, 12, 5, 7, 11, 10, 13, 8}));
  EXPECT_EQ(c.n(), 19u);
  EXPECT_EQ(c.k(), 7u);
}

TEST(Alpha, SmallCases) {
  EXPECT_EQ(to_string(alpha(TnkTree::classify(parse_tree("2(1)"))).cycle()), "[2;1]");
  EXPECT_EQ(to_string(alpha(TnkTree::classify(parse_tree("1(2)"))).cycle()), "[1(2)]");
}

TEST(AlphaInverse, Examples) {
  EXPECT_EQ(to_string(alpha_inv(AnkCycle::classify(parse_cycle(kRunningCycle))).tree()), kRunningTree);
  EXPECT_EQ(to_string(alpha_inv(AnkCycle::classify(parse_cycle("[2;1]"))).tree()), "2(1)");
  EXPECT_EQ(to_string(alpha_inv(AnkCycle::classify(parse_cycle("[1(2)]"))).tree()), "1(2)");
}

TEST(Alpha, RootOrderIsAscendingPreorderOfMd) {
  for (unsigned n = 0; n <= 5; ++n) {
    for_each_rooted_tree(iota_labels(n + 1), [](const RootedTree& t) {
      const RootedTree md = md_subtree(t);
      std::vector<Label> expected;
      preorder(md, md.root(), expected);
      const TreeCycle c = alpha_cycle(t);
      EXPECT_EQ(cycle_root_word(c), expected) << to_string(t);
      EXPECT_EQ(c.size(), md.size());
    });
  }
}

TEST(AlphaInverse, RejectsNonMinimalTree) {
  EXPECT_THROW(alpha_cycle_inv(parse_cycle("[3(1);2]")), ValidationError);
}

TEST(Phi, Examples) {
  EXPECT_EQ(to_string(phi(parse_tree("10(15(1(3,20(4))))"))), "10(4,15(1(3,20)))");
  EXPECT_EQ(to_string(phi(parse_tree("7(14(2,9))"))), "9(2,7(14))");
  EXPECT_EQ(to_string(phi(parse_tree("12"))), "12");
}

TEST(PhiInverse, Examples) {
  EXPECT_EQ(to_string(phi_inv(parse_tree("10(4,15(1(3,20)))"))), "10(15(1(3,20(4))))");
  EXPECT_EQ(to_string(phi_inv(parse_tree("9(2,7(14))"))), "7(14(2,9))");
  EXPECT_EQ(to_string(phi_inv(parse_tree("9"))), "9");
}

TEST(Phi, PreconditionErrors) {
  EXPECT_THROW(phi(parse_tree("3(1)")), ValidationError);
  EXPECT_THROW(phi_inv(parse_tree("1(3(2))")), ValidationError);
}

TEST(Rho, Examples) {
  EXPECT_EQ(to_string(rho(parse_tree("10(4,15(1(3,20)))"))), "10(4);15;1(3)");
  EXPECT_EQ(to_string(rho(parse_tree("5(12)"))), "5");
  EXPECT_EQ(to_string(rho(parse_tree("12"))), "");
  EXPECT_THROW(rho(parse_tree("1(3(2))")), ValidationError);
}

TEST(RhoInverse, Examples) {
  EXPECT_EQ(to_string(rho_inv(parse_forest("5"), 12)), "5(12)");
  EXPECT_EQ(to_string(rho_inv(OrderedForest(), 7)), "7");
  EXPECT_EQ(to_string(rho_inv(parse_forest("10(4(13,17));15;1(8(3(16)),18,19);6;11(2(14));9;7;5;12"), 20)),
            "10(4(13,17),15(1(6(11(2(14),9(7(5(12(20)))))),8(3(16)),18,19)))");
  EXPECT_THROW(rho_inv(parse_forest("5"), 5), ValidationError);
  EXPECT_THROW(rho_inv(parse_forest("5"), 3), ValidationError);
}

TEST(Beta, Examples) {
  EXPECT_EQ(to_string(beta(AnkCycle::classify(parse_cycle(kRunningCycle))).forest()), kBetaForest);
  EXPECT_EQ(to_string(beta(AnkCycle::classify(parse_cycle("[1(2)]"))).forest()), "1");
  EXPECT_EQ(to_string(beta(AnkCycle::classify(parse_cycle("[2;1]"))).forest()), "1");
}

TEST(BetaInverse, Examples) {
  EXPECT_EQ(to_string(beta_inv(BnkForest(parse_forest(kBetaForest), 19, 7)).cycle()), kRunningCycle);
  EXPECT_EQ(to_string(beta_inv(BnkForest(parse_forest("1"), 1, 0)).cycle()), "[1(2)]");
  EXPECT_EQ(to_string(beta_inv(BnkForest(parse_forest("1"), 1, 1)).cycle()), "[2;1]");
}

TEST(Membership, Constructors) {
  EXPECT_THROW(TnkTree(parse_tree("2(1)"), 1, 0), ValidationError);
  EXPECT_THROW(TnkTree(parse_tree("2(3)"), 1, 0), ValidationError);
  EXPECT_THROW(AnkCycle(parse_cycle("[3(1);2]"), 2, 1), ValidationError);
  EXPECT_THROW(BnkForest(parse_forest("2(1)"), 2, 1), ValidationError);
  EXPECT_THROW(FnkTree(parse_tree("2(1)"), 1, 0), ValidationError);
  EXPECT_THROW(FnkTree(parse_tree("1(2,3)"), 2, 2), ValidationError);
  EXPECT_NO_THROW(FnkTree(parse_tree("1(2(3))"), 2, 2));
}
