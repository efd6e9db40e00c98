#include <gtest/gtest.h>

#include <map>

#include "mdtree/bijections.hpp"
#include "mdtree/counts.hpp"
#include "mdtree/enumerate.hpp"
#include "mdtree/error.hpp"
#include "mdtree/prufer.hpp"
#include "mdtree/text.hpp"
#include "mdtree/theorem42.hpp"

using namespace mdtree;

namespace {

const char* kRunningTree = "16(12(5(6),7(14(2,9)),11(10(15(1(3,20(4)))))),13(8(18,19),17))";
const char* kFinalTree = "10(4(13,17),15(1(6(11(2(14),9(7(5(12(20)))))),8(3(16)),18,19)))";

std::map<std::string, std::string> by_stage(const Trace& trace) {
  std::map<std::string, std::string> out;
  for (const TraceLine& line : trace) out[line.stage] = line.text;
  return out;
}

}  // namespace

TEST(Compose, RunningExampleStages) {
  Trace trace;
  const FnkTree f = compose_t_to_f(TnkTree(parse_tree(kRunningTree), 19, 7), &trace);
  EXPECT_EQ(to_string(f.tree()), kFinalTree);
  const auto stages = by_stage(trace);
  EXPECT_EQ(stages.at("T"), kRunningTree);
  EXPECT_EQ(stages.at("alpha.md"), "16(12(5,7,11(10)),13(8))");
  EXPECT_EQ(stages.at("alpha.roots"), "[16,12,5,7,11,10,13,8]");
  EXPECT_EQ(stages.at("alpha"), "[10(15(1(3,20(4))));13(17);8(18,19);16;12;5(6);7(14(2,9));11]");
  EXPECT_EQ(stages.at("beta.phi"), "10(4,15(1(3,20)))");
  EXPECT_EQ(stages.at("beta.rho"), "10(4);15;1(3)");
  EXPECT_EQ(stages.at("beta"), "10(4);15;1(3);13(17);8(18,19);16;12;5(6);7(14(2,9));11");
  EXPECT_EQ(stages.at("gamma.A1"), "10(4);13(17)");
  EXPECT_EQ(stages.at("gamma.X1"), "15;1(3)");
  EXPECT_EQ(stages.at("gamma.Y1"), "8(18,19);16;12;5(6);7(14(2,9));11");
  EXPECT_EQ(stages.at("gamma.A2"), "15");
  EXPECT_EQ(stages.at("gamma.X2"), "1(3)");
  EXPECT_EQ(stages.at("gamma.A3"), "1(3);8(18,19);16");
  EXPECT_EQ(stages.at("gamma.X3"), "");
  EXPECT_EQ(stages.at("gamma.Y3"), "12;5(6);7(14(2,9));11");
  EXPECT_EQ(stages.at("gamma.A4"), "6");
  EXPECT_EQ(stages.at("gamma.X4"), "11(2);9");
  EXPECT_EQ(stages.at("gamma.Y4"), "14;5(7);12");
  EXPECT_EQ(stages.at("gamma.A5"), "11(2);14");
  EXPECT_EQ(stages.at("gamma.Y5"), "5(7);12");
  EXPECT_EQ(stages.at("gamma.A6"), "9");
  EXPECT_EQ(stages.at("gamma.A7"), "7");
  EXPECT_EQ(stages.at("gamma.Y7"), "5(12)");
  EXPECT_EQ(stages.at("gamma.A8"), "5");
  EXPECT_EQ(stages.at("gamma.X8"), "12");
  EXPECT_EQ(stages.at("gamma.A9"), "12");
  EXPECT_EQ(stages.at("gamma"), "10(4);13(17)|15|1(3);8(18,19);16|6|11(2);14|9|7|5|12");
  EXPECT_EQ(stages.at("zeta.psi1"), "10(4(13,17))");
  EXPECT_EQ(stages.at("zeta.psi3"), "1(8(3(16)),18,19)");
  EXPECT_EQ(stages.at("zeta.psi5"), "11(2(14))");
  EXPECT_EQ(stages.at("zeta.chain"), "10(4(13,17));15;1(8(3(16)),18,19);6;11(2(14));9;7;5;12");
  EXPECT_EQ(stages.at("zeta"), kFinalTree);
  EXPECT_EQ(stages.at("F"), kFinalTree);
  EXPECT_EQ(trace.front().stage, "T");
  EXPECT_EQ(trace.back().stage, "F");
}

TEST(Compose, RunningExampleInverseTrace) {
  Trace trace;
  const TnkTree t = compose_f_to_t(FnkTree(parse_tree(kFinalTree), 19, 7), &trace);
  EXPECT_EQ(to_string(t.tree()), kRunningTree);
  const auto stages = by_stage(trace);
  EXPECT_EQ(stages.at("zeta_inv"), "10(4);13(17)|15|1(3);8(18,19);16|6|11(2);14|9|7|5|12");
  EXPECT_EQ(stages.at("gamma_inv"), "10(4);15;1(3);13(17);8(18,19);16;12;5(6);7(14(2,9));11");
  EXPECT_EQ(stages.at("beta_inv"), "[10(15(1(3,20(4))));13(17);8(18,19);16;12;5(6);7(14(2,9));11]");
  EXPECT_EQ(stages.at("alpha_inv"), kRunningTree);
}

TEST(Compose, SmallCases) {
  EXPECT_EQ(to_string(compose_t_to_f(TnkTree(parse_tree("1(2)"), 1, 0)).tree()), "1(2)");
  const FnkTree f = compose_t_to_f(TnkTree(parse_tree("2(1)"), 1, 1));
  EXPECT_EQ(to_string(f.tree()), "1(2)");
  EXPECT_EQ(f.k(), 1u);
  EXPECT_EQ(format_label_list(word_of_fnk_tree(f.tree(), 1, 1)), "1");
  EXPECT_EQ(to_string(compose_f_to_t(FnkTree(parse_tree("1(2)"), 1, 0)).tree()), "1(2)");
  EXPECT_EQ(to_string(compose_t_to_f(TnkTree(parse_tree("1"), 0, 0)).tree()), "1");
}

TEST(SmallerChildrenForestMap, SmallCases) {
  EXPECT_EQ(to_string(theorem42_map(parse_tree("2(1)"))), "1;2");
  EXPECT_EQ(to_string(theorem42_map(parse_tree("1(2)"))), "1(2)");
  EXPECT_EQ(to_string(theorem42_map(parse_tree("1"))), "1");
  EXPECT_EQ(theorem42_inv(parse_forest("2;1")), parse_tree("2(1)"));
}

TEST(SmallerChildrenForestMap, Validation) {
  EXPECT_THROW(theorem42_map(parse_tree("2(3)")), ValidationError);
  EXPECT_THROW(theorem42_inv(parse_forest("2(1)")), ValidationError);
  EXPECT_THROW(theorem42_inv(parse_forest("1;3")), ValidationError);
}

TEST(SmallerChildrenForestMap, RootThreeWithTwoSmallerChildrenOnFourLabels) {
  // Trees on [4] rooted at 3 with children 1 and 2 map to 3-tree forests.
  std::size_t trees = 0;
  for_each_rooted_tree(iota_labels(4), [&](const RootedTree& t) {
    if (t.root() != 3 || smaller_root_children(t) != 2) return;
    ++trees;
    const OrderedForest f = theorem42_map(t);
    EXPECT_EQ(f.size(), 3u);
    EXPECT_EQ(theorem42_inv(f), t);
  });
  EXPECT_EQ(trees, 3u);  // 4 hangs below 1, 2 or 3
}

TEST(SmallerChildrenForestMap, LeftToRightMaximaMatchSmallerChildren) {
  for (unsigned n = 1; n <= 5; ++n) {
    for_each_rooted_tree(iota_labels(n), [](const RootedTree& t) {
      const std::vector<Label> word = cycle_root_word(alpha_cycle(t));
      const std::vector<Label> tail(word.begin() + 1, word.end());
      EXPECT_EQ(left_to_right_maxima(tail).size(), smaller_root_children(t)) << to_string(t);
    });
  }
}

TEST(SmallerChildrenForestMap, ExhaustiveRoundTripAndShape) {
  for (unsigned n = 1; n <= 5; ++n) {
    for_each_rooted_tree(iota_labels(n), [n](const RootedTree& t) {
      const OrderedForest f = theorem42_map(t);
      EXPECT_EQ(f.size(), smaller_root_children(t) + 1);
      for (const RootedTree& tree : f.trees())
        if (tree.contains(n)) {
          EXPECT_TRUE(tree.is_leaf(n));
        }
      EXPECT_EQ(theorem42_inv(f), t) << to_string(t);
    });
  }
}
