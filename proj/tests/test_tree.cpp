#include <gtest/gtest.h>

#include "mdtree/enumerate.hpp"
#include "mdtree/error.hpp"
#include "mdtree/prufer.hpp"
#include "mdtree/text.hpp"
#include "mdtree/tree.hpp"

using namespace mdtree;

namespace {

const char* kRunningTree = "16(12(5(6),7(14(2,9)),11(10(15(1(3,20(4)))))),13(8(18,19),17))";

std::vector<std::string> texts(const std::vector<RootedTree>& trees) {
  std::vector<std::string> out;
  for (const RootedTree& t : trees) out.push_back(to_string(t));
  return out;
}

}  // namespace

TEST(RootedTree, AccessorsOnSmallTree) {
  const RootedTree t = parse_tree("16(12(5(6)),13)");
  EXPECT_EQ(t.root(), 16u);
  EXPECT_EQ(t.size(), 5u);
  EXPECT_EQ(t.max_label(), 16u);
  EXPECT_EQ(std::vector<Label>(t.children(16).begin(), t.children(16).end()), (std::vector<Label>{12, 13}));
  EXPECT_EQ(t.parent(6), std::optional<Label>(5));
  EXPECT_FALSE(t.parent(16).has_value());
  EXPECT_EQ(t.depth(6), 3u);
  EXPECT_TRUE(t.is_leaf(13));
  EXPECT_FALSE(t.is_leaf(5));
  EXPECT_EQ(t.path_from_root(6), (std::vector<Label>{16, 12, 5, 6}));
  EXPECT_EQ(to_string(t.subtree(12)), "12(5(6))");
}

TEST(RootedTree, SingletonRootIsLeaf) {
  const RootedTree t(7);
  EXPECT_TRUE(t.is_leaf(7));
  EXPECT_EQ(t.size(), 1u);
}

TEST(RootedTree, RejectsCycleAndDisconnection) {
  const std::vector<Edge> loop{{2, 3}, {3, 2}};
  EXPECT_THROW(RootedTree(1, loop), ValidationError);
  const std::vector<Edge> twice{{2, 1}, {2, 3}, {3, 1}};
  EXPECT_THROW(RootedTree(1, twice), ValidationError);
  EXPECT_THROW(RootedTree(0), ValidationError);
}

TEST(RootedTree, EdgesRebuildTheSameTree) {
  const RootedTree t = parse_tree(kRunningTree);
  const std::vector<Edge> edges = t.edges();
  EXPECT_EQ(RootedTree(t.root(), edges), t);
}

TEST(MdSubtree, RunningTree) {
  EXPECT_EQ(to_string(md_subtree(parse_tree(kRunningTree))), "16(12(5,7,11(10)),13(8))");
}

TEST(MdSubtree, TrivialCases) {
  EXPECT_EQ(to_string(md_subtree(parse_tree("7"))), "7");
  EXPECT_EQ(to_string(md_subtree(parse_tree("1(2,3)"))), "1");
}

TEST(MinimallyRooted, Examples) {
  EXPECT_TRUE(is_minimally_rooted(parse_tree("1(2,3)")));
  EXPECT_FALSE(is_minimally_rooted(parse_tree("3(1(2))")));
  EXPECT_TRUE(is_minimally_rooted(parse_tree("7(14(2,9))")));
}

TEST(HangingForest, RunningTree) {
  EXPECT_EQ(texts(hanging_forest(parse_tree(kRunningTree))),
            (std::vector<std::string>{"5(6)", "7(14(2,9))", "8(18,19)", "10(15(1(3,20(4))))", "11", "12",
                                      "13(17)", "16"}));
}

TEST(HangingForest, SmallCases) {
  EXPECT_EQ(texts(hanging_forest(parse_tree("4"))), (std::vector<std::string>{"4"}));
  EXPECT_EQ(texts(hanging_forest(parse_tree("2(1(3))"))), (std::vector<std::string>{"1(3)", "2"}));
}

TEST(MdProperties, ExhaustiveOnFiveLabels) {
  for_each_rooted_tree(iota_labels(5), [](const RootedTree& t) {
    const RootedTree md = md_subtree(t);
    EXPECT_EQ(md_subtree(md), md);
    EXPECT_EQ(is_minimally_rooted(t), md.size() == 1);
    std::vector<Label> all;
    for (const RootedTree& c : hanging_forest(t)) {
      EXPECT_TRUE(md.contains(c.root()));
      all.insert(all.end(), c.labels().begin(), c.labels().end());
    }
    std::sort(all.begin(), all.end());
    EXPECT_EQ(all, std::vector<Label>(t.labels().begin(), t.labels().end()));
  });
}

TEST(OrderedForest, RejectsSharedLabels) {
  EXPECT_THROW(OrderedForest({parse_tree("1(2)"), parse_tree("2")}), ValidationError);
  EXPECT_TRUE(OrderedForest().empty());
}

TEST(TreeCycle, CanonicalRotation) {
  const TreeCycle c({parse_tree("5(6)"), parse_tree("16"), parse_tree("12")});
  EXPECT_EQ(to_string(c), "[16;12;5(6)]");
  EXPECT_EQ(c, TreeCycle({parse_tree("12"), parse_tree("5(6)"), parse_tree("16")}));
  EXPECT_EQ(texts(c.rotated_to(6)), (std::vector<std::string>{"5(6)", "16", "12"}));
  EXPECT_THROW(TreeCycle({}), ValidationError);
}

TEST(Relabel, SupersetSourceFromCaseThreeStep) {
  const std::vector<Label> source{2, 5, 6, 7, 9, 11, 12};
  const std::vector<Label> target{2, 5, 7, 9, 11, 12, 14};
  const OrderedForest f = parse_forest("9(2);7");
  EXPECT_EQ(to_string(relabel_order_iso(f, source, target)), "11(2);9");
}

TEST(Relabel, IdentityAndPair) {
  const std::vector<Label> same{3, 4, 8};
  const RootedTree t = parse_tree("8(3,4)");
  EXPECT_EQ(relabel_order_iso(t, same, same), t);
  const std::vector<Label> s{1, 2}, u{5, 12};
  EXPECT_EQ(to_string(relabel_order_iso(parse_tree("1(2)"), s, u)), "5(12)");
}

TEST(Relabel, RoundTripAndErrors) {
  const std::vector<Label> s{1, 2, 3, 4}, u{2, 6, 7, 40};
  for_each_rooted_tree(s, [&](const RootedTree& t) {
    EXPECT_EQ(relabel_order_iso(relabel_order_iso(t, s, u), u, s), t);
  });
  const std::vector<Label> short_target{1, 2, 3};
  EXPECT_THROW(relabel_order_iso(parse_tree("1(2)"), s, short_target), ValidationError);
  const std::vector<Label> missing{1, 3};
  EXPECT_THROW(relabel_order_iso(parse_tree("1(2)"), missing, u), ValidationError);
}
