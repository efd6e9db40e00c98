#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mdtree/tree.hpp"

namespace mdtree {

// Grammar (whitespace between tokens is ignored):
//   tree     := LABEL | LABEL "(" tree ("," tree)* ")"
//   forest   := tree (";" tree)*        -- the empty string is the empty forest
//   cycle    := "[" forest "]"
//   sequence := forest ("|" forest)*    -- the empty string is the empty sequence
//
// All parse functions throw ParseError carrying the byte offset of the
// offending token, including for repeated labels and for label 0.

using TextObject = std::variant<RootedTree, OrderedForest, TreeCycle>;

RootedTree parse_tree(std::string_view text);
OrderedForest parse_forest(std::string_view text);
TreeCycle parse_cycle(std::string_view text);
std::vector<OrderedForest> parse_sequence(std::string_view text);

/// Dispatches on shape: "[...]" is a cycle, a single tree is a tree, and
/// anything with ";" (or the empty string) is a forest.
TextObject parse(std::string_view text);

/// Comma-separated labels, e.g. "2,1". The empty string is the empty list.
std::vector<Label> parse_label_list(std::string_view text);

// Canonical serializations: no whitespace, children ascending, cycles
// starting at the tree holding the largest label.
std::string to_string(const RootedTree& t);
std::string to_string(const OrderedForest& f);
std::string to_string(std::span<const RootedTree> trees);
std::string to_string(const TreeCycle& c);
std::string to_string(std::span<const OrderedForest> sequence);
std::string to_string(const TextObject& x);
std::string format_label_list(std::span<const Label> labels);

}  // namespace mdtree
