#include "mdtree/text.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

#include "mdtree/error.hpp"

namespace mdtree {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RootedTree tree() {
    Label root = label();
    std::vector<Edge> edges;
    subtrees(root, edges);
    return RootedTree(root, edges);
  }

  // Trees separated by `;` up to (not including) `stop`, or end of input.
  std::vector<RootedTree> trees(char stop) {
    std::vector<RootedTree> out;
    skip_ws();
    if (at_end() || peek() == stop || peek() == '|') return out;
    out.push_back(tree());
    while (accept(';')) out.push_back(tree());
    return out;
  }

  bool accept(char c) {
    skip_ws();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void expect_end() {
    skip_ws();
    if (!at_end()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  char peek() {
    skip_ws();
    return at_end() ? '\0' : text_[pos_];
  }

  bool at_end() const { return pos_ >= text_.size(); }
  std::size_t pos() const { return pos_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Label label() {
    skip_ws();
    std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > std::numeric_limits<Label>::max()) throw ParseError("label too large", start);
      ++pos_;
    }
    if (pos_ == start) fail(at_end() ? "expected a label, found end of input" : "expected a label");
    if (value == 0) throw ParseError("label 0 is not allowed", start);
    if (!seen_.insert(static_cast<Label>(value)).second)
      throw ParseError("duplicate label " + std::to_string(value), start);
    return static_cast<Label>(value);
  }

  void subtrees(Label parent, std::vector<Edge>& edges) {
    if (!accept('(')) return;
    do {
      Label child = label();
      edges.push_back({child, parent});
      subtrees(child, edges);
    } while (accept(','));
    expect(')');
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::set<Label> seen_;
};

void write_tree(const RootedTree& t, Label v, std::string& out) {
  out += std::to_string(v);
  auto kids = t.children(v);
  if (kids.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (i) out += ',';
    write_tree(t, kids[i], out);
  }
  out += ')';
}

}  // namespace

RootedTree parse_tree(std::string_view text) {
  Parser p(text);
  RootedTree t = p.tree();
  p.expect_end();
  return t;
}

OrderedForest parse_forest(std::string_view text) {
  Parser p(text);
  auto trees = p.trees('\0');
  p.expect_end();
  return OrderedForest(std::move(trees));
}

TreeCycle parse_cycle(std::string_view text) {
  Parser p(text);
  p.expect('[');
  std::size_t inner = p.pos();
  auto trees = p.trees(']');
  if (trees.empty()) throw ParseError("a cycle needs at least one tree", inner);
  p.expect(']');
  p.expect_end();
  return TreeCycle(std::move(trees));
}

std::vector<OrderedForest> parse_sequence(std::string_view text) {
  Parser p(text);
  std::vector<OrderedForest> out;
  if (p.peek() == '\0') return out;
  do {
    std::size_t at = p.pos();
    auto trees = p.trees('|');
    if (trees.empty()) throw ParseError("empty forest in sequence", at);
    out.emplace_back(std::move(trees));
  } while (p.accept('|'));
  p.expect_end();
  return out;
}

TextObject parse(std::string_view text) {
  Parser probe(text);
  if (probe.peek() == '[') return parse_cycle(text);
  OrderedForest f = parse_forest(text);
  if (f.size() == 1) return f[0];
  return f;
}

std::vector<Label> parse_label_list(std::string_view text) {
  std::vector<Label> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i == text.size()) return out;
  while (true) {
    skip();
    std::size_t start = i;
    std::uint64_t value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
      if (value > std::numeric_limits<Label>::max()) throw ParseError("label too large", start);
      ++i;
    }
    if (i == start) throw ParseError("expected a label", i);
    if (value == 0) throw ParseError("label 0 is not allowed", start);
    out.push_back(static_cast<Label>(value));
    skip();
    if (i == text.size()) break;
    if (text[i] != ',') throw ParseError("expected ','", i);
    ++i;
  }
  return out;
}

std::string to_string(const RootedTree& t) {
  std::string out;
  write_tree(t, t.root(), out);
  return out;
}

std::string to_string(std::span<const RootedTree> trees) {
  std::string out;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (i) out += ';';
    write_tree(trees[i], trees[i].root(), out);
  }
  return out;
}

std::string to_string(const OrderedForest& f) { return to_string(f.trees()); }

std::string to_string(const TreeCycle& c) { return "[" + to_string(c.trees()) + "]"; }

std::string to_string(std::span<const OrderedForest> sequence) {
  std::string out;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (i) out += '|';
    out += to_string(sequence[i]);
  }
  return out;
}

std::string to_string(const TextObject& x) {
  return std::visit([](const auto& v) { return to_string(v); }, x);
}

std::string format_label_list(std::span<const Label> labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(labels[i]);
  }
  return out;
}

}  // namespace mdtree
