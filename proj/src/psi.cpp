#include <algorithm>
#include <set>
#include <string>

#include "mdtree/bijections.hpp"
#include "mdtree/error.hpp"
#include "mdtree/text.hpp"
#include "trace_util.hpp"

namespace mdtree {

// Merging tree A_j into the current tree at the active vertex v swaps the
// child sets of v and of r = root(A_j) and then hangs r below v. Selections
// happen in strictly increasing (depth, label) order and a selected vertex
// never moves again, so the last merge is at the special vertex with the
// largest (depth, label), and r is its smallest child (A_j is minimally
// rooted). psi_inv unwinds merges in that order.

RootedTree psi(const KGoodForest& f) {
  const unsigned k = f.k();
  auto trees = f.forest().trees();
  if (f.forest().vertex_count() < 2) throw ValidationError("psi needs at least two vertices");

  TreeBuilder current(trees.front());
  std::set<Label> active;
  auto activate = [&](const RootedTree& t) {
    for (Label v : t.labels())
      if (is_special(v, k)) active.insert(v);
  };
  activate(trees.front());

  for (std::size_t j = 1; j < trees.size(); ++j) {
    const RootedTree& next = trees[j];
    if (active.empty()) throw ValidationError("no active special vertex left for tree " + std::to_string(j + 1));
    Label v = 0;
    std::size_t best_depth = 0;
    for (Label a : active) {  // ascending, so ties keep the smaller label
      std::size_t d = current.depth(a);
      if (v == 0 || d < best_depth) {
        v = a;
        best_depth = d;
      }
    }
    const Label r = next.root();
    std::vector<Label> moved_down = current.children(v);
    current.add_child(v, r);
    current.graft(next);
    for (Label c : next.children(r)) current.set_parent(c, v);
    for (Label c : moved_down) current.set_parent(c, r);
    active.erase(v);
    activate(next);
  }
  return current.build();
}

KGoodForest psi_inv(const RootedTree& t, unsigned k) {
  if (t.size() < 2) throw ValidationError("psi_inv needs at least two vertices");
  std::vector<Label> pending;
  for (Label v : t.labels()) {
    if (!is_special(v, k)) break;
    if (t.is_leaf(v)) throw ValidationError("special vertex " + std::to_string(v) + " is a leaf");
    pending.push_back(v);
  }

  TreeBuilder current(t);
  std::vector<RootedTree> unwound;
  while (!pending.empty()) {
    auto last = pending.begin();
    std::size_t last_depth = current.depth(*last);
    for (auto it = pending.begin() + 1; it != pending.end(); ++it) {
      std::size_t d = current.depth(*it);
      if (d >= last_depth) {
        last = it;
        last_depth = d;
      }
    }
    const Label v = *last;
    pending.erase(last);

    std::vector<Label> kids = current.children(v);
    if (kids.empty()) throw ValidationError("vertex " + std::to_string(v) + " has no child to unwind");
    const Label r = kids.front();
    std::vector<Label> back_up = current.children(r);
    for (std::size_t i = 1; i < kids.size(); ++i) current.set_parent(kids[i], r);
    for (Label c : back_up) current.set_parent(c, v);
    unwound.push_back(current.detach(r));
  }

  std::vector<RootedTree> trees{current.build()};
  trees.insert(trees.end(), std::make_move_iterator(unwound.rbegin()), std::make_move_iterator(unwound.rend()));
  return KGoodForest(OrderedForest(std::move(trees)), k);
}

FnkTree zeta(const CnkSequence& c, Trace* trace) {
  std::vector<RootedTree> merged;
  merged.reserve(c.forests().size());
  for (const OrderedForest& f : c.forests()) {
    if (f.vertex_count() == 1) {
      merged.push_back(f[0]);
    } else {
      merged.push_back(psi(KGoodForest(f, c.k())));
      detail::note(trace, "zeta.psi" + std::to_string(merged.size()), to_string(merged.back()));
    }
  }
  OrderedForest chain(std::move(merged));
  detail::note(trace, "zeta.chain", to_string(chain));
  FnkTree out(rho_inv(chain, c.n() + 1), c.n(), c.k());
  detail::note(trace, "zeta", to_string(out.tree()));
  return out;
}

CnkSequence zeta_inv(const FnkTree& t, Trace* trace) {
  OrderedForest chain = rho(t.tree());
  detail::note(trace, "zeta_inv.chain", to_string(chain));
  std::vector<OrderedForest> forests;
  forests.reserve(chain.size());
  for (const RootedTree& tree : chain.trees()) {
    if (tree.size() == 1) {
      forests.emplace_back(std::vector<RootedTree>{tree});
    } else {
      forests.push_back(psi_inv(tree, t.k()).forest());
      detail::note(trace, "zeta_inv.psi_inv" + std::to_string(forests.size()), to_string(forests.back()));
    }
  }
  CnkSequence out(std::move(forests), t.n(), t.k());
  detail::note(trace, "zeta_inv", to_string(out.forests()));
  return out;
}

}  // namespace mdtree
