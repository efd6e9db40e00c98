#include <algorithm>
#include <string>

#include "mdtree/bijections.hpp"
#include "mdtree/error.hpp"
#include "mdtree/text.hpp"
#include "trace_util.hpp"

namespace mdtree {

namespace {

using Trees = std::vector<RootedTree>;

Trees tail(std::span<const RootedTree> trees, std::size_t from) {
  return Trees(trees.begin() + static_cast<std::ptrdiff_t>(from), trees.end());
}

Trees concat(std::span<const RootedTree> a, std::span<const RootedTree> b) {
  Trees out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<Label> specials_of(std::span<const Label> sorted_labels, unsigned k) {
  auto end = std::upper_bound(sorted_labels.begin(), sorted_labels.end(), k);
  return std::vector<Label>(sorted_labels.begin(), end);
}

std::vector<Label> without(std::span<const Label> sorted_labels, Label v) {
  std::vector<Label> out(sorted_labels.begin(), sorted_labels.end());
  std::erase(out, v);
  return out;
}

}  // namespace

StepResult f_step(const BalancedPair& p) {
  const unsigned k = p.k();
  auto xs = p.x().trees();
  auto ys = p.y().trees();
  if (p.is_empty()) throw ValidationError("f_step needs a nonempty balanced pair");

  if (!xs.empty()) {
    const RootedTree& head = xs.front();
    if (count_special(head, k) == 0) {
      return {KGoodForest(OrderedForest({head}), k),
              BalancedPair(OrderedForest(tail(xs, 1)), p.y(), k)};
    }
    // The first prefix (head, Y_1..Y_j) that is k-good; there is exactly one.
    std::size_t found = 0;
    std::size_t matches = 0;
    Trees prefix{head};
    for (std::size_t j = 1; j <= ys.size(); ++j) {
      prefix.push_back(ys[j - 1]);
      if (is_k_good(OrderedForest(prefix), k)) {
        if (matches++ == 0) found = j;
      }
    }
    if (matches != 1)
      throw ValidationError("expected exactly one k-good prefix, found " + std::to_string(matches));
    Trees atom{head};
    atom.insert(atom.end(), ys.begin(), ys.begin() + static_cast<std::ptrdiff_t>(found));
    return {KGoodForest(OrderedForest(std::move(atom)), k),
            BalancedPair(OrderedForest(tail(xs, 1)), OrderedForest(tail(ys, found)), k)};
  }

  // X is empty: the tree holding the largest label is cut up by rho . phi and
  // one special label is released as the atom.
  const std::vector<Label> all = p.y().labels();
  const Label top = all.back();
  std::size_t holder = 0;
  while (!ys[holder].contains(top)) ++holder;
  const std::vector<Label> specials = specials_of(all, k);
  const Label released = specials.at(holder);

  OrderedForest cut = rho(phi(ys[holder]));
  Trees rest_y(ys.begin(), ys.end());
  rest_y.erase(rest_y.begin() + static_cast<std::ptrdiff_t>(holder));

  OrderIsomorphism shift(without(all, top), without(all, released));
  return {KGoodForest(OrderedForest({RootedTree(released)}), k),
          BalancedPair(shift.apply(cut), OrderedForest(shift.apply(rest_y)), k)};
}

BalancedPair g_step(const KGoodForest& atom, const BalancedPair& rest) {
  const unsigned k = rest.k();
  if (atom.k() != k)
    throw ValidationError("atom is " + std::to_string(atom.k()) + "-good but the pair uses k=" +
                          std::to_string(k));
  std::vector<Label> all = rest.labels();
  auto atom_labels = atom.forest().labels();
  all.insert(all.end(), atom_labels.begin(), atom_labels.end());
  std::sort(all.begin(), all.end());
  if (auto dup = std::adjacent_find(all.begin(), all.end()); dup != all.end())
    throw ValidationError("label " + std::to_string(*dup) + " occurs in both the atom and the pair");

  auto as = atom.forest().trees();
  auto xs = rest.x().trees();
  auto ys = rest.y().trees();

  if (as.size() >= 2) {
    return BalancedPair(OrderedForest(concat(as.first(1), xs)), OrderedForest(concat(as.subspan(1), ys)), k);
  }
  if (count_special(as.front(), k) == 0) {
    return BalancedPair(OrderedForest(concat(as, xs)), rest.y(), k);
  }

  // Single special vertex: undo the release.
  const Label released = as.front().root();
  const Label top = all.back();
  const std::vector<Label> specials = specials_of(all, k);
  const auto rank = static_cast<std::size_t>(
      std::find(specials.begin(), specials.end(), released) - specials.begin());

  OrderIsomorphism shift(without(all, released), without(all, top));
  RootedTree holder = phi_inv(rho_inv(shift.apply(rest.x()), top));
  Trees ys_back = shift.apply(ys);
  ys_back.insert(ys_back.begin() + static_cast<std::ptrdiff_t>(rank), std::move(holder));
  return BalancedPair(OrderedForest(), OrderedForest(std::move(ys_back)), k);
}

CnkSequence gamma(const BnkForest& b, Trace* trace) {
  const unsigned k = b.k();
  auto trees = b.forest().trees();
  const std::size_t split = trees.size() - k;
  BalancedPair pair(OrderedForest(Trees(trees.begin(), trees.begin() + static_cast<std::ptrdiff_t>(split))),
                    OrderedForest(tail(trees, split)), k);
  detail::note(trace, "gamma.X0", to_string(pair.x()));
  detail::note(trace, "gamma.Y0", to_string(pair.y()));

  std::vector<OrderedForest> atoms;
  while (!pair.is_empty()) {
    StepResult step = f_step(pair);
    atoms.push_back(step.atom.forest());
    pair = std::move(step.rest);
    const std::string i = std::to_string(atoms.size());
    detail::note(trace, "gamma.A" + i, to_string(atoms.back()));
    detail::note(trace, "gamma.X" + i, to_string(pair.x()));
    detail::note(trace, "gamma.Y" + i, to_string(pair.y()));
  }
  CnkSequence out(std::move(atoms), b.n(), k);
  detail::note(trace, "gamma", to_string(out.forests()));
  return out;
}

BnkForest gamma_inv(const CnkSequence& c, Trace* trace) {
  const unsigned k = c.k();
  BalancedPair pair = BalancedPair::empty(k);
  auto forests = c.forests();
  for (std::size_t i = forests.size(); i-- > 0;) {
    pair = g_step(KGoodForest(forests[i], k), pair);
    const std::string tag = std::to_string(i);
    detail::note(trace, "gamma_inv.X" + tag, to_string(pair.x()));
    detail::note(trace, "gamma_inv.Y" + tag, to_string(pair.y()));
  }
  if (pair.y().size() != k)
    throw ValidationError("sequence unwinds to " + std::to_string(pair.y().size()) +
                          " minimally rooted trees, expected k=" + std::to_string(k));
  BnkForest out(OrderedForest(concat(pair.x().trees(), pair.y().trees())), c.n(), k);
  detail::note(trace, "gamma_inv", to_string(out.forest()));
  return out;
}

}  // namespace mdtree
