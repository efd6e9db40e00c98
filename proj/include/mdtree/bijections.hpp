#pragma once

#include <string>
#include <vector>

#include "mdtree/sets.hpp"
#include "mdtree/tree.hpp"

namespace mdtree {

// The chain T(n,k) -> A(n,k) -> B(n,k) -> C(n,k) -> F(n,k) and its helper
// bijections. Every public map validates the membership of its argument and
// throws ValidationError otherwise; all of them are pure.

/// Stage-tagged intermediate objects in canonical text form. The four main
/// maps and the composites append to a trace when one is passed.
struct TraceLine {
  std::string stage;
  std::string text;
};
using Trace = std::vector<TraceLine>;

// --- alpha: trees <-> cycles of minimally rooted trees ----------------------

/// Works on any label set: the vertices of md_subtree(t) are threaded into
/// a cycle (each one inserted, largest first, right after its parent), and
/// each is then replaced by its hanging component.
TreeCycle alpha_cycle(const RootedTree& t);
/// Inverse of alpha_cycle. Throws if some tree is not minimally rooted.
RootedTree alpha_cycle_inv(const TreeCycle& c);
/// Roots of the cycle read from the largest root onwards.
std::vector<Label> cycle_root_word(const TreeCycle& c);

AnkCycle alpha(const TnkTree& t, Trace* trace = nullptr);
TnkTree alpha_inv(const AnkCycle& c, Trace* trace = nullptr);

// --- phi and rho ------------------------------------------------------------

/// Minimally rooted tree on A -> tree on A in which max(A) is a leaf.
RootedTree phi(const RootedTree& t);
RootedTree phi_inv(const RootedTree& t);

/// Tree in which its largest label M is a leaf -> ordered forest on the
/// other labels: the components hanging off the root-to-M path, in path
/// order.
OrderedForest rho(const RootedTree& t);
/// Chains the forest's roots into a path and hangs `max_label` at its end.
/// `max_label` must exceed every label of `f`.
RootedTree rho_inv(const OrderedForest& f, Label max_label);

// --- beta -------------------------------------------------------------------

BnkForest beta(const AnkCycle& c, Trace* trace = nullptr);
AnkCycle beta_inv(const BnkForest& f, Trace* trace = nullptr);

// --- balanced pairs and gamma ----------------------------------------------

struct StepResult {
  KGoodForest atom;
  BalancedPair rest;

  friend bool operator==(const StepResult&, const StepResult&) = default;
};

/// Splits one k-good forest off a nonempty balanced pair.
StepResult f_step(const BalancedPair& p);
/// Inverse of f_step. Throws if the labels of `atom` and `rest` overlap.
BalancedPair g_step(const KGoodForest& atom, const BalancedPair& rest);

CnkSequence gamma(const BnkForest& b, Trace* trace = nullptr);
BnkForest gamma_inv(const CnkSequence& c, Trace* trace = nullptr);

// --- psi and zeta -----------------------------------------------------------

/// k-good forest with at least two vertices -> tree on the same labels in
/// which every special vertex has a child.
RootedTree psi(const KGoodForest& f);
KGoodForest psi_inv(const RootedTree& t, unsigned k);

FnkTree zeta(const CnkSequence& c, Trace* trace = nullptr);
CnkSequence zeta_inv(const FnkTree& t, Trace* trace = nullptr);

// --- composites -------------------------------------------------------------

/// zeta . gamma . beta . alpha, and its inverse.
FnkTree compose_t_to_f(const TnkTree& t, Trace* trace = nullptr);
TnkTree compose_f_to_t(const FnkTree& f, Trace* trace = nullptr);

}  // namespace mdtree
