#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>

#include "biseq/formula.hpp"
#include "biseq/label_tree.hpp"
#include "biseq/multiset.hpp"
#include "biseq/sequent.hpp"

namespace biseq {

struct LabelledFormula {
  Label label;
  Formula formula;

  bool operator==(const LabelledFormula& other) const = default;
  auto operator<=>(const LabelledFormula& other) const = default;
};

using LabelledContext = Multiset<LabelledFormula>;

// A labelled sequent: a label tree plus two multisets of labelled formulas,
// every label drawn from the tree's nodes.
struct LabelledSequent {
  LabelTree tree;
  LabelledContext ante;
  LabelledContext succ;

  bool well_formed() const {
    if (!tree.valid()) return false;
    for (const LabelledFormula& lf : ante)
      if (!tree.contains(lf.label)) return false;
    for (const LabelledFormula& lf : succ)
      if (!tree.contains(lf.label)) return false;
    return true;
  }

  // All formulas at label x on the given side.
  FormulaSet at(const Label& x, bool antecedent) const {
    FormulaSet out;
    for (const LabelledFormula& lf : (antecedent ? ante : succ))
      if (lf.label == x) out.add(lf.formula);
    return out;
  }

  // Restriction to the labels of a subtree.
  static LabelledContext restrict(const LabelledContext& ctx, const LabelTree& g) {
    LabelledContext out;
    for (const LabelledFormula& lf : ctx)
      if (g.contains(lf.label)) out.add(lf);
    return out;
  }

  std::set<std::string> atoms() const {
    std::set<std::string> out;
    for (const LabelledFormula& lf : ante) lf.formula.collect_atoms(out);
    for (const LabelledFormula& lf : succ) lf.formula.collect_atoms(out);
    return out;
  }

  bool operator==(const LabelledSequent& other) const = default;
  auto operator<=>(const LabelledSequent& other) const = default;
};

inline LabelledContext renamed(const LabelledContext& ctx, const std::map<Label, Label>& renaming) {
  LabelledContext out;
  for (const LabelledFormula& lf : ctx) {
    auto it = renaming.find(lf.label);
    out.add({it == renaming.end() ? lf.label : it->second, lf.formula});
  }
  return out;
}

// Structure-preserving relabelling; requires the map to be injective on the
// labels it touches (checked by callers that expose this to users).
inline LabelledSequent renamed(const LabelledSequent& ls, const std::map<Label, Label>& renaming) {
  return LabelledSequent{ls.tree.renamed(renaming), renamed(ls.ante, renaming), renamed(ls.succ, renaming)};
}

// Label x:Γ |- x:Δ on a singleton tree.
inline LabelledSequent label_sequent(const Sequent& s, const Label& x) {
  LabelledSequent ls;
  ls.tree = LabelTree::singleton(x);
  for (const Formula& f : s.ante) ls.ante.add({x, f});
  for (const Formula& f : s.succ) ls.succ.add({x, f});
  return ls;
}

}  // namespace biseq
