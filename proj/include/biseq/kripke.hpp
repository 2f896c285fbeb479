#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "biseq/formula.hpp"
#include "biseq/labelled.hpp"
#include "biseq/sequent.hpp"

namespace biseq {

// A finite Kripke tree: worlds 0..n-1, a tree-shaped one-step relation, and a
// monotone interpretation of atoms. Accessibility is the reflexive-transitive
// closure of the arcs.
struct KripkeTree {
  int n = 1;
  std::vector<std::pair<int, int>> arcs;
  std::vector<std::set<std::string>> interp;  // size n

  std::string world_name(int w) const { return "w" + std::to_string(w); }

  // w <= w' relation as one closure matrix row per world.
  std::vector<std::vector<bool>> accessibility() const {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int w = 0; w < n; ++w) leq[w][w] = true;
    for (auto [a, b] : arcs) leq[a][b] = true;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (leq[i][k])
          for (int j = 0; j < n; ++j)
            if (leq[k][j]) leq[i][j] = true;
    return leq;
  }

  bool well_formed() const {
    if (n < 1 || static_cast<int>(interp.size()) != n) return false;
    if (static_cast<int>(arcs.size()) != n - 1) return false;
    // undirected tree: n-1 arcs, connected, no self-loops or duplicates
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : arcs) {
      if (a < 0 || a >= n || b < 0 || b >= n || a == b) return false;
      if (!seen.insert({a, b}).second || seen.count({b, a})) return false;
    }
    std::vector<bool> vis(n, false);
    std::vector<int> stack{0};
    vis[0] = true;
    int cnt = 1;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (auto [a, b] : arcs) {
        int nb = -1;
        if (a == cur) nb = b;
        else if (b == cur) nb = a;
        else continue;
        if (!vis[nb]) {
          vis[nb] = true;
          ++cnt;
          stack.push_back(nb);
        }
      }
    }
    if (cnt != n) return false;
    // monotone interpretation
    auto leq = accessibility();
    for (int w = 0; w < n; ++w)
      for (int v = 0; v < n; ++v)
        if (leq[w][v])
          for (const std::string& p : interp[w])
            if (!interp[v].count(p)) return false;
    return true;
  }
};

// Truth at a world: implication quantifies over futures, exclusion over pasts.
inline bool eval(const KripkeTree& k, const std::vector<std::vector<bool>>& leq, int w,
                 const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return k.interp[w].count(f.atom_name()) > 0;
    case Formula::Kind::Top:
      return true;
    case Formula::Kind::Bot:
      return false;
    case Formula::Kind::And:
      return eval(k, leq, w, f.left()) && eval(k, leq, w, f.right());
    case Formula::Kind::Or:
      return eval(k, leq, w, f.left()) || eval(k, leq, w, f.right());
    case Formula::Kind::Impl: {
      for (int v = 0; v < k.n; ++v)
        if (leq[w][v] && eval(k, leq, v, f.left()) && !eval(k, leq, v, f.right())) return false;
      return true;
    }
    case Formula::Kind::Excl: {
      for (int v = 0; v < k.n; ++v)
        if (leq[v][w] && eval(k, leq, v, f.left()) && !eval(k, leq, v, f.right())) return true;
      return false;
    }
  }
  return false;
}

inline bool eval(const KripkeTree& k, int w, const Formula& f) {
  return eval(k, k.accessibility(), w, f);
}

// If all antecedent formulas hold at w, some succedent formula holds at w.
inline bool sequent_valid_in(const KripkeTree& k, const std::vector<std::vector<bool>>& leq,
                             int w, const Sequent& s) {
  for (const Formula& f : s.ante)
    if (!eval(k, leq, w, f)) return true;
  for (const Formula& f : s.succ)
    if (eval(k, leq, w, f)) return true;
  return false;
}

inline bool sequent_valid_in(const KripkeTree& k, int w, const Sequent& s) {
  return sequent_valid_in(k, k.accessibility(), w, s);
}

// Truth of a labelled sequent under a world assignment v; v must respect the
// arcs (xGy implies v(x) <= v(y)).
inline bool assignment_respects(const KripkeTree& k, const std::vector<std::vector<bool>>& leq,
                                const LabelledSequent& ls, const std::map<Label, int>& v) {
  for (const Arc& a : ls.tree.arcs()) {
    auto i = v.find(a.first), j = v.find(a.second);
    if (i == v.end() || j == v.end()) return false;
    if (!leq[i->second][j->second]) return false;
  }
  for (const Label& x : ls.tree.nodes())
    if (!v.count(x)) return false;
  return true;
}

inline bool labelled_sequent_valid_in(const KripkeTree& k,
                                      const std::vector<std::vector<bool>>& leq,
                                      const std::map<Label, int>& v, const LabelledSequent& ls) {
  for (const LabelledFormula& lf : ls.ante)
    if (!eval(k, leq, v.at(lf.label), lf.formula)) return true;
  for (const LabelledFormula& lf : ls.succ)
    if (eval(k, leq, v.at(lf.label), lf.formula)) return true;
  return false;
}

inline bool labelled_sequent_valid_in(const KripkeTree& k, const std::map<Label, int>& v,
                                      const LabelledSequent& ls) {
  return labelled_sequent_valid_in(k, k.accessibility(), v, ls);
}

}  // namespace biseq
