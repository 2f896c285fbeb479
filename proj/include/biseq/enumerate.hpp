#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "biseq/kripke.hpp"
#include "biseq/labelled.hpp"
#include "biseq/sequent.hpp"

namespace biseq {

namespace detail {

inline std::string shape_encoding(int n, const std::vector<std::pair<int, int>>& arcs, int node,
                                  int parent) {
  std::vector<std::string> children;
  for (auto [a, b] : arcs) {
    int nb = -1;
    char tag = ' ';
    if (a == node) { nb = b; tag = 'o'; }
    else if (b == node) { nb = a; tag = 'i'; }
    else continue;
    if (nb == parent) continue;
    children.push_back(tag + shape_encoding(n, arcs, nb, node));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const std::string& c : children) out += c;
  out += ")";
  return out;
}

// Canonical form of a directed tree up to isomorphism: minimum over all roots
// of the rooted encoding with arc directions as edge tags.
inline std::string shape_canon(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::string best;
  for (int r = 0; r < n; ++r) {
    std::string e = shape_encoding(n, arcs, r, -1);
    if (best.empty() || e < best) best = e;
  }
  return best;
}

}  // namespace detail

// All directed tree shapes on n unlabelled nodes, one representative per
// isomorphism class, in a fixed deterministic order.
inline std::vector<std::vector<std::pair<int, int>>> enumerate_tree_shapes(int n) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (n == 1) {
    out.push_back({});
    return out;
  }
  std::set<std::string> seen;
  // parent arrays: node i (1..n-1) attaches to some earlier node; each edge
  // then takes either orientation
  std::vector<int> parent(n, 0);
  std::vector<int> radix(n - 1);
  for (int i = 1; i < n; ++i) radix[i - 1] = i;
  std::vector<int> idx(n - 1, 0);
  while (true) {
    for (int i = 1; i < n; ++i) parent[i] = idx[i - 1];
    for (int bits = 0; bits < (1 << (n - 1)); ++bits) {
      std::vector<std::pair<int, int>> arcs;
      for (int i = 1; i < n; ++i) {
        if (bits & (1 << (i - 1))) arcs.push_back({i, parent[i]});
        else arcs.push_back({parent[i], i});
      }
      std::string canon = detail::shape_canon(n, arcs);
      if (seen.insert(canon).second) out.push_back(arcs);
    }
    int j = static_cast<int>(idx.size()) - 1;
    while (j >= 0 && idx[j] + 1 >= radix[j]) idx[j--] = 0;
    if (j < 0) break;
    ++idx[j];
  }
  return out;
}

// Upward-closed world sets of the accessibility preorder, as bitmasks in
// increasing numeric order.
inline std::vector<unsigned> enumerate_upsets(int n, const std::vector<std::vector<bool>>& leq) {
  std::vector<unsigned> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int w = 0; w < n && ok; ++w)
      if (mask & (1u << w))
        for (int v = 0; v < n && ok; ++v)
          if (leq[w][v] && !(mask & (1u << v))) ok = false;
    if (ok) out.push_back(mask);
  }
  return out;
}

struct Countermodel {
  KripkeTree tree;
  int world = 0;
};

// Walks every Kripke tree with up to max_worlds worlds over the given atoms,
// every monotone interpretation, every world, in a fixed order; yields each
// (tree, world) to the callback until it returns true.
template <typename Fn>
inline std::optional<Countermodel> scan_models(const std::set<std::string>& atom_set,
                                               int max_worlds, Fn&& falsifies) {
  std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  for (int n = 1; n <= max_worlds; ++n) {
    for (const auto& arcs : enumerate_tree_shapes(n)) {
      KripkeTree k;
      k.n = n;
      k.arcs = arcs;
      k.interp.assign(n, {});
      auto leq = k.accessibility();
      auto upsets = enumerate_upsets(n, leq);
      std::vector<std::size_t> choice(atoms.size(), 0);
      while (true) {
        for (int w = 0; w < n; ++w) k.interp[w].clear();
        for (std::size_t ai = 0; ai < atoms.size(); ++ai) {
          unsigned mask = upsets[choice[ai]];
          for (int w = 0; w < n; ++w)
            if (mask & (1u << w)) k.interp[w].insert(atoms[ai]);
        }
        for (int w = 0; w < n; ++w)
          if (falsifies(k, leq, w)) return Countermodel{k, w};
        if (atoms.empty()) break;
        int j = static_cast<int>(atoms.size()) - 1;
        while (j >= 0 && choice[j] + 1 >= upsets.size()) choice[j--] = 0;
        if (j < 0) break;
        ++choice[j];
      }
    }
  }
  return std::nullopt;
}

// Exhaustive small-model search for a countermodel of a sequent. A nullopt
// result means "no countermodel with up to max_worlds worlds", not validity.
inline std::optional<Countermodel> find_countermodel(const Sequent& s, int max_worlds) {
  return scan_models(s.atoms(), max_worlds,
                     [&](const KripkeTree& k, const std::vector<std::vector<bool>>& leq, int w) {
                       return !sequent_valid_in(k, leq, w, s);
                     });
}

struct LabelledCountermodel {
  KripkeTree tree;
  std::map<Label, int> assignment;
};

// Searches for a structure and arc-respecting assignment falsifying a
// labelled sequent.
inline std::optional<LabelledCountermodel> find_labelled_falsification(const LabelledSequent& ls,
                                                                       int max_worlds) {
  std::vector<Label> labels(ls.tree.nodes().begin(), ls.tree.nodes().end());
  std::optional<LabelledCountermodel> found;
  scan_models(ls.atoms(), max_worlds,
              [&](const KripkeTree& k, const std::vector<std::vector<bool>>& leq, int) {
                std::vector<int> v(labels.size(), 0);
                while (true) {
                  std::map<Label, int> assign;
                  for (std::size_t i = 0; i < labels.size(); ++i) assign[labels[i]] = v[i];
                  if (assignment_respects(k, leq, ls, assign) &&
                      !labelled_sequent_valid_in(k, leq, assign, ls)) {
                    found = LabelledCountermodel{k, assign};
                    return true;
                  }
                  int j = static_cast<int>(v.size()) - 1;
                  while (j >= 0 && v[j] + 1 >= k.n) v[j--] = 0;
                  if (j < 0) return false;
                  ++v[j];
                }
              });
  return found;
}

inline std::string print_countermodel(const Countermodel& cm) {
  const KripkeTree& k = cm.tree;
  std::string out = "worlds:";
  for (int w = 0; w < k.n; ++w) out += " " + k.world_name(w);
  out += "\narcs:";
  for (auto [a, b] : k.arcs) out += " " + k.world_name(a) + ">" + k.world_name(b);
  out += "\n";
  for (int w = 0; w < k.n; ++w) {
    out += k.world_name(w) + ":";
    for (const std::string& p : k.interp[w]) out += " " + p;
    out += "\n";
  }
  out += "at: " + k.world_name(cm.world) + "\n";
  return out;
}

}  // namespace biseq
