#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace biseq {

using Label = std::string;
using Arc = std::pair<Label, Label>;  // first -> second

// A label tree: a directed graph whose underlying undirected graph is a tree.
// Arcs denote one-step accessibility between the worlds the labels stand for.
class LabelTree {
public:
  LabelTree() = default;

  static LabelTree singleton(Label x) {
    LabelTree t;
    t.nodes_.insert(std::move(x));
    return t;
  }

  // Returns nullopt unless (nodes, arcs) forms an undirected tree covering
  // exactly the given node set.
  static std::optional<LabelTree> make(std::set<Label> nodes, std::set<Arc> arcs) {
    LabelTree t;
    t.nodes_ = std::move(nodes);
    t.arcs_ = std::move(arcs);
    if (!t.valid()) return std::nullopt;
    return t;
  }

  const std::set<Label>& nodes() const { return nodes_; }
  const std::set<Arc>& arcs() const { return arcs_; }

  bool contains(const Label& x) const { return nodes_.count(x) > 0; }
  bool has_arc(const Label& x, const Label& y) const { return arcs_.count({x, y}) > 0; }
  std::size_t size() const { return nodes_.size(); }

  // No arc into x / out of x.
  bool is_minimal(const Label& x) const {
    for (const Arc& a : arcs_)
      if (a.second == x) return false;
    return true;
  }
  bool is_maximal(const Label& x) const {
    for (const Arc& a : arcs_)
      if (a.first == x) return false;
    return true;
  }

  std::vector<Arc> arcs_at(const Label& x) const {
    std::vector<Arc> out;
    for (const Arc& a : arcs_)
      if (a.first == x || a.second == x) out.push_back(a);
    return out;
  }

  // Adds a fresh leaf above (x -> y) or below (y -> x) an existing node x.
  LabelTree with_leaf_above(const Label& x, const Label& y) const {
    LabelTree t = *this;
    t.nodes_.insert(y);
    t.arcs_.insert({x, y});
    return t;
  }
  LabelTree with_leaf_below(const Label& x, const Label& y) const {
    LabelTree t = *this;
    t.nodes_.insert(y);
    t.arcs_.insert({y, x});
    return t;
  }

  // Deletes node y (which must exist) and redirects every arc touching y to
  // touch x instead. Used by the nodemerge rules.
  LabelTree merged(const Label& y, const Label& x) const {
    LabelTree t;
    t.nodes_ = nodes_;
    t.nodes_.erase(y);
    for (Arc a : arcs_) {
      if (a.first == y) a.first = x;
      if (a.second == y) a.second = x;
      if (a.first != a.second) t.arcs_.insert(a);
    }
    return t;
  }

  LabelTree renamed(const std::map<Label, Label>& renaming) const {
    auto ren = [&](const Label& l) {
      auto it = renaming.find(l);
      return it == renaming.end() ? l : it->second;
    };
    LabelTree t;
    for (const Label& n : nodes_) t.nodes_.insert(ren(n));
    for (const Arc& a : arcs_) t.arcs_.insert({ren(a.first), ren(a.second)});
    return t;
  }

  // The subtree on the far side of arc (a.first, a.second) as seen from
  // `from` (one endpoint): component of the other endpoint after the arc is
  // removed.
  LabelTree component_without_arc(const Arc& cut, const Label& keep) const {
    std::set<Label> comp;
    std::vector<Label> stack{keep};
    comp.insert(keep);
    while (!stack.empty()) {
      Label cur = stack.back();
      stack.pop_back();
      for (const Arc& a : arcs_) {
        if (a == cut) continue;
        Label nb;
        if (a.first == cur) nb = a.second;
        else if (a.second == cur) nb = a.first;
        else continue;
        if (comp.insert(nb).second) stack.push_back(nb);
      }
    }
    LabelTree t;
    t.nodes_ = comp;
    for (const Arc& a : arcs_)
      if (a != cut && comp.count(a.first) && comp.count(a.second)) t.arcs_.insert(a);
    return t;
  }

  // Unique undirected path between two nodes, as the node sequence.
  std::vector<Label> path(const Label& from, const Label& to) const {
    std::map<Label, Label> parent;
    std::vector<Label> queue{from};
    parent[from] = from;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Label cur = queue[i];
      if (cur == to) break;
      for (const Arc& a : arcs_) {
        Label nb;
        if (a.first == cur) nb = a.second;
        else if (a.second == cur) nb = a.first;
        else continue;
        if (!parent.count(nb)) {
          parent[nb] = cur;
          queue.push_back(nb);
        }
      }
    }
    std::vector<Label> out;
    if (!parent.count(to)) return out;
    for (Label cur = to; ; cur = parent[cur]) {
      out.push_back(cur);
      if (cur == from) break;
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  bool valid() const {
    if (nodes_.empty()) return false;
    for (const Arc& a : arcs_) {
      if (a.first == a.second) return false;
      if (!nodes_.count(a.first) || !nodes_.count(a.second)) return false;
      if (arcs_.count({a.second, a.first})) return false;
    }
    if (arcs_.size() != nodes_.size() - 1) return false;
    // connectivity
    std::set<Label> seen;
    std::vector<Label> stack{*nodes_.begin()};
    seen.insert(*nodes_.begin());
    while (!stack.empty()) {
      Label cur = stack.back();
      stack.pop_back();
      for (const Arc& a : arcs_) {
        Label nb;
        if (a.first == cur) nb = a.second;
        else if (a.second == cur) nb = a.first;
        else continue;
        if (seen.insert(nb).second) stack.push_back(nb);
      }
    }
    return seen.size() == nodes_.size();
  }

  bool operator==(const LabelTree& other) const = default;
  auto operator<=>(const LabelTree& other) const = default;

private:
  std::set<Label> nodes_;
  std::set<Arc> arcs_;
};

}  // namespace biseq
