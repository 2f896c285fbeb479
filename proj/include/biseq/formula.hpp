#pragma once

#include <cassert>
#include <compare>
#include <memory>
#include <set>
#include <string>
#include <utility>

namespace biseq {

// Propositional formulas of bi-intuitionistic logic: atoms, the constants,
// conjunction, disjunction, implication and exclusion. Immutable trees with
// shared subterms; equality and ordering are structural.
class Formula {
public:
  enum class Kind { Atom, Top, Bot, And, Or, Impl, Excl };

  static Formula atom(std::string name) {
    return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), nullptr, nullptr}));
  }
  static Formula top() { return Formula(std::make_shared<const Node>(Node{Kind::Top, {}, nullptr, nullptr})); }
  static Formula bot() { return Formula(std::make_shared<const Node>(Node{Kind::Bot, {}, nullptr, nullptr})); }
  static Formula conn(Kind k, Formula l, Formula r) {
    assert(k == Kind::And || k == Kind::Or || k == Kind::Impl || k == Kind::Excl);
    return Formula(std::make_shared<const Node>(Node{k, {}, l.node_, r.node_}));
  }
  static Formula conj(Formula l, Formula r) { return conn(Kind::And, std::move(l), std::move(r)); }
  static Formula disj(Formula l, Formula r) { return conn(Kind::Or, std::move(l), std::move(r)); }
  static Formula impl(Formula l, Formula r) { return conn(Kind::Impl, std::move(l), std::move(r)); }
  static Formula excl(Formula l, Formula r) { return conn(Kind::Excl, std::move(l), std::move(r)); }

  Kind kind() const { return node_->kind; }
  bool is_binary() const {
    Kind k = kind();
    return k == Kind::And || k == Kind::Or || k == Kind::Impl || k == Kind::Excl;
  }
  const std::string& atom_name() const {
    assert(kind() == Kind::Atom);
    return node_->name;
  }
  Formula left() const {
    assert(is_binary());
    return Formula(node_->l);
  }
  Formula right() const {
    assert(is_binary());
    return Formula(node_->r);
  }

  bool operator==(const Formula& other) const { return compare(*this, other) == 0; }

  std::strong_ordering operator<=>(const Formula& other) const {
    int c = compare(*this, other);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Atoms first (lexicographic), then T, F, and the connectives; binary nodes
  // compare left subtree before right.
  static int compare(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return 0;
    int ka = static_cast<int>(a.kind()), kb = static_cast<int>(b.kind());
    if (ka != kb) return ka < kb ? -1 : 1;
    switch (a.kind()) {
      case Kind::Atom:
        return a.node_->name.compare(b.node_->name);
      case Kind::Top:
      case Kind::Bot:
        return 0;
      default: {
        int c = compare(a.left(), b.left());
        if (c != 0) return c;
        return compare(a.right(), b.right());
      }
    }
  }

  void collect_atoms(std::set<std::string>& out) const {
    switch (kind()) {
      case Kind::Atom: out.insert(node_->name); break;
      case Kind::Top:
      case Kind::Bot: break;
      default:
        left().collect_atoms(out);
        right().collect_atoms(out);
    }
  }

  int depth() const {
    if (!is_binary()) return 1;
    return 1 + std::max(left().depth(), right().depth());
  }

private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> l, r;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

}  // namespace biseq
