#pragma once

#include <cassert>
#include <compare>
#include <memory>
#include <set>
#include <string>

#include "biseq/formula.hpp"
#include "biseq/multiset.hpp"
#include "biseq/sequent.hpp"

namespace biseq {

class NestedSequent;

// A member of a nested context: either a plain formula or a whole nested
// sequent. Formulas order before nested members, which keeps canonical
// multiset order stable when formulas change around members.
class NestedMember {
public:
  /*implicit*/ NestedMember(Formula f);
  /*implicit*/ NestedMember(NestedSequent s);

  bool is_formula() const { return static_cast<bool>(formula_); }
  const Formula& formula() const {
    assert(is_formula());
    return *formula_;
  }
  const NestedSequent& sequent() const {
    assert(!is_formula());
    return *sequent_;
  }

  bool operator==(const NestedMember& other) const;
  bool operator<(const NestedMember& other) const;

private:
  std::shared_ptr<const Formula> formula_;
  std::shared_ptr<const NestedSequent> sequent_;
};

using NestedContext = Multiset<NestedMember>;

// Nested sequents: each side is a multiset whose members may themselves be
// sequents. Contexts are quotiented to multisets, so equality is recursive
// multiset equality.
class NestedSequent {
public:
  NestedSequent() = default;
  NestedSequent(NestedContext ante, NestedContext succ)
      : ante_(std::move(ante)), succ_(std::move(succ)) {}

  // Lifts a standard sequent (every member a formula).
  static NestedSequent from_sequent(const Sequent& s) {
    NestedContext a, b;
    for (const Formula& f : s.ante) a.add(NestedMember(f));
    for (const Formula& f : s.succ) b.add(NestedMember(f));
    return NestedSequent(std::move(a), std::move(b));
  }

  const NestedContext& ante() const { return ante_; }
  const NestedContext& succ() const { return succ_; }

  bool is_flat() const {
    for (const NestedMember& m : ante_)
      if (!m.is_formula()) return false;
    for (const NestedMember& m : succ_)
      if (!m.is_formula()) return false;
    return true;
  }

  // Succeeds only on flat sequents.
  Sequent to_sequent() const {
    assert(is_flat());
    Sequent s;
    for (const NestedMember& m : ante_) s.ante.add(m.formula());
    for (const NestedMember& m : succ_) s.succ.add(m.formula());
    return s;
  }

  bool operator==(const NestedSequent& other) const {
    return ante_ == other.ante_ && succ_ == other.succ_;
  }
  bool operator<(const NestedSequent& other) const {
    if (ante_ != other.ante_) return ante_ < other.ante_;
    return succ_ < other.succ_;
  }

  std::set<std::string> atoms() const {
    std::set<std::string> out;
    collect_atoms(out);
    return out;
  }

  void collect_atoms(std::set<std::string>& out) const {
    for (const NestedMember& m : ante_)
      if (m.is_formula()) m.formula().collect_atoms(out);
      else m.sequent().collect_atoms(out);
    for (const NestedMember& m : succ_)
      if (m.is_formula()) m.formula().collect_atoms(out);
      else m.sequent().collect_atoms(out);
  }

  int nesting_depth() const {
    int d = 0;
    for (const NestedMember& m : ante_)
      if (!m.is_formula()) d = std::max(d, m.sequent().nesting_depth() + 1);
    for (const NestedMember& m : succ_)
      if (!m.is_formula()) d = std::max(d, m.sequent().nesting_depth() + 1);
    return d;
  }

private:
  NestedContext ante_;
  NestedContext succ_;
};

inline NestedMember::NestedMember(Formula f)
    : formula_(std::make_shared<const Formula>(std::move(f))) {}

inline NestedMember::NestedMember(NestedSequent s)
    : sequent_(std::make_shared<const NestedSequent>(std::move(s))) {}

inline bool NestedMember::operator==(const NestedMember& other) const {
  if (is_formula() != other.is_formula()) return false;
  if (is_formula()) return formula() == other.formula();
  return sequent() == other.sequent();
}

inline bool NestedMember::operator<(const NestedMember& other) const {
  if (is_formula() != other.is_formula()) return is_formula();
  if (is_formula()) return formula() < other.formula();
  return sequent() < other.sequent();
}

}  // namespace biseq
