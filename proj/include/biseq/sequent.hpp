#pragma once

#include <compare>
#include <set>
#include <string>

#include "biseq/formula.hpp"
#include "biseq/multiset.hpp"

namespace biseq {

using FormulaSet = Multiset<Formula>;

// A standard sequent: a pair of formula multisets.
struct Sequent {
  FormulaSet ante;
  FormulaSet succ;

  bool operator==(const Sequent& other) const = default;
  auto operator<=>(const Sequent& other) const = default;

  std::set<std::string> atoms() const {
    std::set<std::string> out;
    for (const Formula& f : ante) f.collect_atoms(out);
    for (const Formula& f : succ) f.collect_atoms(out);
    return out;
  }
};

}  // namespace biseq
