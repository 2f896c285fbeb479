#pragma once

#include <string>

#include "biseq/formula.hpp"
#include "biseq/labelled.hpp"
#include "biseq/nested.hpp"
#include "biseq/sequent.hpp"

namespace biseq {

namespace detail {

// Precedence, loosest to tightest: -> (right assoc), -< (left), |, &.
inline int prec_of(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Impl: return 0;
    case Formula::Kind::Excl: return 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    default: return 4;
  }
}

inline const char* op_text(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Impl: return " -> ";
    case Formula::Kind::Excl: return " -< ";
    case Formula::Kind::Or: return " | ";
    default: return " & ";
  }
}

inline void print_formula_rec(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom: out += f.atom_name(); return;
    case Formula::Kind::Top: out += 'T'; return;
    case Formula::Kind::Bot: out += 'F'; return;
    default: break;
  }
  int p = prec_of(f.kind());
  bool right_assoc = f.kind() == Formula::Kind::Impl;
  Formula l = f.left(), r = f.right();
  int pl = prec_of(l.kind()), pr = prec_of(r.kind());
  bool wrap_l = pl < p || (pl == p && right_assoc);
  bool wrap_r = pr < p || (pr == p && !right_assoc);
  if (wrap_l) out += '(';
  print_formula_rec(l, out);
  if (wrap_l) out += ')';
  out += op_text(f.kind());
  if (wrap_r) out += '(';
  print_formula_rec(r, out);
  if (wrap_r) out += ')';
}

}  // namespace detail

// Minimal-parentheses text; reparses to the same tree.
inline std::string print_formula(const Formula& f) {
  std::string out;
  detail::print_formula_rec(f, out);
  return out;
}

inline std::string print_sequent(const Sequent& s) {
  std::string out;
  bool first = true;
  for (const Formula& f : s.ante) {
    if (!first) out += ", ";
    out += print_formula(f);
    first = false;
  }
  out += first ? "|-" : " |-";
  first = true;
  for (const Formula& f : s.succ) {
    out += first ? " " : ", ";
    out += print_formula(f);
    first = false;
  }
  return out;
}

inline std::string print_nested_sequent(const NestedSequent& s);

inline std::string print_nested_member(const NestedMember& m) {
  if (m.is_formula()) return print_formula(m.formula());
  return "[" + print_nested_sequent(m.sequent()) + "]";
}

inline std::string print_nested_sequent(const NestedSequent& s) {
  std::string out;
  bool first = true;
  for (const NestedMember& m : s.ante()) {
    if (!first) out += ", ";
    out += print_nested_member(m);
    first = false;
  }
  out += first ? "|-" : " |-";
  first = true;
  for (const NestedMember& m : s.succ()) {
    out += first ? " " : ", ";
    out += print_nested_member(m);
    first = false;
  }
  return out;
}

inline std::string print_label_tree(const LabelTree& t) {
  std::string out = "[";
  if (t.arcs().empty()) {
    out += *t.nodes().begin();
  } else {
    bool first = true;
    for (const Arc& a : t.arcs()) {
      if (!first) out += ", ";
      out += a.first + ">" + a.second;
      first = false;
    }
  }
  out += "]";
  return out;
}

inline std::string print_labelled_formula(const LabelledFormula& lf) {
  return lf.label + ":" + print_formula(lf.formula);
}

inline std::string print_labelled_sequent(const LabelledSequent& ls) {
  std::string out = print_label_tree(ls.tree);
  bool first = true;
  for (const LabelledFormula& lf : ls.ante) {
    out += first ? " " : ", ";
    out += print_labelled_formula(lf);
    first = false;
  }
  out += " |-";
  first = true;
  for (const LabelledFormula& lf : ls.succ) {
    out += first ? " " : ", ";
    out += print_labelled_formula(lf);
    first = false;
  }
  return out;
}

}  // namespace biseq
