#pragma once

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "biseq/formula.hpp"
#include "biseq/labelled.hpp"
#include "biseq/nested.hpp"
#include "biseq/sequent.hpp"

namespace biseq {

struct ParseError : std::runtime_error {
  ParseError(std::size_t pos, const std::string& msg)
      : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + msg),
        position(pos) {}
  std::size_t position;
};

namespace detail {

// Shared hand-rolled lexer/parser for formulas, sequents, nested sequents and
// labelled sequents. Atoms and labels are [a-z][a-zA-Z0-9_]*; T and F are the
// constants. ! and ~ are parser sugar for the two negations.
class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula formula() {
    Formula f = parse_impl();
    expect_end();
    return f;
  }

  Sequent sequent() {
    Sequent s;
    s.ante = formula_list();
    turnstile();
    s.succ = formula_list();
    expect_end();
    return s;
  }

  NestedSequent nested_sequent() {
    NestedSequent s = nested_body();
    expect_end();
    return s;
  }

  LabelledSequent labelled_sequent() {
    LabelledSequent ls;
    skip_ws();
    if (!eat('[')) fail("expected label tree '[...]'");
    std::set<Label> nodes;
    std::set<Arc> arcs;
    while (true) {
      Label a = ident("label");
      nodes.insert(a);
      skip_ws();
      if (eat('>')) {
        Label b = ident("label");
        nodes.insert(b);
        if (!arcs.insert({a, b}).second) fail("duplicate arc");
      }
      skip_ws();
      if (eat(',')) continue;
      if (eat(']')) break;
      fail("expected ',' or ']' in label tree");
    }
    auto tree = LabelTree::make(std::move(nodes), std::move(arcs));
    if (!tree) fail("label tree is not an undirected tree");
    ls.tree = *tree;
    ls.ante = labelled_list();
    turnstile();
    ls.succ = labelled_list();
    expect_end();
    for (const LabelledFormula& lf : ls.ante)
      if (!ls.tree.contains(lf.label)) fail("label '" + lf.label + "' not in tree");
    for (const LabelledFormula& lf : ls.succ)
      if (!ls.tree.contains(lf.label)) fail("label '" + lf.label + "' not in tree");
    return ls;
  }

private:
  NestedSequent nested_body() {
    NestedContext a = nested_list();
    turnstile();
    NestedContext b = nested_list();
    return NestedSequent(std::move(a), std::move(b));
  }

  NestedContext nested_list() {
    NestedContext ctx;
    skip_ws();
    if (at_list_end()) return ctx;
    while (true) {
      skip_ws();
      if (peek() == '[') {
        ++pos_;
        NestedSequent inner = nested_body_until_bracket();
        ctx.add(NestedMember(std::move(inner)));
      } else {
        ctx.add(NestedMember(parse_impl()));
      }
      skip_ws();
      if (eat(',')) continue;
      break;
    }
    return ctx;
  }

  NestedSequent nested_body_until_bracket() {
    NestedContext a = nested_list();
    turnstile();
    NestedContext b = nested_list();
    skip_ws();
    if (!eat(']')) fail("expected ']' closing nested sequent");
    return NestedSequent(std::move(a), std::move(b));
  }

  FormulaSet formula_list() {
    FormulaSet out;
    skip_ws();
    if (at_list_end()) return out;
    while (true) {
      out.add(parse_impl());
      skip_ws();
      if (eat(',')) continue;
      break;
    }
    return out;
  }

  LabelledContext labelled_list() {
    LabelledContext out;
    skip_ws();
    if (at_list_end()) return out;
    while (true) {
      Label l = ident("label");
      skip_ws();
      if (!eat(':')) fail("expected ':' after label");
      out.add({std::move(l), parse_impl()});
      skip_ws();
      if (eat(',')) continue;
      break;
    }
    return out;
  }

  // True when a comma list may legitimately be empty here.
  bool at_list_end() {
    skip_ws();
    if (pos_ >= text_.size()) return true;
    char c = peek();
    if (c == ']') return true;
    return c == '|' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-';
  }

  void turnstile() {
    skip_ws();
    if (pos_ + 1 < text_.size() && text_[pos_] == '|' && text_[pos_ + 1] == '-') {
      pos_ += 2;
      return;
    }
    fail("expected '|-'");
  }

  Formula parse_impl() {
    Formula l = parse_excl();
    skip_ws();
    if (op2('-', '>')) return Formula::impl(std::move(l), parse_impl());
    return l;
  }

  Formula parse_excl() {
    Formula l = parse_or();
    while (true) {
      skip_ws();
      if (op2('-', '<')) l = Formula::excl(std::move(l), parse_or());
      else return l;
    }
  }

  Formula parse_or() {
    Formula l = parse_and();
    while (true) {
      skip_ws();
      // '|' only when not the turnstile
      if (pos_ < text_.size() && text_[pos_] == '|' &&
          !(pos_ + 1 < text_.size() && text_[pos_ + 1] == '-')) {
        ++pos_;
        l = Formula::disj(std::move(l), parse_and());
      } else {
        return l;
      }
    }
  }

  Formula parse_and() {
    Formula l = parse_unary();
    while (true) {
      skip_ws();
      if (eat('&')) l = Formula::conj(std::move(l), parse_unary());
      else return l;
    }
  }

  Formula parse_unary() {
    skip_ws();
    if (eat('!')) return Formula::impl(parse_unary(), Formula::bot());
    if (eat('~')) return Formula::excl(Formula::top(), parse_unary());
    return parse_primary();
  }

  Formula parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input, expected formula");
    char c = peek();
    if (c == '(') {
      ++pos_;
      Formula f = parse_impl();
      skip_ws();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    if (c == 'T') {
      ++pos_;
      check_ident_break();
      return Formula::top();
    }
    if (c == 'F') {
      ++pos_;
      check_ident_break();
      return Formula::bot();
    }
    if (std::islower(static_cast<unsigned char>(c))) return Formula::atom(ident("atom"));
    fail(std::string("unexpected character '") + c + "'");
  }

  void check_ident_break() {
    if (pos_ < text_.size()) {
      char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
        fail("identifiers may not start with an uppercase letter");
    }
  }

  std::string ident(const char* what) {
    skip_ws();
    if (pos_ >= text_.size() || !std::islower(static_cast<unsigned char>(peek())))
      fail(std::string("expected ") + what);
    std::size_t start = pos_;
    ++pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool op2(char a, char b) {
    if (pos_ + 1 < text_.size() && text_[pos_] == a && text_[pos_ + 1] == b) {
      pos_ += 2;
      return true;
    }
    return false;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect_end() {
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Formula parse_formula(std::string_view text) { return detail::Parser(text).formula(); }
inline Sequent parse_sequent(std::string_view text) { return detail::Parser(text).sequent(); }
inline NestedSequent parse_nested_sequent(std::string_view text) {
  return detail::Parser(text).nested_sequent();
}
inline LabelledSequent parse_labelled_sequent(std::string_view text) {
  return detail::Parser(text).labelled_sequent();
}

}  // namespace biseq
