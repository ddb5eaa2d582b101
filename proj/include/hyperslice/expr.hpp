/// @file expr.hpp
/// @brief Expression grammar for polynomials: parser with source spans,
/// canonical printer and lowering to slice or coordinate polynomials.
///
///   poly   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' nat)?
///   atom   := 'x' | 'x' index | 'x_' index | basis | rational | '(' poly ')'
///
/// `*` associates left. Basis literals are i, j, k for quaternions and
/// e<digits> otherwise. Columns are 1-based.

#pragma once

#include "hyperslice/slice_poly.hpp"

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace hyperslice {

/// Inclusive 1-based column range.
struct Span {
  int begin = 1;
  int end = 1;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { variable, coordinate, basis, rational, sum, difference, product, power, negate };
  Kind kind = Kind::variable;
  Span span;
  int index = 0;        // coordinate
  std::string label;    // basis
  Rational value;       // rational literal, non-negative
  int exponent = 0;     // power
  ExprPtr lhs, rhs;     // binary nodes; negate and power use lhs
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int column)
      : Error("syntax error at column " + std::to_string(column) + ": " + what), column_(column) {}
  int column() const { return column_; }

 private:
  int column_;
};

namespace detail {

class Parser {
 public:
  Parser(std::string_view text, const AlgebraTable* table) : s_(text), table_(table) {}

  ExprPtr run() {
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    auto e = poly();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, static_cast<int>(pos_) + 1);
  }
  int col() const { return static_cast<int>(pos_) + 1; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  static ExprPtr binary(Expr::Kind k, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->span = {a->span.begin, b->span.end};
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
  }
  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  ExprPtr poly() {
    skip();
    ExprPtr e;
    if (peek('-')) {
      const int c = col();
      ++pos_;
      auto t = term();
      auto n = std::make_shared<Expr>();
      n->kind = Expr::Kind::negate;
      n->span = {c, t->span.end};
      n->lhs = std::move(t);
      e = std::move(n);
    } else {
      e = term();
    }
    while (peek('+') || peek('-')) {
      const auto k = s_[pos_] == '+' ? Expr::Kind::sum : Expr::Kind::difference;
      ++pos_;
      e = binary(k, std::move(e), term());
    }
    return e;
  }

  ExprPtr term() {
    auto e = factor();
    while (peek('*')) {
      ++pos_;
      e = binary(Expr::Kind::product, std::move(e), factor());
    }
    return e;
  }

  ExprPtr factor() {
    auto a = atom();
    if (!peek('^')) return a;
    ++pos_;
    skip();
    const int c = col();
    const std::string d = digits();
    if (d.empty()) fail("expected a natural exponent after '^'");
    if (d.size() > 4) throw ParseError("exponent too large", c);
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::power;
    e->span = {a->span.begin, col() - 1};
    e->exponent = std::stoi(d);
    e->lhs = std::move(a);
    return e;
  }

  ExprPtr atom() {
    skip();
    if (pos_ == s_.size()) fail("unexpected end of input");
    const int c = col();
    auto e = std::make_shared<Expr>();
    const char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      auto inner = poly();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string text = digits();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        const std::string den = digits();
        if (den.empty()) fail("expected a denominator");
        if (den.find_first_not_of('0') == std::string::npos)
          throw ParseError("zero denominator", c);
        text += "/" + den;
      }
      e->kind = Expr::Kind::rational;
      e->value = parse_rational(text);
      e->span = {c, col() - 1};
      return e;
    }
    if (!std::isalpha(static_cast<unsigned char>(ch))) fail(std::string("unexpected '") + ch + "'");
    std::size_t end = pos_;
    while (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) ++end;
    const std::string word(s_.substr(pos_, end - pos_));
    pos_ = end;
    e->span = {c, col() - 1};
    auto all_digits = [](std::string_view w) {
      return !w.empty() && w.find_first_not_of("0123456789") == std::string_view::npos;
    };
    if (word == "x") {
      e->kind = Expr::Kind::variable;
      return e;
    }
    if (word[0] == 'x') {
      std::string_view rest = std::string_view(word).substr(1);
      if (!rest.empty() && rest[0] == '_') rest.remove_prefix(1);
      if (!all_digits(rest) || rest.size() > 2) throw ParseError("unknown identifier '" + word + "'", c);
      e->kind = Expr::Kind::coordinate;
      e->index = std::stoi(std::string(rest));
      return e;
    }
    const bool quaternion_literal = word == "i" || word == "j" || word == "k";
    const bool e_literal = word[0] == 'e' && all_digits(std::string_view(word).substr(1));
    if (!quaternion_literal && !e_literal) throw ParseError("unknown identifier '" + word + "'", c);
    if (table_) {
      const bool family_ok = (table_->kind() == AlgebraKind::quaternion) == quaternion_literal;
      if (!family_ok || !table_->index_of(word))
        throw ParseError("unknown basis literal '" + word + "' for algebra " + table_->spec(), c);
    }
    e->kind = Expr::Kind::basis;
    e->label = word;
    return e;
  }

  std::string_view s_;
  const AlgebraTable* table_;
  std::size_t pos_ = 0;
};

inline int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::sum:
    case Expr::Kind::difference:
    case Expr::Kind::negate:
      return 1;
    case Expr::Kind::product:
      return 2;
    case Expr::Kind::power:
      return 3;
    default:
      return 4;
  }
}

}  // namespace detail

/// Parses `text`. With a table, basis literals are checked against it.
inline ExprPtr parse(std::string_view text, const AlgebraPtr& table = nullptr) {
  return detail::Parser(text, table.get()).run();
}

/// Printed form; parse(to_string(e)) rebuilds the same tree.
inline std::string to_string(const Expr& e) {
  using K = Expr::Kind;
  auto wrap = [](const Expr& sub, bool paren) {
    return paren ? "(" + to_string(sub) + ")" : to_string(sub);
  };
  switch (e.kind) {
    case K::variable:
      return "x";
    case K::coordinate:
      return "x" + std::to_string(e.index);
    case K::basis:
      return e.label;
    case K::rational:
      return to_string(e.value);
    case K::negate:
      return "-" + wrap(*e.lhs, detail::precedence(*e.lhs) < 2);
    case K::sum:
    case K::difference:
      return wrap(*e.lhs, false) + (e.kind == K::sum ? " + " : " - ") +
             wrap(*e.rhs, detail::precedence(*e.rhs) < 2);
    case K::product:
      return wrap(*e.lhs, detail::precedence(*e.lhs) < 2) + "*" +
             wrap(*e.rhs, detail::precedence(*e.rhs) < 3);
    case K::power:
      return wrap(*e.lhs, detail::precedence(*e.lhs) < 4) + "^" + std::to_string(e.exponent);
  }
  return {};
}

/// Structural equality of trees, spans ignored.
inline bool same_tree(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.index != b.index || a.label != b.label || a.value != b.value ||
      a.exponent != b.exponent)
    return false;
  auto same_child = [](const ExprPtr& x, const ExprPtr& y) {
    if (!x || !y) return !x && !y;
    return same_tree(*x, *y);
  };
  return same_child(a.lhs, b.lhs) && same_child(a.rhs, b.rhs);
}

class LowerError : public Error {
 public:
  LowerError(const std::string& what, Span span) : Error(what), span_(span) {}
  Span span() const { return span_; }

 private:
  Span span_;
};

namespace detail {

inline std::string describe(const Expr& e) {
  return "'" + to_string(e) + "' (columns " + std::to_string(e.span.begin) + "-" +
         std::to_string(e.span.end) + ")";
}

[[noreturn]] inline void not_slice(const Expr& e, const std::string& why) {
  throw LowerError("not a slice polynomial: " + describe(e) + ": " + why, e.span);
}

inline AlgElement basis_element(const Expr& e, const AlgebraPtr& table) {
  const auto idx = table->index_of(e.label);
  if (!idx)
    throw LowerError("unknown basis literal " + describe(e) + " for algebra " + table->spec(), e.span);
  return AlgElement::basis(table, *idx);
}

inline AlgElement element_power(const AlgElement& a, int n, const AlgebraPtr& table) {
  AlgElement r = AlgElement::scalar(table, 1);
  for (int i = 0; i < n; ++i) r = r * a;
  return r;
}

/// Either a constant or a slice polynomial during slice-mode lowering.
struct SliceValue {
  std::optional<AlgElement> constant;
  std::optional<SlicePoly> poly;

  SlicePoly as_poly(const SubspacePtr& sub) const {
    if (poly) return *poly;
    return SlicePoly(sub, {*constant});
  }
};

inline SliceValue lower_slice(const Expr& e, const SubspacePtr& sub) {
  using K = Expr::Kind;
  const auto& table = sub->table();
  switch (e.kind) {
    case K::variable:
      return {std::nullopt, SlicePoly::monomial(sub, 1, sub->one())};
    case K::coordinate:
      not_slice(e, "coordinate variables are not allowed in slice mode");
    case K::basis:
      return {basis_element(e, table), std::nullopt};
    case K::rational:
      return {sub->scalar(e.value), std::nullopt};
    case K::negate: {
      auto v = lower_slice(*e.lhs, sub);
      if (v.constant) return {*v.constant * Rational(-1), std::nullopt};
      return {std::nullopt, *v.poly * Rational(-1)};
    }
    case K::sum:
    case K::difference: {
      const auto a = lower_slice(*e.lhs, sub);
      const auto b = lower_slice(*e.rhs, sub);
      const bool plus = e.kind == K::sum;
      if (a.constant && b.constant)
        return {plus ? *a.constant + *b.constant : *a.constant - *b.constant, std::nullopt};
      const auto pa = a.as_poly(sub), pb = b.as_poly(sub);
      return {std::nullopt, plus ? pa + pb : pa - pb};
    }
    case K::product: {
      const auto a = lower_slice(*e.lhs, sub);
      const auto b = lower_slice(*e.rhs, sub);
      if (a.constant && b.constant) return {*a.constant * *b.constant, std::nullopt};
      if (a.constant) {
        if (!a.constant->is_real()) not_slice(e, "coefficient not rightmost");
        return {std::nullopt, *b.poly * (*a.constant)[0]};
      }
      if (b.constant) {
        if (!table->associative() && !a.poly->slice_preserving())
          not_slice(e, "right coefficient on a polynomial with non-real coefficients in a non-associative algebra");
        std::vector<AlgElement> c;
        for (const auto& an : a.poly->coeffs()) c.push_back(an * *b.constant);
        return {std::nullopt, SlicePoly(sub, std::move(c))};
      }
      if (!a.poly->slice_preserving()) not_slice(e, "coefficient not rightmost");
      return {std::nullopt, star_product(*a.poly, *b.poly)};
    }
    case K::power: {
      const auto a = lower_slice(*e.lhs, sub);
      if (a.constant) return {element_power(*a.constant, e.exponent, table), std::nullopt};
      if (!a.poly->slice_preserving()) not_slice(e, "power of a polynomial with non-real coefficients");
      SlicePoly r(sub, {sub->one()});
      for (int i = 0; i < e.exponent; ++i) r = star_product(r, *a.poly);
      return {std::nullopt, r};
    }
  }
  not_slice(e, "unsupported node");
}

}  // namespace detail

/// Lowers to sum_n x^n a_n. Products need a real-coefficient left factor
/// (constants only on the right of a polynomial); coordinates are rejected.
inline SlicePoly lower_slice(const Expr& e, const SubspacePtr& sub) {
  return detail::lower_slice(e, sub).as_poly(sub);
}

/// Lowers to a coordinate polynomial with pointwise products. x_{m+1} is
/// the extension variable. With `enforce_subspace`, basis literals must lie
/// in the subspace.
inline CoordPoly lower_coord(const Expr& e, const SubspacePtr& sub, bool enforce_subspace = false) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::variable:
      return hypercomplex_variable(sub);
    case K::coordinate:
      if (e.index > sub->m() + 1)
        throw LowerError("coordinate " + detail::describe(e) + " exceeds x" +
                             std::to_string(sub->m() + 1),
                         e.span);
      return CoordPoly::coordinate(sub, e.index);
    case K::basis: {
      const AlgElement b = detail::basis_element(e, sub->table());
      if (enforce_subspace && !sub->contains(b))
        throw LowerError("basis literal " + detail::describe(e) + " lies outside the subspace", e.span);
      return CoordPoly::constant(sub, b);
    }
    case K::rational:
      return CoordPoly::constant(sub, e.value);
    case K::negate:
      return -lower_coord(*e.lhs, sub, enforce_subspace);
    case K::sum:
      return lower_coord(*e.lhs, sub, enforce_subspace) + lower_coord(*e.rhs, sub, enforce_subspace);
    case K::difference:
      return lower_coord(*e.lhs, sub, enforce_subspace) - lower_coord(*e.rhs, sub, enforce_subspace);
    case K::product:
      return pointwise_product(lower_coord(*e.lhs, sub, enforce_subspace),
                               lower_coord(*e.rhs, sub, enforce_subspace));
    case K::power: {
      const CoordPoly base = lower_coord(*e.lhs, sub, enforce_subspace);
      CoordPoly r = CoordPoly::constant(sub, Rational(1));
      for (int i = 0; i < e.exponent; ++i) r = pointwise_product(r, base);
      return r;
    }
  }
  throw LowerError("unsupported node", e.span);
}

inline SlicePoly parse_slice(std::string_view text, const SubspacePtr& sub) {
  return lower_slice(*parse(text, sub->table()), sub);
}

inline CoordPoly parse_coord(std::string_view text, const SubspacePtr& sub, bool enforce_subspace = false) {
  return lower_coord(*parse(text, sub->table()), sub, enforce_subspace);
}

}  // namespace hyperslice
