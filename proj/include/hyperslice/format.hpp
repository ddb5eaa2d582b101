/// @file format.hpp
/// @brief Canonical text and LaTeX renderings of elements and polynomials.
///
/// Text output re-parses with the expression grammar: every term is
/// `c*x0^a*x1^b*label` with rational c, terms in graded-lex order and basis
/// components in table order.

#pragma once

#include "hyperslice/zonal.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace hyperslice {

namespace detail {

/// One signed term `c * factors...` with |c| = 1 omitted when a factor exists.
struct TextTerm {
  Rational coeff;
  std::vector<std::string> factors;
};

inline std::string join_terms(const std::vector<TextTerm>& terms, const char* times = "*") {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    const bool neg = sgn(t.coeff) < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    const Rational mag = abs(t.coeff);
    std::string body;
    if (mag != 1 || t.factors.empty()) body = to_string(mag);
    for (const auto& f : t.factors) {
      if (!body.empty()) body += times;
      body += f;
    }
    out += body;
  }
  return out;
}

inline void push_components(std::vector<TextTerm>& terms, const AlgElement& c,
                            const std::vector<std::string>& monomial) {
  const auto& table = *c.table();
  for (std::size_t i = 0; i < c.coeffs().size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    TextTerm t{c[i], monomial};
    if (i != 0) t.factors.push_back(table.label(i));
    terms.push_back(std::move(t));
  }
}

inline std::vector<std::string> monomial_factors(const MultiIndex& k, int nvars) {
  std::vector<std::string> f;
  for (int i = 0; i < nvars; ++i) {
    if (k[i] == 0) continue;
    std::string s = "x" + std::to_string(i);
    if (k[i] > 1) s += "^" + std::to_string(k[i]);
    f.push_back(std::move(s));
  }
  return f;
}

}  // namespace detail

inline std::string to_text(const AlgElement& a) {
  std::vector<detail::TextTerm> terms;
  detail::push_components(terms, a, {});
  return detail::join_terms(terms);
}

inline std::string to_text(const CoordPoly& p) {
  const int nv = p.subspace()->m() + 2;
  std::vector<detail::TextTerm> terms;
  for (const auto& [k, c] : p.terms()) detail::push_components(terms, c, detail::monomial_factors(k, nv));
  return detail::join_terms(terms);
}

inline std::string to_text(const SlicePoly& f) {
  std::vector<detail::TextTerm> terms;
  for (int n = f.degree(); n >= 0; --n) {
    std::vector<std::string> mono;
    if (n == 1) mono.push_back("x");
    if (n > 1) mono.push_back("x^" + std::to_string(n));
    detail::push_components(terms, f.coeff(n), mono);
  }
  return detail::join_terms(terms);
}

namespace detail {

inline std::string latex_label(const std::string& label) {
  if (label.size() > 2 && label[0] == 'e') return "e_{" + label.substr(1) + "}";
  if (label.size() == 2 && label[0] == 'e') return "e_" + label.substr(1);
  return label;
}

inline std::string latex_power(const std::string& base, int e) {
  if (e == 1) return base;
  const std::string s = std::to_string(e);
  return base + "^" + (s.size() > 1 ? "{" + s + "}" : s);
}

inline void push_latex_components(std::vector<TextTerm>& terms, const AlgElement& c,
                                  const std::vector<std::string>& monomial,
                                  const std::string& tail = "") {
  const auto& table = *c.table();
  for (std::size_t i = 0; i < c.coeffs().size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    TextTerm t{c[i], monomial};
    if (!tail.empty()) t.factors.push_back(tail);
    if (i != 0) t.factors.push_back(latex_label(table.label(i)));
    terms.push_back(std::move(t));
  }
}

inline std::string latex_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "\\tfrac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

inline std::string join_latex(const std::vector<TextTerm>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms) {
    const bool neg = sgn(t.coeff) < 0;
    out += neg ? "-" : (first ? "" : "+");
    first = false;
    const Rational mag = abs(t.coeff);
    if (mag != 1 || t.factors.empty()) out += latex_rational(mag);
    for (const auto& f : t.factors) out += f;
  }
  return out;
}

inline std::vector<std::string> zonal_factors(int i, int j) {
  std::vector<std::string> f;
  if (i > 0) f.push_back(latex_power("x_0", i));
  if (j > 0) f.push_back(latex_power("|\\mathrm{Im}(x)|", 2 * j));
  return f;
}

/// Terms of G(x_0, |Im x|^2), highest total degree first, then x_0 power.
inline void push_zonal_latex(std::vector<TextTerm>& terms, const ZonalBivariate& g,
                             const std::string& tail) {
  std::vector<std::pair<std::pair<int, int>, AlgElement>> sorted(g.terms().begin(), g.terms().end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + 2 * a.first.second, db = b.first.first + 2 * b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  for (const auto& [ij, c] : sorted) push_latex_components(terms, c, zonal_factors(ij.first, ij.second), tail);
}

}  // namespace detail

/// LaTeX in the x_0, |Im(x)| notation when p = G1 + Im(x) G2 is a slice
/// function of the real part and |Im(x)|^2, else in the coordinates.
inline std::string to_latex(const CoordPoly& p) {
  if (!p.uses_extension() && p.subspace()->m() >= 2) {
    if (auto s = try_slice_form(p)) {
      std::vector<detail::TextTerm> terms;
      detail::push_zonal_latex(terms, s->g1, "");
      detail::push_zonal_latex(terms, s->g2, "\\mathrm{Im}(x)");
      return detail::join_latex(terms);
    }
  }
  const int nv = p.subspace()->m() + 2;
  std::vector<detail::TextTerm> terms;
  for (const auto& [k, c] : p.terms()) {
    std::vector<std::string> f;
    for (int i = 0; i < nv; ++i)
      if (k[i] > 0) f.push_back(detail::latex_power("x_" + std::to_string(i), k[i]));
    detail::push_latex_components(terms, c, f);
  }
  return detail::join_latex(terms);
}

inline std::string to_latex(const SlicePoly& f) {
  std::vector<detail::TextTerm> terms;
  for (int n = f.degree(); n >= 0; --n) {
    std::vector<std::string> mono;
    if (n > 0) mono.push_back(detail::latex_power("x", n));
    detail::push_latex_components(terms, f.coeff(n), mono);
  }
  return detail::join_latex(terms);
}

inline std::string to_latex(const AlgElement& a) {
  std::vector<detail::TextTerm> terms;
  detail::push_latex_components(terms, a, {});
  return detail::join_latex(terms);
}

}  // namespace hyperslice
