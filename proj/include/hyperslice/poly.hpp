/// @file poly.hpp
/// @brief Sparse polynomials in x_0..x_m (plus an optional extension
/// variable x_{m+1}) with algebra-valued coefficients.

#pragma once

#include "hyperslice/subspace.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace hyperslice {

/// Up to 9 coordinates (clifford:8 paravectors) plus the extension slot.
inline constexpr int kMaxSlots = 10;

struct MultiIndex {
  std::array<std::uint8_t, kMaxSlots> e{};

  int degree() const {
    return std::accumulate(e.begin(), e.end(), 0);
  }
  std::uint8_t& operator[](int i) { return e[i]; }
  std::uint8_t operator[](int i) const { return e[i]; }
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

  MultiIndex operator+(const MultiIndex& o) const {
    MultiIndex r;
    for (int i = 0; i < kMaxSlots; ++i) {
      const int s = e[i] + o.e[i];
      if (s > 255) throw Error("exponent overflow");
      r.e[i] = static_cast<std::uint8_t>(s);
    }
    return r;
  }
  static MultiIndex unit(int i) {
    MultiIndex r;
    r.e.at(i) = 1;
    return r;
  }
};

/// Graded lex, largest first: higher total degree, then larger exponent of
/// x_0, then of x_1, ...
struct GradedLexDescending {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.e > b.e;
  }
};

class CoordPoly {
 public:
  using TermMap = std::map<MultiIndex, AlgElement, GradedLexDescending>;

  explicit CoordPoly(SubspacePtr sub, bool extended = false)
      : sub_(std::move(sub)), extended_(extended) {}

  static CoordPoly constant(const SubspacePtr& sub, const AlgElement& c) {
    CoordPoly p(sub);
    p.add_term(MultiIndex{}, c);
    return p;
  }
  static CoordPoly constant(const SubspacePtr& sub, const Rational& q) {
    return constant(sub, sub->scalar(q));
  }
  /// The coordinate x_i (real valued); i = m+1 gives the extension variable.
  static CoordPoly coordinate(const SubspacePtr& sub, int i) {
    if (i < 0 || i > sub->m() + 1)
      throw Error("variable index " + std::to_string(i) + " out of range");
    CoordPoly p(sub, i == sub->m() + 1);
    p.add_term(MultiIndex::unit(i), sub->one());
    return p;
  }

  const SubspacePtr& subspace() const { return sub_; }
  const AlgebraPtr& table() const { return sub_->table(); }
  bool extended() const { return extended_; }
  /// Number of variables in use: m+1, or m+2 with the extension slot.
  int active_variables() const { return sub_->m() + 1 + (extended_ ? 1 : 0); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Total degree; -1 stands for the degree of the zero polynomial.
  int degree() const {
    return terms_.empty() ? -1 : terms_.begin()->first.degree();
  }
  /// True when some term really involves x_{m+1}.
  bool uses_extension() const {
    const int s = sub_->m() + 1;
    for (const auto& [k, c] : terms_)
      if (k[s] != 0) return true;
    return false;
  }
  void set_extended(bool on) {
    if (!on && uses_extension())
      throw Error("polynomial depends on the extension variable");
    extended_ = on;
  }

  /// Adds c * x^k, dropping the term if it cancels.
  void add_term(const MultiIndex& k, const AlgElement& c) {
    if (c.is_zero()) return;
    check_element(c);
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add_term_scaled(const MultiIndex& k, const AlgElement& c,
                       const Rational& q) {
    if (sgn(q) == 0 || c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c * q);
    } else {
      it->second.add_scaled(c, q);
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  /// Coefficient of x^k (zero when absent).
  AlgElement coeff(const MultiIndex& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? sub_->zero() : it->second;
  }

  void check_same(const CoordPoly& o) const {
    if (sub_.get() != o.sub_.get() &&
        (sub_->table().get() != o.sub_->table().get() ||
         sub_->basis_indices() != o.sub_->basis_indices()))
      throw Error("polynomials live on different subspaces");
  }

  CoordPoly& operator+=(const CoordPoly& o) {
    check_same(o);
    extended_ = extended_ || o.extended_;
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  CoordPoly& operator-=(const CoordPoly& o) {
    check_same(o);
    extended_ = extended_ || o.extended_;
    for (const auto& [k, c] : o.terms_) add_term_scaled(k, c, Rational(-1));
    return *this;
  }
  CoordPoly& operator*=(const Rational& q) {
    if (sgn(q) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= q;
    return *this;
  }
  friend CoordPoly operator+(CoordPoly a, const CoordPoly& b) { return a += b; }
  friend CoordPoly operator-(CoordPoly a, const CoordPoly& b) { return a -= b; }
  friend CoordPoly operator-(CoordPoly a) { return a *= Rational(-1); }
  friend CoordPoly operator*(CoordPoly a, const Rational& q) { return a *= q; }
  friend CoordPoly operator*(const Rational& q, CoordPoly a) { return a *= q; }
  friend bool operator==(const CoordPoly& a, const CoordPoly& b) {
    if (a.sub_->table().get() != b.sub_->table().get()) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [k, c] : a.terms_) {
      if (!(k == it->first) || !(c == it->second)) return false;
      ++it;
    }
    return true;
  }

 private:
  void check_element(const AlgElement& c) const {
    if (c.table().get() != sub_->table().get())
      throw Error("coefficient from a different algebra");
  }

  SubspacePtr sub_;
  bool extended_ = false;
  TermMap terms_;
};

/// a * p: every coefficient multiplied by a on the left.
inline CoordPoly left_multiply(const AlgElement& a, const CoordPoly& p) {
  CoordPoly r(p.subspace(), p.extended());
  if (a.is_real()) return p * a[0];
  for (const auto& [k, c] : p.terms()) r.add_term(k, a * c);
  return r;
}

/// p * a: every coefficient multiplied by a on the right.
inline CoordPoly right_multiply(const CoordPoly& p, const AlgElement& a) {
  CoordPoly r(p.subspace(), p.extended());
  if (a.is_real()) return p * a[0];
  for (const auto& [k, c] : p.terms()) r.add_term(k, c * a);
  return r;
}

/// Binary pointwise product; coefficients multiplied as c_p * c_q.
inline CoordPoly pointwise_product(const CoordPoly& p, const CoordPoly& q) {
  p.check_same(q);
  CoordPoly r(p.subspace(), p.extended() || q.extended());
  for (const auto& [kp, cp] : p.terms())
    for (const auto& [kq, cq] : q.terms()) r.add_term(kp + kq, cp * cq);
  return r;
}

inline CoordPoly operator*(const CoordPoly& p, const CoordPoly& q) {
  return pointwise_product(p, q);
}

/// Formal partial derivative d/dx_i, 0 <= i <= m+1.
inline CoordPoly partial_derivative(const CoordPoly& p, int i) {
  if (i < 0 || i > p.subspace()->m() + 1)
    throw Error("variable index " + std::to_string(i) + " out of range");
  CoordPoly r(p.subspace(), p.extended());
  for (const auto& [k, c] : p.terms()) {
    if (k[i] == 0) continue;
    MultiIndex d = k;
    d[i] -= 1;
    r.add_term_scaled(d, c, Rational(k[i]));
  }
  return r;
}

inline Rational monomial_value(const MultiIndex& k,
                               const std::vector<Rational>& point) {
  Rational v = 1;
  for (std::size_t i = 0; i < point.size(); ++i)
    for (int e = 0; e < k[static_cast<int>(i)]; ++e) v *= point[i];
  return v;
}

/// Exact substitution of rational coordinates (length = active variables).
inline AlgElement evaluate(const CoordPoly& p,
                           const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) != p.active_variables())
    throw Error("evaluation point has " + std::to_string(point.size()) +
                " coordinates, expected " +
                std::to_string(p.active_variables()));
  AlgElement out = p.subspace()->zero();
  for (const auto& [k, c] : p.terms()) out.add_scaled(c, monomial_value(k, point));
  return out;
}

/// Homogeneous parts keyed by degree (empty for the zero polynomial).
inline std::map<int, CoordPoly> homogeneous_components(const CoordPoly& p) {
  std::map<int, CoordPoly> out;
  for (const auto& [k, c] : p.terms()) {
    auto it = out.try_emplace(k.degree(), p.subspace(), p.extended()).first;
    it->second.add_term(k, c);
  }
  return out;
}

/// (x_0^2 + ... + x_m^2)^k (extension variable not included).
inline CoordPoly norm_squared_power(const SubspacePtr& sub, int k) {
  if (k < 0) throw Error("negative power of the squared norm");
  CoordPoly base(sub);
  for (int i = 0; i <= sub->m(); ++i) {
    MultiIndex e;
    e[i] = 2;
    base.add_term(e, sub->one());
  }
  CoordPoly r = CoordPoly::constant(sub, Rational(1));
  for (int j = 0; j < k; ++j) r = r * base;
  return r;
}

/// r^2 = x_1^2 + ... + x_m^2.
inline CoordPoly im_norm_squared(const SubspacePtr& sub) {
  CoordPoly r(sub);
  for (int i = 1; i <= sub->m(); ++i) {
    MultiIndex e;
    e[i] = 2;
    r.add_term(e, sub->one());
  }
  return r;
}

/// Im(x) = sum_{i>=1} x_i v_i.
inline CoordPoly im_x(const SubspacePtr& sub) {
  CoordPoly r(sub);
  for (int i = 1; i <= sub->m(); ++i) r.add_term(MultiIndex::unit(i), sub->unit(i));
  return r;
}

/// x = x_0 + Im(x).
inline CoordPoly hypercomplex_variable(const SubspacePtr& sub) {
  return CoordPoly::coordinate(sub, 0) + im_x(sub);
}

/// x^c = x_0 - Im(x).
inline CoordPoly conjugate_variable(const SubspacePtr& sub) {
  return CoordPoly::coordinate(sub, 0) - im_x(sub);
}

/// Coefficient-wise conjugation.
inline CoordPoly conjugate(const CoordPoly& p) {
  CoordPoly r(p.subspace(), p.extended());
  for (const auto& [k, c] : p.terms()) r.add_term(k, conjugate(c));
  return r;
}

inline bool is_real_valued(const CoordPoly& p) {
  for (const auto& [k, c] : p.terms())
    if (!c.is_real()) return false;
  return true;
}

/// Substitutes x_i -> x_i + shift_i for the first shift.size() variables.
inline CoordPoly translate(const CoordPoly& p, const std::vector<Rational>& shift) {
  if (static_cast<int>(shift.size()) > p.active_variables())
    throw Error("translation vector too long");
  CoordPoly r(p.subspace(), p.extended());
  for (const auto& [k, c] : p.terms()) {
    // Expand prod_i (x_i + s_i)^{k_i} one variable at a time.
    std::vector<std::pair<MultiIndex, Rational>> parts{{MultiIndex{}, Rational(1)}};
    for (int i = 0; i < kMaxSlots; ++i) {
      if (k[i] == 0) continue;
      const Rational s = i < static_cast<int>(shift.size()) ? shift[i] : Rational(0);
      std::vector<std::pair<MultiIndex, Rational>> next;
      for (const auto& [mi, q] : parts) {
        mpz_class binom = 1;
        Rational spow = 1;
        for (int j = k[i]; j >= 0; --j) {
          // term C(k_i, j) x_i^j s^{k_i - j}
          if (j < k[i]) {
            mpz_bin_uiui(binom.get_mpz_t(), k[i], k[i] - j);
            spow *= s;
          }
          if (sgn(spow) == 0) break;
          MultiIndex e = mi;
          e[i] = static_cast<std::uint8_t>(j);
          next.emplace_back(e, q * Rational(binom) * spow);
        }
      }
      parts = std::move(next);
    }
    for (const auto& [e, q] : parts) r.add_term_scaled(e, c, q);
  }
  return r;
}

/// Sets x_{m+1} = 0 and clears the extension flag.
inline CoordPoly restrict_extension_zero(const CoordPoly& p) {
  CoordPoly r(p.subspace());
  const int s = p.subspace()->m() + 1;
  for (const auto& [k, c] : p.terms())
    if (k[s] == 0) r.add_term(k, c);
  return r;
}

/// True when every coefficient lies in span(M).
inline bool coefficients_in_subspace(const CoordPoly& p) {
  for (const auto& [k, c] : p.terms())
    if (!p.subspace()->contains(c)) return false;
  return true;
}

}  // namespace hyperslice
