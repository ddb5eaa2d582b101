/// @file algebra.hpp
/// @brief Finite-dimensional real *-algebras given by structure constants.
///
/// An AlgebraTable stores, for every ordered pair of basis vectors, the
/// expansion of their product v_a v_b = sum_c c_{ab}^c v_c together with the
/// involution signs eps_a (v_a^c = eps_a v_a). Three families are built in:
/// quaternions, octonions (Cayley-Dickson over quaternion pairs) and the
/// Clifford algebras R_{0,n} for 1 <= n <= 8. Tables are interned by their
/// spec string so elements of "the same" algebra share one table object.

#pragma once

#include "hyperslice/rational.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hyperslice {

enum class AlgebraKind { quaternion, octonion, clifford, custom };

/// One summand c * v_index of a basis product.
struct ProductTerm {
  std::uint16_t index = 0;
  Rational coeff;

  friend bool operator==(const ProductTerm&, const ProductTerm&) = default;
};

using SparseVector = std::vector<ProductTerm>;

class AlgebraTable;
using AlgebraPtr = std::shared_ptr<const AlgebraTable>;

class AlgebraTable {
 public:
  /// Builds and validates a table. `products` is indexed a * d + b.
  /// Throws Error when unity, anti-involution or alternativity witnesses fail.
  static AlgebraPtr create(AlgebraKind kind, std::string spec,
                           std::vector<std::string> labels,
                           std::vector<SparseVector> products,
                           std::vector<int> conjugation_signs);

  std::size_t dim() const { return labels_.size(); }
  AlgebraKind kind() const { return kind_; }
  /// "quaternion", "octonion", "clifford:<n>" or a user tag for custom tables.
  const std::string& spec() const { return spec_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    return std::nullopt;
  }

  std::span<const ProductTerm> product(std::size_t a, std::size_t b) const {
    return products_[a * dim() + b];
  }
  Rational structure_constant(std::size_t a, std::size_t b,
                              std::size_t c) const {
    for (const auto& t : product(a, b))
      if (t.index == c) return t.coeff;
    return 0;
  }
  int conjugation_sign(std::size_t a) const { return signs_.at(a); }
  const std::vector<int>& conjugation_signs() const { return signs_; }

  /// Every basis product is +-(single basis vector); enables the fast path.
  bool monomial() const { return monomial_; }
  /// Valid only when monomial(): v_a v_b = sign(a,b) v_{target(a,b)}.
  int monomial_sign(std::size_t a, std::size_t b) const {
    return mono_sign_[a * dim() + b];
  }
  std::size_t monomial_target(std::size_t a, std::size_t b) const {
    return mono_target_[a * dim() + b];
  }
  bool associative() const { return associative_; }

  /// Sparse product of two sparse vectors (used for validation and tests).
  SparseVector multiply_sparse(const SparseVector& x,
                               const SparseVector& y) const;

 private:
  AlgebraTable() = default;
  void validate() const;

  AlgebraKind kind_ = AlgebraKind::custom;
  std::string spec_;
  std::vector<std::string> labels_;
  std::vector<SparseVector> products_;
  std::vector<int> signs_;
  bool monomial_ = false;
  bool associative_ = false;
  std::vector<std::int8_t> mono_sign_;
  std::vector<std::uint16_t> mono_target_;
};

/// An element of an algebra: d exact coordinates over the table basis.
class AlgElement {
 public:
  explicit AlgElement(AlgebraPtr table)
      : table_(std::move(table)), c_(table_->dim()) {}
  AlgElement(AlgebraPtr table, std::vector<Rational> coeffs)
      : table_(std::move(table)), c_(std::move(coeffs)) {
    if (c_.size() != table_->dim())
      throw Error("coordinate vector length does not match algebra dimension");
  }

  static AlgElement scalar(AlgebraPtr table, const Rational& q) {
    AlgElement e(std::move(table));
    e.c_[0] = q;
    return e;
  }
  static AlgElement basis(AlgebraPtr table, std::size_t i) {
    AlgElement e(std::move(table));
    e.c_.at(i) = 1;
    return e;
  }

  const AlgebraPtr& table() const { return table_; }
  std::size_t dim() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const Rational& q) { return sgn(q) == 0; });
  }
  /// True when only the unity coordinate may be non-zero.
  bool is_real() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (sgn(c_[i]) != 0) return false;
    return true;
  }
  const Rational& real_part() const { return c_[0]; }

  void check_same(const AlgElement& o) const {
    if (table_.get() != o.table_.get())
      throw Error("elements of different algebras cannot be combined");
  }

  AlgElement& operator+=(const AlgElement& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (sgn(o.c_[i]) != 0) c_[i] += o.c_[i];
    return *this;
  }
  AlgElement& operator-=(const AlgElement& o) {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (sgn(o.c_[i]) != 0) c_[i] -= o.c_[i];
    return *this;
  }
  AlgElement& operator*=(const Rational& q) {
    if (sgn(q) == 0) {
      for (auto& x : c_) x = 0;
      return *this;
    }
    for (auto& x : c_)
      if (sgn(x) != 0) x *= q;
    return *this;
  }
  /// Adds q * o (saves a temporary in accumulation loops).
  void add_scaled(const AlgElement& o, const Rational& q) {
    check_same(o);
    Rational t;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (sgn(o.c_[i]) != 0) {
        t = o.c_[i] * q;
        c_[i] += t;
      }
  }

  friend AlgElement operator+(AlgElement a, const AlgElement& b) {
    return a += b;
  }
  friend AlgElement operator-(AlgElement a, const AlgElement& b) {
    return a -= b;
  }
  friend AlgElement operator-(AlgElement a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend AlgElement operator*(AlgElement a, const Rational& q) {
    return a *= q;
  }
  friend AlgElement operator*(const Rational& q, AlgElement a) {
    return a *= q;
  }
  friend bool operator==(const AlgElement& a, const AlgElement& b) {
    return a.table_.get() == b.table_.get() && a.c_ == b.c_;
  }

 private:
  AlgebraPtr table_;
  std::vector<Rational> c_;
};

/// (ab)_c = sum_{a,b} a_a b_b c_{ab}^c. Throws on table mismatch.
inline AlgElement multiply(const AlgElement& a, const AlgElement& b) {
  a.check_same(b);
  const auto& table = *a.table();
  const std::size_t d = table.dim();
  if (a.is_real()) return b * a[0];
  if (b.is_real()) return a * b[0];

  std::vector<std::size_t> nza, nzb;
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(a[i]) != 0) nza.push_back(i);
    if (sgn(b[i]) != 0) nzb.push_back(i);
  }
  AlgElement out(a.table());
  Rational t;
  if (table.monomial()) {
    for (auto i : nza)
      for (auto j : nzb) {
        t = a[i] * b[j];
        if (table.monomial_sign(i, j) > 0)
          out[table.monomial_target(i, j)] += t;
        else
          out[table.monomial_target(i, j)] -= t;
      }
    return out;
  }
  for (auto i : nza)
    for (auto j : nzb) {
      t = a[i] * b[j];
      for (const auto& term : table.product(i, j))
        out[term.index] += t * term.coeff;
    }
  return out;
}

inline AlgElement operator*(const AlgElement& a, const AlgElement& b) {
  return multiply(a, b);
}

inline AlgElement conjugate(const AlgElement& a) {
  AlgElement out = a;
  const auto& signs = a.table()->conjugation_signs();
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (signs[i] < 0 && sgn(out[i]) != 0) out[i] = -out[i];
  return out;
}

/// t(x) = x + x^c
inline AlgElement trace(const AlgElement& a) { return a + conjugate(a); }

/// n(x) = x x^c
inline AlgElement norm(const AlgElement& a) { return a * conjugate(a); }

/// Re(x) = t(x)/2 and Im(x) = (x - x^c)/2.
inline AlgElement re(const AlgElement& a) { return trace(a) * Rational(1, 2); }
inline AlgElement im(const AlgElement& a) {
  return (a - conjugate(a)) * Rational(1, 2);
}

/// t(a) = 0 and n(a) = 1.
inline bool in_sphere(const AlgElement& a) {
  return trace(a).is_zero() &&
         norm(a) == AlgElement::scalar(a.table(), Rational(1));
}

/// a real, or t(a), n(a) real with 4 n(a) > t(a)^2.
inline bool in_quadratic_cone(const AlgElement& a) {
  if (a.is_real()) return true;
  const AlgElement t = trace(a);
  const AlgElement n = norm(a);
  if (!t.is_real() || !n.is_real()) return false;
  return 4 * n[0] > t[0] * t[0];
}

/// a^c / n(a) for a non-zero element of the quadratic cone.
inline AlgElement cone_inverse(const AlgElement& a) {
  if (a.is_zero()) throw Error("inverse of zero");
  if (!in_quadratic_cone(a))
    throw Error("inverse requested for an element outside the quadratic cone");
  const AlgElement n = norm(a);
  return conjugate(a) * Rational(1 / n[0]);
}

inline AlgElement power(const AlgElement& a, unsigned n) {
  AlgElement r = AlgElement::scalar(a.table(), Rational(1));
  for (unsigned k = 0; k < n; ++k) r = r * a;
  return r;
}

// ---------------------------------------------------------------------------
// Table construction
// ---------------------------------------------------------------------------

inline SparseVector AlgebraTable::multiply_sparse(const SparseVector& x,
                                                  const SparseVector& y) const {
  std::map<std::uint16_t, Rational> acc;
  for (const auto& a : x)
    for (const auto& b : y)
      for (const auto& t : product(a.index, b.index))
        acc[t.index] += a.coeff * b.coeff * t.coeff;
  SparseVector out;
  for (auto& [i, q] : acc)
    if (sgn(q) != 0) out.push_back({i, q});
  return out;
}

inline void AlgebraTable::validate() const {
  const std::size_t d = dim();
  if (d == 0 || signs_.size() != d || products_.size() != d * d)
    throw Error("malformed algebra table");
  if (signs_[0] != 1) throw Error("involution must fix the unity");
  auto basis = [](std::size_t i) {
    return SparseVector{{static_cast<std::uint16_t>(i), Rational(1)}};
  };
  auto conj = [&](SparseVector v) {
    for (auto& t : v)
      if (signs_[t.index] < 0) t.coeff = -t.coeff;
    return v;
  };
  for (std::size_t b = 0; b < d; ++b) {
    if (multiply_sparse(basis(0), basis(b)) != basis(b) ||
        multiply_sparse(basis(b), basis(0)) != basis(b))
      throw Error("basis vector 0 is not the unity of table " + spec_);
  }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const SparseVector ab(product(a, b).begin(), product(a, b).end());
      if (conj(ab) != multiply_sparse(conj(basis(b)), conj(basis(a))))
        throw Error("conjugation is not an anti-involution on (" + labels_[a] +
                    ", " + labels_[b] + ")");
      const SparseVector aa(product(a, a).begin(), product(a, a).end());
      const SparseVector bb(product(b, b).begin(), product(b, b).end());
      if (multiply_sparse(aa, basis(b)) != multiply_sparse(basis(a), ab) ||
          multiply_sparse(ab, basis(b)) != multiply_sparse(basis(a), bb))
        throw Error("alternativity fails on (" + labels_[a] + ", " +
                    labels_[b] + ")");
    }
}

inline AlgebraPtr AlgebraTable::create(AlgebraKind kind, std::string spec,
                                       std::vector<std::string> labels,
                                       std::vector<SparseVector> products,
                                       std::vector<int> conjugation_signs) {
  std::shared_ptr<AlgebraTable> t(new AlgebraTable());
  t->kind_ = kind;
  t->spec_ = std::move(spec);
  t->labels_ = std::move(labels);
  t->products_ = std::move(products);
  t->signs_ = std::move(conjugation_signs);
  for (auto& p : t->products_) {
    std::sort(p.begin(), p.end(),
              [](const auto& x, const auto& y) { return x.index < y.index; });
    std::erase_if(p, [](const ProductTerm& x) { return sgn(x.coeff) == 0; });
  }
  t->validate();

  const std::size_t d = t->dim();
  t->monomial_ = std::all_of(t->products_.begin(), t->products_.end(),
                             [](const SparseVector& p) {
                               return p.size() == 1 &&
                                      (p[0].coeff == 1 || p[0].coeff == -1);
                             });
  if (t->monomial_) {
    t->mono_sign_.resize(d * d);
    t->mono_target_.resize(d * d);
    for (std::size_t i = 0; i < d * d; ++i) {
      t->mono_sign_[i] = t->products_[i][0].coeff > 0 ? 1 : -1;
      t->mono_target_[i] = t->products_[i][0].index;
    }
  }
  switch (kind) {
    case AlgebraKind::quaternion:
    case AlgebraKind::clifford:
      t->associative_ = true;
      break;
    case AlgebraKind::octonion:
      t->associative_ = false;
      break;
    case AlgebraKind::custom: {
      bool assoc = true;
      for (std::size_t a = 0; a < d && assoc; ++a)
        for (std::size_t b = 0; b < d && assoc; ++b)
          for (std::size_t c = 0; c < d && assoc; ++c) {
            SparseVector ab(t->product(a, b).begin(), t->product(a, b).end());
            SparseVector bc(t->product(b, c).begin(), t->product(b, c).end());
            SparseVector vc{{static_cast<std::uint16_t>(c), Rational(1)}};
            SparseVector va{{static_cast<std::uint16_t>(a), Rational(1)}};
            assoc = t->multiply_sparse(ab, vc) == t->multiply_sparse(va, bc);
          }
      t->associative_ = assoc;
      break;
    }
  }
  return t;
}

namespace detail {

inline AlgebraPtr build_quaternion() {
  // Hamilton relations: i^2 = j^2 = k^2 = ijk = -1.
  static constexpr int sign[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static constexpr int target[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<SparseVector> products(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      products[a * 4 + b] = {{static_cast<std::uint16_t>(target[a][b]),
                              Rational(sign[a][b])}};
  return AlgebraTable::create(AlgebraKind::quaternion, "quaternion",
                              {"1", "i", "j", "k"}, std::move(products),
                              {1, -1, -1, -1});
}

/// Cayley-Dickson doubling of the quaternions:
/// (q1,q1')(q2,q2') = (q1 q2 - conj(q2') q1', q2' q1 + q1' conj(q2)),
/// (q,q')^c = (conj(q), -q'), basis e_h = (i_h, 0), e_{4+h} = (0, i_h).
inline AlgebraPtr build_octonion() {
  using Quat = std::array<Rational, 4>;
  static constexpr int qs[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static constexpr int qt[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  auto qmul = [](const Quat& x, const Quat& y) {
    Quat r{};
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) r[qt[a][b]] += qs[a][b] * x[a] * y[b];
    return r;
  };
  auto qconj = [](Quat x) {
    for (int i = 1; i < 4; ++i) x[i] = -x[i];
    return x;
  };
  auto unit = [](int h) {
    Quat q{};
    q[h] = 1;
    return q;
  };
  auto pair_of = [&](int h) -> std::pair<Quat, Quat> {
    if (h < 4) return {unit(h), Quat{}};
    return {Quat{}, unit(h - 4)};
  };
  std::vector<SparseVector> products(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      auto [q1, q1p] = pair_of(a);
      auto [q2, q2p] = pair_of(b);
      Quat first = qmul(q1, q2), t = qmul(qconj(q2p), q1p);
      Quat second = qmul(q2p, q1), u = qmul(q1p, qconj(q2));
      SparseVector p;
      for (int i = 0; i < 4; ++i) {
        Rational x = first[i] - t[i];
        if (sgn(x) != 0) p.push_back({static_cast<std::uint16_t>(i), x});
      }
      for (int i = 0; i < 4; ++i) {
        Rational x = second[i] + u[i];
        if (sgn(x) != 0) p.push_back({static_cast<std::uint16_t>(i + 4), x});
      }
      products[a * 8 + b] = std::move(p);
    }
  std::vector<std::string> labels{"1"};
  for (int h = 1; h < 8; ++h) labels.push_back("e" + std::to_string(h));
  return AlgebraTable::create(AlgebraKind::octonion, "octonion",
                              std::move(labels), std::move(products),
                              {1, -1, -1, -1, -1, -1, -1, -1});
}

/// Clifford algebra R_{0,n}: basis e_A for A subset of {1..n}, ordered by
/// (|A|, lexicographic); e_i^2 = -1, e_i e_j = -e_j e_i.
inline AlgebraPtr build_clifford(int n) {
  std::vector<unsigned> masks;
  for (unsigned s = 0; s < (1u << n); ++s) masks.push_back(s);
  auto members = [n](unsigned s) {
    std::vector<int> v;
    for (int i = 0; i < n; ++i)
      if (s & (1u << i)) v.push_back(i + 1);
    return v;
  };
  std::stable_sort(masks.begin(), masks.end(), [&](unsigned a, unsigned b) {
    const auto ma = members(a), mb = members(b);
    if (ma.size() != mb.size()) return ma.size() < mb.size();
    return ma < mb;
  });
  const std::size_t d = masks.size();
  std::vector<std::size_t> position(d);
  for (std::size_t i = 0; i < d; ++i) position[masks[i]] = i;

  std::vector<std::string> labels;
  std::vector<int> signs;
  for (unsigned s : masks) {
    const auto m = members(s);
    if (m.empty()) {
      labels.push_back("1");
    } else {
      std::string l = "e";
      for (int i : m) l += std::to_string(i);
      labels.push_back(l);
    }
    const int k = static_cast<int>(m.size());
    signs.push_back(((k * (k + 1) / 2) % 2 == 0) ? 1 : -1);
  }
  std::vector<SparseVector> products(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const unsigned sa = masks[a], sb = masks[b];
      // Transpositions needed to sort the concatenated generator word, plus
      // one factor -1 for each contracted pair e_i e_i.
      int swaps = 0;
      for (int i : members(sb))
        for (int j : members(sa))
          if (j > i) ++swaps;
      const int contractions = __builtin_popcount(sa & sb);
      const int sign = ((swaps + contractions) % 2 == 0) ? 1 : -1;
      products[a * d + b] = {
          {static_cast<std::uint16_t>(position[sa ^ sb]), Rational(sign)}};
    }
  return AlgebraTable::create(AlgebraKind::clifford,
                              "clifford:" + std::to_string(n),
                              std::move(labels), std::move(products),
                              std::move(signs));
}

}  // namespace detail

/// Builds (or returns the interned) table for "quaternion", "octonion" or
/// "clifford:<n>" with 1 <= n <= 8.
inline AlgebraPtr make_algebra(std::string_view spec) {
  static std::mutex mutex;
  static std::map<std::string, AlgebraPtr, std::less<>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(spec); it != cache.end()) return it->second;

  AlgebraPtr table;
  if (spec == "quaternion") {
    table = detail::build_quaternion();
  } else if (spec == "octonion") {
    table = detail::build_octonion();
  } else if (spec.starts_with("clifford:")) {
    const std::string_view digits = spec.substr(9);
    int n = 0;
    if (digits.empty() || digits.size() > 1 || digits[0] < '1' ||
        digits[0] > '8')
      throw Error("unsupported algebra '" + std::string(spec) +
                  "' (clifford:<n> needs 1 <= n <= 8)");
    n = digits[0] - '0';
    table = detail::build_clifford(n);
  } else {
    throw Error("unsupported algebra '" + std::string(spec) +
                "' (expected quaternion, octonion or clifford:<n>)");
  }
  cache.emplace(std::string(spec), table);
  return table;
}

}  // namespace hyperslice
