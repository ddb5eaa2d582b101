/// @file subspace.hpp
/// @brief Hypercomplex subspaces M = span{1, v_1, ..., v_m} of an algebra.

#pragma once

#include "hyperslice/algebra.hpp"

#include <charconv>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace hyperslice {

class HypercomplexSubspace;
using SubspacePtr = std::shared_ptr<const HypercomplexSubspace>;

class HypercomplexSubspace {
 public:
  /// Validates t(v_i) = 0, n(v_i) = 1, v_i^2 = -1, t(v_i v_j) = 0 and
  /// v_i v_j = -v_j v_i for i != j. `indices[0]` must be the unity.
  static SubspacePtr create(AlgebraPtr table, std::vector<std::size_t> indices,
                            std::string selector) {
    if (indices.empty() || indices[0] != 0)
      throw Error("the first basis vector of a subspace must be the unity");
    if (indices.size() < 3)
      throw Error("hypercomplex subspaces need m >= 2 imaginary units (got m = " +
                  std::to_string(indices.size() - 1) + ")");
    for (std::size_t a = 0; a < indices.size(); ++a) {
      if (indices[a] >= table->dim())
        throw Error("basis index " + std::to_string(indices[a]) +
                    " out of range");
      for (std::size_t b = 0; b < a; ++b)
        if (indices[a] == indices[b])
          throw Error("repeated basis index in subspace selector");
    }
    auto s = std::shared_ptr<HypercomplexSubspace>(new HypercomplexSubspace());
    s->table_ = std::move(table);
    s->indices_ = std::move(indices);
    s->selector_ = std::move(selector);
    s->m_ = static_cast<int>(s->indices_.size()) - 1;
    s->cS_ = frac(1 - s->m_, 2);
    s->validate();
    return s;
  }

  const AlgebraPtr& table() const { return table_; }
  int m() const { return m_; }
  /// Number of coordinates x_0..x_m.
  int variables() const { return m_ + 1; }
  /// The constant (1-m)/2 (written both as cS and c_m in the literature).
  const Rational& cS() const { return cS_; }
  const std::string& selector() const { return selector_; }
  std::size_t basis_index(int i) const { return indices_.at(i); }
  const std::vector<std::size_t>& basis_indices() const { return indices_; }
  AlgElement unit(int i) const { return AlgElement::basis(table_, indices_.at(i)); }
  AlgElement zero() const { return AlgElement(table_); }
  AlgElement one() const { return AlgElement::scalar(table_, Rational(1)); }
  AlgElement scalar(const Rational& q) const {
    return AlgElement::scalar(table_, q);
  }
  /// True when every coordinate outside the chosen basis vectors is zero.
  bool contains(const AlgElement& a) const {
    std::vector<bool> in(table_->dim(), false);
    for (auto i : indices_) in[i] = true;
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!in[i] && sgn(a[i]) != 0) return false;
    return true;
  }
  bool is_whole_algebra() const { return indices_.size() == table_->dim(); }
  /// Point x_0 + sum x_i v_i from coordinates.
  AlgElement point(const std::vector<Rational>& coords) const {
    AlgElement x(table_);
    for (int i = 0; i <= m_; ++i) x[indices_[i]] = coords.at(i);
    return x;
  }

 private:
  HypercomplexSubspace() = default;

  void validate() const {
    const auto minus_one = scalar(Rational(-1));
    for (int i = 1; i <= m_; ++i) {
      const AlgElement v = unit(i);
      const std::string& li = table_->label(indices_[i]);
      if (!trace(v).is_zero() || !(norm(v) == one()))
        throw Error("basis vector " + li + " is not in the unit sphere S_A");
      if (!(v * v == minus_one))
        throw Error("basis vector " + li + " does not square to -1");
      for (int j = 1; j < i; ++j) {
        const AlgElement w = unit(j);
        if (!trace(v * w).is_zero() || !(v * w + w * v).is_zero())
          throw Error("basis vectors " + table_->label(indices_[j]) + " and " +
                      li + " are not orthogonal anticommuting units");
      }
    }
  }

  AlgebraPtr table_;
  std::vector<std::size_t> indices_;
  std::string selector_;
  int m_ = 0;
  Rational cS_;
};

/// Selectors: "full" (quaternion/octonion only), "paravector" (clifford),
/// "indices:<list>" with integers or basis labels; unity is prepended when
/// missing.
inline SubspacePtr make_subspace(const AlgebraPtr& table,
                                 std::string_view selector) {
  std::vector<std::size_t> idx;
  if (selector == "full") {
    if (table->kind() != AlgebraKind::quaternion &&
        table->kind() != AlgebraKind::octonion)
      throw Error(
          "subspace 'full' is only a hypercomplex subspace for the quaternions "
          "and the octonions");
    for (std::size_t i = 0; i < table->dim(); ++i) idx.push_back(i);
  } else if (selector == "paravector") {
    if (table->kind() != AlgebraKind::clifford)
      throw Error("subspace 'paravector' requires a clifford algebra");
    idx.push_back(0);
    for (std::size_t i = 1; i < table->dim(); ++i)
      if (table->label(i).size() == 2) idx.push_back(i);
  } else if (selector.starts_with("indices:")) {
    // Tokens are read as basis labels ("1", "i", "e12") if any token is not a
    // plain integer, otherwise as basis positions.
    std::vector<std::string_view> tokens;
    std::string_view rest = selector.substr(8);
    while (true) {
      const auto comma = rest.find(',');
      std::string_view tok = rest.substr(0, comma);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      if (tok.empty()) throw Error("empty entry in subspace selector");
      tokens.push_back(tok);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    auto numeric = [](std::string_view t) {
      return std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    const bool by_label = !std::all_of(tokens.begin(), tokens.end(), numeric);
    for (auto tok : tokens) {
      if (by_label) {
        auto l = table->index_of(tok);
        if (!l)
          throw Error("unknown basis label '" + std::string(tok) +
                      "' in subspace selector");
        idx.push_back(*l);
      } else {
        std::size_t value = 0;
        std::from_chars(tok.data(), tok.data() + tok.size(), value);
        idx.push_back(value);
      }
    }
    if (idx.empty() || idx[0] != 0) idx.insert(idx.begin(), 0);
  } else {
    throw Error("unknown subspace selector '" + std::string(selector) +
                "' (expected full, paravector or indices:<list>)");
  }
  return HypercomplexSubspace::create(table, std::move(idx),
                                      std::string(selector));
}

inline SubspacePtr make_subspace(std::string_view algebra,
                                 std::string_view selector) {
  return make_subspace(make_algebra(algebra), selector);
}

}  // namespace hyperslice
