/// @file zonal.hpp
/// @brief Zonal polynomials written in the variables u = x_0, v = r^2.

#pragma once

#include "hyperslice/poly.hpp"

#include <map>
#include <utility>

namespace hyperslice {

/// sum_{(i,j)} c_ij u^i v^j with u = x_0 and v = x_1^2 + ... + x_m^2.
class ZonalBivariate {
 public:
  using Key = std::pair<int, int>;

  explicit ZonalBivariate(SubspacePtr sub) : sub_(std::move(sub)) {}

  const SubspacePtr& subspace() const { return sub_; }
  const std::map<Key, AlgElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(int i, int j, const AlgElement& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace({i, j}, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  AlgElement coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? sub_->zero() : it->second;
  }

  friend bool operator==(const ZonalBivariate& a, const ZonalBivariate& b) {
    return a.terms_ == b.terms_;
  }

 private:
  SubspacePtr sub_;
  std::map<Key, AlgElement> terms_;
};

inline ZonalBivariate d_u(const ZonalBivariate& g) {
  ZonalBivariate r(g.subspace());
  for (const auto& [k, c] : g.terms())
    if (k.first > 0) r.add_term(k.first - 1, k.second, c * Rational(k.first));
  return r;
}

inline ZonalBivariate d_v(const ZonalBivariate& g) {
  ZonalBivariate r(g.subspace());
  for (const auto& [k, c] : g.terms())
    if (k.second > 0) r.add_term(k.first, k.second - 1, c * Rational(k.second));
  return r;
}

/// Substitutes u = x_0 and v = r^2, or v = r^2 + x_{m+1}^2 when
/// `with_extension` is set (result then lives in m+2 variables).
inline CoordPoly substitute(const ZonalBivariate& g, bool with_extension = false) {
  const auto& sub = g.subspace();
  CoordPoly v = im_norm_squared(sub);
  if (with_extension) {
    v.set_extended(true);
    v += CoordPoly::coordinate(sub, sub->m() + 1) *
         CoordPoly::coordinate(sub, sub->m() + 1);
  }
  std::map<int, CoordPoly> vpow;
  CoordPoly out(sub, with_extension);
  for (const auto& [k, c] : g.terms()) {
    auto it = vpow.find(k.second);
    if (it == vpow.end()) {
      CoordPoly pw = CoordPoly::constant(sub, Rational(1));
      pw.set_extended(with_extension);
      for (int j = 0; j < k.second; ++j) pw = pw * v;
      it = vpow.emplace(k.second, std::move(pw)).first;
    }
    for (const auto& [mi, q] : it->second.terms()) {
      MultiIndex e = mi;
      e[0] = static_cast<std::uint8_t>(e[0] + k.first);
      out.add_term_scaled(e, c, q[0]);
    }
  }
  return out;
}

namespace detail {
/// Restriction to the line x_1 = s, x_2 = ... = x_m = 0: returns the terms
/// keyed by (power of x_0, power of s).
inline std::map<std::pair<int, int>, AlgElement> restrict_to_x1(const CoordPoly& p) {
  std::map<std::pair<int, int>, AlgElement> out;
  const int m = p.subspace()->m();
  for (const auto& [k, c] : p.terms()) {
    bool on_line = true;
    for (int i = 2; i <= m + 1; ++i)
      if (k[i] != 0) on_line = false;
    if (on_line) out.emplace(std::pair{int(k[0]), int(k[1])}, c);
  }
  return out;
}
}  // namespace detail

/// Writes a zonal polynomial p as G(x_0, r^2). Returns nullopt when p is not
/// zonal (odd powers of x_1 on the test line, or the round trip fails).
inline std::optional<ZonalBivariate> try_extract_G2(const CoordPoly& p) {
  if (p.uses_extension()) return std::nullopt;
  ZonalBivariate g(p.subspace());
  for (const auto& [k, c] : detail::restrict_to_x1(p)) {
    if (k.second % 2 != 0) return std::nullopt;
    g.add_term(k.first, k.second / 2, c);
  }
  if (!(substitute(g) == p)) return std::nullopt;
  return g;
}

inline ZonalBivariate extract_G2(const CoordPoly& p) {
  auto g = try_extract_G2(p);
  if (!g) throw Error("polynomial is not zonal");
  return *std::move(g);
}

inline bool is_zonal(const CoordPoly& p) { return try_extract_G2(p).has_value(); }

/// Slice form p = G1(x_0, r^2) + Im(x) G2(x_0, r^2) (Im(x) acting on the
/// left). Returns nullopt when p does not have that shape.
struct SliceForm {
  ZonalBivariate g1;
  ZonalBivariate g2;
};

inline CoordPoly from_slice_form(const SliceForm& s) {
  return substitute(s.g1) + [&] {
    const auto& sub = s.g1.subspace();
    const CoordPoly g2 = substitute(s.g2);
    CoordPoly r(sub);
    for (int i = 1; i <= sub->m(); ++i)
      r += CoordPoly::coordinate(sub, i) * left_multiply(sub->unit(i), g2);
    return r;
  }();
}

inline std::optional<SliceForm> try_slice_form(const CoordPoly& p) {
  if (p.uses_extension()) return std::nullopt;
  const auto& sub = p.subspace();
  SliceForm s{ZonalBivariate(sub), ZonalBivariate(sub)};
  const AlgElement v1 = sub->unit(1);
  for (const auto& [k, c] : detail::restrict_to_x1(p)) {
    if (k.second % 2 == 0)
      s.g1.add_term(k.first, k.second / 2, c);
    else
      s.g2.add_term(k.first, (k.second - 1) / 2, -(v1 * c));
  }
  if (!(from_slice_form(s) == p)) return std::nullopt;
  return s;
}

}  // namespace hyperslice
