/// @file operators.hpp
/// @brief Cauchy-Riemann, Laplace and spherical Dirac operators on
/// coordinate polynomials, plus point evaluators for the global operators.
///
/// Every product with a basis vector v_i is a left multiplication of the
/// coefficient, nested exactly as written (v_i (v_j c)), so the operators
/// stay correct in non-associative algebras.

#pragma once

#include "hyperslice/slice_poly.hpp"

namespace hyperslice {

namespace detail {

/// 1/2 (d_0 + sign * sum_{i=1}^m v_i d_i), acting on x_0..x_m only. The
/// extension variable (if any) is treated as a parameter.
inline CoordPoly cr_raw(const CoordPoly& p, int sign) {
  const auto& sub = p.subspace();
  const int m = sub->m();
  std::vector<AlgElement> units;
  for (int i = 0; i <= m; ++i) units.push_back(sub->unit(i));
  CoordPoly r(sub, p.extended());
  const Rational half(1, 2);
  for (const auto& [k, c] : p.terms()) {
    for (int i = 0; i <= m; ++i) {
      if (k[i] == 0) continue;
      MultiIndex d = k;
      d[i] -= 1;
      Rational q = half * Rational(k[i]);
      if (i == 0) {
        r.add_term_scaled(d, c, q);
      } else {
        if (sign < 0) q = -q;
        r.add_term_scaled(d, units[i] * c, q);
      }
    }
  }
  return r;
}

inline void require_no_extension(const CoordPoly& p, const char* op) {
  if (p.uses_extension())
    throw Error(std::string(op) + " is not defined on the extension variable");
}

}  // namespace detail

/// Cauchy-Riemann operator 1/2 (d_0 + sum v_i d_i).
inline CoordPoly cr(const CoordPoly& p) {
  detail::require_no_extension(p, "cr");
  return detail::cr_raw(p, +1);
}

/// Conjugated operator 1/2 (d_0 - sum v_i d_i).
inline CoordPoly cr_conj(const CoordPoly& p) {
  detail::require_no_extension(p, "cr-conj");
  return detail::cr_raw(p, -1);
}

/// sum_i d_i^2 over the active variables (m+2 of them for extended input).
inline CoordPoly laplacian(const CoordPoly& p) {
  const int n = p.active_variables();
  CoordPoly r(p.subspace(), p.extended());
  for (const auto& [k, c] : p.terms())
    for (int i = 0; i < n; ++i) {
      if (k[i] < 2) continue;
      MultiIndex d = k;
      d[i] -= 2;
      r.add_term_scaled(d, c, Rational(k[i] * (k[i] - 1)));
    }
  return r;
}

inline CoordPoly laplacian_power(CoordPoly p, int k) {
  for (int j = 0; j < k && !p.is_zero(); ++j) p = laplacian(p);
  return p;
}

/// L_ij = x_i d_j - x_j d_i, 1 <= i, j <= m.
inline CoordPoly angular(const CoordPoly& p, int i, int j) {
  const int m = p.subspace()->m();
  if (i < 1 || i > m || j < 1 || j > m)
    throw Error("angular operator index out of range");
  CoordPoly r(p.subspace(), p.extended());
  if (i == j) return r;
  for (const auto& [k, c] : p.terms()) {
    if (k[j] > 0) {
      MultiIndex d = k;
      d[j] -= 1;
      d[i] += 1;
      r.add_term_scaled(d, c, Rational(k[j]));
    }
    if (k[i] > 0) {
      MultiIndex d = k;
      d[i] -= 1;
      d[j] += 1;
      r.add_term_scaled(d, c, Rational(-k[i]));
    }
  }
  return r;
}

/// Gamma = -1/2 sum_{i,j} v_i (v_j L_ij).
inline CoordPoly spherical_dirac(const CoordPoly& p) {
  detail::require_no_extension(p, "gamma");
  const auto& sub = p.subspace();
  const int m = sub->m();
  CoordPoly r(sub);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      if (i == j) continue;
      const CoordPoly l = angular(p, i, j);
      r += left_multiply(sub->unit(i), left_multiply(sub->unit(j), l));
    }
  return r * Rational(-1, 2);
}

namespace detail {
/// (Im(pt) / n(Im(pt))) * sum_{i>=1} x_i d_i p, evaluated at pt.
inline AlgElement radial_term_at(const CoordPoly& p,
                                 const std::vector<Rational>& pt) {
  const auto& sub = p.subspace();
  if (static_cast<int>(pt.size()) != sub->m() + 1)
    throw Error("evaluation point has the wrong number of coordinates");
  Rational nim = 0;
  for (int i = 1; i <= sub->m(); ++i) nim += pt[i] * pt[i];
  if (sgn(nim) == 0)
    throw Error("global operators are undefined at real points");
  AlgElement euler = sub->zero();
  for (const auto& [k, c] : p.terms()) {
    int w = 0;
    for (int i = 1; i <= sub->m(); ++i) w += k[i];
    if (w) euler.add_scaled(c, Rational(w) * monomial_value(k, pt));
  }
  std::vector<Rational> im(pt);
  im[0] = 0;
  return (sub->point(im) * Rational(1 / nim)) * euler;
}
}  // namespace detail

/// 1/2 (d_0 + (Im(x)/n(Im(x))) sum x_i d_i) p at a non-real point.
inline AlgElement theta_bar_at(const CoordPoly& p, const std::vector<Rational>& pt) {
  detail::require_no_extension(p, "theta-bar");
  AlgElement r = evaluate(partial_derivative(p, 0), pt) + detail::radial_term_at(p, pt);
  return r * Rational(1, 2);
}

/// 1/2 (d_0 - (Im(x)/n(Im(x))) sum x_i d_i) p at a non-real point.
inline AlgElement theta_at(const CoordPoly& p, const std::vector<Rational>& pt) {
  detail::require_no_extension(p, "theta");
  AlgElement r = evaluate(partial_derivative(p, 0), pt) - detail::radial_term_at(p, pt);
  return r * Rational(1, 2);
}

/// Coefficients of p and cr(p) lie in span(M). Always true for associative
/// algebras and for M = A.
inline bool is_M_admissible(const CoordPoly& p) {
  if (p.table()->associative() || p.subspace()->is_whole_algebra()) return true;
  return coefficients_in_subspace(p) && coefficients_in_subspace(cr(p));
}

/// Slice-regularity certificate for polynomials: cr(p) and cr(x p) are both
/// zonal.
inline bool slice_regular_certificate(const CoordPoly& p) {
  const CoordPoly xp = pointwise_product(hypercomplex_variable(p.subspace()), p);
  return is_zonal(cr(p)) && is_zonal(cr(xp));
}

/// cS^{-1} cr(p). Throws Error when p fails the slice-regularity certificate.
inline CoordPoly spherical_derivative_op(const CoordPoly& p) {
  if (!slice_regular_certificate(p))
    throw Error("input is not slice-regular: cr(f) and cr(x f) are not both zonal");
  return cr(p) * Rational(1 / p.subspace()->cS());
}

/// a_m = 2^{(m-2)/2} (m-3)!! for even m >= 4, a_2 = 1.
inline Rational extension_constant(int m) {
  if (m < 2 || m % 2 != 0) throw Error("extension constant needs even m >= 2");
  if (m == 2) return 1;
  mpz_class two_pow = 1;
  for (int j = 0; j < (m - 2) / 2; ++j) two_pow *= 2;
  return Rational(two_pow * double_factorial(m - 3));
}

/// g~ = a_m d_v^{(m-2)/2} G_2(x_0, r^2 + x_{m+1}^2) where f'_s = G_2(x_0, r^2).
inline CoordPoly harmonic_extension_even(const SlicePoly& f) {
  const int m = f.subspace()->m();
  if (m % 2 != 0) throw Error("harmonic extension requires an even m");
  ZonalBivariate g = extract_G2(spherical_derivative_closed(f));
  for (int j = 0; j < (m - 2) / 2; ++j) g = d_v(g);
  CoordPoly r = substitute(g, true);
  r *= extension_constant(m);
  r.set_extended(true);
  return r;
}

/// Evidence that W is the harmonic extension of P in the extra variable y:
/// W(y=0) = P, Delta' W = 0 and d_y W (y=0) = 0. Together they show
/// (-Delta)^{1/2} P = 0.
struct ExtensionCertificate {
  bool restricts_to_target = false;
  bool harmonic = false;
  bool neumann_zero = false;
  bool ok() const { return restricts_to_target && harmonic && neumann_zero; }
};

inline ExtensionCertificate fractional_kernel_certificate(CoordPoly w,
                                                          const CoordPoly& target) {
  const int y = w.subspace()->m() + 1;
  w.set_extended(true);
  ExtensionCertificate c;
  c.restricts_to_target = restrict_extension_zero(w) == target;
  c.harmonic = laplacian(w).is_zero();
  c.neumann_zero = restrict_extension_zero(partial_derivative(w, y)).is_zero();
  return c;
}

}  // namespace hyperslice
