/// @file moments.hpp
/// @brief Exact monomial moments on the unit sphere and the quaternionic
/// mean value formula evaluated through them.

#pragma once

#include "hyperslice/operators.hpp"

#include <string>
#include <vector>

namespace hyperslice {

/// Integral of zeta^alpha over S^m (m+1 = alpha.size() variables) for the
/// normalized rotation-invariant measure: 0 if some alpha_i is odd, else
/// prod (alpha_i - 1)!! / ((m+1)(m+3)...(m+2s-1)) with 2s = |alpha|.
inline Rational sphere_moment(const std::vector<int>& alpha) {
  if (alpha.empty()) throw Error("sphere moment needs at least one exponent");
  long total = 0;
  mpz_class num = 1;
  for (int a : alpha) {
    if (a < 0) throw Error("sphere moment exponents must be non-negative");
    if (a % 2) return 0;
    num *= double_factorial(a - 1);
    total += a;
  }
  const long m = static_cast<long>(alpha.size()) - 1;
  mpz_class den = 1;
  for (long j = 0; j < total / 2; ++j) den *= m + 1 + 2 * j;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Integral over the unit sphere of a polynomial in x_0..x_m.
inline AlgElement sphere_integral(const CoordPoly& p) {
  if (p.uses_extension()) throw Error("sphere integral is defined on x_0..x_m only");
  const int n = p.subspace()->m() + 1;
  AlgElement r(p.subspace()->table());
  std::vector<int> alpha(n);
  for (const auto& [k, c] : p.terms()) {
    for (int i = 0; i < n; ++i) alpha[i] = k[i];
    const Rational mu = sphere_moment(alpha);
    if (sgn(mu) != 0) r.add_scaled(c, mu);
  }
  return r;
}

/// p(a + r zeta) as a polynomial in zeta.
inline CoordPoly affine_substitute(const CoordPoly& p, const std::vector<Rational>& a,
                                   const Rational& r) {
  const CoordPoly shifted = translate(p, a);
  CoordPoly out(p.subspace());
  for (const auto& [k, c] : shifted.terms()) {
    Rational s = 1;
    for (int d = 0; d < k.degree(); ++d) s *= r;
    out.add_term_scaled(k, c, s);
  }
  return out;
}

struct MeanValueReport {
  AlgElement value_at_center;
  AlgElement sphere_average;     // int f(a + r zeta) dsigma
  AlgElement correction;         // -r int conj(zeta) D f(a + r zeta) dsigma
  std::string convention;
  bool holds = false;
};

/// f(a) = int f(a + r zeta) dsigma - r int conj(zeta) D f(a + r zeta) dsigma
/// on the quaternions, with D the 1/2-normalized Cauchy-Riemann-Fueter
/// operator (the one for which D f = -f'_s on slice-regular f).
inline MeanValueReport mean_value_check(const SlicePoly& f, const std::vector<Rational>& a,
                                        const Rational& r) {
  const auto& sub = f.subspace();
  if (sub->table()->kind() != AlgebraKind::quaternion || !sub->is_whole_algebra())
    throw Error("the mean value formula is stated on the full quaternions");
  if (a.size() != 4) throw Error("centre must have 4 coordinates");
  if (sgn(r) <= 0) throw Error("radius must be positive");
  const CoordPoly p = to_coord(f);
  const CoordPoly kernel = conjugate_variable(sub) * affine_substitute(cr(p), a, r);
  MeanValueReport rep{evaluate(p, a), sphere_integral(affine_substitute(p, a, r)),
                      sphere_integral(kernel) * (-r),
                      "D = 1/2 (d0 + i d1 + j d2 + k d3), so D f = -f'_s"};
  rep.holds = rep.sphere_average + rep.correction == rep.value_at_center;
  return rep;
}

}  // namespace hyperslice
