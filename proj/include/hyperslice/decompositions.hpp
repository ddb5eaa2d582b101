/// @file decompositions.hpp
/// @brief Zonal, Gauss/Almansi, dbar-Delta, Fueter-type and primitive-based
/// decompositions of slice-regular polynomials, and the power identity.
///
/// Each decomposition re-checks its defining identity by exact polynomial
/// equality and throws SelfCheckError if it fails. Kernel conditions are
/// reported as named certificates.

#pragma once

#include "hyperslice/operators.hpp"

#include <random>
#include <string>
#include <vector>

namespace hyperslice {

struct Certificate {
  std::string name;
  bool ok = false;
};

inline bool all_ok(const std::vector<Certificate>& cs) {
  return std::all_of(cs.begin(), cs.end(), [](const Certificate& c) { return c.ok; });
}

struct ZonalPair {
  CoordPoly h1;
  CoordPoly h2;
  std::vector<Certificate> certificates;
};

struct DDeltaComponents {
  std::vector<CoordPoly> components;
  std::vector<Certificate> certificates;
};

struct FueterImage {
  std::vector<CoordPoly> monogenics;
  std::vector<Certificate> certificates;
};

struct PrimitivePair {
  CoordPoly g1;
  CoordPoly g2;
  std::vector<Certificate> certificates;
};

namespace detail {

inline void require_admissible(const SlicePoly& f) {
  const auto& sub = f.subspace();
  if (sub->table()->associative() || sub->is_whole_algebra()) return;
  if (!is_M_admissible(to_coord(f)) || !is_M_admissible(to_coord(times_x(f))))
    throw Error("f and x f must be M-admissible in a non-associative algebra");
}

inline void require_odd_m(const SubspacePtr& sub) {
  if (sub->m() < 3 || sub->m() % 2 == 0)
    throw Error("this decomposition needs an odd m >= 3 (got m = " +
                std::to_string(sub->m()) + ")");
}

/// sum_k |x|^{2k} parts[k]
inline CoordPoly resum(const SubspacePtr& sub, const std::vector<CoordPoly>& parts) {
  CoordPoly r(sub);
  for (std::size_t k = 0; k < parts.size(); ++k)
    r += norm_squared_power(sub, static_cast<int>(k)) * parts[k];
  return r;
}

}  // namespace detail

/// h1 = cS^{-1} cr(x f), h2 = cS^{-1} cr(f), with f = h1 - x^c h2.
inline ZonalPair zonal_decompose(const SlicePoly& f) {
  detail::require_admissible(f);
  const auto& sub = f.subspace();
  const Rational inv = 1 / sub->cS();
  ZonalPair z{cr(to_coord(times_x(f))) * inv, cr(to_coord(f)) * inv, {}};
  if (!(z.h1 - conjugate_variable(sub) * z.h2 == to_coord(f)))
    throw SelfCheckError("zonal decomposition does not resum to f");
  z.certificates.push_back({"f = h1 - x^c h2", true});
  z.certificates.push_back({"h1 zonal", is_zonal(z.h1)});
  z.certificates.push_back({"h2 zonal", is_zonal(z.h2)});
  z.certificates.push_back(
      {"h1, h2 real-valued iff f slice-preserving",
       (is_real_valued(z.h1) && is_real_valued(z.h2)) == f.slice_preserving()});
  return z;
}

/// Harmonic component of degree n - 2k of every homogeneous part p_n, by the
/// closed double-factorial formula; extended additively.
inline CoordPoly sphere_harmonic_projection(const CoordPoly& p, int k) {
  if (k < 0) throw Error("projection index must be non-negative");
  if (p.uses_extension()) throw Error("projection is defined on x_0..x_m only");
  const auto& sub = p.subspace();
  const long m = sub->m();
  CoordPoly out(sub);
  for (const auto& [n, pn] : homogeneous_components(p)) {
    if (2 * k > n) continue;
    const long base = m + 2L * n - 4L * k;
    const Rational lead(mpz_class(double_factorial(base - 1)),
                        mpz_class(double_factorial(2L * k) * double_factorial(m + 2L * n - 2L * k - 1)));
    CoordPoly lap = laplacian_power(pn, k);
    CoordPoly sum(sub);
    for (int j = 0; j <= n / 2 - k && !lap.is_zero(); ++j) {
      Rational c(mpz_class(double_factorial(base - 2L * j - 3)),
                 mpz_class(double_factorial(2L * j) * double_factorial(base - 3)));
      c.canonicalize();
      if (j % 2) c = -c;
      sum += norm_squared_power(sub, j) * lap * c;
      lap = laplacian(lap);
    }
    Rational l = lead;
    l.canonicalize();
    out += sum * l;
  }
  return out;
}

/// f_k = -(2/(m-1)) (Pi_k(cr(x f)) - x^c Pi_k(cr f)), k = 0..(m-3)/2.
inline DDeltaComponents ddelta_decompose(const SlicePoly& f) {
  const auto& sub = f.subspace();
  detail::require_odd_m(sub);
  detail::require_admissible(f);
  const CoordPoly a = cr(to_coord(times_x(f)));
  const CoordPoly b = cr(to_coord(f));
  const CoordPoly xc = conjugate_variable(sub);
  const Rational c = frac(-2, sub->m() - 1);
  DDeltaComponents d;
  for (int k = 0; k <= (sub->m() - 3) / 2; ++k)
    d.components.push_back(
        (sphere_harmonic_projection(a, k) - xc * sphere_harmonic_projection(b, k)) * c);
  if (!(detail::resum(sub, d.components) == to_coord(f)))
    throw SelfCheckError("dbar-Delta decomposition does not resum to f");
  d.certificates.push_back({"f = sum |x|^{2k} f_k", true});
  bool kernel = true, degrees = true, slice = true;
  for (std::size_t k = 0; k < d.components.size(); ++k) {
    const CoordPoly& fk = d.components[k];
    kernel = kernel && cr(laplacian(fk)).is_zero();
    degrees = degrees && (fk.is_zero() || fk.degree() == f.degree() - 2 * static_cast<int>(k));
    slice = slice && try_slice_form(fk).has_value();
  }
  d.certificates.push_back({"cr(laplacian(f_k)) = 0", kernel});
  d.certificates.push_back({"deg f_k = N - 2k", degrees});
  d.certificates.push_back({"f_k slice functions", slice});
  if (f.slice_preserving()) {
    bool sp = true;
    for (const auto& fk : d.components) {
      auto s = try_slice_form(fk);
      sp = sp && s && is_real_valued(substitute(s->g1)) && is_real_valued(substitute(s->g2));
    }
    d.certificates.push_back({"f_k slice-preserving", sp});
  }
  return d;
}

/// Local variant around a centre y of M: f = sum |x - y|^{2k} f_k.
inline DDeltaComponents ddelta_decompose_local(const SlicePoly& f,
                                               const std::vector<Rational>& center) {
  const auto& sub = f.subspace();
  detail::require_odd_m(sub);
  if (static_cast<int>(center.size()) != sub->m() + 1)
    throw Error("centre must have m+1 coordinates");
  const ZonalPair z = zonal_decompose(f);
  std::vector<Rational> back(center);
  for (auto& q : back) q = -q;
  const CoordPoly h1 = translate(z.h1, center), h2 = translate(z.h2, center);
  const CoordPoly xc = conjugate_variable(sub);
  DDeltaComponents d;
  for (int k = 0; k <= (sub->m() - 3) / 2; ++k) {
    const CoordPoly u = translate(sphere_harmonic_projection(h1, k), back);
    const CoordPoly v = translate(sphere_harmonic_projection(h2, k), back);
    d.components.push_back(u - xc * v);
  }
  const CoordPoly dist = translate(norm_squared_power(sub, 1), back);
  CoordPoly sum(sub), pw = CoordPoly::constant(sub, Rational(1));
  for (const auto& fk : d.components) {
    sum += pw * fk;
    pw = pw * dist;
  }
  if (!(sum == to_coord(f)))
    throw SelfCheckError("local dbar-Delta decomposition does not resum to f");
  d.certificates.push_back({"f = sum |x-y|^{2k} f_k", true});
  bool kernel = true;
  for (const auto& fk : d.components) kernel = kernel && cr(laplacian(fk)).is_zero();
  d.certificates.push_back({"cr(laplacian(f_k)) = 0", kernel});
  return d;
}

/// g_k = (8/(m-1)) cr_conj(Pi_k(cr f)).
inline FueterImage ddelta_fueter(const SlicePoly& f) {
  const auto& sub = f.subspace();
  detail::require_odd_m(sub);
  detail::require_admissible(f);
  const CoordPoly b = cr(to_coord(f));
  const Rational c = frac(8, sub->m() - 1);
  FueterImage g;
  for (int k = 0; k <= (sub->m() - 3) / 2; ++k)
    g.monogenics.push_back(cr_conj(sphere_harmonic_projection(b, k)) * c);
  bool monogenic = true, degrees = true;
  for (std::size_t k = 0; k < g.monogenics.size(); ++k) {
    monogenic = monogenic && cr(g.monogenics[k]).is_zero();
    degrees = degrees && (g.monogenics[k].is_zero() ||
                          g.monogenics[k].degree() == f.degree() - 2 * static_cast<int>(k) - 2);
  }
  g.certificates.push_back({"cr(g_k) = 0", monogenic});
  g.certificates.push_back({"deg g_k = N - 2k - 2", degrees});
  return g;
}

/// g_k = laplacian(f_k) cross-check between the two pipelines.
inline bool fueter_matches_laplacian(const FueterImage& g, const DDeltaComponents& d) {
  if (g.monogenics.size() != d.components.size()) return false;
  for (std::size_t k = 0; k < g.monogenics.size(); ++k)
    if (!(laplacian(d.components[k]) == g.monogenics[k])) return false;
  return true;
}

/// g1 = (4 cS)^{-1} Delta(x g), g2 = (4 cS)^{-1} Delta g, g = slice primitive.
inline PrimitivePair primitive_decompose(const SlicePoly& f) {
  const auto& sub = f.subspace();
  detail::require_admissible(f);
  const int m = sub->m();
  const SlicePoly g = slice_primitive(f);
  const SlicePoly xg = times_x(g);
  const Rational inv = 1 / (4 * sub->cS());
  PrimitivePair p{laplacian(to_coord(xg)) * inv, laplacian(to_coord(g)) * inv, {}};
  if (!(p.g1 - conjugate_variable(sub) * p.g2 == to_coord(f)))
    throw SelfCheckError("primitive decomposition does not resum to f");
  p.certificates.push_back({"f = g1 - x^c g2", true});
  if (m % 2 == 1) {
    const int e = (m - 3) / 2;
    p.certificates.push_back({"cr(Delta^((m-3)/2) g1) = 0", cr(laplacian_power(p.g1, e)).is_zero()});
    p.certificates.push_back({"cr(Delta^((m-3)/2) g2) = 0", cr(laplacian_power(p.g2, e)).is_zero()});
  } else if (m == 2) {
    // g_2 = cr_conj(g'_s), so W = cr_conj(g~) extends g_2 (same for x g).
    const CoordPoly w1 = detail::cr_raw(harmonic_extension_even(xg), -1);
    const CoordPoly w2 = detail::cr_raw(harmonic_extension_even(g), -1);
    p.certificates.push_back({"(-Delta)^(1/2) g1 = 0", fractional_kernel_certificate(w1, p.g1).ok()});
    p.certificates.push_back({"(-Delta)^(1/2) g2 = 0", fractional_kernel_certificate(w2, p.g2).ok()});
  } else {
    // Delta^((m-4)/2) cr(g_2) = 1/4 Delta^((m-2)/2) g'_s, extended by g~ / 4.
    const int e = (m - 4) / 2;
    const CoordPoly t1 = laplacian_power(cr(p.g1), e), t2 = laplacian_power(cr(p.g2), e);
    const CoordPoly w1 = harmonic_extension_even(xg) * frac(1, 4);
    const CoordPoly w2 = harmonic_extension_even(g) * frac(1, 4);
    p.certificates.push_back({"(-Delta)^(1/2) Delta^((m-4)/2) cr g1 = 0",
                              fractional_kernel_certificate(w1, t1).ok()});
    p.certificates.push_back({"(-Delta)^(1/2) Delta^((m-4)/2) cr g2 = 0",
                              fractional_kernel_certificate(w2, t2).ok()});
  }
  return p;
}

/// Zonal pair with its polyharmonicity certificates: Delta^((m-1)/2) h_j = 0
/// for odd m, and the half-integer version via harmonic extension for even m.
inline ZonalPair pzd_decompose(const SlicePoly& f) {
  ZonalPair z = zonal_decompose(f);
  const auto& sub = f.subspace();
  const int m = sub->m();
  if (m % 2 == 1) {
    const int e = (m - 1) / 2;
    z.certificates.push_back({"Delta^((m-1)/2) h1 = 0", laplacian_power(z.h1, e).is_zero()});
    z.certificates.push_back({"Delta^((m-1)/2) h2 = 0", laplacian_power(z.h2, e).is_zero()});
  } else {
    const int e = (m - 2) / 2;
    z.certificates.push_back(
        {"(-Delta)^(1/2) Delta^((m-2)/2) h1 = 0",
         fractional_kernel_certificate(harmonic_extension_even(times_x(f)),
                                       laplacian_power(z.h1, e))
             .ok()});
    z.certificates.push_back(
        {"(-Delta)^(1/2) Delta^((m-2)/2) h2 = 0",
         fractional_kernel_certificate(harmonic_extension_even(f), laplacian_power(z.h2, e))
             .ok()});
  }
  return z;
}

/// Solution pair of the boundary problem built from the dbar-Delta
/// decomposition: g = sum f_k, v = sum Pi_k(cS^{-1} cr f). Then
/// Delta g + 4 cr_conj(v) = 0 and Delta v = 0.
struct BvpPair {
  CoordPoly g;
  CoordPoly v;
  bool equation_g = false;
  bool equation_v = false;
};

inline BvpPair bvp_pair(const SlicePoly& f) {
  const auto& sub = f.subspace();
  const DDeltaComponents d = ddelta_decompose(f);
  const CoordPoly h2 = cr(to_coord(f)) * Rational(1 / sub->cS());
  BvpPair b{CoordPoly(sub), CoordPoly(sub)};
  for (std::size_t k = 0; k < d.components.size(); ++k) {
    b.g += d.components[k];
    b.v += sphere_harmonic_projection(h2, static_cast<int>(k));
  }
  b.equation_g = (laplacian(b.g) + cr_conj(b.v) * Rational(4)).is_zero();
  b.equation_v = laplacian(b.v).is_zero();
  return b;
}

struct PowerIdentityResult {
  bool holds = false;
  std::string method;  // "symbolic" or "sampled"
  int samples = 0;
};

namespace detail {

/// Delta(x^e) at a point for any integer e: polynomial for e >= 0, and for
/// e = -n from x^{-n} = (x^c)^n Q^{-n} with Q = |x|^2:
/// Delta(P Q^{-n}) = Q^{-n-1} [Q Delta P - 4n E P + (4n(n+1) - 2nN) P],
/// E the Euler operator and N = m+1.
inline AlgElement laplacian_of_power_at(const SubspacePtr& sub, int e,
                                        const std::vector<Rational>& pt) {
  if (e >= 0) return evaluate(laplacian(power_of_x(sub, e)), pt);
  const int n = -e;
  const long N = sub->m() + 1;
  const CoordPoly P = power_of_conj_x(sub, n);
  CoordPoly euler(sub);
  for (const auto& [k, c] : P.terms()) euler.add_term_scaled(k, c, Rational(k.degree()));
  Rational Q = 0;
  for (const auto& q : pt) Q += q * q;
  AlgElement bracket = evaluate(laplacian(P), pt) * Q - evaluate(euler, pt) * Rational(4 * n) +
                       evaluate(P, pt) * Rational(4L * n * (n + 1) - 2L * n * N);
  Rational qpow = 1;
  for (int i = 0; i < n + 1; ++i) qpow *= Q;
  return bracket * Rational(1 / qpow);
}

}  // namespace detail

/// x^k = -1/(2(m-1)(k+1)) (Delta x^{k+2} - x^c Delta x^{k+1}); symbolic for
/// k >= 0, sampled at non-zero rational points for k <= -2.
inline PowerIdentityResult power_identity_check(int k, const SubspacePtr& sub,
                                                std::uint64_t seed = 1, int samples = 24) {
  if (k == -1) throw Error("the power identity is stated for k >= 0 and k <= -2");
  const Rational c = frac(-1, 2L * (sub->m() - 1) * (k + 1));
  PowerIdentityResult r;
  if (k >= 0) {
    const CoordPoly rhs = (laplacian(power_of_x(sub, k + 2)) -
                           conjugate_variable(sub) * laplacian(power_of_x(sub, k + 1))) *
                          c;
    r.holds = rhs == power_of_x(sub, k);
    r.method = "symbolic";
    return r;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  r.method = "sampled";
  r.holds = true;
  while (r.samples < samples) {
    std::vector<Rational> pt;
    for (int i = 0; i <= sub->m(); ++i) pt.push_back(frac(num(rng), den(rng)));
    const AlgElement x = sub->point(pt);
    if (x.is_zero()) continue;
    const AlgElement lhs = power(cone_inverse(x), static_cast<unsigned>(-k));
    const AlgElement rhs = (detail::laplacian_of_power_at(sub, k + 2, pt) -
                            conjugate(x) * detail::laplacian_of_power_at(sub, k + 1, pt)) *
                           c;
    r.holds = r.holds && lhs == rhs;
    ++r.samples;
  }
  return r;
}

}  // namespace hyperslice
