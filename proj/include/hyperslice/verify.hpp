/// @file verify.hpp
/// @brief Named, seed-deterministic property suites over the algebraic and
/// differential identities, and their reports.
///
/// Trial t of suite s draws from RandomSource::for_trial(seed, s, t) and runs
/// in context t mod (number of contexts), so a report depends only on
/// (suite, seed, trials, context override).

#pragma once

#include "hyperslice/decompositions.hpp"
#include "hyperslice/format.hpp"
#include "hyperslice/moments.hpp"
#include "hyperslice/random.hpp"

#include <concepts>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hyperslice {

struct SuiteContext {
  std::string algebra;
  std::string selector;
  std::string name() const { return algebra + "/" + selector; }
};

struct SuiteFailure {
  int trial = 0;
  std::string context;
  std::string check;
  std::string input;
  std::string expected;
  std::string got;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<std::string> contexts;
  std::vector<std::string> notes;
  std::vector<SuiteFailure> failures;  // first kMaxRecorded only
  int failure_count = 0;
  std::string skipped;  // reason, when the context does not fit the suite
  bool passed() const { return failure_count == 0 && skipped.empty(); }
};

namespace detail {

inline constexpr int kMaxRecorded = 20;

class Trial {
 public:
  Trial(SuiteReport& report, std::map<std::string, bool>& memo, SubspacePtr sub, int index,
        RandomSource rng)
      : report_(report), memo_(memo), sub_(std::move(sub)), index_(index), rng_(std::move(rng)) {}

  const SubspacePtr& sub() const { return sub_; }
  RandomSource& rng() { return rng_; }
  int index() const { return index_; }
  std::string context() const { return sub_->table()->spec() + "/" + sub_->selector(); }

  /// Records a failure; rendering is deferred until a check actually fails.
  template <std::invocable<SuiteFailure&> Render>
  void check(bool ok, const char* what, Render render) {
    if (ok) return;
    ++report_.failure_count;
    if (static_cast<int>(report_.failures.size()) >= kMaxRecorded) return;
    SuiteFailure f{index_, context(), what, "", "", ""};
    render(f);
    report_.failures.push_back(std::move(f));
  }
  void check(bool ok, const char* what, const std::string& input = "") {
    check(ok, what, [&](SuiteFailure& f) { f.input = input; });
  }
  template <class A, class B>
  void check_equal(const A& expected, const B& got, const char* what, const std::string& input) {
    check(expected == got, what, [&](SuiteFailure& f) {
      f.input = input;
      f.expected = to_text(expected);
      f.got = to_text(got);
    });
  }
  /// Cached symbolic result keyed by context and a label.
  bool memo(const std::string& key, const std::function<bool()>& compute) {
    const std::string full = context() + "|" + key;
    auto it = memo_.find(full);
    if (it != memo_.end()) return it->second;
    const bool v = compute();
    memo_.emplace(full, v);
    return v;
  }
  void note(const std::string& n) {
    for (const auto& e : report_.notes)
      if (e == n) return;
    report_.notes.push_back(n);
  }

  /// Non-real point of M with every coordinate bounded as in RandomSource.
  std::vector<Rational> nonreal_point() { return rng_.nonreal_point(sub_->m() + 1); }

 private:
  SuiteReport& report_;
  std::map<std::string, bool>& memo_;
  SubspacePtr sub_;
  int index_;
  RandomSource rng_;
};

struct SuiteSpec {
  std::string name;
  std::vector<SuiteContext> contexts;
  std::function<void(const SubspacePtr&)> require;  // throws Error if unsupported
  std::function<void(Trial&)> run;
};

inline std::string describe(const char* name, const AlgElement& a) {
  return std::string(name) + " = " + to_text(a);
}

inline SlicePoly random_slice(Trial& t, int max_degree, double density = 0.5) {
  return t.rng().slice_poly(t.sub(), t.rng().uniform_int(0, max_degree), density);
}

/// Random element of M (of A when M = A).
inline AlgElement random_in_m(Trial& t) {
  return t.sub()->is_whole_algebra() ? t.rng().element(t.sub()->table())
                                     : t.rng().subspace_element(t.sub());
}

/// Polynomial with values in M (so M-admissible inputs in non-associative A).
inline CoordPoly random_m_valued(Trial& t, int degree, int terms) {
  CoordPoly p(t.sub());
  for (int i = 0; i < terms; ++i) {
    MultiIndex k;
    const int d = t.rng().uniform_int(0, degree);
    for (int j = 0; j < d; ++j) k[t.rng().uniform_int(0, t.sub()->m())] += 1;
    p.add_term(k, random_in_m(t));
  }
  return p;
}

inline void require_any(const SubspacePtr&) {}

inline void require_odd(const SubspacePtr& s) {
  if (s->m() % 2 == 0 || s->m() < 3) throw Error("this suite needs an odd m >= 3");
}

inline void require_even(const SubspacePtr& s) {
  if (s->m() % 2 != 0) throw Error("this suite needs an even m");
}

inline void require_admissible_all(const SubspacePtr& s) {
  if (!s->table()->associative() && !s->is_whole_algebra())
    throw Error("this suite needs an associative algebra or the full octonions");
}

// ---- algebra suites ----------------------------------------------------

inline void suite_moufang(Trial& t) {
  const auto& table = t.sub()->table();
  const AlgElement x = t.rng().element(table), a = t.rng().element(table),
                   y = t.rng().element(table);
  const std::string in = describe("x", x) + ", " + describe("a", a) + ", " + describe("y", y);
  t.check_equal(((x * a) * x) * y, x * (a * (x * y)), "(xax)y = x(a(xy))", in);
  t.check_equal(y * ((x * a) * x), ((y * x) * a) * x, "y(xax) = ((yx)a)x", in);
  t.check_equal((x * y) * (a * x), (x * (y * a)) * x, "(xy)(ax) = x(ya)x", in);
}

inline std::vector<AlgElement> all_bracketings(const std::vector<AlgElement>& w, std::size_t lo,
                                               std::size_t hi) {
  if (hi - lo == 1) return {w[lo]};
  std::vector<AlgElement> out;
  for (std::size_t cut = lo + 1; cut < hi; ++cut)
    for (const auto& l : all_bracketings(w, lo, cut))
      for (const auto& r : all_bracketings(w, cut, hi)) out.push_back(l * r);
  return out;
}

inline void suite_artin(Trial& t) {
  const auto& table = t.sub()->table();
  const AlgElement x = t.rng().element(table), y = t.rng().element(table);
  const std::string in = describe("x", x) + ", " + describe("y", y);
  for (int n = 3; n <= 4; ++n)
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<AlgElement> w;
      for (int i = 0; i < n; ++i) w.push_back(mask >> i & 1 ? y : x);
      const auto all = all_bracketings(w, 0, w.size());
      for (std::size_t b = 1; b < all.size(); ++b)
        t.check_equal(all[0], all[b], "word association independence", in);
    }
}

inline void suite_anti_involution(Trial& t) {
  const auto& table = t.sub()->table();
  const AlgElement x = t.rng().element(table), y = t.rng().element(table);
  const std::string in = describe("x", x) + ", " + describe("y", y);
  t.check_equal(conjugate(y) * conjugate(x), conjugate(x * y), "(xy)^c = y^c x^c", in);
  t.check_equal(x, conjugate(conjugate(x)), "(x^c)^c = x", in);
  const AlgElement z = random_in_m(t);
  t.check(trace(z).is_real(), "t(z) real on M", describe("z", z));
}

inline void suite_norm(Trial& t) {
  const AlgElement x = random_in_m(t), y = random_in_m(t);
  const std::string in = describe("x", x) + ", " + describe("y", y);
  t.check_equal(norm(x) * norm(y), norm(x * y), "n(xy) = n(x) n(y)", in);
  t.check(norm(x).is_real(), "n(x) real", in);
  t.check(in_quadratic_cone(x), "x in the quadratic cone", in);
}

inline void suite_appendix(Trial& t) {
  const auto& sub = t.sub();
  const int m = sub->m();
  const int i = t.rng().uniform_int(1, m);
  int j = t.rng().uniform_int(1, m - 1);
  if (j >= i) ++j;
  const AlgElement vi = sub->unit(i), vj = sub->unit(j);
  const AlgElement a = t.rng().element(sub->table());
  const AlgElement x = t.rng().subspace_element(sub);
  const std::string in = "i = " + std::to_string(i) + ", j = " + std::to_string(j) + ", " +
                         describe("a", a) + ", " + describe("x", x);
  t.check_equal(vj * a, vi * (vj * (vi * a)), "v_i(v_j(v_i a)) = v_j a", in);
  t.check_equal(-(vi * (vi * (vj * a))), vj * a, "v_j a = -v_i(v_i(v_j a))", in);
  t.check_equal(-(vi * a), vi * (vj * (vj * a)), "v_i(v_j(v_j a)) = -v_i a", in);
  t.check_equal(-(vj * (vi * (vj * a))), -(vi * a), "-v_i a = -v_j(v_i(v_j a))", in);
  t.check_equal(-(vj * (vi * x)), vi * (vj * x), "v_i(v_k x) = -v_k(v_i x) on M", in);
}

// ---- operator suites ---------------------------------------------------

inline void suite_difference(Trial& t) {
  const auto& sub = t.sub();
  const CoordPoly p = t.index() % 2 ? random_m_valued(t, 4, 6) : to_coord(random_slice(t, 5));
  const CoordPoly c = cr(p), g = spherical_dirac(p);
  for (int s = 0; s < 3; ++s) {
    const auto pt = t.nonreal_point();
    const AlgElement x = sub->point(pt);
    const AlgElement lhs = evaluate(c, pt) - theta_bar_at(p, pt);
    const AlgElement rhs = -(cone_inverse(im(x) * Rational(2)) * evaluate(g, pt));
    t.check(lhs == rhs, "cr f - theta_bar f = -(2 Im x)^{-1} Gamma f", [&](SuiteFailure& f) {
      f.input = "f = " + to_text(p) + ", x = " + to_text(x);
      f.expected = to_text(rhs);
      f.got = to_text(lhs);
    });
  }
}

inline void suite_powers(Trial& t) {
  const auto& sub = t.sub();
  const int n = t.rng().uniform_int(0, 8);
  const std::string in = "n = " + std::to_string(n);
  const bool sym = t.memo("powers " + std::to_string(n), [&] {
    return cr(power_of_x(sub, n)) == spherical_derivative_of_power(sub, n) * sub->cS();
  });
  t.check(sym, "cr(x^n) = cS f'_s(x^n)", in);
  // Closed form against the defining sum at a point.
  const auto pt = t.rng().point(sub->m() + 1);
  const AlgElement x = sub->point(pt), xc = conjugate(x);
  AlgElement sum(sub->table());
  for (int k = 0; k < n; ++k) sum += power(x, n - k - 1) * power(xc, k);
  t.check_equal(sum * sub->cS(), evaluate(cr(power_of_x(sub, n)), pt),
                "cr(x^n) = cS sum x^{n-k-1} (x^c)^k", in + ", x = " + to_text(x));
}

inline void suite_factorization(Trial& t) {
  const CoordPoly p = t.rng().coord_poly(t.sub(), 6, 6, 0.5);
  const std::string in = "f = " + to_text(p);
  const CoordPoly lap = laplacian(p);
  t.check_equal(lap, cr_conj(cr(p)) * Rational(4), "4 d(dbar f) = Delta f", in);
  t.check_equal(lap, cr(cr_conj(p)) * Rational(4), "4 dbar(d f) = Delta f", in);
}

inline void suite_gamma(Trial& t) {
  const auto& sub = t.sub();
  const Rational m1 = sub->m() - 1;
  const CoordPoly x = hypercomplex_variable(sub);
  t.check_equal(im_x(sub) * m1, spherical_dirac(x), "Gamma(x) = (m-1) Im(x)", "");
  const CoordPoly f = random_m_valued(t, 4, 5);
  t.check_equal(im_x(sub) * f * m1 + conjugate_variable(sub) * spherical_dirac(f),
                spherical_dirac(x * f), "Gamma(x f) = (m-1) Im(x) f + x^c Gamma f",
                "f = " + to_text(f));
}

inline void suite_gamma_slice(Trial& t) {
  const auto& sub = t.sub();
  const SlicePoly f = random_slice(t, 6);
  const std::string in = "f = " + to_text(f);
  const CoordPoly p = to_coord(f);
  const CoordPoly ds = spherical_derivative_closed(f);
  const CoordPoly dfdx = to_coord(slice_derivative(f));
  const Rational cs = sub->cS();
  const CoordPoly imx = im_x(sub);
  t.check_equal(imx * ds * Rational(sub->m() - 1), spherical_dirac(p), "(a) Gamma f = (m-1) Im(x) f'_s", in);
  t.check_equal(ds * cs, cr(p), "(b),(d) cr f = cS f'_s", in);
  t.check_equal(dfdx - ds * cs, cr_conj(p), "(c) d f = df/dx - cS f'_s", in);
  const auto pt = t.nonreal_point();
  t.check(theta_bar_at(p, pt).is_zero(), "(b) df/dx^c = 0", in);
  t.check_equal(theta_at(ds, pt), evaluate(cr_conj(ds), pt), "(c) d(f'_s)/dx = d f'_s", in);
  // x^c a is a slice function with f'_s = -a that is not slice-regular.
  const AlgElement a = t.rng().nonzero_element(sub->table());
  t.check(!(cr(right_multiply(conjugate_variable(sub), a)) == CoordPoly::constant(sub, -a * cs)),
          "(d) x^c a fails cr = cS f'_s", describe("a", a));
  t.check(cr(p).is_zero() == (f.degree() <= 0), "(e),(g) ker cr among slice-regular = constants", in);
  const CoordPoly lap = laplacian(p);
  t.check_equal(cr_conj(ds) * (4 * cs), lap, "(f) Delta f = 4 cS d(f'_s)/dx", in);
  t.check_equal((dfdx - ds) * (2 * cs), imx * lap, "(f) Im(x) Delta f = 2 cS (df/dx - f'_s)", in);
  t.check(lap.is_zero() == (f.degree() <= 1), "(h) harmonic slice-regular = affine", in);
}

inline void suite_polyharmonic(Trial& t) {
  const auto& sub = t.sub();
  const int e = (sub->m() - 1) / 2;
  const int n = t.index() % 9;
  for (const SlicePoly& f : {random_slice(t, 6), SlicePoly::monomial(sub, n, sub->one())}) {
    const std::string in = "f = " + to_text(f);
    const CoordPoly p = to_coord(f);
    t.check(laplacian_power(spherical_derivative_closed(f), e).is_zero(),
            "(a),(b) Delta^((m-1)/2) f'_s = 0", in);
    const CoordPoly le = laplacian_power(p, e);
    t.check(cr(le).is_zero(), "(c) cr Delta^((m-1)/2) f = 0", in);
    t.check(laplacian_power(cr(p), e).is_zero(), "(c) Delta^((m-1)/2) cr f = 0", in);
    t.check(laplacian(le).is_zero(), "(d) Delta^((m+1)/2) f = 0", in);
  }
}

inline void suite_extension_even(Trial& t) {
  const auto& sub = t.sub();
  const int m = sub->m(), e = (m - 2) / 2;
  const SlicePoly f = random_slice(t, 6);
  const std::string in = "f = " + to_text(f);
  const CoordPoly p = to_coord(f);
  const CoordPoly g = harmonic_extension_even(f);
  const Rational cs = sub->cS();
  t.check(fractional_kernel_certificate(g, laplacian_power(spherical_derivative_closed(f), e)).ok(),
          "(a'),(b') extension of Delta^((m-2)/2) f'_s", in);
  t.check(fractional_kernel_certificate(g * cs, laplacian_power(cr(p), e)).ok(),
          "(c') extension of Delta^((m-2)/2) cr f", in);
  t.check(fractional_kernel_certificate(detail::cr_raw(g, -1) * (4 * cs), laplacian_power(p, m / 2)).ok(),
          "(d') extension of Delta^(m/2) f", in);
}

inline void suite_laplacian_g2(Trial& t) {
  const auto& sub = t.sub();
  const int m = sub->m();
  const SlicePoly f = random_slice(t, 6);
  const std::string in = "f = " + to_text(f);
  const CoordPoly ds = spherical_derivative_closed(f);
  ZonalBivariate g = extract_G2(ds);
  t.check_equal(ds, substitute(g), "f'_s = G2(x0, r^2)", in);
  CoordPoly lap = ds;
  Rational factor = 1;
  for (int k = 1; k <= (m - 1) / 2; ++k) {
    lap = laplacian(lap);
    g = d_v(g);
    factor *= 2 * (m - 2 * k - 1);
    t.check_equal(substitute(g) * factor, lap, "Delta^k f'_s = 2^k (m-3)...(m-2k-1) d_v^k G2", in);
  }
}

inline void suite_zonal_certificate(Trial& t) {
  const auto& sub = t.sub();
  const SlicePoly f = random_slice(t, 6);
  const std::string in = "f = " + to_text(f);
  const CoordPoly p = to_coord(f);
  t.check(slice_regular_certificate(p), "cr f and cr(x f) zonal", in);
  const CoordPoly c1 = cr(p), c2 = cr(to_coord(times_x(f)));
  for (int i = 1; i <= sub->m(); ++i)
    for (int j = i + 1; j <= sub->m(); ++j) {
      t.check(angular(c1, i, j).is_zero(), "L_ij cr f = 0", in);
      t.check(angular(c2, i, j).is_zero(), "L_ij cr(x f) = 0", in);
    }
  auto pt = t.nonreal_point();
  t.check(theta_bar_at(p, pt).is_zero(), "theta_bar f = 0", in);
  // x0 v1 - x1: rejected, and theta_bar is non-zero off the v1 axis.
  const CoordPoly w = left_multiply(sub->unit(1), CoordPoly::coordinate(sub, 0)) -
                      CoordPoly::coordinate(sub, 1);
  t.check(!slice_regular_certificate(w), "x0 v1 - x1 rejected", to_text(w));
  bool off_axis = false;
  for (int i = 2; i <= sub->m(); ++i) off_axis = off_axis || sgn(pt[i]) != 0;
  if (!off_axis) pt[2] = 1;
  t.check(!theta_bar_at(w, pt).is_zero(), "theta_bar(x0 v1 - x1) != 0", to_text(w));
}

inline void suite_fueter_kernel(Trial& t) {
  const auto& sub = t.sub();
  const AlgElement a = t.rng().element(sub->table()), b = t.rng().element(sub->table());
  const SlicePoly affine(sub, {b, a});
  const std::string in = "f = " + to_text(affine);
  for (const auto& g : ddelta_fueter(affine).monogenics) t.check(g.is_zero(), "F(x a + b) = 0", in);
  const DDeltaComponents d = ddelta_decompose(affine);
  t.check_equal(to_coord(affine), d.components[0], "f_0 = x a + b", in);
  auto nonzero = [](const FueterImage& g) {
    for (const auto& q : g.monogenics)
      if (!q.is_zero()) return true;
    return false;
  };
  const bool sq = t.memo("x^2", [&] { return nonzero(ddelta_fueter(SlicePoly::monomial(sub, 2, sub->one()))); });
  t.check(sq, "F(x^2) != 0", "f = x^2");
  const SlicePoly f = t.rng().slice_poly(sub, t.rng().uniform_int(2, 3), 0.5);
  t.check(nonzero(ddelta_fueter(f)), "F(f) != 0 for deg f >= 2", "f = " + to_text(f));
}

inline void suite_mean_value(Trial& t) {
  const auto& sub = t.sub();
  t.note("convention: D = 1/2 (d0 + i d1 + j d2 + k d3), the operator with D f = -f'_s on slice-regular f");
  if (t.index() == 0) {
    const MeanValueReport w = mean_value_check(SlicePoly::monomial(sub, 2, sub->one()), {0, 0, 0, 0}, 1);
    t.check(w.holds, "f = x^2, a = 0, r = 1", "f = x^2");
    t.check_equal(sub->scalar(frac(-1, 2)), w.sphere_average, "int f(zeta) = -1/2", "f = x^2");
    t.check_equal(sub->scalar(frac(1, 2)), w.correction, "-int conj(zeta) D f = 1/2", "f = x^2");
  }
  const SlicePoly f = random_slice(t, 4, 1.0);
  const auto a = t.rng().point(4);
  const Rational r = abs(t.rng().nonzero_rational());
  const MeanValueReport rep = mean_value_check(f, a, r);
  t.check(rep.holds, "f(a) = int f(a + r zeta) - r int conj(zeta) D f(a + r zeta)", [&](SuiteFailure& fl) {
    fl.input = "f = " + to_text(f) + ", a = " + to_text(sub->point(a)) + ", r = " + to_string(r);
    fl.expected = to_text(rep.value_at_center);
    fl.got = to_text(rep.sphere_average + rep.correction);
  });
}

inline void suite_power_identity(Trial& t) {
  static const int ks[] = {0, 1, 2, 3, 4, 5, -2, -3};
  const int k = ks[t.rng().uniform_int(0, 7)];
  const std::string in = "k = " + std::to_string(k);
  if (k >= 0) {
    t.check(t.memo("k " + std::to_string(k), [&] { return power_identity_check(k, t.sub()).holds; }),
            "x^k = -(Delta x^{k+2} - x^c Delta x^{k+1}) / (2(m-1)(k+1))", in);
  } else {
    const auto seed = static_cast<std::uint64_t>(t.rng().uniform_int(0, 1 << 30));
    const auto r = power_identity_check(k, t.sub(), seed, 4);
    t.check(r.holds, "x^k identity at sampled non-zero points", in);
  }
}

inline void suite_decompositions(Trial& t) {
  const auto& sub = t.sub();
  const SlicePoly f = random_slice(t, 4);
  const std::string in = "f = " + to_text(f);
  auto record = [&](const std::vector<Certificate>& cs) {
    for (const auto& c : cs) t.check(c.ok, c.name.c_str(), in);
  };
  record(zonal_decompose(f).certificates);
  record(primitive_decompose(f).certificates);
  record(pzd_decompose(f).certificates);
  if (sub->m() % 2 == 1) {
    const DDeltaComponents d = ddelta_decompose(f);
    record(d.certificates);
    const FueterImage g = ddelta_fueter(f);
    record(g.certificates);
    t.check(fueter_matches_laplacian(g, d), "g_k = Delta f_k", in);
  }
}

inline const std::vector<SuiteSpec>& suite_table() {
  static const std::vector<SuiteSpec> suites = [] {
    const SuiteContext H{"quaternion", "full"}, O{"octonion", "full"},
        C3{"clifford:3", "paravector"}, C4{"clifford:4", "paravector"},
        C5{"clifford:5", "paravector"}, RQ{"quaternion", "indices:1,i,j"},
        O3{"octonion", "indices:1,e1,e2,e4"};
    return std::vector<SuiteSpec>{
        {"moufang", {O, H, C3}, require_any, suite_moufang},
        {"artin", {O, H, C4}, require_any, suite_artin},
        {"anti-involution", {O, H, C3, C5}, require_any, suite_anti_involution},
        {"norm", {H, O, C5, RQ, O3}, require_any, suite_norm},
        {"appendix", {O, H, C5, O3, RQ}, require_any, suite_appendix},
        {"difference", {H, O, C5}, require_admissible_all, suite_difference},
        {"powers", {H, O, C5, RQ, C4}, require_any, suite_powers},
        {"factorization", {H, O, C5, RQ, C4}, require_any, suite_factorization},
        {"gamma", {H, O, C5, RQ}, require_any, suite_gamma},
        {"gamma-slice", {H, O, C5, RQ, C4}, require_admissible_all, suite_gamma_slice},
        {"polyharmonic", {H, C5, O}, [](const SubspacePtr& s) { require_odd(s); require_admissible_all(s); },
         suite_polyharmonic},
        {"extension-even", {RQ, C4}, [](const SubspacePtr& s) { require_even(s); require_admissible_all(s); },
         suite_extension_even},
        {"laplacian-g2", {H, O, C5, RQ, C4}, require_admissible_all, suite_laplacian_g2},
        {"zonal-certificate", {H, O, C5, RQ, C4}, require_admissible_all, suite_zonal_certificate},
        {"fueter-kernel", {H, C5, O}, [](const SubspacePtr& s) { require_odd(s); require_admissible_all(s); },
         suite_fueter_kernel},
        {"mean-value", {H},
         [](const SubspacePtr& s) {
           if (s->table()->kind() != AlgebraKind::quaternion || !s->is_whole_algebra())
             throw Error("the mean-value suite runs on the full quaternions");
         },
         suite_mean_value},
        {"power-identity", {H, O, C5, RQ, C4}, require_admissible_all, suite_power_identity},
        {"decompositions", {H, O, C5, RQ, C4}, require_admissible_all, suite_decompositions},
    };
  }();
  return suites;
}

}  // namespace detail

inline std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& s : detail::suite_table()) names.push_back(s.name);
  return names;
}

/// Runs one suite; `context` replaces the suite's default context cycle.
inline SuiteReport run_suite(const std::string& name, std::uint64_t seed, int trials,
                             const std::optional<SuiteContext>& context = std::nullopt) {
  const detail::SuiteSpec* spec = nullptr;
  for (const auto& s : detail::suite_table())
    if (s.name == name) spec = &s;
  if (!spec) throw Error("unknown suite '" + name + "'");
  if (trials < 0) throw Error("trial count must be non-negative");
  std::vector<SubspacePtr> subs;
  for (const auto& c : context ? std::vector<SuiteContext>{*context} : spec->contexts) {
    subs.push_back(make_subspace(c.algebra, c.selector));
    spec->require(subs.back());
  }
  SuiteReport report;
  report.suite = name;
  report.seed = seed;
  report.trials = trials;
  for (const auto& s : subs) report.contexts.push_back(s->table()->spec() + "/" + s->selector());
  std::map<std::string, bool> memo;
  for (int i = 0; i < trials; ++i) {
    detail::Trial trial(report, memo, subs[i % subs.size()], i, RandomSource::for_trial(seed, name, i));
    try {
      spec->run(trial);
    } catch (const SelfCheckError& e) {
      trial.check(false, "self-check", std::string(e.what()));
    }
  }
  return report;
}

inline std::vector<SuiteReport> run_all_suites(std::uint64_t seed, int trials,
                                               const std::optional<SuiteContext>& context = std::nullopt) {
  std::vector<SuiteReport> out;
  for (const auto& name : suite_names()) {
    if (context) {
      const auto sub = make_subspace(context->algebra, context->selector);
      try {
        for (const auto& s : detail::suite_table())
          if (s.name == name) s.require(sub);
      } catch (const Error& e) {
        SuiteReport r;
        r.suite = name;
        r.seed = seed;
        r.trials = 0;
        r.skipped = e.what();
        out.push_back(std::move(r));
        continue;
      }
    }
    out.push_back(run_suite(name, seed, trials, context));
  }
  return out;
}

}  // namespace hyperslice
