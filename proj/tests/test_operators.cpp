/// @file test_operators.cpp
/// @brief Cauchy-Riemann, Laplace, spherical Dirac and global operators, zonal
/// extraction and the even-dimensional harmonic extension.

#include "oracles.hpp"

#include <hyperslice/hyperslice.hpp>

#include <gtest/gtest.h>

using namespace hyperslice;

namespace {

CoordPoly xi(const SubspacePtr& s, int i) { return CoordPoly::coordinate(s, i); }
CoordPoly cst(const SubspacePtr& s, Rational q) { return CoordPoly::constant(s, q); }
CoordPoly xpow(const SubspacePtr& s, int n) { return power_of_x(s, n); }
SlicePoly mono(const SubspacePtr& s, int n, Rational q = 1) {
  return SlicePoly::monomial(s, n, s->scalar(q));
}

const std::vector<std::pair<const char*, const char*>> kSubspaces{
    {"quaternion", "full"},
    {"octonion", "full"},
    {"clifford:5", "paravector"},
    {"quaternion", "indices:1,i,j"},
    {"clifford:4", "paravector"}};

}  // namespace

TEST(CauchyRiemann, Examples) {
  for (const auto& [alg, sel] : kSubspaces) {
    auto s = make_subspace(alg, sel);
    EXPECT_EQ(cr(hypercomplex_variable(s)), cst(s, s->cS())) << alg;
  }
  auto h = make_subspace("quaternion", "full");
  EXPECT_EQ(cr(xpow(h, 2)), xi(h, 0) * Rational(-2));
  auto r5 = make_subspace("clifford:5", "paravector");
  const CoordPoly r2 = im_norm_squared(r5);
  EXPECT_EQ(cr(xpow(r5, 3)), (xi(r5, 0) * xi(r5, 0) * Rational(3) - r2) * Rational(-2));
}

TEST(CauchyRiemann, RejectsExtensionVariable) {
  auto s = make_subspace("quaternion", "indices:1,i,j");
  EXPECT_THROW(cr(xi(s, 3)), Error);
  EXPECT_THROW(cr_conj(xi(s, 3)), Error);
}

TEST(Laplacian, Examples) {
  auto h = make_subspace("quaternion", "full");
  EXPECT_EQ(laplacian(xi(h, 0) * xi(h, 0) + xi(h, 1) * xi(h, 1)), cst(h, 4));
  auto r6 = make_subspace("clifford:5", "paravector");
  const CoordPoly x0 = xi(r6, 0), r2 = im_norm_squared(r6), im = im_x(r6);
  const CoordPoly expected = (x0 * x0 * x0 - x0 * r2 + x0 * x0 * im) * frac(5, 2) -
                             r2 * im * frac(1, 2);
  EXPECT_EQ(laplacian(xpow(r6, 5)) * frac(-1, 32), expected);
}

TEST(Laplacian, MatchesMonomialOracle) {
  RandomSource rng(31);
  auto s = make_subspace("clifford:4", "paravector");
  for (int t = 0; t < 10; ++t) {
    const CoordPoly p = rng.coord_poly(s, 6, 10);
    EXPECT_EQ(laplacian(p), oracle::to_coord(oracle::laplacian(oracle::from_coord(p)), s));
  }
}

TEST(Laplacian, FactorizesThroughCauchyRiemann) {
  RandomSource rng(32);
  for (const auto& [alg, sel] : kSubspaces) {
    auto s = make_subspace(alg, sel);
    for (int t = 0; t < 4; ++t) {
      const CoordPoly p = rng.coord_poly(s, 5, 6);
      EXPECT_EQ(laplacian(p), cr_conj(cr(p)) * Rational(4)) << alg;
      EXPECT_EQ(laplacian(p), cr(cr_conj(p)) * Rational(4)) << alg;
    }
  }
}

TEST(SphericalDirac, Examples) {
  for (const auto& [alg, sel] : kSubspaces) {
    auto s = make_subspace(alg, sel);
    EXPECT_EQ(spherical_dirac(hypercomplex_variable(s)), im_x(s) * Rational(s->m() - 1));
    EXPECT_TRUE(spherical_dirac(cst(s, 7)).is_zero());
  }
  auto s = make_subspace("quaternion", "full");
  EXPECT_TRUE(angular(xi(s, 1), 2, 2).is_zero());
  EXPECT_THROW(angular(xi(s, 1), 0, 2), Error);
  EXPECT_EQ(angular(xi(s, 1), 1, 2), cst(s, 0) - xi(s, 2));
}

TEST(SphericalDirac, SliceRegularIdentity) {
  RandomSource rng(33);
  for (const auto& [alg, sel] : {std::pair{"quaternion", "full"}, std::pair{"octonion", "full"}}) {
    auto s = make_subspace(alg, sel);
    for (int t = 0; t < 4; ++t) {
      const SlicePoly f = rng.slice_poly(s, 4);
      EXPECT_EQ(spherical_dirac(to_coord(f)),
                im_x(s) * spherical_derivative_closed(f) * Rational(s->m() - 1));
    }
  }
}

TEST(GlobalOperators, ThetaBarVanishesOnSliceRegular) {
  RandomSource rng(34);
  auto s = make_subspace("octonion", "full");
  const CoordPoly f = to_coord(rng.slice_poly(s, 4));
  for (int t = 0; t < 50; ++t)
    EXPECT_TRUE(theta_bar_at(f, rng.nonreal_point(8)).is_zero());
}

TEST(GlobalOperators, ThetaIsSliceDerivative) {
  RandomSource rng(35);
  auto s = make_subspace("quaternion", "full");
  for (int t = 0; t < 10; ++t) {
    const auto pt = rng.nonreal_point(4);
    EXPECT_EQ(theta_at(xpow(s, 2), pt), s->point(pt) * Rational(2));
  }
  EXPECT_THROW(theta_bar_at(xpow(s, 2), {1, 0, 0, 0}), Error);
}

TEST(GlobalOperators, TheoremDifferenceAtPoints) {
  RandomSource rng(36);
  for (const auto& [alg, sel] : {std::pair{"quaternion", "full"}, std::pair{"octonion", "full"},
                                 std::pair{"clifford:5", "paravector"}}) {
    auto s = make_subspace(alg, sel);
    for (int t = 0; t < 3; ++t) {
      const CoordPoly p = to_coord(rng.slice_poly(s, 4));
      const CoordPoly crp = cr(p), gp = spherical_dirac(p);
      for (int q = 0; q < 30; ++q) {
        const auto pt = rng.nonreal_point(s->m() + 1);
        std::vector<Rational> impt(pt);
        impt[0] = 0;
        const AlgElement lhs = evaluate(crp, pt) - theta_bar_at(p, pt);
        const AlgElement rhs = -(cone_inverse(s->point(impt) * Rational(2)) * evaluate(gp, pt));
        ASSERT_EQ(lhs, rhs) << alg;
      }
    }
  }
}

TEST(SphericalDerivativeOp, Examples) {
  auto r5 = make_subspace("clifford:5", "paravector");
  const CoordPoly x0 = xi(r5, 0);
  EXPECT_EQ(spherical_derivative_op(xpow(r5, 3)), x0 * x0 * Rational(3) - im_norm_squared(r5));
  for (const auto& [alg, sel] : kSubspaces) {
    auto s = make_subspace(alg, sel);
    EXPECT_EQ(spherical_derivative_op(hypercomplex_variable(s)), cst(s, 1));
  }
  // x0 e1: cr is the zonal constant e1/2, but cr(x * x0 e1) is not zonal.
  auto h = make_subspace("quaternion", "full");
  const CoordPoly p = left_multiply(h->unit(1), xi(h, 0));
  EXPECT_TRUE(is_zonal(cr(p)));
  EXPECT_FALSE(slice_regular_certificate(p));
  EXPECT_THROW(spherical_derivative_op(p), Error);
}

TEST(SphericalDerivativeOp, AgreesWithClosedForm) {
  RandomSource rng(37);
  for (const auto& [alg, sel] : kSubspaces) {
    auto s = make_subspace(alg, sel);
    const SlicePoly f = rng.slice_poly(s, 5);
    EXPECT_EQ(spherical_derivative_op(to_coord(f)), spherical_derivative_closed(f)) << alg;
  }
}

TEST(ExtractG2, Examples) {
  auto h = make_subspace("quaternion", "full");
  const ZonalBivariate g = extract_G2(xi(h, 0) * xi(h, 0) * Rational(3) - im_norm_squared(h));
  EXPECT_EQ(g.terms().size(), 2u);
  EXPECT_EQ(g.coeff(2, 0), h->scalar(3));
  EXPECT_EQ(g.coeff(0, 1), h->scalar(-1));
  const ZonalBivariate u = extract_G2(xi(h, 0));
  EXPECT_EQ(u.terms().size(), 1u);
  EXPECT_EQ(u.coeff(1, 0), h->one());

  auto r8 = make_subspace("clifford:7", "paravector");
  const ZonalBivariate g4 = extract_G2(spherical_derivative_closed(mono(r8, 4)));
  EXPECT_EQ(g4.terms().size(), 2u);
  EXPECT_EQ(g4.coeff(3, 0), r8->scalar(4));
  EXPECT_EQ(g4.coeff(1, 1), r8->scalar(-4));
}

TEST(ExtractG2, RejectsNonZonal) {
  auto h = make_subspace("quaternion", "full");
  EXPECT_THROW(extract_G2(xi(h, 1)), Error);
  EXPECT_THROW(extract_G2(xi(h, 2) * xi(h, 2)), Error);
  EXPECT_FALSE(is_zonal(im_x(h)));
}

TEST(ZonalDerivatives, DuDv) {
  auto h = make_subspace("quaternion", "full");
  const ZonalBivariate g = extract_G2(xpow(h, 0) * Rational(1) + xi(h, 0) * im_norm_squared(h));
  EXPECT_EQ(substitute(d_v(g)), xi(h, 0));
  EXPECT_EQ(substitute(d_u(g)), im_norm_squared(h));
}

TEST(HarmonicExtension, ReducedQuaternionExamples) {
  auto s = make_subspace("quaternion", "indices:1,i,j");
  const CoordPoly y = xi(s, 3);
  const CoordPoly g2 = harmonic_extension_even(mono(s, 2));
  EXPECT_EQ(g2, xi(s, 0) * Rational(2));
  const CoordPoly g3 = harmonic_extension_even(mono(s, 3));
  EXPECT_EQ(g3, xi(s, 0) * xi(s, 0) * Rational(3) - im_norm_squared(s) - y * y);
  EXPECT_TRUE(laplacian(g3).is_zero());
  EXPECT_TRUE(restrict_extension_zero(partial_derivative(g3, 3)).is_zero());
  for (int n = 2; n <= 4; ++n) {
    const SlicePoly f = mono(s, n);
    EXPECT_TRUE(fractional_kernel_certificate(harmonic_extension_even(f),
                                              spherical_derivative_closed(f))
                    .ok());
  }
  EXPECT_THROW(harmonic_extension_even(mono(make_subspace("quaternion", "full"), 2)), Error);
}

TEST(HarmonicExtension, ExtensionConstant) {
  EXPECT_EQ(extension_constant(2), Rational(1));
  EXPECT_EQ(extension_constant(4), Rational(2));
  EXPECT_EQ(extension_constant(6), Rational(12));
  EXPECT_EQ(extension_constant(8), Rational(120));
}

TEST(HarmonicExtension, FourDimensionalCaseAgreesWithFiniteDifferences) {
  // Five-point stencils are exact on polynomials of degree <= 4 (first
  // derivative) and <= 5 (second derivative); g~ here has degree <= 3.
  auto s = make_subspace("clifford:4", "paravector");
  RandomSource rng(38);
  const AlgElement a = rng.nonzero_element(s->table(), 0.3), b = rng.nonzero_element(s->table(), 0.3);
  for (const SlicePoly& f : {mono(s, 4), SlicePoly::monomial(s, 6, a) + SlicePoly::monomial(s, 4, b)}) {
    const CoordPoly w = harmonic_extension_even(f);
    const CoordPoly target = laplacian(spherical_derivative_closed(f));
    EXPECT_TRUE(fractional_kernel_certificate(w, target).ok());
    const int nv = s->m() + 2;
    for (int t = 0; t < 10; ++t) {
      auto pt = rng.point(nv);
      const Rational h = frac(1, rng.uniform_int(1, 4));
      auto at = [&](int i, Rational step) {
        auto q = pt;
        q[i] += step;
        return evaluate(w, q);
      };
      AlgElement lap(s->table());
      for (int i = 0; i < nv; ++i) {
        lap += (at(i, 2 * h) * Rational(-1) + at(i, h) * Rational(16) + at(i, 0) * Rational(-30) +
                at(i, -h) * Rational(16) + at(i, -2 * h) * Rational(-1)) *
               Rational(1 / (12 * h * h));
      }
      EXPECT_TRUE(lap.is_zero());
      pt[nv - 1] = 0;
      const AlgElement dy = (at(nv - 1, -2 * h) - at(nv - 1, 2 * h) + at(nv - 1, h) * Rational(8) -
                             at(nv - 1, -h) * Rational(8)) *
                            Rational(1 / (12 * h));
      EXPECT_TRUE(dy.is_zero());
      std::vector<Rational> base(pt.begin(), pt.end() - 1);
      EXPECT_EQ(evaluate(w, pt), evaluate(target, base));
    }
  }
}

TEST(Admissibility, Checks) {
  auto o = make_subspace("octonion", "indices:1,e1,e2,e4");
  const AlgElement e3 = AlgElement::basis(o->table(), 3);
  EXPECT_TRUE(is_M_admissible(hypercomplex_variable(o)));
  EXPECT_FALSE(is_M_admissible(left_multiply(e3, xi(o, 0))));
  // Associative algebras: every function is admissible.
  auto h = make_subspace("quaternion", "indices:1,i,j");
  EXPECT_TRUE(is_M_admissible(left_multiply(AlgElement::basis(h->table(), 3), xi(h, 0))));
}
