/// @file test_slice_poly.cpp
/// @brief Powers of x, star product, slice derivative/primitive, spherical
/// derivative and value.

#include <hyperslice/random.hpp>

#include <gtest/gtest.h>

using namespace hyperslice;

namespace {

CoordPoly xi(const SubspacePtr& s, int i) { return CoordPoly::coordinate(s, i); }

SlicePoly sp(const SubspacePtr& s, std::vector<AlgElement> c) {
  return SlicePoly(s, std::move(c));
}

/// f(x) = sum x^n a_n at a point, with x^n by repeated left multiplication of
/// algebra elements (no polynomial machinery).
AlgElement eval_slice_direct(const SlicePoly& f, const AlgElement& x) {
  AlgElement r(x.table()), pw = AlgElement::scalar(x.table(), 1);
  for (int n = 0; n <= f.degree(); ++n) {
    r += pw * f.coeffs()[n];
    pw = pw * x;
  }
  return r;
}

/// Random bracketing of x*x*...*x (n factors).
AlgElement random_bracketing(const AlgElement& x, int n, RandomSource& rng) {
  if (n == 1) return x;
  const int left = rng.uniform_int(1, n - 1);
  return random_bracketing(x, left, rng) * random_bracketing(x, n - left, rng);
}

}  // namespace

TEST(PowerOfX, QuaternionSquareByHand) {
  auto s = make_subspace("quaternion", "full");
  CoordPoly expected = xi(s, 0) * xi(s, 0);
  for (int i = 1; i <= 3; ++i) {
    expected -= xi(s, i) * xi(s, i);
    expected += left_multiply(s->unit(i), xi(s, 0) * xi(s, i)) * Rational(2);
  }
  EXPECT_EQ(power_of_x(s, 2), expected);
  EXPECT_EQ(power_of_x(s, 0), CoordPoly::constant(s, Rational(1)));
}

TEST(PowerOfX, EvaluationExamples) {
  auto h = make_subspace("quaternion", "full");
  EXPECT_EQ(evaluate(power_of_x(h, 3), {1, 1, 0, 0}), h->point({-2, 2, 0, 0}));
  auto o = make_subspace("octonion", "full");
  EXPECT_EQ(evaluate(power_of_x(o, 3), {0, 1, 0, 0, 0, 0, 0, 0}), -o->unit(1));
}

TEST(PowerOfX, OctonionSquareMatchesSelfProduct) {
  auto o = make_subspace("octonion", "full");
  EXPECT_EQ(hypercomplex_variable(o) * hypercomplex_variable(o), power_of_x(o, 2));
}

TEST(PowerOfX, AnyBracketingGivesTheSamePower) {
  auto o = make_subspace("octonion", "full");
  RandomSource rng(21);
  for (int t = 0; t < 30; ++t) {
    const int n = rng.uniform_int(1, 7);
    const auto pt = rng.point(8);
    EXPECT_EQ(evaluate(power_of_x(o, n), pt), random_bracketing(o->point(pt), n, rng));
  }
}

TEST(SlicePoly, StarProduct) {
  auto h = make_subspace("quaternion", "full");
  const auto i = h->unit(1), j = h->unit(2), k = h->unit(3);
  const SlicePoly xi_ = SlicePoly::monomial(h, 1, i), xj = SlicePoly::monomial(h, 1, j);
  EXPECT_EQ(star_product(xi_, xj), SlicePoly::monomial(h, 2, k));
  RandomSource rng(22);
  const SlicePoly f = rng.slice_poly(h, 4);
  EXPECT_EQ(star_product(f, SlicePoly::monomial(h, 0, h->one())), f);
}

TEST(SlicePoly, StarDegreeAdditiveOnDivisionAlgebras) {
  RandomSource rng(23);
  for (const char* alg : {"quaternion", "octonion"}) {
    auto s = make_subspace(alg, "full");
    for (int t = 0; t < 20; ++t) {
      const SlicePoly f = rng.slice_poly(s, rng.uniform_int(0, 4));
      const SlicePoly g = rng.slice_poly(s, rng.uniform_int(0, 4));
      EXPECT_EQ(star_product(f, g).degree(), f.degree() + g.degree());
    }
  }
}

TEST(SlicePoly, SlicePreservingStarIsPointwise) {
  RandomSource rng(24);
  for (const auto& [alg, sel] :
       {std::pair{"quaternion", "full"}, std::pair{"clifford:4", "paravector"}}) {
    auto s = make_subspace(alg, sel);
    for (int t = 0; t < 5; ++t) {
      std::vector<AlgElement> c;
      for (int n = 0; n < 4; ++n) c.push_back(rng.real_element(s->table()));
      const SlicePoly f = sp(s, c);
      const SlicePoly g = rng.slice_poly(s, 3);
      EXPECT_EQ(to_coord(star_product(f, g)), to_coord(f) * to_coord(g));
    }
  }
}

TEST(SlicePoly, DerivativeAndPrimitive) {
  auto h = make_subspace("quaternion", "full");
  EXPECT_EQ(slice_derivative(SlicePoly::monomial(h, 3, h->one())),
            SlicePoly::monomial(h, 2, h->scalar(3)));
  const auto a = h->unit(2) + h->scalar(5);
  EXPECT_EQ(slice_primitive(SlicePoly::monomial(h, 2, a)),
            SlicePoly::monomial(h, 3, a * frac(1, 3)));
  RandomSource rng(25);
  for (int t = 0; t < 20; ++t) {
    const SlicePoly f = rng.slice_poly(h, rng.uniform_int(0, 6));
    EXPECT_EQ(slice_derivative(slice_primitive(f)), f);
    EXPECT_TRUE(slice_primitive(f).coeff(0).is_zero());
  }
}

TEST(SlicePoly, ToCoordMatchesDirectEvaluation) {
  RandomSource rng(26);
  for (const auto& [alg, sel] : {std::pair{"quaternion", "full"}, std::pair{"octonion", "full"},
                                 std::pair{"clifford:5", "paravector"}}) {
    auto s = make_subspace(alg, sel);
    for (int t = 0; t < 5; ++t) {
      const SlicePoly f = rng.slice_poly(s, 4);
      const auto pt = rng.point(s->m() + 1);
      EXPECT_EQ(evaluate(to_coord(f), pt), eval_slice_direct(f, s->point(pt)));
    }
  }
}

TEST(SlicePoly, ComplexSliceEvaluation) {
  // On the slice C_J with J = v_axis: x^n = A_n + J B_n where
  // A_n + i B_n = (alpha + i beta)^n in the complex numbers.
  auto s = make_subspace("octonion", "full");
  RandomSource rng(27);
  for (int t = 0; t < 10; ++t) {
    const SlicePoly f = rng.slice_poly(s, 5);
    const Rational alpha = rng.rational(), beta = rng.rational();
    const int axis = rng.uniform_int(1, 7);
    std::vector<Rational> pt(8);
    pt[0] = alpha;
    pt[axis] = beta;
    Rational A = 1, B = 0;
    AlgElement expected(s->table());
    for (int n = 0; n <= f.degree(); ++n) {
      const AlgElement zn = s->scalar(A) + s->unit(axis) * B;
      expected += zn * f.coeffs()[n];
      const Rational A2 = A * alpha - B * beta, B2 = A * beta + B * alpha;
      A = A2;
      B = B2;
    }
    EXPECT_EQ(evaluate(to_coord(f), pt), expected);
  }
}

TEST(SphericalDerivative, ClosedFormExamples) {
  auto h = make_subspace("quaternion", "full");
  EXPECT_EQ(spherical_derivative_closed(SlicePoly::monomial(h, 1, h->one())),
            CoordPoly::constant(h, Rational(1)));
  EXPECT_EQ(spherical_derivative_closed(SlicePoly::monomial(h, 2, h->one())),
            xi(h, 0) * Rational(2));
  CoordPoly re_x2 = xi(h, 0) * xi(h, 0);
  for (int i = 1; i <= 3; ++i) re_x2 -= xi(h, i) * xi(h, i);
  EXPECT_EQ(spherical_value_closed(SlicePoly::monomial(h, 2, h->one())), re_x2);
}

TEST(SphericalDerivative, MatchesPointDefinition) {
  // f'_s(x) = (2 Im x)^{-1} (f(x) - f(x^c)) at non-real points.
  RandomSource rng(28);
  for (const auto& [alg, sel] : {std::pair{"quaternion", "full"}, std::pair{"octonion", "full"},
                                 std::pair{"clifford:4", "paravector"}}) {
    auto s = make_subspace(alg, sel);
    for (int t = 0; t < 5; ++t) {
      const SlicePoly f = rng.slice_poly(s, 5);
      const CoordPoly ds = spherical_derivative_closed(f);
      const CoordPoly vs = spherical_value_closed(f);
      const auto pt = rng.nonreal_point(s->m() + 1);
      const AlgElement x = s->point(pt);
      const AlgElement imx = im(x);
      const AlgElement diff = eval_slice_direct(f, x) - eval_slice_direct(f, conjugate(x));
      const AlgElement expected = cone_inverse(imx * Rational(2)) * diff;
      EXPECT_EQ(evaluate(ds, pt), expected);
      EXPECT_EQ(evaluate(vs, pt), (eval_slice_direct(f, x) + eval_slice_direct(f, conjugate(x))) *
                                      frac(1, 2));
    }
  }
}

TEST(SphericalDerivative, InvariantUnderConjugation) {
  // (f'_s)'_s = 0: the closed form does not change under x -> x^c.
  RandomSource rng(29);
  auto s = make_subspace("clifford:5", "paravector");
  for (int t = 0; t < 5; ++t) {
    const CoordPoly ds = spherical_derivative_closed(rng.slice_poly(s, 6));
    CoordPoly flipped(s);
    for (const auto& [k, c] : ds.terms()) {
      int odd = 0;
      for (int i = 1; i <= s->m(); ++i) odd += k[i];
      flipped.add_term(k, odd % 2 ? -c : c);
    }
    EXPECT_EQ(flipped, ds);
  }
}
