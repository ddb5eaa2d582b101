/// @file test_poly.cpp
/// @brief Coordinate polynomials: ring operations, derivatives, evaluation.

#include <hyperslice/random.hpp>

#include <gtest/gtest.h>

using namespace hyperslice;

namespace {

CoordPoly xi(const SubspacePtr& s, int i) { return CoordPoly::coordinate(s, i); }

MultiIndex mono(std::initializer_list<int> e) {
  MultiIndex k;
  int i = 0;
  for (int v : e) k[i++] = static_cast<std::uint8_t>(v);
  return k;
}

}  // namespace

TEST(CoordPoly, AddSubtractScale) {
  auto s = make_subspace("quaternion", "full");
  RandomSource rng(1);
  const CoordPoly p = rng.coord_poly(s, 4, 6);
  EXPECT_EQ(p + CoordPoly(s), p);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_TRUE((p - p).terms().empty());
  const CoordPoly x0sq = xi(s, 0) * xi(s, 0);
  const CoordPoly scaled = x0sq * frac(3, 2);
  EXPECT_EQ(scaled.coeff(mono({2})), s->scalar(frac(3, 2)));
  EXPECT_EQ(scaled.size(), 1u);
}

TEST(CoordPoly, ComplexSliceProduct) {
  auto s = make_subspace("quaternion", "full");
  const CoordPoly a = xi(s, 0) + left_multiply(s->unit(1), xi(s, 1));
  const CoordPoly b = xi(s, 0) - left_multiply(s->unit(1), xi(s, 1));
  EXPECT_EQ(a * b, xi(s, 0) * xi(s, 0) + xi(s, 1) * xi(s, 1));
}

TEST(CoordPoly, OneIsNeutral) {
  auto s = make_subspace("octonion", "full");
  RandomSource rng(2);
  const CoordPoly p = rng.coord_poly(s, 3, 5);
  EXPECT_EQ(CoordPoly::constant(s, Rational(1)) * p, p);
}

TEST(CoordPoly, PartialDerivativeBasics) {
  auto s = make_subspace("quaternion", "full");
  EXPECT_EQ(partial_derivative(xi(s, 0) * xi(s, 0), 0), xi(s, 0) * Rational(2));
  EXPECT_TRUE(partial_derivative(xi(s, 0), 1).is_zero());
  EXPECT_THROW(partial_derivative(xi(s, 0), 5), Error);
  EXPECT_THROW(partial_derivative(xi(s, 0), -1), Error);
}

TEST(CoordPoly, LeibnizRule) {
  RandomSource rng(3);
  for (const auto& [alg, sel] : {std::pair{"quaternion", "full"},
                                 std::pair{"octonion", "full"},
                                 std::pair{"clifford:3", "paravector"}}) {
    auto s = make_subspace(alg, sel);
    for (int t = 0; t < 10; ++t) {
      const CoordPoly f = rng.coord_poly(s, 3, 4), g = rng.coord_poly(s, 3, 4);
      for (int i = 0; i <= s->m(); ++i)
        EXPECT_EQ(partial_derivative(f * g, i),
                  partial_derivative(f, i) * g + f * partial_derivative(g, i));
    }
  }
}

TEST(CoordPoly, DerivativesCommute) {
  RandomSource rng(4);
  auto s = make_subspace("clifford:4", "paravector");
  for (int t = 0; t < 10; ++t) {
    const CoordPoly p = rng.coord_poly(s, 5, 8);
    for (int i = 0; i <= s->m(); ++i)
      for (int j = 0; j < i; ++j)
        EXPECT_EQ(partial_derivative(partial_derivative(p, i), j),
                  partial_derivative(partial_derivative(p, j), i));
  }
}

TEST(CoordPoly, Evaluate) {
  auto s = make_subspace("quaternion", "full");
  const CoordPoly p = xi(s, 0) * xi(s, 0) + left_multiply(s->unit(1), xi(s, 1));
  EXPECT_EQ(evaluate(p, {2, 3, 0, 0}), s->point({4, 3, 0, 0}));
  EXPECT_TRUE(evaluate(CoordPoly(s), {5, 1, 2, 3}).is_zero());
  EXPECT_THROW(evaluate(p, {1, 2}), Error);
}

TEST(CoordPoly, EvaluationIsMultiplicative) {
  RandomSource rng(5);
  auto s = make_subspace("octonion", "full");
  for (int t = 0; t < 10; ++t) {
    const CoordPoly f = rng.coord_poly(s, 3, 4), g = rng.coord_poly(s, 3, 4);
    const auto pt = rng.point(8);
    EXPECT_EQ(evaluate(f * g, pt), evaluate(f, pt) * evaluate(g, pt));
  }
}

TEST(CoordPoly, Distributivity) {
  RandomSource rng(6);
  auto s = make_subspace("octonion", "full");
  const CoordPoly f = rng.coord_poly(s, 2, 4), g = rng.coord_poly(s, 2, 4),
                  h = rng.coord_poly(s, 2, 4);
  EXPECT_EQ(f * (g + h), f * g + f * h);
  EXPECT_EQ((g + h) * f, g * f + h * f);
}

TEST(CoordPoly, SpecialPolynomials) {
  auto h = make_subspace("quaternion", "full");
  EXPECT_EQ(norm_squared_power(h, 0), CoordPoly::constant(h, Rational(1)));
  CoordPoly n1(h);
  for (int i = 0; i <= 3; ++i) n1 += xi(h, i) * xi(h, i);
  EXPECT_EQ(norm_squared_power(h, 1), n1);
  EXPECT_EQ(norm_squared_power(h, 2), n1 * n1);

  auto red = make_subspace("quaternion", "indices:1,i,j");
  const auto i = AlgElement::basis(red->table(), 1);
  const auto j = AlgElement::basis(red->table(), 2);
  EXPECT_EQ(hypercomplex_variable(red),
            xi(red, 0) + left_multiply(i, xi(red, 1)) + left_multiply(j, xi(red, 2)));
  EXPECT_EQ(im_x(red), hypercomplex_variable(red) - xi(red, 0));
  EXPECT_EQ(conjugate_variable(red), conjugate(hypercomplex_variable(red)));
}

TEST(CoordPoly, HomogeneousComponents) {
  RandomSource rng(7);
  auto s = make_subspace("quaternion", "full");
  const CoordPoly p = rng.coord_poly(s, 5, 10);
  CoordPoly sum(s);
  for (const auto& [d, part] : homogeneous_components(p)) {
    for (const auto& [k, c] : part.terms()) EXPECT_EQ(k.degree(), d);
    sum += part;
  }
  EXPECT_EQ(sum, p);
  EXPECT_TRUE(homogeneous_components(CoordPoly(s)).empty());
  EXPECT_EQ(CoordPoly(s).degree(), -1);
}

TEST(CoordPoly, TranslateMatchesShiftedEvaluation) {
  RandomSource rng(8);
  auto s = make_subspace("clifford:3", "paravector");
  for (int t = 0; t < 10; ++t) {
    const CoordPoly p = rng.coord_poly(s, 4, 6);
    const auto y = rng.point(4), x = rng.point(4);
    std::vector<Rational> xy(4);
    for (int i = 0; i < 4; ++i) xy[i] = x[i] + y[i];
    EXPECT_EQ(evaluate(translate(p, y), x), evaluate(p, xy));
  }
}

TEST(CoordPoly, GradedLexOrder) {
  auto s = make_subspace("quaternion", "full");
  const CoordPoly p = xi(s, 1) + xi(s, 0) * xi(s, 1) + CoordPoly::constant(s, Rational(1)) +
                      xi(s, 0) * xi(s, 0) + xi(s, 0);
  std::vector<MultiIndex> order;
  for (const auto& [k, c] : p.terms()) order.push_back(k);
  const std::vector<MultiIndex> expected{mono({2}), mono({1, 1}), mono({1}), mono({0, 1}),
                                         mono({})};
  EXPECT_EQ(order, expected);
}

TEST(CoordPoly, ExtensionVariable) {
  auto s = make_subspace("quaternion", "indices:1,i,j");
  const CoordPoly y = xi(s, 3);
  EXPECT_TRUE(y.extended());
  EXPECT_EQ(y.active_variables(), 4);
  const CoordPoly p = y * y + xi(s, 0);
  EXPECT_EQ(restrict_extension_zero(p), xi(s, 0));
  EXPECT_EQ(evaluate(p, {1, 0, 0, 2}), s->scalar(5));
}
