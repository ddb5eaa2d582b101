/// @file test_algebra.cpp
/// @brief Algebra tables, element arithmetic and subspace validation.

#include <hyperslice/random.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <array>

using namespace hyperslice;

namespace {

AlgElement el(const AlgebraPtr& t, const std::string& label, Rational q = 1) {
  AlgElement e(t);
  e[*t->index_of(label)] = q;
  return e;
}

/// Product of two generator words in R_{0,n} by bubble sort: every swap of
/// distinct neighbours flips the sign, every adjacent pair e_i e_i becomes -1.
std::pair<int, std::vector<int>> clifford_word_oracle(std::vector<int> word) {
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] > word[i + 1]) {
        std::swap(word[i], word[i + 1]);
        sign = -sign;
        changed = true;
      } else if (word[i] == word[i + 1]) {
        word.erase(word.begin() + i, word.begin() + i + 2);
        sign = -sign;
        changed = true;
        break;
      }
    }
  }
  return {sign, word};
}

std::vector<int> word_of(const std::string& label) {
  std::vector<int> w;
  if (label == "1") return w;
  for (std::size_t i = 1; i < label.size(); ++i) w.push_back(label[i] - '0');
  return w;
}

using Quat = std::array<Rational, 4>;

Quat qmul_oracle(const Quat& a, const Quat& b) {
  // Written out from i^2 = j^2 = k^2 = ijk = -1.
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}
Quat qconj_oracle(Quat a) {
  for (int i = 1; i < 4; ++i) a[i] = -a[i];
  return a;
}

}  // namespace

TEST(AlgebraTable, QuaternionHamiltonRelations) {
  auto h = make_algebra("quaternion");
  EXPECT_EQ(el(h, "i") * el(h, "j"), el(h, "k"));
  EXPECT_EQ(el(h, "j") * el(h, "i"), el(h, "k", -1));
  EXPECT_EQ(el(h, "i") * el(h, "i"), el(h, "1", -1));
  EXPECT_TRUE(h->associative());
}

TEST(AlgebraTable, QuaternionHandExpansion) {
  auto h = make_algebra("quaternion");
  const AlgElement a = el(h, "i") + el(h, "j");
  const AlgElement b = el(h, "i") - el(h, "j");
  EXPECT_EQ(a * b, el(h, "k", -2));
}

TEST(AlgebraTable, CliffordMatchesWordOracle) {
  for (int n = 1; n <= 5; ++n) {
    auto t = make_algebra("clifford:" + std::to_string(n));
    ASSERT_EQ(t->dim(), std::size_t(1) << n);
    for (std::size_t a = 0; a < t->dim(); ++a)
      for (std::size_t b = 0; b < t->dim(); ++b) {
        auto word = word_of(t->label(a));
        auto wb = word_of(t->label(b));
        word.insert(word.end(), wb.begin(), wb.end());
        auto [sign, reduced] = clifford_word_oracle(word);
        std::string label = "e";
        for (int g : reduced) label += std::to_string(g);
        if (reduced.empty()) label = "1";
        ASSERT_EQ(AlgElement::basis(t, a) * AlgElement::basis(t, b),
                  el(t, label, sign))
            << t->label(a) << " * " << t->label(b);
      }
  }
}

TEST(AlgebraTable, CliffordTwoExamples) {
  auto t = make_algebra("clifford:2");
  EXPECT_EQ(el(t, "e1") * el(t, "e2"), el(t, "e12"));
  EXPECT_EQ(el(t, "e12") * el(t, "e12"), el(t, "1", -1));
}

TEST(AlgebraTable, CliffordBasisOrderAndConjugationSigns) {
  auto t = make_algebra("clifford:3");
  const std::vector<std::string> expected{"1",   "e1",  "e2",  "e3",
                                          "e12", "e13", "e23", "e123"};
  EXPECT_EQ(t->labels(), expected);
  EXPECT_EQ(conjugate(el(t, "e123")), el(t, "e123"));
  EXPECT_EQ(conjugate(el(t, "e12")), el(t, "e12", -1));
  EXPECT_EQ(conjugate(el(t, "e1")), el(t, "e1", -1));
}

TEST(AlgebraTable, CliffordEightBuilds) {
  auto t = make_algebra("clifford:8");
  EXPECT_EQ(t->dim(), 256u);
  EXPECT_TRUE(t->monomial());
  EXPECT_EQ(make_algebra("clifford:8").get(), t.get());
}

TEST(AlgebraTable, OctonionMatchesCayleyDicksonOracle) {
  auto o = make_algebra("octonion");
  auto split = [](const AlgElement& x) {
    Quat a, b;
    for (int i = 0; i < 4; ++i) {
      a[i] = x[i];
      b[i] = x[i + 4];
    }
    return std::pair{a, b};
  };
  RandomSource rng(5);
  for (int t = 0; t < 200; ++t) {
    const AlgElement x = rng.element(o), y = rng.element(o);
    auto [q1, q1p] = split(x);
    auto [q2, q2p] = split(y);
    Quat first = qmul_oracle(q1, q2), u = qmul_oracle(qconj_oracle(q2p), q1p);
    Quat second = qmul_oracle(q2p, q1), w = qmul_oracle(q1p, qconj_oracle(q2));
    AlgElement expected(o);
    for (int i = 0; i < 4; ++i) {
      expected[i] = first[i] - u[i];
      expected[i + 4] = second[i] + w[i];
    }
    ASSERT_EQ(x * y, expected);
  }
}

TEST(AlgebraTable, OctonionIsNotAssociative) {
  auto o = make_algebra("octonion");
  EXPECT_FALSE(o->associative());
  const AlgElement e1 = el(o, "e1"), e2 = el(o, "e2"), e4 = el(o, "e4");
  EXPECT_NE((e1 * e2) * e4, e1 * (e2 * e4));
}

TEST(AlgebraTable, OctonionNormIsSumOfSquares) {
  auto o = make_algebra("octonion");
  RandomSource rng(11);
  for (int t = 0; t < 100; ++t) {
    const AlgElement x = rng.element(o);
    Rational s = 0;
    for (std::size_t i = 0; i < 8; ++i) s += x[i] * x[i];
    EXPECT_EQ(norm(x), AlgElement::scalar(o, s));
    EXPECT_TRUE(trace(x).is_real());
    EXPECT_EQ(trace(x)[0], 2 * x[0]);
  }
}

TEST(AlgebraTable, UnsupportedSpecs) {
  EXPECT_THROW(make_algebra("clifford:9"), Error);
  EXPECT_THROW(make_algebra("clifford:0"), Error);
  EXPECT_THROW(make_algebra("sedenion"), Error);
}

TEST(AlgebraTable, CustomTableValidationRejectsBrokenUnity) {
  // Two-dimensional "complex numbers" with a wrong unity row.
  std::vector<SparseVector> prod(4);
  prod[0] = {{0, Rational(1)}};
  prod[1] = {{1, Rational(2)}};
  prod[2] = {{1, Rational(1)}};
  prod[3] = {{0, Rational(-1)}};
  EXPECT_THROW(AlgebraTable::create(AlgebraKind::custom, "broken", {"1", "i"},
                                    prod, {1, -1}),
               Error);
  prod[1] = {{1, Rational(1)}};
  auto c = AlgebraTable::create(AlgebraKind::custom, "complex", {"1", "i"}, prod, {1, -1});
  EXPECT_TRUE(c->associative());
}

TEST(AlgElement, MixingTablesThrows) {
  auto h = make_algebra("quaternion");
  auto c = make_algebra("clifford:2");
  EXPECT_THROW(el(h, "i") * el(c, "e1"), Error);
  EXPECT_THROW(el(h, "i") + el(c, "e1"), Error);
}

TEST(AlgElement, ConjugateTraceNorm) {
  auto h = make_algebra("quaternion");
  const AlgElement x = el(h, "1") + el(h, "i", 2);
  EXPECT_EQ(conjugate(x), el(h, "1") - el(h, "i", 2));
  EXPECT_EQ(trace(x), el(h, "1", 2));
  EXPECT_EQ(norm(x), el(h, "1", 5));
}

TEST(AlgElement, UnityIsNeutral) {
  for (const char* spec : {"quaternion", "octonion", "clifford:4"}) {
    auto t = make_algebra(spec);
    RandomSource rng(3);
    for (int k = 0; k < 20; ++k) {
      const AlgElement x = rng.element(t);
      EXPECT_EQ(AlgElement::scalar(t, 1) * x, x);
      EXPECT_EQ(x * AlgElement::scalar(t, 1), x);
    }
  }
}

TEST(AlgElement, QuadraticCone) {
  auto c3 = make_algebra("clifford:3");
  EXPECT_TRUE(in_sphere(el(make_algebra("quaternion"), "i")));
  EXPECT_TRUE(in_quadratic_cone(el(c3, "e12")));
  EXPECT_TRUE(in_sphere(el(c3, "e12")));
  const AlgElement y = el(c3, "1") + el(c3, "e123");
  EXPECT_FALSE(norm(y).is_real());
  EXPECT_FALSE(in_quadratic_cone(y));
  EXPECT_THROW(cone_inverse(y), Error);
  EXPECT_THROW(cone_inverse(AlgElement(c3)), Error);
}

TEST(AlgElement, ConeInverse) {
  RandomSource rng(9);
  for (const char* spec : {"quaternion", "octonion"}) {
    auto t = make_algebra(spec);
    for (int k = 0; k < 50; ++k) {
      const AlgElement x = rng.nonzero_element(t);
      EXPECT_EQ(x * cone_inverse(x), AlgElement::scalar(t, 1));
      EXPECT_EQ(cone_inverse(x) * x, AlgElement::scalar(t, 1));
    }
  }
  auto sub = make_subspace("clifford:5", "paravector");
  for (int k = 0; k < 50; ++k) {
    const AlgElement x = rng.subspace_element(sub);
    if (x.is_zero()) continue;
    EXPECT_EQ(x * cone_inverse(x), sub->one());
  }
}

TEST(Subspace, Examples) {
  auto r5 = make_subspace("clifford:5", "paravector");
  EXPECT_EQ(r5->m(), 5);
  EXPECT_EQ(r5->cS(), Rational(-2));
  auto reduced = make_subspace("quaternion", "indices:1,i,j");
  EXPECT_EQ(reduced->m(), 2);
  EXPECT_EQ(reduced->cS(), Rational(-1, 2));
  auto o = make_subspace("octonion", "full");
  EXPECT_EQ(o->m(), 7);
  EXPECT_EQ(o->cS(), Rational(-3));
  EXPECT_EQ(make_subspace("quaternion", "indices:i,j")->m(), 2);
  EXPECT_EQ(make_subspace("clifford:4", "indices:0,1,2,3")->m(), 3);
}

TEST(Subspace, Rejections) {
  EXPECT_THROW(make_subspace("clifford:5", "full"), Error);
  EXPECT_THROW(make_subspace("quaternion", "indices:1,i"), Error);
  EXPECT_THROW(make_subspace("clifford:1", "paravector"), Error);
  EXPECT_THROW(make_subspace("clifford:3", "indices:e1,e2,e123"), Error);
  EXPECT_THROW(make_subspace("clifford:3", "indices:e1,e1"), Error);
  EXPECT_THROW(make_subspace("quaternion", "indices:i,q"), Error);
  EXPECT_THROW(make_subspace("quaternion", "paravector"), Error);
  // e12 anticommutes with e1 in R_3 but commutes with e3.
  EXPECT_NO_THROW(make_subspace("clifford:3", "indices:e1,e12"));
  EXPECT_THROW(make_subspace("clifford:3", "indices:e1,e12,e3"), Error);
}
