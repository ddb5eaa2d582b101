/// @file random.hpp
/// @brief Seeded generators for rationals, algebra elements and polynomials.
///
/// Rationals are p/q with |p| <= 20 and 1 <= q <= 10. Everything is drawn
/// from a caller-owned std::mt19937_64, so a seed fixes the whole stream.

#pragma once

#include "hyperslice/slice_poly.hpp"

#include <random>

namespace hyperslice {

struct RandomLimits {
  int max_numerator = 20;
  int max_denominator = 10;
};

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  /// Mixes (seed, name, trial) into one stream so trials are independent of
  /// each other and of scheduling order.
  static RandomSource for_trial(std::uint64_t seed, std::string_view name,
                                std::uint64_t trial) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : name) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                      static_cast<std::uint32_t>(trial)};
    RandomSource r(0);
    r.rng_.seed(seq);
    return r;
  }

  std::mt19937_64& engine() { return rng_; }

  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Rational rational() {
    const int p = uniform_int(-limits_.max_numerator, limits_.max_numerator);
    const int q = uniform_int(1, limits_.max_denominator);
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
  Rational nonzero_rational() {
    Rational r;
    do r = rational();
    while (sgn(r) == 0);
    return r;
  }

  /// Dense random element; with `density` < 1 each coordinate is kept with
  /// that probability.
  AlgElement element(const AlgebraPtr& table, double density = 1.0) {
    AlgElement e(table);
    for (std::size_t i = 0; i < table->dim(); ++i)
      if (density >= 1.0 || coin(density)) e[i] = rational();
    return e;
  }
  AlgElement nonzero_element(const AlgebraPtr& table, double density = 1.0) {
    AlgElement e(table);
    do e = element(table, density);
    while (e.is_zero());
    return e;
  }
  AlgElement real_element(const AlgebraPtr& table) {
    return AlgElement::scalar(table, rational());
  }
  /// Random element of the subspace M.
  AlgElement subspace_element(const SubspacePtr& sub) {
    std::vector<Rational> c;
    for (int i = 0; i <= sub->m(); ++i) c.push_back(rational());
    return sub->point(c);
  }
  std::vector<Rational> point(int n) {
    std::vector<Rational> p;
    for (int i = 0; i < n; ++i) p.push_back(rational());
    return p;
  }
  /// A point with non-zero imaginary part.
  std::vector<Rational> nonreal_point(int n) {
    std::vector<Rational> p;
    do {
      p = point(n);
    } while (std::all_of(p.begin() + 1, p.end(),
                         [](const Rational& q) { return sgn(q) == 0; }));
    return p;
  }

  /// sum_{n<=degree} x^n a_n with the top coefficient non-zero.
  SlicePoly slice_poly(const SubspacePtr& sub, int degree, double density = 1.0) {
    std::vector<AlgElement> c;
    for (int n = 0; n < degree; ++n) c.push_back(element(sub->table(), density));
    c.push_back(nonzero_element(sub->table(), density));
    return SlicePoly(sub, std::move(c));
  }
  /// Random polynomial with `terms` monomials of total degree <= degree.
  CoordPoly coord_poly(const SubspacePtr& sub, int degree, int terms,
                       double density = 1.0, bool extended = false) {
    const int nv = sub->m() + 1 + (extended ? 1 : 0);
    CoordPoly p(sub, extended);
    for (int t = 0; t < terms; ++t) {
      MultiIndex k;
      const int d = uniform_int(0, degree);
      for (int j = 0; j < d; ++j) k[uniform_int(0, nv - 1)] += 1;
      p.add_term(k, element(sub->table(), density));
    }
    return p;
  }
  /// Homogeneous polynomial of the given degree.
  CoordPoly homogeneous_poly(const SubspacePtr& sub, int degree, int terms,
                             double density = 1.0) {
    const int nv = sub->m() + 1;
    CoordPoly p(sub);
    for (int t = 0; t < terms; ++t) {
      MultiIndex k;
      for (int j = 0; j < degree; ++j) k[uniform_int(0, nv - 1)] += 1;
      p.add_term(k, element(sub->table(), density));
    }
    return p;
  }

 private:
  std::mt19937_64 rng_;
  RandomLimits limits_;
};

}  // namespace hyperslice
