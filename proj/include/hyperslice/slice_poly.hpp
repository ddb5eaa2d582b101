/// @file slice_poly.hpp
/// @brief Slice-regular polynomials f(x) = sum_n x^n a_n (right coefficients).

#pragma once

#include "hyperslice/zonal.hpp"

#include <mutex>
#include <tuple>

namespace hyperslice {

class SlicePoly {
 public:
  explicit SlicePoly(SubspacePtr sub) : sub_(std::move(sub)) {}
  SlicePoly(SubspacePtr sub, std::vector<AlgElement> coeffs)
      : sub_(std::move(sub)), a_(std::move(coeffs)) {
    for (const auto& c : a_)
      if (c.table().get() != sub_->table().get())
        throw Error("coefficient from a different algebra");
    prune();
  }
  /// x^n a
  static SlicePoly monomial(const SubspacePtr& sub, int n, const AlgElement& a) {
    std::vector<AlgElement> c(n + 1, sub->zero());
    c[n] = a;
    return SlicePoly(sub, std::move(c));
  }

  const SubspacePtr& subspace() const { return sub_; }
  const std::vector<AlgElement>& coeffs() const { return a_; }
  /// Degree, -1 for the zero polynomial.
  int degree() const { return static_cast<int>(a_.size()) - 1; }
  bool is_zero() const { return a_.empty(); }
  AlgElement coeff(int n) const {
    return n >= 0 && n <= degree() ? a_[n] : sub_->zero();
  }
  bool slice_preserving() const {
    for (const auto& c : a_)
      if (!c.is_real()) return false;
    return true;
  }

  friend SlicePoly operator+(const SlicePoly& f, const SlicePoly& g) {
    const int d = std::max(f.degree(), g.degree());
    std::vector<AlgElement> c;
    for (int n = 0; n <= d; ++n) c.push_back(f.coeff(n) + g.coeff(n));
    return SlicePoly(f.sub_, std::move(c));
  }
  friend SlicePoly operator-(const SlicePoly& f, const SlicePoly& g) {
    return f + g * Rational(-1);
  }
  friend SlicePoly operator*(SlicePoly f, const Rational& q) {
    for (auto& c : f.a_) c *= q;
    f.prune();
    return f;
  }
  friend bool operator==(const SlicePoly& f, const SlicePoly& g) {
    return f.a_ == g.a_;
  }

 private:
  void prune() {
    while (!a_.empty() && a_.back().is_zero()) a_.pop_back();
  }

  SubspacePtr sub_;
  std::vector<AlgElement> a_;
};

/// x^n as a coordinate polynomial, computed as (...((x x) x) ...) x.
/// Results are cached per (algebra, basis, n).
inline CoordPoly power_of_x(const SubspacePtr& sub, int n) {
  if (n < 0) throw Error("negative power of x");
  using Key = std::tuple<const AlgebraTable*, std::vector<std::size_t>, int>;
  static std::mutex mutex;
  static std::map<Key, CoordPoly> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(Key{sub->table().get(), sub->basis_indices(), n});
    if (it != cache.end()) {
      CoordPoly r(sub);
      r += it->second;
      return r;
    }
  }
  CoordPoly r = n == 0 ? CoordPoly::constant(sub, Rational(1))
                       : power_of_x(sub, n - 1) * hypercomplex_variable(sub);
  std::lock_guard lock(mutex);
  cache.emplace(Key{sub->table().get(), sub->basis_indices(), n}, r);
  return r;
}

/// sum_n x^n a_n with a_n multiplied on the right of each coefficient.
inline CoordPoly to_coord(const SlicePoly& f) {
  CoordPoly r(f.subspace());
  for (int n = 0; n <= f.degree(); ++n)
    if (!f.coeffs()[n].is_zero())
      r += right_multiply(power_of_x(f.subspace(), n), f.coeffs()[n]);
  return r;
}

/// Coefficient convolution c_k = sum_{i+j=k} a_i b_j.
inline SlicePoly star_product(const SlicePoly& f, const SlicePoly& g) {
  if (f.subspace()->table().get() != g.subspace()->table().get())
    throw Error("slice polynomials live on different subspaces");
  if (f.is_zero() || g.is_zero()) return SlicePoly(f.subspace());
  std::vector<AlgElement> c(f.degree() + g.degree() + 1, f.subspace()->zero());
  for (int i = 0; i <= f.degree(); ++i)
    for (int j = 0; j <= g.degree(); ++j)
      c[i + j] += f.coeffs()[i] * g.coeffs()[j];
  return SlicePoly(f.subspace(), std::move(c));
}

inline SlicePoly slice_derivative(const SlicePoly& f) {
  std::vector<AlgElement> c;
  for (int n = 1; n <= f.degree(); ++n) c.push_back(f.coeffs()[n] * Rational(n));
  return SlicePoly(f.subspace(), std::move(c));
}

/// Primitive with zero constant term.
inline SlicePoly slice_primitive(const SlicePoly& f) {
  std::vector<AlgElement> c{f.subspace()->zero()};
  for (int n = 0; n <= f.degree(); ++n)
    c.push_back(f.coeffs()[n] * Rational(1, n + 1));
  return SlicePoly(f.subspace(), std::move(c));
}

/// x * f, i.e. coefficients shifted by one.
inline SlicePoly times_x(const SlicePoly& f) {
  if (f.is_zero()) return f;
  std::vector<AlgElement> c{f.subspace()->zero()};
  for (const auto& a : f.coeffs()) c.push_back(a);
  return SlicePoly(f.subspace(), std::move(c));
}

/// (x^c)^n as a coordinate polynomial.
inline CoordPoly power_of_conj_x(const SubspacePtr& sub, int n) {
  return conjugate(power_of_x(sub, n));
}

/// (x^n)'_s = sum_{k=0}^{n-1} x^{n-k-1} (x^c)^k. Since x and x^c commute with
/// x x^c = |x|^2, each summand is |x|^{2 min} times a pure power.
inline CoordPoly spherical_derivative_of_power(const SubspacePtr& sub, int n) {
  CoordPoly r(sub);
  for (int k = 0; k < n; ++k) {
    const int a = n - k - 1;
    if (a >= k)
      r += norm_squared_power(sub, k) * power_of_x(sub, a - k);
    else
      r += norm_squared_power(sub, a) * power_of_conj_x(sub, k - a);
  }
  return r;
}

/// f'_s from the closed form; throws SelfCheckError if the result is not
/// zonal.
inline CoordPoly spherical_derivative_closed(const SlicePoly& f) {
  CoordPoly r(f.subspace());
  for (int n = 1; n <= f.degree(); ++n)
    if (!f.coeffs()[n].is_zero())
      r += right_multiply(spherical_derivative_of_power(f.subspace(), n),
                          f.coeffs()[n]);
  if (!is_zonal(r))
    throw SelfCheckError("spherical derivative is not zonal");
  return r;
}

/// v_s f = f - Im(x) f'_s; throws SelfCheckError if the result is not zonal.
inline CoordPoly spherical_value_closed(const SlicePoly& f) {
  const CoordPoly ds = spherical_derivative_closed(f);
  CoordPoly r = to_coord(f) - pointwise_product(im_x(f.subspace()), ds);
  if (!is_zonal(r)) throw SelfCheckError("spherical value is not zonal");
  return r;
}

}  // namespace hyperslice
