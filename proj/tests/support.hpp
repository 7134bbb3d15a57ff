#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <tuple>
#include <vector>

#include "qm/poly.hpp"
#include "qm/quadform.hpp"
#include "qm/random.hpp"

namespace qm::testing {

/// Random symmetric nondegenerate form; complex entries when `complex`.
inline QuadForm random_quadform(Rng& rng, bool complex) {
  for (;;) {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = complex ? rng.complex_normal() : cplx(rng.normal());
    Mat3 b = (m + m.transpose()) / 2.0 + Mat3::Identity() * 1.5;
    if (std::abs(b.determinant()) > 0.1 * std::pow(b.norm(), 3) / 27.0) return QuadForm(b);
  }
}

/// Random real positive definite form with eigenvalues in [0.5, 2].
inline QuadForm random_ellipsoid(Rng& rng) {
  Eigen::Matrix3d g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g(i, j) = rng.normal();
  Eigen::HouseholderQR<Eigen::Matrix3d> qr(g);
  const Eigen::Matrix3d o = qr.householderQ();
  Eigen::Vector3d l;
  for (int i = 0; i < 3; ++i) l[i] = 0.5 + 1.5 * rng.uniform();
  const Eigen::Matrix3d b = o * l.asDiagonal() * o.transpose();
  return QuadForm(b.cast<cplx>());
}

inline Eigen::Matrix3d random_orthogonal(Rng& rng) {
  Eigen::Matrix3d g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g(i, j) = rng.normal();
  Eigen::HouseholderQR<Eigen::Matrix3d> qr(g);
  return qr.householderQ();
}

inline double double_factorial(int n) {
  double r = 1.0;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

/// Integral of x^a y^b z^c over the unit sphere.
inline double sphere_monomial_integral(int a, int b, int c) {
  if (a % 2 || b % 2 || c % 2) return 0.0;
  return 4.0 * std::numbers::pi * double_factorial(a - 1) * double_factorial(b - 1) * double_factorial(c - 1) /
         double_factorial(a + b + c + 1);
}

/// Sparse polynomial keyed by exponents, used as an independent oracle.
using Sparse = std::map<std::tuple<int, int, int>, cplx>;

inline Sparse to_sparse(const HPoly& p) {
  Sparse s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == cplx(0.0)) continue;
    const auto e = exponents_at(p.degree(), i);
    s[{e.x, e.y, e.z}] += p[i];
  }
  return s;
}

inline Sparse sparse_mul(const Sparse& a, const Sparse& b) {
  Sparse out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b)
      out[{std::get<0>(ea) + std::get<0>(eb), std::get<1>(ea) + std::get<1>(eb), std::get<2>(ea) + std::get<2>(eb)}] +=
          ca * cb;
  return out;
}

/// Term-by-term d^2/dx^2 + d^2/dy^2 + d^2/dz^2.
inline Sparse sparse_laplacian(const Sparse& p) {
  Sparse out;
  for (const auto& [e, c] : p) {
    const auto [i, j, k] = e;
    if (i >= 2) out[{i - 2, j, k}] += c * double(i * (i - 1));
    if (j >= 2) out[{i, j - 2, k}] += c * double(j * (j - 1));
    if (k >= 2) out[{i, j, k - 2}] += c * double(k * (k - 1));
  }
  return out;
}

inline double sparse_distance(const Sparse& a, const Sparse& b) {
  double s = 0.0;
  Sparse diff = a;
  for (const auto& [e, c] : b) diff[e] -= c;
  for (const auto& [e, c] : diff) s += std::norm(c);
  return std::sqrt(s);
}

inline double sparse_norm(const Sparse& a) { return sparse_distance(a, {}); }

inline double relative_distance(const HPoly& a, const HPoly& b) {
  return (a - b).norm() / std::max(1e-300, std::max(a.norm(), b.norm()));
}

}  // namespace qm::testing
