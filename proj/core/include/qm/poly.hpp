#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qm {

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3cd;
using Mat3 = Eigen::Matrix3cd;

/// Bilinear cross product; Eigen's cross conjugates complex results.
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return Vec3(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]);
}

/// Number of monomials of total degree d in x, y, z.
constexpr std::size_t dim_homogeneous(int d) noexcept {
  return d < 0 ? 0 : static_cast<std::size_t>(d + 1) * static_cast<std::size_t>(d + 2) / 2;
}

/// Slot of x^i y^j z^k inside its degree block. Graded lex with x > y > z,
/// so the slot depends only on (j, k).
constexpr std::size_t monomial_index(int j, int k) noexcept {
  const auto r = static_cast<std::size_t>(j + k);
  return r * (r + 1) / 2 + static_cast<std::size_t>(k);
}

struct Exponents {
  int x = 0;
  int y = 0;
  int z = 0;
};

Exponents exponents_at(int degree, std::size_t index);

/// Homogeneous polynomial in x, y, z with a dense graded-lex coefficient vector.
class HPoly {
 public:
  HPoly();
  explicit HPoly(int degree);
  HPoly(int degree, Eigen::VectorXcd coeffs);

  static HPoly constant(cplx c);
  static HPoly monomial(int i, int j, int k, cplx c = 1.0);
  /// a0*x + a1*y + a2*z
  static HPoly linear(const Vec3& a);

  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(coeffs_.size()); }
  const Eigen::VectorXcd& coeffs() const noexcept { return coeffs_; }
  cplx coeff(int i, int j, int k) const;
  cplx& operator[](std::size_t idx) { return coeffs_[static_cast<Eigen::Index>(idx)]; }
  const cplx& operator[](std::size_t idx) const { return coeffs_[static_cast<Eigen::Index>(idx)]; }

  double norm() const { return coeffs_.norm(); }
  bool is_zero(double tol = 0.0) const { return norm() <= tol; }
  bool is_real(double tol = 0.0) const;

  cplx operator()(const Vec3& v) const;

  HPoly derivative(int var) const;
  /// Sum of u_i * d/dx_i.
  HPoly directional_derivative(const Vec3& u) const;
  /// The polynomial v -> p(v * m) for row vectors v.
  HPoly compose(const Mat3& m) const;
  HPoly conj() const;
  HPoly real_part() const;

  HPoly& operator+=(const HPoly& other);
  HPoly& operator-=(const HPoly& other);
  HPoly& operator*=(cplx s);

 private:
  int degree_;
  Eigen::VectorXcd coeffs_;
};

HPoly operator+(HPoly a, const HPoly& b);
HPoly operator-(HPoly a, const HPoly& b);
HPoly operator-(HPoly a);
HPoly operator*(HPoly a, cplx s);
HPoly operator*(cplx s, HPoly a);
HPoly operator*(const HPoly& a, const HPoly& b);
HPoly pow(const HPoly& p, int n);

/// Matrix of r -> q*r from V(degree) into V(degree + deg q).
Eigen::MatrixXcd multiplication_matrix(const HPoly& q, int degree);

/// Least-squares quotient p / q with certified residual
/// ||q*r - p|| <= tol * max(1, ||p||); throws NotDivisible otherwise.
HPoly divide_by_form(const HPoly& p, const HPoly& q, double tol = 1e-9);

/// Inhomogeneous polynomial stored as one homogeneous part per degree.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const HPoly& part);

  static Poly constant(cplx c);

  /// Highest degree with a stored part (0 for the zero polynomial).
  int degree() const noexcept { return parts_.empty() ? 0 : static_cast<int>(parts_.size()) - 1; }
  const std::vector<HPoly>& parts() const noexcept { return parts_; }
  /// Homogeneous part of degree d (zero when absent).
  HPoly part(int d) const;
  bool has_part(int d) const noexcept { return d >= 0 && d < static_cast<int>(parts_.size()); }

  void add(const HPoly& p);

  double norm() const;
  bool is_zero(double tol = 0.0) const { return norm() <= tol; }
  bool is_real(double tol = 0.0) const;
  bool is_homogeneous() const;

  cplx operator()(const Vec3& v) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(cplx s);

 private:
  void trim();
  std::vector<HPoly> parts_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(Poly a, cplx s);
Poly operator*(const Poly& a, const HPoly& b);

/// Even-degree and odd-degree parts.
std::pair<Poly, Poly> parity_split(const Poly& p);

/// Parses the polynomial grammar; throws SyntaxError with a byte offset.
Poly parse_poly(std::string_view text);
/// Canonical text: graded lex order, highest degree first, shortest round-trip numbers.
std::string format_poly(const Poly& p);
std::string format_poly(const HPoly& p);

}  // namespace qm
