#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qm {

/// Binary form in (u0, u1); coefficient j multiplies u0^(d-j) * u1^j.
class BinaryForm {
 public:
  BinaryForm();
  explicit BinaryForm(int degree);
  BinaryForm(int degree, Eigen::VectorXcd coeffs);

  int degree() const noexcept { return degree_; }
  const Eigen::VectorXcd& coeffs() const noexcept { return coeffs_; }
  std::complex<double>& operator[](Eigen::Index j) { return coeffs_[j]; }
  const std::complex<double>& operator[](Eigen::Index j) const { return coeffs_[j]; }

  double norm() const { return coeffs_.norm(); }
  std::complex<double> operator()(std::complex<double> u0, std::complex<double> u1) const;

  BinaryForm& operator+=(const BinaryForm& other);
  BinaryForm& operator*=(std::complex<double> s);

 private:
  int degree_;
  Eigen::VectorXcd coeffs_;
};

BinaryForm operator+(BinaryForm a, const BinaryForm& b);
BinaryForm operator*(BinaryForm a, std::complex<double> s);
BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);

}  // namespace qm
