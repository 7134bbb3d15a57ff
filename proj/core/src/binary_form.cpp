#include "qm/binary_form.hpp"

#include <cmath>

#include "qm/errors.hpp"

namespace qm {

BinaryForm::BinaryForm() : BinaryForm(0) {}

BinaryForm::BinaryForm(int degree)
    : degree_(degree), coeffs_(Eigen::VectorXcd::Zero(degree + 1)) {
  if (degree < 0) throw InvalidArgument("negative binary form degree");
}

BinaryForm::BinaryForm(int degree, Eigen::VectorXcd coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0 || coeffs_.size() != degree + 1)
    throw InvalidArgument("binary form coefficient length does not match degree");
}

std::complex<double> BinaryForm::operator()(std::complex<double> u0, std::complex<double> u1) const {
  // Homogeneous Horner in whichever chart keeps the ratio bounded.
  if (std::abs(u0) >= std::abs(u1)) {
    if (u0 == 0.0) return degree_ == 0 ? coeffs_[0] : 0.0;
    const std::complex<double> t = u1 / u0;
    std::complex<double> acc = 0.0;
    for (int j = degree_; j >= 0; --j) acc = acc * t + coeffs_[j];
    return acc * std::pow(u0, degree_);
  }
  const std::complex<double> t = u0 / u1;
  std::complex<double> acc = 0.0;
  for (int j = 0; j <= degree_; ++j) acc = acc * t + coeffs_[j];
  return acc * std::pow(u1, degree_);
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& other) {
  if (other.degree_ != degree_) throw InvalidArgument("adding binary forms of different degrees");
  coeffs_ += other.coeffs_;
  return *this;
}

BinaryForm& BinaryForm::operator*=(std::complex<double> s) {
  coeffs_ *= s;
  return *this;
}

BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
BinaryForm operator*(BinaryForm a, std::complex<double> s) { return a *= s; }

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm out(a.degree() + b.degree());
  for (int i = 0; i <= a.degree(); ++i) {
    if (a[i] == 0.0) continue;
    for (int j = 0; j <= b.degree(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace qm
