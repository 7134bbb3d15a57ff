#include "qm/quadform.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "operator_cache.hpp"
#include "qm/errors.hpp"

namespace qm {

struct QuadForm::Data {
  Mat3 b;
  Mat3 b_inv;
  Mat3 a;
  Mat3 a_inv;
  ConicParam alpha;
  HPoly poly;
  FieldMode mode = FieldMode::Complex;
  Definiteness definiteness = Definiteness::NotReal;
  std::shared_ptr<detail::OperatorCache> cache;
};

namespace {

bool is_diagonal(const Mat3& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && b(i, j) != cplx(0.0)) return false;
  return true;
}

// Takagi factorization B = U S U^T via the real symmetric embedding
// [[Re B, Im B], [Im B, -Re B]], whose positive eigenvectors (x; y) give the
// columns u = x + i y.
Mat3 takagi_factor(const Mat3& b) {
  Eigen::Matrix<double, 6, 6> m;
  const Eigen::Matrix3d re = b.real();
  const Eigen::Matrix3d im = b.imag();
  m << re, im, im, -re;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 6, 6>> es(m);
  Mat3 a;
  for (int c = 0; c < 3; ++c) {
    const int src = 5 - c;  // descending singular values
    const double sigma = es.eigenvalues()[src];
    Vec3 u;
    for (int r = 0; r < 3; ++r) u[r] = cplx(es.eigenvectors()(r, src), es.eigenvectors()(r + 3, src));
    Eigen::Index big = 0;
    u.cwiseAbs().maxCoeff(&big);
    if (u[big].real() < 0.0) u = -u;
    a.col(c) = u * std::sqrt(sigma);
  }
  return a;
}

ConicParam push_sphere_param(const Mat3& a_inv) {
  const cplx i(0.0, 1.0);
  // (u0^2, u0 u1, u1^2) coefficients of the sphere parametrization.
  const Eigen::Vector3cd sphere[3] = {
      Eigen::Vector3cd(i, 0.0, -i),
      Eigen::Vector3cd(0.0, 2.0 * i, 0.0),
      Eigen::Vector3cd(1.0, 0.0, 1.0),
  };
  ConicParam out;
  for (int j = 0; j < 3; ++j) {
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(3);
    for (int m = 0; m < 3; ++m)
      if (a_inv(m, j) != cplx(0.0)) c += sphere[m] * a_inv(m, j);
    out.alpha[static_cast<std::size_t>(j)] = BinaryForm(2, c);
  }
  return out;
}

}  // namespace

Vec3 ConicParam::operator()(cplx u0, cplx u1) const {
  return Vec3(alpha[0](u0, u1), alpha[1](u0, u1), alpha[2](u0, u1));
}

QuadForm::QuadForm(const Mat3& input) {
  auto d = std::make_shared<Data>();
  Mat3 b = input;
  const double scale = input.norm();
  if ((input - input.transpose()).norm() > 1e-12 * scale)
    throw InvalidArgument("quadratic form matrix is not symmetric");
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) b(j, i) = b(i, j);
  const double norm = b.norm();
  if (norm == 0.0 || std::abs(b.determinant()) <= 1e-12 * norm * norm * norm)
    throw Degenerate("quadratic form is degenerate", std::abs(b.determinant()));
  d->b = b;
  d->b_inv = b.inverse();
  d->mode = b.imag().isZero(0.0) ? FieldMode::Real : FieldMode::Complex;

  if (is_diagonal(b)) {
    d->a = Mat3::Zero();
    d->a_inv = Mat3::Zero();
    for (int i = 0; i < 3; ++i) {
      d->a(i, i) = std::sqrt(b(i, i));
      d->a_inv(i, i) = 1.0 / d->a(i, i);
    }
  } else {
    d->a = takagi_factor(b);
    d->a_inv = d->a.inverse();
  }
  d->alpha = push_sphere_param(d->a_inv);

  HPoly q(2);
  q[monomial_index(0, 0)] = b(0, 0);
  q[monomial_index(1, 0)] = 2.0 * b(0, 1);
  q[monomial_index(0, 1)] = 2.0 * b(0, 2);
  q[monomial_index(2, 0)] = b(1, 1);
  q[monomial_index(1, 1)] = 2.0 * b(1, 2);
  q[monomial_index(0, 2)] = b(2, 2);
  d->poly = q;

  if (d->mode == FieldMode::Real) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(b.real());
    const auto& ev = es.eigenvalues();
    if (ev.minCoeff() > 0.0)
      d->definiteness = Definiteness::PositiveDefinite;
    else if (ev.maxCoeff() < 0.0)
      d->definiteness = Definiteness::NegativeDefinite;
    else
      d->definiteness = Definiteness::Indefinite;
  }
  d->cache = std::make_shared<detail::OperatorCache>();
  d_ = std::move(d);
}

QuadForm QuadForm::from_poly(const HPoly& q) {
  if (q.degree() != 2) throw InvalidArgument("quadratic form must have degree 2");
  Mat3 b;
  b(0, 0) = q.coeff(2, 0, 0);
  b(1, 1) = q.coeff(0, 2, 0);
  b(2, 2) = q.coeff(0, 0, 2);
  b(0, 1) = b(1, 0) = q.coeff(1, 1, 0) / 2.0;
  b(0, 2) = b(2, 0) = q.coeff(1, 0, 1) / 2.0;
  b(1, 2) = b(2, 1) = q.coeff(0, 1, 1) / 2.0;
  return QuadForm(b);
}

QuadForm QuadForm::sphere() { return QuadForm(Mat3::Identity()); }

const Mat3& QuadForm::matrix() const noexcept { return d_->b; }
const Mat3& QuadForm::inverse() const noexcept { return d_->b_inv; }
const Mat3& QuadForm::reduction() const noexcept { return d_->a; }
const Mat3& QuadForm::reduction_inverse() const noexcept { return d_->a_inv; }
const ConicParam& QuadForm::conic() const noexcept { return d_->alpha; }
const HPoly& QuadForm::poly() const noexcept { return d_->poly; }
FieldMode QuadForm::field_mode() const noexcept { return d_->mode; }
Definiteness QuadForm::definiteness() const noexcept { return d_->definiteness; }
detail::OperatorCache& QuadForm::cache() const { return *d_->cache; }

cplx QuadForm::operator()(const Vec3& v) const { return v.transpose() * d_->b * v; }

HPoly QuadForm::power(int n) const { return pow(d_->poly, n); }

Reduction reduce_to_squares(const QuadForm& q) { return {q.reduction()}; }

ConicParam conic_param(const QuadForm& q) { return q.conic(); }

HPoly laplacian_q(const QuadForm& q, const HPoly& p) {
  if (p.degree() < 2) return HPoly(0);
  const Mat3& bi = q.inverse();
  HPoly out(p.degree() - 2);
  for (int j = 0; j < 3; ++j) {
    const HPoly dj = p.derivative(j);
    for (int k = j; k < 3; ++k) {
      const cplx w = (j == k) ? bi(j, k) : bi(j, k) + bi(k, j);
      if (w == cplx(0.0)) continue;
      out += dj.derivative(k) * w;
    }
  }
  return out;
}

Poly laplacian_q(const QuadForm& q, const Poly& p) {
  Poly out;
  for (const auto& part : p.parts())
    if (part.degree() >= 2) out.add(laplacian_q(q, part));
  return out;
}

Eigen::MatrixXcd laplacian_matrix(const QuadForm& q, int degree) {
  const auto cols = static_cast<Eigen::Index>(dim_homogeneous(degree));
  const auto rows = static_cast<Eigen::Index>(dim_homogeneous(degree - 2));
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(rows, cols);
  if (degree < 2) return m;
  for (Eigen::Index c = 0; c < cols; ++c) {
    HPoly e(degree);
    e[static_cast<std::size_t>(c)] = 1.0;
    m.col(c) = laplacian_q(q, e).coeffs();
  }
  return m;
}

HPoly homogenize_on_surface(const Poly& p, const QuadForm& q) {
  int parity = -1;
  for (const auto& part : p.parts()) {
    if (part.is_zero()) continue;
    if (parity < 0)
      parity = part.degree() % 2;
    else if (part.degree() % 2 != parity)
      throw ParityError("polynomial mixes even and odd degrees");
  }
  const int m = p.degree();
  HPoly out(m);
  for (const auto& part : p.parts()) {
    if (part.is_zero()) continue;
    out += q.power((m - part.degree()) / 2) * part;
  }
  return out;
}

std::vector<Vec3> sample_surface(const QuadForm& q, int count, Rng& rng, SurfaceSampling mode) {
  if (mode == SurfaceSampling::Real &&
      (!q.is_real() || q.definiteness() == Definiteness::NegativeDefinite))
    throw InvalidArgument("real surface {Q = 1} is empty or undefined");
  const double bnorm = q.matrix().norm();
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(count));
  int attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > 1000 * (count + 10)) throw InvalidArgument("surface sampling failed");
    const Vec3 v = mode == SurfaceSampling::Real ? rng.real_vec3() : rng.complex_vec3();
    const cplx qv = q(v);
    if (std::abs(qv) < 0.05 * bnorm * v.squaredNorm()) continue;
    if (mode == SurfaceSampling::Real && qv.real() <= 0.0) continue;
    const Vec3 w = v / std::sqrt(qv);
    out.push_back(mode == SurfaceSampling::Real ? Vec3(w.real().cast<cplx>()) : w);
  }
  return out;
}

}  // namespace qm
