#include "qm/poly.hpp"

#include <algorithm>
#include <cmath>

#include "qm/errors.hpp"

namespace qm {

Exponents exponents_at(int degree, std::size_t index) {
  std::size_t r = 0;
  while ((r + 1) * (r + 2) / 2 <= index) ++r;
  const auto k = static_cast<int>(index - r * (r + 1) / 2);
  const auto ri = static_cast<int>(r);
  return {degree - ri, ri - k, k};
}

HPoly::HPoly() : HPoly(0) {}

HPoly::HPoly(int degree)
    : degree_(degree),
      coeffs_(Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim_homogeneous(degree)))) {
  if (degree < 0) throw InvalidArgument("negative polynomial degree");
}

HPoly::HPoly(int degree, Eigen::VectorXcd coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0) throw InvalidArgument("negative polynomial degree");
  if (static_cast<std::size_t>(coeffs_.size()) != dim_homogeneous(degree))
    throw InvalidArgument("coefficient vector length does not match degree");
}

HPoly HPoly::constant(cplx c) {
  HPoly p(0);
  p[0] = c;
  return p;
}

HPoly HPoly::monomial(int i, int j, int k, cplx c) {
  if (i < 0 || j < 0 || k < 0) throw InvalidArgument("negative exponent");
  HPoly p(i + j + k);
  p[monomial_index(j, k)] = c;
  return p;
}

HPoly HPoly::linear(const Vec3& a) {
  HPoly p(1);
  for (int i = 0; i < 3; ++i) p[static_cast<std::size_t>(i)] = a[i];
  return p;
}

cplx HPoly::coeff(int i, int j, int k) const {
  if (i + j + k != degree_ || i < 0 || j < 0 || k < 0) return 0.0;
  return (*this)[monomial_index(j, k)];
}

bool HPoly::is_real(double tol) const {
  return coeffs_.imag().cwiseAbs().maxCoeff() <= tol;
}

cplx HPoly::operator()(const Vec3& v) const {
  // Horner in x over the (y, z) blocks; each block uses power tables.
  std::vector<cplx> yp(static_cast<std::size_t>(degree_) + 1), zp(yp.size());
  yp[0] = zp[0] = 1.0;
  for (std::size_t e = 1; e < yp.size(); ++e) {
    yp[e] = yp[e - 1] * v[1];
    zp[e] = zp[e - 1] * v[2];
  }
  cplx acc = 0.0;
  std::size_t idx = 0;
  for (int i = degree_; i >= 0; --i) {
    const int r = degree_ - i;
    cplx block = 0.0;
    for (int k = 0; k <= r; ++k, ++idx)
      block += coeffs_[static_cast<Eigen::Index>(idx)] * yp[static_cast<std::size_t>(r - k)] *
               zp[static_cast<std::size_t>(k)];
    acc = acc * v[0] + block;
  }
  return acc;
}

HPoly HPoly::derivative(int var) const {
  if (var < 0 || var > 2) throw InvalidArgument("variable index out of range");
  if (degree_ == 0) return HPoly(0);
  HPoly out(degree_ - 1);
  std::size_t idx = 0;
  for (int i = degree_; i >= 0; --i) {
    for (int j = degree_ - i; j >= 0; --j, ++idx) {
      const int k = degree_ - i - j;
      const cplx c = coeffs_[static_cast<Eigen::Index>(idx)];
      if (c == cplx(0.0)) continue;
      if (var == 0 && i > 0) out[monomial_index(j, k)] += c * static_cast<double>(i);
      if (var == 1 && j > 0) out[monomial_index(j - 1, k)] += c * static_cast<double>(j);
      if (var == 2 && k > 0) out[monomial_index(j, k - 1)] += c * static_cast<double>(k);
    }
  }
  return out;
}

HPoly HPoly::directional_derivative(const Vec3& u) const {
  if (degree_ == 0) return HPoly(0);
  HPoly out(degree_ - 1);
  for (int v = 0; v < 3; ++v)
    if (u[v] != cplx(0.0)) out += derivative(v) * u[v];
  return out;
}

HPoly HPoly::compose(const Mat3& m) const {
  std::vector<HPoly> powers[3];
  for (int c = 0; c < 3; ++c) {
    const HPoly lin = HPoly::linear(m.col(c));
    powers[c].push_back(HPoly::constant(1.0));
    for (int e = 1; e <= degree_; ++e) powers[c].push_back(powers[c].back() * lin);
  }
  HPoly out(degree_);
  std::size_t idx = 0;
  for (int i = degree_; i >= 0; --i) {
    for (int j = degree_ - i; j >= 0; --j, ++idx) {
      const cplx c = coeffs_[static_cast<Eigen::Index>(idx)];
      if (c == cplx(0.0)) continue;
      const int k = degree_ - i - j;
      out += (powers[0][static_cast<std::size_t>(i)] * powers[1][static_cast<std::size_t>(j)] *
              powers[2][static_cast<std::size_t>(k)]) *
             c;
    }
  }
  return out;
}

HPoly HPoly::conj() const { return HPoly(degree_, coeffs_.conjugate()); }

HPoly HPoly::real_part() const {
  return HPoly(degree_, coeffs_.real().cast<cplx>());
}

HPoly& HPoly::operator+=(const HPoly& other) {
  if (other.degree_ != degree_) throw InvalidArgument("adding polynomials of different degrees");
  coeffs_ += other.coeffs_;
  return *this;
}

HPoly& HPoly::operator-=(const HPoly& other) {
  if (other.degree_ != degree_) throw InvalidArgument("subtracting polynomials of different degrees");
  coeffs_ -= other.coeffs_;
  return *this;
}

HPoly& HPoly::operator*=(cplx s) {
  coeffs_ *= s;
  return *this;
}

HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
HPoly operator-(HPoly a) { return a *= -1.0; }
HPoly operator*(HPoly a, cplx s) { return a *= s; }
HPoly operator*(cplx s, HPoly a) { return a *= s; }

HPoly operator*(const HPoly& a, const HPoly& b) {
  const int da = a.degree();
  const int db = b.degree();
  HPoly out(da + db);
  std::size_t ia = 0;
  for (int i1 = da; i1 >= 0; --i1) {
    for (int j1 = da - i1; j1 >= 0; --j1, ++ia) {
      const cplx ca = a[ia];
      if (ca == cplx(0.0)) continue;
      const int k1 = da - i1 - j1;
      std::size_t ib = 0;
      for (int i2 = db; i2 >= 0; --i2) {
        for (int j2 = db - i2; j2 >= 0; --j2, ++ib) {
          const int k2 = db - i2 - j2;
          out[monomial_index(j1 + j2, k1 + k2)] += ca * b[ib];
        }
      }
    }
  }
  return out;
}

HPoly pow(const HPoly& p, int n) {
  if (n < 0) throw InvalidArgument("negative power");
  HPoly out = HPoly::constant(1.0);
  for (int e = 0; e < n; ++e) out = out * p;
  return out;
}

Eigen::MatrixXcd multiplication_matrix(const HPoly& q, int degree) {
  const auto rows = static_cast<Eigen::Index>(dim_homogeneous(degree + q.degree()));
  const auto cols = static_cast<Eigen::Index>(dim_homogeneous(degree));
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(rows, cols);
  const int dq = q.degree();
  Eigen::Index col = 0;
  for (int i = degree; i >= 0; --i) {
    for (int j = degree - i; j >= 0; --j, ++col) {
      const int k = degree - i - j;
      std::size_t iq = 0;
      for (int i2 = dq; i2 >= 0; --i2) {
        for (int j2 = dq - i2; j2 >= 0; --j2, ++iq) {
          const int k2 = dq - i2 - j2;
          m(static_cast<Eigen::Index>(monomial_index(j + j2, k + k2)), col) += q[iq];
        }
      }
    }
  }
  return m;
}

HPoly divide_by_form(const HPoly& p, const HPoly& q, double tol) {
  if (q.is_zero()) throw InvalidArgument("division by the zero form");
  if (p.degree() < q.degree()) throw InvalidArgument("dividend degree below divisor degree");
  const int dr = p.degree() - q.degree();
  const Eigen::MatrixXcd m = multiplication_matrix(q, dr);
  Eigen::VectorXcd r = m.colPivHouseholderQr().solve(p.coeffs());
  const double residual = (m * r - p.coeffs()).norm();
  if (residual > tol * std::max(1.0, p.norm()))
    throw NotDivisible("polynomial is not divisible by the form", residual);
  return HPoly(dr, std::move(r));
}

Poly::Poly(const HPoly& part) { add(part); }

Poly Poly::constant(cplx c) { return Poly(HPoly::constant(c)); }

HPoly Poly::part(int d) const {
  if (has_part(d)) return parts_[static_cast<std::size_t>(d)];
  return HPoly(std::max(d, 0));
}

void Poly::add(const HPoly& p) {
  const auto d = static_cast<std::size_t>(p.degree());
  while (parts_.size() <= d) parts_.emplace_back(static_cast<int>(parts_.size()));
  parts_[d] += p;
  trim();
}

void Poly::trim() {
  while (!parts_.empty() && parts_.back().is_zero()) parts_.pop_back();
}

double Poly::norm() const {
  double s = 0.0;
  for (const auto& p : parts_) s += p.coeffs().squaredNorm();
  return std::sqrt(s);
}

bool Poly::is_real(double tol) const {
  return std::all_of(parts_.begin(), parts_.end(), [tol](const HPoly& p) { return p.is_real(tol); });
}

bool Poly::is_homogeneous() const {
  int occupied = 0;
  for (const auto& p : parts_)
    if (!p.is_zero()) ++occupied;
  return occupied <= 1;
}

cplx Poly::operator()(const Vec3& v) const {
  cplx s = 0.0;
  for (const auto& p : parts_) s += p(v);
  return s;
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& p : other.parts_) add(p);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& p : other.parts_) add(-p);
  return *this;
}

Poly& Poly::operator*=(cplx s) {
  for (auto& p : parts_) p *= s;
  trim();
  return *this;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator*(Poly a, cplx s) { return a *= s; }

Poly operator*(const Poly& a, const HPoly& b) {
  Poly out;
  for (const auto& p : a.parts()) out.add(p * b);
  return out;
}

std::pair<Poly, Poly> parity_split(const Poly& p) {
  Poly even;
  Poly odd;
  for (const auto& part : p.parts()) (part.degree() % 2 == 0 ? even : odd).add(part);
  return {even, odd};
}

}  // namespace qm
