#include "qm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "qm/errors.hpp"
#include "qm/harmonic.hpp"
#include "qm/random.hpp"

namespace qm {

namespace {

constexpr double kPi = std::numbers::pi;

// Nodes and weights of n-point Gauss-Legendre on [-1, 1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const auto un = static_cast<unsigned>(n);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      const double p = std::legendre(un, t);
      dp = n * (t * p - std::legendre(un - 1, t)) / (t * t - 1.0);
      const double step = p / dp;
      t -= step;
      if (std::abs(step) < 1e-16) break;
    }
    dp = n * (t * std::legendre(un, t) - std::legendre(un - 1, t)) / (t * t - 1.0);
    x[i] = t;
    w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
}

}  // namespace

SphereQuadrature SphereQuadrature::make(int order) {
  if (order < 1) throw InvalidArgument("quadrature order must be positive", order);
  std::vector<double> x, w;
  gauss_legendre(order, x, w);
  SphereQuadrature r;
  r.order = order;
  const int nt = 2 * order;
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < nt; ++j) {
      r.theta.push_back(2.0 * kPi * j / nt);
      r.phi.push_back(std::acos(x[i]));
      r.weight.push_back(w[i] * 2.0 * kPi / nt);
    }
  }
  return r;
}

Vec3 SphereQuadrature::sphere_point(std::size_t i) const {
  const double sp = std::sin(phi[i]);
  return Vec3(std::cos(theta[i]) * sp, std::sin(theta[i]) * sp, std::cos(phi[i]));
}

std::vector<Vec3> surface_nodes(const QuadForm& q, const SphereQuadrature& rule) {
  const Mat3 ainv_t = q.reduction_inverse().transpose();
  std::vector<Vec3> out(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) out[i] = ainv_t * rule.sphere_point(i);
  return out;
}

int default_order(int deg_f, int deg_g) { return (deg_f + deg_g) / 2 + 2; }

cplx inner_product(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g, const SphereQuadrature& rule) {
  if (f.size() != static_cast<Eigen::Index>(rule.size()) || g.size() != f.size())
    throw InvalidArgument("sample count does not match the quadrature");
  cplx s = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const auto k = static_cast<Eigen::Index>(i);
    s += rule.weight[i] * f[k] * std::conj(g[k]);
  }
  return s;
}

Eigen::VectorXcd sample_nodes(const Poly& p, const QuadForm& q, const SphereQuadrature& rule) {
  const auto nodes = surface_nodes(q, rule);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(nodes.size()));
  for (std::size_t i = 0; i < nodes.size(); ++i) v[static_cast<Eigen::Index>(i)] = p(nodes[i]);
  return v;
}

cplx inner_product(const Poly& f, const Poly& g, const QuadForm& q, int order) {
  const SphereQuadrature rule = SphereQuadrature::make(order > 0 ? order : default_order(f.degree(), g.degree()));
  return inner_product(sample_nodes(f, q, rule), sample_nodes(g, q, rule), rule);
}

cplx inner_product(const HPoly& f, const HPoly& g, const QuadForm& q, int order) {
  return inner_product(Poly(f), Poly(g), q, order > 0 ? order : default_order(f.degree(), g.degree()));
}

HarmonicBasis harmonic_basis(int k, const QuadForm& q) {
  if (k < 0) throw InvalidArgument("negative degree", k);
  const SphereQuadrature rule = SphereQuadrature::make(default_order(k, k));
  const auto nodes = surface_nodes(q, rule);
  auto values = [&](const HPoly& p) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(nodes.size()));
    for (std::size_t i = 0; i < nodes.size(); ++i) v[static_cast<Eigen::Index>(i)] = p(nodes[i]);
    return v;
  };

  HarmonicBasis out;
  out.degree = k;
  std::vector<Eigen::VectorXcd> vals;
  for (std::size_t idx = 0; idx < dim_homogeneous(k); ++idx) {
    HPoly h(k);
    h[idx] = 1.0;
    h = harmonic_split(h, q).harmonic;
    Eigen::VectorXcd hv = values(h);
    const double start = std::sqrt(std::abs(inner_product(hv, hv, rule)));
    if (start == 0.0) continue;
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t b = 0; b < out.basis.size(); ++b) {
        const cplx c = inner_product(hv, vals[b], rule);
        h -= out.basis[b] * c;
        hv -= c * vals[b];
      }
    }
    const double n = std::sqrt(std::abs(inner_product(hv, hv, rule)));
    if (n <= 1e-8 * start) continue;
    out.basis.push_back(h * cplx(1.0 / n));
    vals.push_back(hv / n);
  }
  if (static_cast<int>(out.basis.size()) != 2 * k + 1)
    throw RankDeficiency("harmonic basis has the wrong dimension", static_cast<double>(out.basis.size()));
  return out;
}

FourierResult fourier_components(const Eigen::VectorXcd& values, const SphereQuadrature& rule, const QuadForm& q,
                                 int kmax) {
  const auto nodes = surface_nodes(q, rule);
  FourierResult out;
  out.norm_sq = std::abs(inner_product(values, values, rule));
  double captured = 0.0;
  for (int k = 0; k <= kmax; ++k) {
    const HarmonicBasis hb = harmonic_basis(k, q);
    HPoly fk(k);
    for (const HPoly& b : hb.basis) {
      Eigen::VectorXcd bv(static_cast<Eigen::Index>(nodes.size()));
      for (std::size_t i = 0; i < nodes.size(); ++i) bv[static_cast<Eigen::Index>(i)] = b(nodes[i]);
      const cplx c = inner_product(values, bv, rule);
      fk += b * c;
      captured += std::norm(c);
    }
    out.components.push_back(std::move(fk));
  }
  out.parseval_residual = out.norm_sq - captured;
  return out;
}

FourierResult fourier_components(const Poly& f, const QuadForm& q, int kmax, int order) {
  const SphereQuadrature rule = SphereQuadrature::make(order > 0 ? order : default_order(f.degree(), kmax));
  return fourier_components(sample_nodes(f, q, rule), rule, q, kmax);
}

std::vector<MultipoleNormEntry> multipole_norm_report(const std::vector<HPoly>& components,
                                                      const std::vector<Multipole>& multipoles, const QuadForm& q) {
  if (components.size() != multipoles.size()) throw InvalidArgument("components and multipoles differ in length");
  std::vector<MultipoleNormEntry> out;
  for (std::size_t k = 0; k < components.size(); ++k) {
    MultipoleNormEntry e;
    e.degree = static_cast<int>(k);
    const HPoly w = multipoles[k].expand();
    e.rho = std::sqrt(std::abs(inner_product(w, w, q)));
    e.component = std::sqrt(std::abs(inner_product(components[k], components[k], q)));
    e.ratio = e.component > 0 ? e.rho / e.component : (e.rho > 0 ? INFINITY : 0.0);
    out.push_back(e);
  }
  return out;
}

MonteCarloResult real_surface_integral(const Poly& f, const Poly& g, const QuadForm& q, std::size_t samples,
                                       std::uint64_t seed) {
  if (!q.is_real()) throw InvalidArgument("real surface integral needs a real form");
  if (samples < 2) throw InvalidArgument("need at least two samples");
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(q.matrix().real());
  // Positive eigenvalues first.
  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return (es.eigenvalues()[a] > 0) > (es.eigenvalues()[b] > 0); });
  Eigen::Matrix3d v;
  Eigen::Vector3d a;
  int positive = 0;
  for (int i = 0; i < 3; ++i) {
    const double l = es.eigenvalues()[order[i]];
    v.col(i) = es.eigenvectors().col(order[i]);
    a[i] = 1.0 / std::sqrt(std::abs(l));
    positive += l > 0;
  }
  if (positive == 0) throw InvalidArgument("the real surface of a negative definite form is empty");

  Rng rng(seed);
  cplx sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    Eigen::Vector3d w, du, dv;
    double density = 0.0;
    const double theta = 2.0 * kPi * rng.uniform();
    const double ct = std::cos(theta), st = std::sin(theta);
    if (positive == 3) {
      const double t = 2.0 * rng.uniform() - 1.0;
      const double sp = std::sqrt(1.0 - t * t);
      w << a[0] * ct * sp, a[1] * st * sp, a[2] * t;
      // Parameters (theta, t); area element |r_theta x r_t|.
      du << -a[0] * st * sp, a[1] * ct * sp, 0.0;
      dv << -a[0] * ct * t / sp, -a[1] * st * t / sp, a[2];
      density = 1.0 / (4.0 * kPi);
    } else if (positive == 2) {
      const double u = rng.normal();
      w << a[0] * std::cosh(u) * ct, a[1] * std::cosh(u) * st, a[2] * std::sinh(u);
      du << -a[0] * std::cosh(u) * st, a[1] * std::cosh(u) * ct, 0.0;
      dv << a[0] * std::sinh(u) * ct, a[1] * std::sinh(u) * st, a[2] * std::cosh(u);
      density = std::exp(-0.5 * u * u) / std::sqrt(2.0 * kPi) / (2.0 * kPi);
    } else {
      const double u = std::abs(rng.normal());
      const double sheet = rng.uniform() < 0.5 ? 1.0 : -1.0;
      w << sheet * a[0] * std::cosh(u), a[1] * std::sinh(u) * ct, a[2] * std::sinh(u) * st;
      du << 0.0, -a[1] * std::sinh(u) * st, a[2] * std::sinh(u) * ct;
      dv << sheet * a[0] * std::sinh(u), a[1] * std::cosh(u) * ct, a[2] * std::cosh(u) * st;
      density = 0.5 * 2.0 * std::exp(-0.5 * u * u) / std::sqrt(2.0 * kPi) / (2.0 * kPi);
    }
    const double jac = du.cross(dv).norm();
    const Eigen::Vector3d x = v * w;
    const Vec3 xc = x.cast<cplx>();
    const cplx val = f(xc) * std::conj(g(xc)) * std::exp(-x.squaredNorm()) * jac / density;
    sum += val;
    sum_sq += std::norm(val);
  }
  MonteCarloResult out;
  out.samples = samples;
  const double n = static_cast<double>(samples);
  out.value = sum / n;
  const double var = std::max(0.0, (sum_sq / n - std::norm(out.value)) * n / (n - 1.0));
  out.std_error = std::sqrt(var / n);
  return out;
}

}  // namespace qm
