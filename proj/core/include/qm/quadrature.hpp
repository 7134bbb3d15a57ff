#pragma once

#include <cstdint>
#include <vector>

#include "qm/poly.hpp"
#include "qm/quadform.hpp"
#include "qm/sylvester.hpp"

namespace qm {

/// Gauss-Legendre in cos(phi) times the trapezoid rule in theta with 2n points.
/// Exact for polynomials of degree <= 2n - 1 on the unit sphere.
struct SphereQuadrature {
  int order = 0;
  std::vector<double> theta;
  std::vector<double> phi;
  std::vector<double> weight;

  static SphereQuadrature make(int order);
  std::size_t size() const { return weight.size(); }
  /// Real unit vector (cos t sin p, sin t sin p, cos p) of node i.
  Vec3 sphere_point(std::size_t i) const;
};

/// Nodes pulled back to the totally real surface: s * A^-1 with A A^T = B, so Q = 1 there.
std::vector<Vec3> surface_nodes(const QuadForm& q, const SphereQuadrature& rule);

/// Quadrature order that integrates f * conj(g) exactly.
int default_order(int deg_f, int deg_g);

/// Hermitian L2 product on {s A^-1 : s in S^2}; order 0 picks default_order.
cplx inner_product(const HPoly& f, const HPoly& g, const QuadForm& q, int order = 0);
cplx inner_product(const Poly& f, const Poly& g, const QuadForm& q, int order = 0);
/// Product of values sampled on the nodes of `rule`.
cplx inner_product(const Eigen::VectorXcd& f, const Eigen::VectorXcd& g, const SphereQuadrature& rule);

/// Values of p at surface_nodes(q, rule).
Eigen::VectorXcd sample_nodes(const Poly& p, const QuadForm& q, const SphereQuadrature& rule);

struct HarmonicBasis {
  int degree = 0;
  std::vector<HPoly> basis;  // 2k + 1 orthonormal Q-harmonics
};

/// Throws RankDeficiency when fewer than 2k + 1 independent harmonics come out.
HarmonicBasis harmonic_basis(int k, const QuadForm& q);

struct FourierResult {
  std::vector<HPoly> components;  // components[k] in Har_Q(k)
  double norm_sq = 0.0;
  double parseval_residual = 0.0;  // norm_sq - sum ||f_k||^2
};

FourierResult fourier_components(const Eigen::VectorXcd& values, const SphereQuadrature& rule, const QuadForm& q,
                                 int kmax);
FourierResult fourier_components(const Poly& f, const QuadForm& q, int kmax, int order = 0);

struct MultipoleNormEntry {
  int degree = 0;
  double rho = 0.0;        // L2 norm of the expanded multipole
  double component = 0.0;  // L2 norm of f_k
  double ratio = 0.0;      // rho / component, 0 when both vanish
};

/// Empirical comparison of multipole sizes with the components they represent.
std::vector<MultipoleNormEntry> multipole_norm_report(const std::vector<HPoly>& components,
                                                      const std::vector<Multipole>& multipoles, const QuadForm& q);

struct MonteCarloResult {
  cplx value = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

/// Integral of f conj(g) exp(-|v|^2) over the real surface Q = 1 (area measure) for real Q.
/// Throws InvalidArgument for complex or negative definite Q.
MonteCarloResult real_surface_integral(const Poly& f, const Poly& g, const QuadForm& q,
                                       std::size_t samples = 1'000'000, std::uint64_t seed = 0x5eed);

}  // namespace qm
