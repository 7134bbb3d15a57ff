#pragma once

#include <vector>

#include "qm/binary_form.hpp"
#include "qm/poly.hpp"
#include "qm/quadform.hpp"

namespace qm {

/// Point of CP^1 with unit norm and its larger-modulus coordinate real positive.
struct ProjPoint {
  cplx u0 = 1.0;
  cplx u1 = 0.0;

  static ProjPoint normalized(cplx u0, cplx u1);
};

/// Fubini-Study chordal distance (sine of the angle between the lines).
double chordal_distance(const ProjPoint& a, const ProjPoint& b);
double chordal_distance(const Vec3& a, const Vec3& b);

/// Unit norm with the largest-modulus coordinate real positive; the first of
/// near-equal coordinates wins.
Vec3 canonical_projective(const Vec3& v);

struct DivisorPoint {
  ProjPoint point;
  int multiplicity = 1;
};

struct ConicDivisor {
  std::vector<DivisorPoint> points;

  int degree() const;
  std::vector<int> multiplicities() const;
};

struct Restriction {
  BinaryForm form;
  double scale = 0.0;  // triangle-inequality bound on the coefficient size

  bool is_zero(double tol = 1e-12) const { return form.norm() <= tol * scale; }
};

/// p(alpha0(u), alpha1(u), alpha2(u)) as a binary form of degree 2 deg p.
Restriction restrict_to_conic(const HPoly& p, const ConicParam& alpha);

struct RootOptions {
  double cluster_tol = 1e-7;
  int max_iterations = 200;
  int polish_steps = 3;
};

/// All projective roots with multiplicities by chordal clustering. Throws ZeroForm, NoConvergence.
ConicDivisor proj_roots(const BinaryForm& b, const RootOptions& options = {});

Vec3 conic_point(const ConicParam& alpha, const ProjPoint& p);

/// Linear form through the conic images of p1 and p2. Throws CoincidentPoints.
Vec3 line_through(const ProjPoint& p1, const ProjPoint& p2, const ConicParam& alpha,
                  double tol = 1e-7);

/// Polar of the conic image of p: the tangent line there.
Vec3 tangent_line(const ProjPoint& p, const QuadForm& q);

/// Intersection of a line with the conic as a degree-2 divisor.
ConicDivisor line_conic_divisor(const Vec3& line, const ConicParam& alpha, double cluster_tol = 1e-7);

}  // namespace qm
