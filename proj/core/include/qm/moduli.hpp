#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qm/conic.hpp"
#include "qm/quadform.hpp"

namespace qm {

struct RamificationResult {
  bool ramified = false;
  std::optional<DivisorPoint> witness;  // first point of multiplicity >= 2
  ConicDivisor divisor;                 // divisor of the product on the conic
};

/// Whether the product of the linear forms meets the conic with a multiple point.
/// Throws DivisibleInput for a zero form.
RamificationResult is_ramified(const std::vector<Vec3>& forms, const QuadForm& q, double cluster_tol = 1e-7);

struct NullityOptions {
  double rank_tol = 1e-8;
  std::uint64_t seed = 0x5eed;
};

/// Solutions (M_1..M_d) of sum_j M_j prod_{i != j} L_i = 0 on the conic beyond the d - 1
/// obvious ones. Throws RankIndeterminate when the spectrum has no clear gap at the threshold.
int tangent_nullity(const std::vector<Vec3>& forms, const QuadForm& q, const NullityOptions& options = {});

/// Base point of a pencil of lines; must lie off the conic.
struct PencilCenter {
  Vec3 p;
  Vec3 e1, e2;  // orthonormal basis of the lines through p

  /// Throws InvalidArgument when |Q(p)| <= 1e-8 ||B|| |p|^2.
  static PencilCenter make(const Vec3& p, const QuadForm& q);
  Vec3 line(const ProjPoint& dual) const;
  ProjPoint dual(const Vec3& line) const;
};

/// Lines through the center with multiplicities, as points of CP^1.
struct PencilDivisor {
  std::vector<DivisorPoint> lines;

  int degree() const;
};

/// Each divisor point goes to the line joining it to the center.
PencilDivisor gamma_project(const ConicDivisor& div, const PencilCenter& center, const QuadForm& q,
                            double cluster_tol = 1e-7);

/// All conic divisors projecting onto the target. Throws ExplosionGuard for degree > 12.
std::vector<ConicDivisor> gamma_fiber(const PencilDivisor& target, const PencilCenter& center, const QuadForm& q,
                                      double cluster_tol = 1e-7);

/// The two lines through the center tangent to the conic.
std::vector<ProjPoint> pencil_tangent_lines(const PencilCenter& center, const QuadForm& q, double cluster_tol = 1e-7);

/// Coefficients c_0..c_d of prod (b u0 - a u1)^m over points [a:b], scaled to unit norm.
std::vector<cplx> viete(const std::vector<DivisorPoint>& points);

/// Codimension count of the product map on surfaces of degree l for a factor partition.
/// Always a multiple of 1/2.
double dim_defect(int l, const std::vector<int>& partition);

/// dim V(d) minus the numerical rank of multiplication by Q from V(d - 2).
int corank_mul_q(const QuadForm& q, int d, double rank_tol = 1e-8);

/// Merge points closer than tol, adding multiplicities; output sorted.
ConicDivisor merge_points(const std::vector<DivisorPoint>& points, double tol = 1e-7);

}  // namespace qm
