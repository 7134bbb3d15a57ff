#pragma once

#include <array>
#include <memory>
#include <vector>

#include "qm/binary_form.hpp"
#include "qm/poly.hpp"
#include "qm/random.hpp"

namespace qm {

enum class FieldMode { Real, Complex };

enum class Definiteness { PositiveDefinite, NegativeDefinite, Indefinite, NotReal };

/// Rational parametrization u -> (alpha0(u), alpha1(u), alpha2(u)) of the conic {Q = 0}.
struct ConicParam {
  std::array<BinaryForm, 3> alpha;

  Vec3 operator()(cplx u0, cplx u1) const;
};

struct Reduction {
  Mat3 a;  // a * a^T = B
};

namespace detail {
struct OperatorCache;
}

/// Nondegenerate ternary quadratic form Q(v) = v B v^T with its derived data.
class QuadForm {
 public:
  /// Throws Degenerate when |det B| <= 1e-12 * ||B||^3.
  explicit QuadForm(const Mat3& b);
  static QuadForm from_poly(const HPoly& q);
  static QuadForm sphere();

  const Mat3& matrix() const noexcept;
  const Mat3& inverse() const noexcept;
  /// A with A A^T = B (symmetric Takagi factorization, principal square roots).
  const Mat3& reduction() const noexcept;
  const Mat3& reduction_inverse() const noexcept;
  const ConicParam& conic() const noexcept;
  const HPoly& poly() const noexcept;

  FieldMode field_mode() const noexcept;
  bool is_real() const noexcept { return field_mode() == FieldMode::Real; }
  Definiteness definiteness() const noexcept;

  cplx operator()(const Vec3& v) const;
  /// Q^n as a polynomial of degree 2n.
  HPoly power(int n) const;

  detail::OperatorCache& cache() const;

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

Reduction reduce_to_squares(const QuadForm& q);
ConicParam conic_param(const QuadForm& q);

/// Sum over j, k of (B^-1)_{jk} d_j d_k p.
HPoly laplacian_q(const QuadForm& q, const HPoly& p);
Poly laplacian_q(const QuadForm& q, const Poly& p);
/// Matrix of the operator above from V(degree) into V(degree - 2).
Eigen::MatrixXcd laplacian_matrix(const QuadForm& q, int degree);

/// Multiplies each part by the power of Q that lifts it to the top degree.
/// Throws ParityError when the parts have mixed parity.
HPoly homogenize_on_surface(const Poly& p, const QuadForm& q);

enum class SurfaceSampling { Complex, Real };

/// Points with Q(v) = 1: a random direction with |Q(v)| bounded away from zero,
/// rescaled by the principal square root of Q(v). Real sampling needs Q > 0 somewhere.
std::vector<Vec3> sample_surface(const QuadForm& q, int count, Rng& rng,
                                 SurfaceSampling mode = SurfaceSampling::Complex);

}  // namespace qm
