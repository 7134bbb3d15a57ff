#pragma once

#include <cstdint>
#include <vector>

#include "qm/conic.hpp"
#include "qm/parcelling.hpp"
#include "qm/poly.hpp"
#include "qm/quadform.hpp"

namespace qm {

enum class MultipoleField { Complex, Real };

/// lambda times a product of linear forms <v_j, x>; the zero multipole has lambda = 0 and no vectors.
struct Multipole {
  int degree = 0;
  cplx lambda = 0.0;
  std::vector<Vec3> vectors;

  static Multipole zero(int degree);
  bool is_zero() const { return lambda == cplx(0.0); }
  HPoly expand() const;
  cplx operator()(const Vec3& v) const;
};

/// Unit vectors with fixed phase, sorted; lambda absorbs every scale.
/// Complex: largest-modulus coordinate real positive. Real: first nonzero
/// coordinate positive and lambda >= 0.
Multipole canonicalize(Multipole m, MultipoleField field);

/// Bottleneck matching distance between vector sets (chordal) combined with the
/// relative lambda distance after phase alignment.
double multipole_distance(const Multipole& a, const Multipole& b);

struct SylvesterOptions {
  double cluster_tol = 1e-7;
  double div_tol = 1e-9;
  double zero_tol = 1e-12;
  std::uint64_t seed = 0x5eed;
  int probe_retries = 5;
};

/// Divisor of p on the conic. Throws DivisibleInput when Q divides p.
ConicDivisor conic_divisor(const HPoly& p, const QuadForm& q, const SylvesterOptions& options = {});

struct LeadingMultipole {
  Multipole multipole;
  HPoly remainder;  // p = lambda * prod L + Q * remainder
  double residual = 0.0;
};

LeadingMultipole leading_multipole(const HPoly& p, const QuadForm& q, const ConicDivisor& div,
                                   const GenParcelling& parcelling, MultipoleField field = MultipoleField::Complex,
                                   const SylvesterOptions& options = {});

enum class Policy { CanonicalReal, CanonicalComplex };

struct Decomposition {
  QuadForm surface;
  Policy policy = Policy::CanonicalComplex;
  std::vector<Multipole> multipoles;  // index k holds the degree-k multipole
  bool unique = false;
  double residual = 0.0;  // sampled re-expansion error relative to ||p||

  Poly expand() const;
};

/// Multipole expansion of p on {Q = 1}.
Decomposition decompose(const Poly& p, const QuadForm& q, Policy policy, const SylvesterOptions& options = {});

/// Every distinct leading multipole of p, one per generalized parcelling, deduplicated at 1e-6.
std::vector<Multipole> enumerate_decompositions(const HPoly& p, const QuadForm& q, std::uint64_t cap = 10395,
                                                const SylvesterOptions& options = {});

/// sum_k scale^k w_k(v) for v on {Q = 1}. Throws OffSurface.
cplx evaluate_decomposition(const Decomposition& dec, const Vec3& v, cplx scale = 1.0);

/// max |p(v) - expansion(v)| / (||p|| max(1, |v|)^deg p) over the points.
double reexpansion_residual(const Poly& p, const Decomposition& dec, const std::vector<Vec3>& points);

}  // namespace qm
