#pragma once

#include <vector>

#include "qm/poly.hpp"
#include "qm/quadform.hpp"
#include "qm/sylvester.hpp"

namespace qm {

/// Numerator N_d of grad_{u_1} ... grad_{u_d} Q^{-1/2} = N_d * Q^{-(2d+1)/2}, built by
/// N_{j+1} = Q grad_u N_j - (2j+1)/2 N_j grad_u Q from N_0 = 1.
HPoly maxwell_apply(const QuadForm& q, const std::vector<Vec3>& dirs);

struct MaxwellRepresentation {
  std::vector<Vec3> dirs;
  cplx lambda = 0.0;
  double distance = 0.0;   // ||lambda N - p|| / ||p||
  int parcelling = -1;     // index into enumerate_parcellings, -1 for the canonical one
  int attempts = 0;
};

/// Directions and scale with p = lambda * maxwell_apply(q, dirs), taken from the leading
/// multipole of p. Throws NotHarmonic, Mismatch.
MaxwellRepresentation maxwell_from_harmonic(const HPoly& p, const QuadForm& q,
                                            const SylvesterOptions& options = {});

struct MaxwellTerm {
  int power = 0;   // exponent of Q in front of the term
  int degree = 0;  // number of directions
  MaxwellRepresentation rep;
};

struct MaxwellSum {
  std::vector<MaxwellTerm> terms;
  double residual = 0.0;

  HPoly resum(const QuadForm& q, int degree) const;
};

/// p = sum_j Q^j lambda_j N^{(d-2j)} over the harmonic components. Throws Mismatch when
/// the reconstruction misses p by more than 1e-7.
MaxwellSum maxwell_sum(const HPoly& p, const QuadForm& q, const SylvesterOptions& options = {});

}  // namespace qm
