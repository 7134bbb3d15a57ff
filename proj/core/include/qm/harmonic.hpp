#pragma once

#include <cstdint>
#include <vector>

#include "qm/poly.hpp"
#include "qm/quadform.hpp"

namespace qm {

struct HarmonicSplit {
  HPoly harmonic;   // in the kernel of the Q-Laplacian
  HPoly remainder;  // p = harmonic + Q * remainder
};

/// Solves Laplacian_Q(Q r) = Laplacian_Q(p) on V(d - 2) with a cached factorization.
/// Throws SolveFailure when the condition estimate exceeds 1e12.
HarmonicSplit harmonic_split(const HPoly& p, const QuadForm& q);

/// Condition estimate of r -> Laplacian_Q(Q r) on V(degree - 2).
double split_condition(const QuadForm& q, int degree);

struct HarmonicDecomposition {
  int degree = 0;
  /// components[j] is harmonic of degree (degree - 2j); the input is sum_j Q^j components[j].
  std::vector<HPoly> components;

  HPoly resum(const QuadForm& q) const;
};

HarmonicDecomposition harmonic_decompose(const HPoly& p, const QuadForm& q);

/// How the particular solution T of Laplacian_Q T = M is built.
enum class DirichletOrder {
  TopDown,   // minimum-norm solve per graded piece, highest degree first
  BottomUp,  // T = Q * S per graded piece, lowest degree first
};

struct DirichletSolution {
  Poly solution;
  double laplacian_residual = 0.0;  // ||Laplacian_Q P - M|| / max(1, ||M||)
  double surface_residual = 0.0;    // max scaled |P - N| over surface samples
};

/// Polynomial P with Laplacian_Q P = M and P = N on {Q = 1}.
DirichletSolution dirichlet_solve(const Poly& m, const Poly& n, const QuadForm& q,
                                  DirichletOrder order = DirichletOrder::TopDown,
                                  std::uint64_t seed = 0x5eed);

/// Max over samples of |a(v) - b(v)| / max(1, sum_k (||a_k|| + ||b_k||) |v|^k).
double surface_mismatch(const Poly& a, const Poly& b, const std::vector<Vec3>& points);

}  // namespace qm
