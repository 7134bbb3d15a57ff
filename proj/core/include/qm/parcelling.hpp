#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qm/conic.hpp"

namespace qm {

/// Weight-2 parcel on divisor points a <= b; a == b is a double (tangent) parcel.
struct Parcel {
  int a = 0;
  int b = 0;

  bool is_tangent() const noexcept { return a == b; }
  friend auto operator<=>(const Parcel&, const Parcel&) = default;
};

/// Multiset of parcels, kept sorted.
struct GenParcelling {
  std::vector<Parcel> parcels;

  friend auto operator<=>(const GenParcelling&, const GenParcelling&) = default;
};

/// (2d - 1)!! with kappa(0) = 1. Throws OverflowError for d > 16.
std::uint64_t kappa(int d);

/// Number of generalized parcellings of the multiplicity function, without enumerating.
std::uint64_t count_parcellings(const std::vector<int>& mu);

/// All generalized parcellings in lexicographic order of their sorted parcel lists.
/// Throws ExplosionGuard when ||mu||_1 > 24 or the count exceeds `limit`.
std::vector<GenParcelling> enumerate_parcellings(const std::vector<int>& mu,
                                                 std::size_t limit = 2'000'000);

/// Pointwise weight sums equal mu and every parcel has weight 2.
bool is_generalized_parcelling(const GenParcelling& g, const std::vector<int>& mu);

enum class ParcellingMode { RealDefinite, Generic };

/// Deterministic choice of one parcelling of the divisor.
GenParcelling canonical_parcelling(const ConicDivisor& div, const ConicParam& alpha, ParcellingMode mode,
                                   double tol = 1e-7);

/// Index of the complex-conjugate point for each divisor point (itself for real points).
/// Throws NotConjugateClosed when some point has no partner of equal multiplicity.
std::vector<int> conjugation_map(const ConicDivisor& div, const ConicParam& alpha, double tol = 1e-7);

struct EquivariantChoice {
  GenParcelling parcelling;
  bool unique = true;
};

/// Parcelling whose lines are all real: conjugate pairs together, real points among themselves.
EquivariantChoice real_equivariant_parcelling(const ConicDivisor& div, const ConicParam& alpha,
                                              double tol = 1e-7);

/// Parcellings mapped to themselves by conjugation of points.
std::vector<GenParcelling> enumerate_equivariant_parcellings(const ConicDivisor& div, const ConicParam& alpha,
                                                             double tol = 1e-7);

}  // namespace qm
