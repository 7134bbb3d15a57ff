#pragma once

#include <cstdint>
#include <random>

#include "qm/poly.hpp"

namespace qm {

/// Seeded generator used wherever an operation needs probe points.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();  // [0, 1)
  double normal();
  cplx complex_normal();
  Vec3 real_vec3();
  Vec3 complex_vec3();
  /// Random coefficients, i.i.d. normal (complex normal when complex_coeffs).
  HPoly hpoly(int degree, bool complex_coeffs);
  Poly poly(int degree, bool complex_coeffs);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qm
