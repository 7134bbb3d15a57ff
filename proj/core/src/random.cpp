#include "qm/random.hpp"

#include <cmath>
#include <numbers>

namespace qm {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  // Box-Muller keeps the stream identical across standard library implementations.
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

cplx Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

Vec3 Rng::real_vec3() {
  Vec3 v;
  for (int i = 0; i < 3; ++i) v[i] = normal();
  return v;
}

Vec3 Rng::complex_vec3() {
  Vec3 v;
  for (int i = 0; i < 3; ++i) v[i] = complex_normal();
  return v;
}

HPoly Rng::hpoly(int degree, bool complex_coeffs) {
  HPoly p(degree);
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = complex_coeffs ? complex_normal() : cplx(normal());
  return p;
}

Poly Rng::poly(int degree, bool complex_coeffs) {
  Poly p;
  for (int d = 0; d <= degree; ++d) p.add(hpoly(d, complex_coeffs));
  return p;
}

}  // namespace qm
