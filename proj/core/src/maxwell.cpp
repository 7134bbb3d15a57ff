#include "qm/maxwell.hpp"

#include <algorithm>

#include "qm/errors.hpp"
#include "qm/harmonic.hpp"
#include "qm/parcelling.hpp"

namespace qm {

HPoly maxwell_apply(const QuadForm& q, const std::vector<Vec3>& dirs) {
  HPoly n = HPoly::constant(1.0);
  for (std::size_t j = 0; j < dirs.size(); ++j) {
    const Vec3& u = dirs[j];
    HPoly next = n * q.poly().directional_derivative(u) * cplx(-(2.0 * j + 1.0) / 2.0);
    if (j > 0) next += q.poly() * n.directional_derivative(u);
    n = std::move(next);
  }
  return n;
}

namespace {

// Least-squares scale with lambda * n ~ p.
void fit(const HPoly& p, const HPoly& n, MaxwellRepresentation& rep) {
  const double nn = n.coeffs().squaredNorm();
  rep.lambda = nn > 0 ? n.coeffs().dot(p.coeffs()) / nn : cplx(0.0);
  rep.distance = (n * rep.lambda - p).norm() / p.norm();
}

std::vector<Vec3> directions(const Multipole& m, const QuadForm& q) {
  std::vector<Vec3> dirs;
  for (const auto& v : m.vectors) dirs.push_back(q.inverse() * v);
  return dirs;
}

}  // namespace

MaxwellRepresentation maxwell_from_harmonic(const HPoly& p, const QuadForm& q, const SylvesterOptions& options) {
  constexpr double kCertify = 1e-7;
  const double pn = p.norm();
  if (pn == 0.0) throw NotHarmonic("zero polynomial has no Maxwell directions");
  const double lap = laplacian_q(q, p).norm();
  if (lap > 1e-8 * pn) throw NotHarmonic("polynomial is not Q-harmonic", lap / pn);

  MaxwellRepresentation rep;
  if (p.degree() == 0) {
    rep.lambda = p[0];
    rep.attempts = 1;
    return rep;
  }

  ConicDivisor div;
  try {
    div = conic_divisor(p, q, options);
  } catch (const DivisibleInput& e) {
    throw NotHarmonic("harmonic input is divisible by Q", e.value());
  }

  const GenParcelling canon = canonical_parcelling(div, q.conic(), ParcellingMode::Generic, options.cluster_tol);
  rep.dirs = directions(leading_multipole(p, q, div, canon, MultipoleField::Complex, options).multipole, q);
  fit(p, maxwell_apply(q, rep.dirs), rep);
  rep.attempts = 1;
  if (rep.distance <= kCertify) return rep;

  double best = rep.distance;
  const auto all = enumerate_parcellings(div.multiplicities());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] == canon) continue;
    MaxwellRepresentation trial;
    trial.dirs = directions(leading_multipole(p, q, div, all[i], MultipoleField::Complex, options).multipole, q);
    fit(p, maxwell_apply(q, trial.dirs), trial);
    trial.parcelling = static_cast<int>(i);
    trial.attempts = ++rep.attempts;
    if (trial.distance <= kCertify) return trial;
    best = std::min(best, trial.distance);
  }
  throw Mismatch("no parcelling yields Maxwell directions", best);
}

HPoly MaxwellSum::resum(const QuadForm& q, int degree) const {
  HPoly out(degree);
  for (const auto& t : terms) out += q.power(t.power) * maxwell_apply(q, t.rep.dirs) * t.rep.lambda;
  return out;
}

MaxwellSum maxwell_sum(const HPoly& p, const QuadForm& q, const SylvesterOptions& options) {
  MaxwellSum out;
  const HarmonicDecomposition hd = harmonic_decompose(p, q);
  const double scale = std::max(p.norm(), 1e-300);
  for (std::size_t j = 0; j < hd.components.size(); ++j) {
    const HPoly& f = hd.components[j];
    if (f.norm() <= 1e-12 * scale) continue;
    MaxwellTerm t;
    t.power = static_cast<int>(j);
    t.degree = f.degree();
    t.rep = maxwell_from_harmonic(f, q, options);
    out.terms.push_back(std::move(t));
  }
  out.residual = (out.resum(q, p.degree()) - p).norm() / scale;
  if (out.residual > 1e-7) throw Mismatch("Maxwell sum does not reproduce the input", out.residual);
  return out;
}

}  // namespace qm
