#include "qm/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include <Eigen/SVD>

#include "operator_cache.hpp"
#include "qm/errors.hpp"

namespace qm {
namespace {

constexpr double kMaxCondition = 1e12;

std::shared_ptr<const detail::SplitSystem> split_system(const QuadForm& q, int degree) {
  auto& cache = q.cache();
  {
    std::shared_lock lock(cache.mutex);
    const auto it = cache.split.find(degree);
    if (it != cache.split.end()) return it->second;
  }
  auto sys = std::make_shared<detail::SplitSystem>();
  sys->laplacian = laplacian_matrix(q, degree);
  const Eigen::MatrixXcd k = sys->laplacian * multiplication_matrix(q.poly(), degree - 2);
  const Eigen::VectorXd sv = Eigen::BDCSVD<Eigen::MatrixXcd>(k).singularValues();
  sys->condition = sv[sv.size() - 1] > 0.0 ? sv[0] / sv[sv.size() - 1] : INFINITY;
  sys->lu.compute(k);
  std::unique_lock lock(cache.mutex);
  return cache.split.emplace(degree, std::move(sys)).first->second;
}

double scaled_norm(const Poly& p, double radius) {
  double s = 0.0;
  for (const auto& part : p.parts()) s += part.norm() * std::pow(radius, part.degree());
  return s;
}

}  // namespace

double split_condition(const QuadForm& q, int degree) {
  if (degree < 2) return 1.0;
  return split_system(q, degree)->condition;
}

HarmonicSplit harmonic_split(const HPoly& p, const QuadForm& q) {
  const int d = p.degree();
  if (d < 2) return {p, HPoly(0)};
  const auto sys = split_system(q, d);
  if (!(sys->condition <= kMaxCondition))
    throw SolveFailure("harmonic projection system is ill-conditioned", sys->condition);
  const Eigen::VectorXcd rhs = sys->laplacian * p.coeffs();
  HPoly r(d - 2, sys->lu.solve(rhs));
  HPoly h = p - q.poly() * r;
  return {std::move(h), std::move(r)};
}

HPoly HarmonicDecomposition::resum(const QuadForm& q) const {
  HPoly out(degree);
  for (std::size_t j = 0; j < components.size(); ++j)
    out += q.power(static_cast<int>(j)) * components[j];
  return out;
}

HarmonicDecomposition harmonic_decompose(const HPoly& p, const QuadForm& q) {
  HarmonicDecomposition out;
  out.degree = p.degree();
  HPoly rest = p;
  while (true) {
    HarmonicSplit s = harmonic_split(rest, q);
    out.components.push_back(std::move(s.harmonic));
    if (rest.degree() < 2) break;
    rest = std::move(s.remainder);
  }
  return out;
}

double surface_mismatch(const Poly& a, const Poly& b, const std::vector<Vec3>& points) {
  double worst = 0.0;
  for (const auto& v : points) {
    const double radius = v.norm();
    const double scale = std::max(1.0, scaled_norm(a, radius) + scaled_norm(b, radius));
    worst = std::max(worst, std::abs(a(v) - b(v)) / scale);
  }
  return worst;
}

DirichletSolution dirichlet_solve(const Poly& m, const Poly& n, const QuadForm& q,
                                  DirichletOrder order, std::uint64_t seed) {
  Poly t;
  const int top = m.degree();
  for (int step = 0; step <= top; ++step) {
    const int k = order == DirichletOrder::TopDown ? top - step : step;
    const HPoly mk = m.part(k);
    if (mk.is_zero()) continue;
    if (order == DirichletOrder::TopDown) {
      const Eigen::MatrixXcd lap = laplacian_matrix(q, k + 2);
      t.add(HPoly(k + 2, lap.completeOrthogonalDecomposition().solve(mk.coeffs())));
    } else {
      const auto sys = split_system(q, k + 2);
      if (!(sys->condition <= kMaxCondition))
        throw SolveFailure("Laplacian particular solve is ill-conditioned", sys->condition);
      t.add(q.poly() * HPoly(k, sys->lu.solve(mk.coeffs())));
    }
  }

  Poly solution = t;
  const auto [even, odd] = parity_split(n - t);
  for (const Poly* part : {&even, &odd}) {
    if (part->is_zero()) continue;
    const HarmonicDecomposition hd = harmonic_decompose(homogenize_on_surface(*part, q), q);
    for (const auto& f : hd.components) solution.add(f);
  }

  DirichletSolution out;
  out.solution = solution;
  out.laplacian_residual = (laplacian_q(q, solution) - m).norm() / std::max(1.0, m.norm());
  if (out.laplacian_residual > 1e-9)
    throw SolveFailure("Laplacian residual certification failed", out.laplacian_residual);
  Rng rng(seed);
  out.surface_residual = surface_mismatch(solution, n, sample_surface(q, 50, rng));
  if (out.surface_residual > 1e-8)
    throw SolveFailure("boundary agreement certification failed", out.surface_residual);
  return out;
}

}  // namespace qm
