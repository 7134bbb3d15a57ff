#include "qm/conic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <tuple>

#include <Eigen/Eigenvalues>

#include "qm/errors.hpp"

namespace qm {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kMultipleRootTol = 1e-10;

struct Horner {
  cplx value;
  cplx derivative;
  double bound;  // sum |a_i| |z|^i
};

// a[i] multiplies z^i.
Horner horner(const std::vector<cplx>& a, cplx z) {
  const std::size_t n = a.size() - 1;
  cplx p = a[n];
  cplx dp = 0.0;
  double eb = std::abs(a[n]);
  const double az = std::abs(z);
  for (std::size_t i = n; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[i];
    eb = eb * az + std::abs(a[i]);
  }
  return {p, dp, eb};
}

bool converged(const Horner& h, std::size_t n) {
  return std::abs(h.value) <= 4.0 * static_cast<double>(n + 1) * kEps * h.bound;
}

double initial_radius(const std::vector<cplx>& a) {
  const std::size_t n = a.size() - 1;
  const double lead = std::abs(a[n]);
  if (a[0] != cplx(0.0)) return std::pow(std::abs(a[0]) / lead, 1.0 / static_cast<double>(n));
  double r = 0.0;
  for (std::size_t k = 0; k < n; ++k)
    if (a[k] != cplx(0.0))
      r = std::max(r, std::pow(std::abs(a[k]) / lead, 1.0 / static_cast<double>(n - k)));
  return r > 0.0 ? r : 1.0;
}

bool aberth(const std::vector<cplx>& a, std::vector<cplx>& z, int max_iterations) {
  const std::size_t n = a.size() - 1;
  const double radius = initial_radius(a);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  z.resize(n);
  for (std::size_t k = 0; k < n; ++k)
    z[k] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + golden);
  std::vector<bool> done(n, false);
  for (int it = 0; it < max_iterations; ++it) {
    bool all = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      const Horner h = horner(a, z[k]);
      if (converged(h, n)) {
        done[k] = true;
        continue;
      }
      all = false;
      cplx sum = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k && z[k] != z[j]) sum += 1.0 / (z[k] - z[j]);
      const cplx ratio = h.derivative != cplx(0.0) ? h.value / h.derivative : cplx(1e-3 * (1.0 + std::abs(z[k])));
      const cplx w = ratio / (1.0 - ratio * sum);
      z[k] -= w;
      if (!std::isfinite(z[k].real()) || !std::isfinite(z[k].imag())) return false;
    }
    if (all) return true;
  }
  return std::all_of(done.begin(), done.end(), [](bool b) { return b; });
}

bool companion(const std::vector<cplx>& a, std::vector<cplx>& z) {
  const auto n = static_cast<Eigen::Index>(a.size() - 1);
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) c(i, n - 1) = -a[static_cast<std::size_t>(i)] / a[static_cast<std::size_t>(n)];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(c, false);
  if (es.info() != Eigen::Success) return false;
  z.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
  return true;
}

std::vector<cplx> closed_form(const std::vector<cplx>& a) {
  if (a.size() == 2) return {-a[0] / a[1]};
  // Stable quadratic formula for a2 z^2 + a1 z + a0; a discriminant at rounding level is a double root.
  const cplx d2 = a[1] * a[1] - 4.0 * a[2] * a[0];
  if (std::abs(d2) <= 64.0 * kEps * (std::norm(a[1]) + 4.0 * std::abs(a[2] * a[0]))) {
    const cplx r = -a[1] / (2.0 * a[2]);
    return {r, r};
  }
  const cplx disc = std::sqrt(d2);
  const cplx qa = a[1] + disc;
  const cplx qb = a[1] - disc;
  const cplx q = -0.5 * (std::abs(qa) >= std::abs(qb) ? qa : qb);
  if (q == cplx(0.0)) return {0.0, 0.0};
  return {q / a[2], a[0] / q};
}

void polish(const std::vector<cplx>& a, std::vector<cplx>& z, int steps) {
  for (auto& root : z) {
    for (int s = 0; s < steps; ++s) {
      const Horner h = horner(a, root);
      if (h.value == cplx(0.0) || h.derivative == cplx(0.0)) break;
      const cplx next = root - h.value / h.derivative;
      if (std::abs(horner(a, next).value) < std::abs(h.value))
        root = next;
      else
        break;
    }
  }
}

// Newton on the (m - 1)-th derivative, which has a simple root at an m-fold root.
cplx refine_multiple(std::vector<cplx> a, cplx z, int m) {
  for (int k = 1; k < m && a.size() > 1; ++k) {
    for (std::size_t i = 1; i < a.size(); ++i) a[i - 1] = a[i] * static_cast<double>(i);
    a.pop_back();
  }
  if (a.size() < 2) return z;
  for (int s = 0; s < 5; ++s) {
    const Horner h = horner(a, z);
    if (h.value == cplx(0.0) || h.derivative == cplx(0.0)) break;
    const cplx next = z - h.value / h.derivative;
    if (std::abs(horner(a, next).value) >= std::abs(h.value)) break;
    z = next;
  }
  return z;
}

constexpr double kLooseRadius = 1e-3;

// Coefficients of the form in the chart u0 = 1 (t = u1/u0) or u1 = 1 (t = u0/u1).
std::vector<cplx> chart_coeffs(const BinaryForm& b, bool chart0) {
  const int d = b.degree();
  std::vector<cplx> a(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) a[static_cast<std::size_t>(i)] = chart0 ? b[i] : b[d - i];
  while (a.size() > 1 && a.back() == cplx(0.0)) a.pop_back();
  return a;
}

// Chart mean of the cluster, refined as a root of multiplicity size().
ProjPoint merged_point(const BinaryForm& b, const std::vector<ProjPoint>& pts) {
  if (pts.size() == 1) return pts.front();
  const bool chart0 = std::abs(pts.front().u0) >= std::abs(pts.front().u1);
  cplx mean = 0.0;
  for (const auto& p : pts) mean += chart0 ? p.u1 / p.u0 : p.u0 / p.u1;
  mean /= static_cast<double>(pts.size());
  mean = refine_multiple(chart_coeffs(b, chart0), mean, static_cast<int>(pts.size()));
  return chart0 ? ProjPoint::normalized(1.0, mean) : ProjPoint::normalized(mean, 1.0);
}

// Derivatives of order < m vanish at p relative to their evaluation bound.
bool is_multiple_root(const BinaryForm& b, const ProjPoint& p, int m) {
  const bool chart0 = std::abs(p.u0) >= std::abs(p.u1);
  const cplx t = chart0 ? p.u1 / p.u0 : p.u0 / p.u1;
  std::vector<cplx> a = chart_coeffs(b, chart0);
  for (int j = 0; j < m; ++j) {
    if (a.size() < 2) return a.empty() || a[0] == cplx(0.0);
    const Horner h = horner(a, t);
    if (std::abs(h.value) > kMultipleRootTol * h.bound) return false;
    for (std::size_t i = 1; i < a.size(); ++i) a[i - 1] = a[i] * static_cast<double>(i);
    a.pop_back();
  }
  return true;
}

std::size_t find(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

auto point_key(const ProjPoint& p) {
  auto q = [](double x) { return std::llround(x * 1e9); };
  return std::make_tuple(q(p.u0.real()), q(p.u0.imag()), q(p.u1.real()), q(p.u1.imag()));
}

}  // namespace

ProjPoint ProjPoint::normalized(cplx u0, cplx u1) {
  const double n = std::hypot(std::abs(u0), std::abs(u1));
  if (n == 0.0) throw InvalidArgument("projective point with zero coordinates");
  u0 /= n;
  u1 /= n;
  const cplx ref = std::abs(u0) >= std::abs(u1) ? u0 : u1;
  const cplx phase = std::conj(ref) / std::abs(ref);
  ProjPoint p;
  p.u0 = u0 * phase;
  p.u1 = u1 * phase;
  if (std::abs(p.u0) >= std::abs(p.u1))
    p.u0 = p.u0.real();
  else
    p.u1 = p.u1.real();
  return p;
}

double chordal_distance(const ProjPoint& a, const ProjPoint& b) {
  return std::abs(a.u0 * b.u1 - a.u1 * b.u0);
}

double chordal_distance(const Vec3& a, const Vec3& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) throw InvalidArgument("projective point with zero coordinates");
  return Vec3(a / na).cross(Vec3(b / nb)).norm();
}

Vec3 canonical_projective(const Vec3& v) {
  const double n = v.norm();
  if (n == 0.0) throw InvalidArgument("zero vector has no projective class");
  Vec3 u = v / n;
  const double big = u.cwiseAbs().maxCoeff();
  int ref = 0;
  while (std::abs(u[ref]) < (1.0 - 1e-9) * big) ++ref;
  u *= std::conj(u[ref]) / std::abs(u[ref]);
  u[ref] = u[ref].real();
  return u;
}

int ConicDivisor::degree() const {
  int d = 0;
  for (const auto& p : points) d += p.multiplicity;
  return d;
}

std::vector<int> ConicDivisor::multiplicities() const {
  std::vector<int> m;
  for (const auto& p : points) m.push_back(p.multiplicity);
  return m;
}

Restriction restrict_to_conic(const HPoly& p, const ConicParam& alpha) {
  const int d = p.degree();
  std::vector<BinaryForm> powers[3];
  for (int c = 0; c < 3; ++c) {
    BinaryForm one(0);
    one[0] = 1.0;
    powers[c].push_back(one);
    for (int e = 1; e <= d; ++e) powers[c].push_back(powers[c].back() * alpha.alpha[static_cast<std::size_t>(c)]);
  }
  Restriction out{BinaryForm(2 * d), 0.0};
  std::size_t idx = 0;
  for (int i = d; i >= 0; --i) {
    for (int j = d - i; j >= 0; --j, ++idx) {
      const cplx c = p[idx];
      if (c == cplx(0.0)) continue;
      const int k = d - i - j;
      const BinaryForm mono = powers[0][static_cast<std::size_t>(i)] * powers[1][static_cast<std::size_t>(j)] *
                              powers[2][static_cast<std::size_t>(k)];
      out.form += mono * c;
      out.scale += std::abs(c) * mono.norm();
    }
  }
  return out;
}

ConicDivisor proj_roots(const BinaryForm& b, const RootOptions& options) {
  const int d = b.degree();
  const double scale = b.norm();
  if (scale == 0.0) throw ZeroForm("binary form is identically zero");

  int at_infinity = 0;
  while (at_infinity < d && std::abs(b[at_infinity]) <= 4.0 * kEps * scale) ++at_infinity;
  const int n = d - at_infinity;

  std::vector<ProjPoint> roots;
  for (int k = 0; k < at_infinity; ++k) roots.push_back(ProjPoint::normalized(1.0, 0.0));

  if (n > 0) {
    // Dehomogenize at u1 = 1: coefficient of t^i is b[d - i].
    std::vector<cplx> a(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) a[static_cast<std::size_t>(i)] = b[d - i];
    std::vector<cplx> z;
    if (n <= 2) {
      z = closed_form(a);
    } else if (!aberth(a, z, options.max_iterations) && !companion(a, z)) {
      throw NoConvergence("root iteration did not converge", options.max_iterations);
    }
    polish(a, z, options.polish_steps);
    for (const cplx& t : z) roots.push_back(ProjPoint::normalized(t, 1.0));
  }

  // First pass: chordal clustering at cluster_tol.
  const std::size_t m = roots.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (chordal_distance(roots[i], roots[j]) <= options.cluster_tol) parent[find(parent, i)] = find(parent, j);
  std::vector<std::vector<ProjPoint>> groups;
  {
    std::vector<int> slot(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t r = find(parent, i);
      if (slot[r] < 0) {
        slot[r] = static_cast<int>(groups.size());
        groups.emplace_back();
      }
      groups[static_cast<std::size_t>(slot[r])].push_back(roots[i]);
    }
  }

  ConicDivisor out;
  std::vector<DivisorPoint> first;
  for (const auto& g : groups) first.push_back({merged_point(b, g), static_cast<int>(g.size())});

  // Second pass: high-multiplicity roots scatter like eps^(1/m). Nearby clusters of total
  // multiplicity >= 3 merge when the merged point is an m-fold root to backward-error level.
  const std::size_t k = first.size();
  std::vector<std::size_t> sup(k);
  std::iota(sup.begin(), sup.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (chordal_distance(first[i].point, first[j].point) <= kLooseRadius) sup[find(sup, i)] = find(sup, j);
  std::vector<bool> done(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t r = find(sup, i);
    if (done[r]) continue;
    done[r] = true;
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j < k; ++j)
      if (find(sup, j) == r) members.push_back(j);
    if (members.size() > 1) {
      std::vector<ProjPoint> all;
      for (std::size_t j : members)
        for (const auto& p : groups[j]) all.push_back(p);
      if (all.size() >= 3) {
        const ProjPoint c = merged_point(b, all);
        if (is_multiple_root(b, c, static_cast<int>(all.size()))) {
          out.points.push_back({c, static_cast<int>(all.size())});
          continue;
        }
      }
    }
    for (std::size_t j : members) out.points.push_back(first[j]);
  }
  std::sort(out.points.begin(), out.points.end(),
            [](const DivisorPoint& x, const DivisorPoint& y) { return point_key(x.point) < point_key(y.point); });
  return out;
}

Vec3 conic_point(const ConicParam& alpha, const ProjPoint& p) { return alpha(p.u0, p.u1); }

Vec3 line_through(const ProjPoint& p1, const ProjPoint& p2, const ConicParam& alpha, double tol) {
  if (chordal_distance(p1, p2) <= tol) throw CoincidentPoints("points coincide; use the tangent line");
  return canonical_projective(cross(conic_point(alpha, p1), conic_point(alpha, p2)));
}

Vec3 tangent_line(const ProjPoint& p, const QuadForm& q) {
  return canonical_projective(q.matrix() * conic_point(q.conic(), p));
}

ConicDivisor line_conic_divisor(const Vec3& line, const ConicParam& alpha, double cluster_tol) {
  RootOptions opts;
  opts.cluster_tol = cluster_tol;
  return proj_roots(restrict_to_conic(HPoly::linear(line), alpha).form, opts);
}

}  // namespace qm
