#include "qm/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <tuple>

#include <Eigen/SVD>

#include "qm/errors.hpp"
#include "qm/poly.hpp"
#include "qm/random.hpp"

namespace qm {

namespace {

auto point_key(const ProjPoint& p) {
  auto r = [](double x) { return std::llround(x * 1e6); };
  return std::make_tuple(r(p.u0.real()), r(p.u0.imag()), r(p.u1.real()), r(p.u1.imag()));
}

bool same_divisor(const ConicDivisor& a, const ConicDivisor& b, double tol) {
  if (a.points.size() != b.points.size()) return false;
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    if (a.points[i].multiplicity != b.points[i].multiplicity) return false;
    if (chordal_distance(a.points[i].point, b.points[i].point) > tol) return false;
  }
  return true;
}

}  // namespace

ConicDivisor merge_points(const std::vector<DivisorPoint>& points, double tol) {
  ConicDivisor out;
  for (const auto& p : points) {
    auto hit = std::find_if(out.points.begin(), out.points.end(),
                            [&](const DivisorPoint& o) { return chordal_distance(o.point, p.point) <= tol; });
    if (hit != out.points.end()) hit->multiplicity += p.multiplicity;
    else out.points.push_back(p);
  }
  std::sort(out.points.begin(), out.points.end(),
            [](const DivisorPoint& a, const DivisorPoint& b) { return point_key(a.point) < point_key(b.point); });
  return out;
}

RamificationResult is_ramified(const std::vector<Vec3>& forms, const QuadForm& q, double cluster_tol) {
  std::vector<DivisorPoint> all;
  for (const auto& l : forms) {
    if (l.norm() == 0.0) throw DivisibleInput("zero linear form");
    const ConicDivisor d = line_conic_divisor(l, q.conic(), cluster_tol);
    all.insert(all.end(), d.points.begin(), d.points.end());
  }
  RamificationResult out;
  out.divisor = merge_points(all, cluster_tol);
  for (const auto& p : out.divisor.points) {
    if (p.multiplicity >= 2) {
      out.ramified = true;
      out.witness = p;
      break;
    }
  }
  return out;
}

int tangent_nullity(const std::vector<Vec3>& forms, const QuadForm& q, const NullityOptions& options) {
  const int d = static_cast<int>(forms.size());
  if (d == 0) return 0;
  for (const auto& l : forms)
    if (l.norm() == 0.0) throw DivisibleInput("zero linear form");
  const int m = 2 * d + 5;
  Eigen::MatrixXcd a(m, 3 * d);
  Rng rng(options.seed);
  for (int row = 0; row < m; ++row) {
    const ProjPoint t = ProjPoint::normalized(rng.complex_normal(), rng.complex_normal());
    Vec3 x = conic_point(q.conic(), t);
    x /= x.norm();
    for (int j = 0; j < d; ++j) {
      cplx others = 1.0;
      for (int i = 0; i < d; ++i)
        if (i != j) others *= forms[i].cwiseProduct(x).sum() / forms[i].norm();
      for (int c = 0; c < 3; ++c) a(row, 3 * j + c) = x[c] * others;
    }
    const double n = a.row(row).norm();
    if (n > 0) a.row(row) /= n;
  }
  const Eigen::VectorXd s = a.bdcSvd().singularValues();
  const double thr = options.rank_tol * s[0];
  int rank = 0;
  double above = 0.0, below = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s[i] > thr) {
      ++rank;
      above = s[i];
    } else if (below == 0.0) {
      below = s[i];
    }
  }
  if (below > 0.0 && above < 10.0 * below) throw RankIndeterminate("no spectral gap at the rank threshold", above / below);
  return 3 * d - rank - (d - 1);
}

PencilCenter PencilCenter::make(const Vec3& p, const QuadForm& q) {
  if (std::abs(q(p)) <= 1e-8 * q.matrix().norm() * p.squaredNorm())
    throw InvalidArgument("pencil center lies on the conic", std::abs(q(p)));
  PencilCenter c;
  c.p = p / p.norm();
  // Lines l with l . p = 0 form the Hermitian complement of conj(p).
  Eigen::HouseholderQR<Eigen::Matrix<cplx, 3, 1>> qr(c.p.conjugate());
  const Eigen::Matrix3cd basis = qr.householderQ();
  c.e1 = basis.col(1);
  c.e2 = basis.col(2);
  return c;
}

Vec3 PencilCenter::line(const ProjPoint& dual) const { return dual.u0 * e1 + dual.u1 * e2; }

ProjPoint PencilCenter::dual(const Vec3& line) const { return ProjPoint::normalized(e1.dot(line), e2.dot(line)); }

int PencilDivisor::degree() const {
  int d = 0;
  for (const auto& l : lines) d += l.multiplicity;
  return d;
}

PencilDivisor gamma_project(const ConicDivisor& div, const PencilCenter& center, const QuadForm& q,
                            double cluster_tol) {
  std::vector<DivisorPoint> lines;
  for (const auto& pt : div.points) {
    const Vec3 x = conic_point(q.conic(), pt.point);
    lines.push_back({center.dual(cross(x, center.p)), pt.multiplicity});
  }
  return {merge_points(lines, cluster_tol).points};
}

std::vector<ConicDivisor> gamma_fiber(const PencilDivisor& target, const PencilCenter& center, const QuadForm& q,
                                      double cluster_tol) {
  if (target.degree() > 12) throw ExplosionGuard("fiber enumeration limited to degree 12", target.degree());
  std::vector<std::vector<std::vector<DivisorPoint>>> options;
  for (const auto& l : target.lines) {
    const ConicDivisor meet = line_conic_divisor(center.line(l.point), q.conic(), cluster_tol);
    std::vector<std::vector<DivisorPoint>> per;
    if (meet.points.size() == 1) {
      per.push_back({{meet.points[0].point, l.multiplicity}});
    } else {
      for (int k = 0; k <= l.multiplicity; ++k) {
        std::vector<DivisorPoint> choice;
        if (k > 0) choice.push_back({meet.points[0].point, k});
        if (k < l.multiplicity) choice.push_back({meet.points[1].point, l.multiplicity - k});
        per.push_back(choice);
      }
    }
    options.push_back(std::move(per));
  }

  std::vector<ConicDivisor> out;
  std::vector<DivisorPoint> acc;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == options.size()) {
      ConicDivisor d = merge_points(acc, cluster_tol);
      for (const auto& o : out)
        if (same_divisor(o, d, cluster_tol)) return;
      out.push_back(std::move(d));
      return;
    }
    for (const auto& choice : options[i]) {
      const std::size_t mark = acc.size();
      acc.insert(acc.end(), choice.begin(), choice.end());
      walk(i + 1);
      acc.resize(mark);
    }
  };
  walk(0);
  return out;
}

std::vector<ProjPoint> pencil_tangent_lines(const PencilCenter& center, const QuadForm& q, double cluster_tol) {
  const Vec3 polar = q.matrix() * center.p;
  const ConicDivisor touch = line_conic_divisor(polar, q.conic(), cluster_tol);
  std::vector<ProjPoint> out;
  for (const auto& t : touch.points) out.push_back(center.dual(cross(conic_point(q.conic(), t.point), center.p)));
  return out;
}

std::vector<cplx> viete(const std::vector<DivisorPoint>& points) {
  Eigen::VectorXcd c = Eigen::VectorXcd::Ones(1);
  for (const auto& pt : points) {
    for (int r = 0; r < pt.multiplicity; ++r) {
      // multiply by (b u0 - a u1)
      Eigen::VectorXcd next = Eigen::VectorXcd::Zero(c.size() + 1);
      next.head(c.size()) += pt.point.u1 * c;
      next.tail(c.size()) -= pt.point.u0 * c;
      c = next;
    }
  }
  c /= c.norm();
  return {c.data(), c.data() + c.size()};
}

double dim_defect(int l, const std::vector<int>& partition) {
  if (l < 1) throw InvalidArgument("surface degree must be positive", l);
  const int s = static_cast<int>(partition.size());
  if (s <= 1) return 0.0;
  bool all_big = true;
  long long d = 0;
  for (int di : partition) {
    if (di <= 0) throw InvalidArgument("partition entries must be positive", di);
    all_big = all_big && di >= l;
    d += di;
  }
  if (all_big) return (s - 1) * static_cast<double>(l * l - 3 * l + 2) / 2.0;
  long long twice = static_cast<long long>(l) * (2 * d - l + 3);
  for (int di : partition) {
    if (di >= l) twice -= static_cast<long long>(l) * (2 * di - l + 3);
    else twice -= static_cast<long long>(di) * (di + 3);
  }
  return static_cast<double>(twice) / 2.0 + (s - 1);
}

int corank_mul_q(const QuadForm& q, int d, double rank_tol) {
  const int full = static_cast<int>(dim_homogeneous(d));
  if (d < 2) return full;
  const Eigen::VectorXd s = multiplication_matrix(q.poly(), d - 2).bdcSvd().singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) rank += s[i] > rank_tol * s[0];
  return full - rank;
}

}  // namespace qm
