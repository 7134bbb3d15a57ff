#include "qm/sylvester.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <tuple>

#include "qm/errors.hpp"

namespace qm {

namespace {

using Key = std::array<long long, 6>;

Key vector_key(const Vec3& v) {
  Key k{};
  for (int i = 0; i < 3; ++i) {
    k[2 * i] = std::llround(v[i].real() * 1e6);
    k[2 * i + 1] = std::llround(v[i].imag() * 1e6);
  }
  return k;
}

void sort_vectors(std::vector<Vec3>& vs) {
  std::stable_sort(vs.begin(), vs.end(),
                   [](const Vec3& a, const Vec3& b) { return vector_key(a) < vector_key(b); });
}

bool kuhn(int u, const std::vector<std::vector<double>>& d, double thr, std::vector<int>& match,
          std::vector<char>& seen) {
  const int n = static_cast<int>(d.size());
  for (int v = 0; v < n; ++v) {
    if (d[u][v] > thr || seen[v]) continue;
    seen[v] = 1;
    if (match[v] < 0 || kuhn(match[v], d, thr, match, seen)) {
      match[v] = u;
      return true;
    }
  }
  return false;
}

// Smallest threshold admitting a perfect matching; match[v] = u.
double bottleneck(const std::vector<std::vector<double>>& d, std::vector<int>& match) {
  const int n = static_cast<int>(d.size());
  std::vector<double> cand;
  for (const auto& row : d) cand.insert(cand.end(), row.begin(), row.end());
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::size_t lo = 0, hi = cand.size() - 1;
  auto feasible = [&](double thr, std::vector<int>& m) {
    m.assign(n, -1);
    for (int u = 0; u < n; ++u) {
      std::vector<char> seen(n, 0);
      if (!kuhn(u, d, thr, m, seen)) return false;
    }
    return true;
  };
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    std::vector<int> m;
    if (feasible(cand[mid], m)) hi = mid;
    else lo = mid + 1;
  }
  feasible(cand[lo], match);
  return cand[lo];
}

cplx dot(const Vec3& a, const Vec3& v) { return a[0] * v[0] + a[1] * v[1] + a[2] * v[2]; }

double relative_residual(const HPoly& p, const HPoly& approx) {
  return (p - approx).norm() / std::max(1.0, p.norm());
}

}  // namespace

Multipole Multipole::zero(int degree) {
  Multipole m;
  m.degree = degree;
  return m;
}

HPoly Multipole::expand() const {
  if (is_zero()) return HPoly(degree);
  HPoly out = HPoly::constant(lambda);
  for (const auto& v : vectors) out = out * HPoly::linear(v);
  return out;
}

cplx Multipole::operator()(const Vec3& v) const {
  if (is_zero()) return 0.0;
  cplx out = lambda;
  for (const auto& a : vectors) out *= dot(a, v);
  return out;
}

Multipole canonicalize(Multipole m, MultipoleField field) {
  if (m.is_zero() || m.vectors.empty()) {
    if (m.is_zero()) m.vectors.clear();
    if (field == MultipoleField::Real) m.lambda = m.lambda.real();
    return m;
  }
  for (auto& v : m.vectors) {
    const double n = v.norm();
    if (n == 0.0) return Multipole::zero(m.degree);
    Vec3 c = canonical_projective(v);
    if (field == MultipoleField::Real) {
      c = c.real().cast<cplx>();
      c /= c.norm();
      for (int i = 0; i < 3; ++i) {
        if (std::abs(c[i]) > 1e-9) {
          if (c[i].real() < 0) c = -c;
          break;
        }
      }
    }
    // v = s * c with s = <c, v> since c is a unit vector.
    const cplx s = c.dot(v);
    m.lambda *= s;
    v = c;
  }
  sort_vectors(m.vectors);
  if (field == MultipoleField::Real) {
    m.lambda = m.lambda.real();
    if (m.lambda.real() < 0) {
      m.lambda = -m.lambda;
      m.vectors.back() = -m.vectors.back();
      sort_vectors(m.vectors);
    }
  }
  return m;
}

double multipole_distance(const Multipole& a, const Multipole& b) {
  if (a.degree != b.degree) return std::numeric_limits<double>::infinity();
  if (a.is_zero() && b.is_zero()) return 0.0;
  if (a.is_zero() || b.is_zero()) return 1.0;
  const double la = std::abs(a.lambda), lb = std::abs(b.lambda);
  if (a.vectors.empty()) return std::abs(a.lambda - b.lambda) / std::max(la, lb);
  const int n = static_cast<int>(a.vectors.size());
  std::vector<std::vector<double>> d(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d[i][j] = chordal_distance(a.vectors[i], b.vectors[j]);
  std::vector<int> match;
  const double vec = bottleneck(d, match);
  // a_u = c * b_v * |a_u| / |b_v| for matched pairs; move the phases into lambda.
  cplx scaled = a.lambda;
  for (int v = 0; v < n; ++v) {
    const Vec3& au = a.vectors[match[v]];
    const Vec3& bv = b.vectors[v];
    const cplx overlap = bv.dot(au);
    if (std::abs(overlap) > 0) scaled *= overlap / bv.squaredNorm();
  }
  const double lam = std::abs(scaled - b.lambda) / std::max(std::abs(scaled), lb);
  return std::max(vec, lam);
}

ConicDivisor conic_divisor(const HPoly& p, const QuadForm& q, const SylvesterOptions& options) {
  Restriction r = restrict_to_conic(p, q.conic());
  if (r.is_zero(options.zero_tol)) throw DivisibleInput("Q divides the input form", r.form.norm());
  RootOptions ro;
  ro.cluster_tol = options.cluster_tol;
  return proj_roots(r.form, ro);
}

LeadingMultipole leading_multipole(const HPoly& p, const QuadForm& q, const ConicDivisor& div,
                                   const GenParcelling& parcelling, MultipoleField field,
                                   const SylvesterOptions& options) {
  const int d = p.degree();
  if (static_cast<int>(parcelling.parcels.size()) != d || div.degree() != 2 * d)
    throw InvalidArgument("parcelling does not match the degree of the form");
  const ConicParam& alpha = q.conic();

  std::vector<Vec3> lines;
  lines.reserve(d);
  for (const Parcel& pc : parcelling.parcels) {
    const ProjPoint& a = div.points.at(pc.a).point;
    Vec3 line = pc.is_tangent() ? tangent_line(a, q)
                                : line_through(a, div.points.at(pc.b).point, alpha, options.cluster_tol);
    line = canonical_projective(line);
    if (field == MultipoleField::Real) {
      line = line.real().cast<cplx>();
      line /= line.norm();
    }
    lines.push_back(line);
  }

  Rng rng(options.seed);
  cplx lambda = 0.0;
  bool found = false;
  for (int attempt = 0; attempt < options.probe_retries && !found; ++attempt) {
    const ProjPoint t = ProjPoint::normalized(rng.complex_normal(), rng.complex_normal());
    bool near = false;
    for (const auto& dp : div.points) near = near || chordal_distance(t, dp.point) < 10 * options.cluster_tol;
    if (near) continue;
    const Vec3 x = conic_point(alpha, t);
    cplx prod = 1.0;
    double bound = 1.0;
    for (const auto& l : lines) {
      prod *= dot(l, x);
      bound *= l.norm() * x.norm();
    }
    if (std::abs(prod) <= 1e-10 * bound) continue;
    lambda = p(x) / prod;
    found = true;
  }
  if (!found) throw ProbeDegenerate("every probe point fell on the divisor");
  if (field == MultipoleField::Real) lambda = lambda.real();

  Multipole m;
  m.degree = d;
  m.lambda = lambda;
  m.vectors = lines;
  const HPoly lead = m.expand();
  HPoly r = d >= 2 ? divide_by_form(p - lead, q.poly(), options.div_tol) : HPoly(0);
  if (field == MultipoleField::Real) r = r.real_part();

  LeadingMultipole out;
  out.residual = relative_residual(p, lead + (d >= 2 ? q.poly() * r : HPoly(d)));
  out.multipole = canonicalize(std::move(m), field);
  out.remainder = std::move(r);
  return out;
}

Poly Decomposition::expand() const {
  Poly out;
  for (const auto& m : multipoles)
    if (!m.is_zero()) out.add(m.expand());
  return out;
}

Decomposition decompose(const Poly& p, const QuadForm& q, Policy policy, const SylvesterOptions& options) {
  const bool real = policy == Policy::CanonicalReal;
  Definiteness def = q.definiteness();
  if (real) {
    if (!p.is_real()) throw InvalidArgument("real policy needs real coefficients");
    if (!q.is_real()) throw InvalidArgument("real policy needs a real quadratic form");
    if (def == Definiteness::NegativeDefinite)
      throw InvalidArgument("the real surface of a negative definite form is empty");
  }

  Decomposition dec{q, policy, {}, true, 0.0};
  dec.multipoles.reserve(p.degree() + 1);
  for (int k = 0; k <= p.degree(); ++k) dec.multipoles.push_back(Multipole::zero(k));

  auto [even, odd] = parity_split(p);
  for (const Poly* part : {&even, &odd}) {
    if (part->is_zero()) continue;
    HPoly h = homogenize_on_surface(*part, q);
    const double ref = h.norm();
    for (int k = h.degree(); k >= 0; k -= 2) {
      if (h.norm() <= 1e-14 * ref) break;
      if (k == 0) {
        Multipole c = Multipole::zero(0);
        c.lambda = real ? cplx(h[0].real()) : h[0];
        dec.multipoles[0] = c;
        break;
      }
      if (k == 1) {
        Multipole l;
        l.degree = 1;
        l.lambda = 1.0;
        l.vectors = {Vec3(h[0], h[1], h[2])};
        dec.multipoles[1] = canonicalize(l, real ? MultipoleField::Real : MultipoleField::Complex);
        break;
      }
      Restriction r = restrict_to_conic(h, q.conic());
      if (r.is_zero(options.zero_tol)) {
        h = divide_by_form(h, q.poly(), options.div_tol);
        if (real) h = h.real_part();
        continue;
      }
      RootOptions ro;
      ro.cluster_tol = options.cluster_tol;
      ConicDivisor div = proj_roots(r.form, ro);

      GenParcelling parc;
      MultipoleField field = real ? MultipoleField::Real : MultipoleField::Complex;
      if (!real) {
        parc = canonical_parcelling(div, q.conic(), ParcellingMode::Generic, options.cluster_tol);
        dec.unique = dec.unique && count_parcellings(div.multiplicities()) == 1;
      } else if (def == Definiteness::PositiveDefinite) {
        parc = canonical_parcelling(div, q.conic(), ParcellingMode::RealDefinite, options.cluster_tol);
      } else {
        try {
          EquivariantChoice eq = real_equivariant_parcelling(div, q.conic(), options.cluster_tol);
          parc = eq.parcelling;
          dec.unique = dec.unique && eq.unique;
        } catch (const NotConjugateClosed&) {
          parc = canonical_parcelling(div, q.conic(), ParcellingMode::Generic, options.cluster_tol);
          field = MultipoleField::Complex;
          dec.unique = false;
        }
      }
      LeadingMultipole lead = leading_multipole(h, q, div, parc, field, options);
      dec.multipoles[k] = lead.multipole;
      h = lead.remainder;
      if (real && field == MultipoleField::Complex) h = h.real_part();
    }
  }

  Rng rng(options.seed);
  const auto mode = real ? SurfaceSampling::Real : SurfaceSampling::Complex;
  dec.residual = reexpansion_residual(p, dec, sample_surface(q, 200, rng, mode));
  return dec;
}

std::vector<Multipole> enumerate_decompositions(const HPoly& p, const QuadForm& q, std::uint64_t cap,
                                                const SylvesterOptions& options) {
  ConicDivisor div = conic_divisor(p, q, options);
  const std::uint64_t count = count_parcellings(div.multiplicities());
  if (count > cap) throw ExplosionGuard("too many parcellings to enumerate", static_cast<double>(count));
  std::vector<Multipole> out;
  for (const GenParcelling& g : enumerate_parcellings(div.multiplicities(), cap)) {
    Multipole m = leading_multipole(p, q, div, g, MultipoleField::Complex, options).multipole;
    bool dup = false;
    for (const auto& seen : out) dup = dup || multipole_distance(seen, m) <= 1e-6;
    if (!dup) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), [](const Multipole& a, const Multipole& b) {
    for (std::size_t i = 0; i < a.vectors.size() && i < b.vectors.size(); ++i) {
      const Key ka = vector_key(a.vectors[i]), kb = vector_key(b.vectors[i]);
      if (ka != kb) return ka < kb;
    }
    return std::make_tuple(std::llround(a.lambda.real() * 1e6), std::llround(a.lambda.imag() * 1e6)) <
           std::make_tuple(std::llround(b.lambda.real() * 1e6), std::llround(b.lambda.imag() * 1e6));
  });
  return out;
}

cplx evaluate_decomposition(const Decomposition& dec, const Vec3& v, cplx scale) {
  const cplx qv = dec.surface(v);
  if (std::abs(qv - 1.0) > 1e-8) throw OffSurface("point is not on Q = 1", std::abs(qv - 1.0));
  cplx out = 0.0, s = 1.0;
  for (const auto& m : dec.multipoles) {
    out += s * m(v);
    s *= scale;
  }
  return out;
}

double reexpansion_residual(const Poly& p, const Decomposition& dec, const std::vector<Vec3>& points) {
  const double pn = p.norm() > 0 ? p.norm() : 1.0;
  const int deg = std::max(p.degree(), static_cast<int>(dec.multipoles.size()) - 1);
  double worst = 0.0;
  for (const auto& v : points) {
    cplx w = 0.0;
    for (const auto& m : dec.multipoles) w += m(v);
    const double scale = pn * std::pow(std::max(1.0, v.norm()), deg);
    worst = std::max(worst, std::abs(p(v) - w) / scale);
  }
  return worst;
}

}  // namespace qm
