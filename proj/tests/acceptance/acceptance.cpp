// Acceptance suite: one PASS/FAIL line per criterion. Tolerances are fixed here and never adapted.
#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../support.hpp"
#include "qm/errors.hpp"
#include "qm/harmonic.hpp"
#include "qm/maxwell.hpp"
#include "qm/moduli.hpp"
#include "qm/parcelling.hpp"
#include "qm/quadrature.hpp"
#include "qm/sylvester.hpp"

using namespace qm;
using namespace qm::testing;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& why) {
    if (!ok) {
      pass = false;
      if (notes.size() < 20) notes.push_back(why);
    }
  }
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ProjPoint random_point(Rng& rng) { return ProjPoint::normalized(rng.complex_normal(), rng.complex_normal()); }

HPoly random_harmonic(Rng& rng, int d, const QuadForm& q, bool complex) {
  return harmonic_split(rng.hpoly(d, complex), q).harmonic;
}

// ---- 1: decomposition round-trip ----
Verdict c1() {
  Verdict v;
  Rng rng(101);
  const QuadForm s = QuadForm::sphere();
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  int cases = 0;
  for (int d = 2; d <= 6; ++d) {
    for (int t = 0; t < 100; ++t) {
      const Poly p = rng.poly(d, false);
      try {
        const Decomposition dec = decompose(p, s, Policy::CanonicalReal);
        const auto pts = sample_surface(s, 200, rng, SurfaceSampling::Real);
        const double r = reexpansion_residual(p, dec, pts);
        worst = std::max(worst, r);
        v.require(r <= 1e-8, fmt("d=%d case %d: residual %.3e", d, t, r));
      } catch (const Error& e) {
        v.require(false, fmt("d=%d case %d: %s", d, t, e.what()));
      }
      ++cases;
    }
  }
  const double secs = seconds_since(t0);
  v.require(secs < 60.0, fmt("runtime %.1f s exceeds 60 s", secs));
  v.detail = fmt("%d polynomials, d=2..6, max relative error %.2e (limit 1e-8), %.1f s (limit 60 s)", cases, worst, secs);
  return v;
}

// ---- 2: complex fiber cardinality ----
bool same_sets(const std::vector<Multipole>& a, const std::vector<Multipole>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& m : a)
    if (std::none_of(b.begin(), b.end(), [&](const Multipole& n) { return multipole_distance(m, n) <= 1e-6; }))
      return false;
  return true;
}

Verdict c2() {
  Verdict v;
  Rng rng(102);
  const QuadForm s = QuadForm::sphere();
  std::string counts;
  for (int d = 2; d <= 4; ++d) {
    const std::size_t expected = kappa(d);
    std::size_t lo = SIZE_MAX, hi = 0;
    for (int t = 0; t < 20; ++t) {
      const HPoly h = random_harmonic(rng, d, s, true);
      SylvesterOptions a, b;
      a.seed = 1;
      b.seed = 2;
      try {
        const auto ea = enumerate_decompositions(h, s, 10395, a);
        const auto eb = enumerate_decompositions(h, s, 10395, b);
        lo = std::min(lo, ea.size());
        hi = std::max(hi, ea.size());
        v.require(ea.size() == expected, fmt("d=%d case %d: %zu distinct, expected %zu", d, t, ea.size(), expected));
        v.require(same_sets(ea, eb), fmt("d=%d case %d: seeds disagree", d, t));
      } catch (const Error& e) {
        v.require(false, fmt("d=%d case %d: %s", d, t, e.what()));
      }
    }
    counts += fmt("%sd=%d: %zu..%zu (expected %zu)", d > 2 ? ", " : "", d, lo, hi, expected);
  }
  v.detail = "20 random complex harmonics per degree; " + counts + "; two seeds";
  return v;
}

// ---- 3: merge law ----
// The expected counts below are the ones this criterion states. Direct enumeration gives
// (kappa(d) + kappa(d - 1)) / 2 for one double point among 2d - 2 simple points, which is 2 at d = 2
// and 9 at d = 3. The d = 3 target of 8 is therefore not met; the check reports that honestly.
Verdict c3() {
  Verdict v;
  Rng rng(103);
  const struct {
    int d;
    std::uint64_t expected;
  } cases[] = {{2, 2}, {3, 8}};
  std::string detail;
  for (const auto& c : cases) {
    std::vector<int> mu{2};
    for (int i = 0; i < 2 * c.d - 2; ++i) mu.push_back(1);
    const auto all = enumerate_parcellings(mu);
    bool valid = std::all_of(all.begin(), all.end(), [&](const GenParcelling& g) { return is_generalized_parcelling(g, mu); });
    // Same count from an actual divisor: d lines, two of them sharing a conic point.
    const QuadForm q = random_quadform(rng, true);
    std::vector<Vec3> lines;
    const ProjPoint a = random_point(rng);
    lines.push_back(line_through(a, random_point(rng), q.conic()));
    lines.push_back(line_through(a, random_point(rng), q.conic()));
    for (int i = 2; i < c.d; ++i) lines.push_back(rng.complex_vec3());
    const auto r = is_ramified(lines, q);
    const std::uint64_t geometric = count_parcellings(r.divisor.multiplicities());
    const std::uint64_t law = (kappa(c.d) + kappa(c.d - 1)) / 2;
    v.require(valid, fmt("d=%d: invalid parcelling enumerated", c.d));
    v.require(all.size() == c.expected,
              fmt("d=%d: enumerated %zu parcellings, expected %llu", c.d, all.size(), (unsigned long long)c.expected));
    v.require(geometric == all.size(), fmt("d=%d: divisor count %llu differs from enumeration", c.d,
                                           (unsigned long long)geometric));
    detail += fmt("%sd=%d: enumerated %zu, divisor %llu, (k(d)+k(d-1))/2 = %llu, expected %llu", detail.empty() ? "" : "; ",
                  c.d, all.size(), (unsigned long long)geometric, (unsigned long long)law,
                  (unsigned long long)c.expected);
  }
  v.detail = detail;
  return v;
}

// ---- 4: harmonic decomposition ----
Verdict c4() {
  Verdict v;
  Rng rng(104);
  double worst_lap = 0.0, worst_resum = 0.0, worst_orth = 0.0;
  for (int qi = 0; qi < 5; ++qi) {
    const QuadForm q = random_quadform(rng, true);
    for (int d = 0; d <= 8; ++d) {
      const HPoly p = rng.hpoly(d, true);
      try {
        const HarmonicDecomposition dec = harmonic_decompose(p, q);
        const double resum = (dec.resum(q) - p).norm() / p.norm();
        worst_resum = std::max(worst_resum, resum);
        v.require(resum <= 1e-9, fmt("Q%d d=%d: resum %.3e", qi, d, resum));
        std::vector<HPoly> terms;
        for (std::size_t j = 0; j < dec.components.size(); ++j) {
          const HPoly& f = dec.components[j];
          const double lap = f.norm() > 0 ? laplacian_q(q, f).norm() / f.norm() : 0.0;
          worst_lap = std::max(worst_lap, lap);
          v.require(lap <= 1e-9, fmt("Q%d d=%d level %zu: Laplacian %.3e", qi, d, j, lap));
          terms.push_back(q.power(static_cast<int>(j)) * f);
        }
        const int order = default_order(d, d);
        for (std::size_t a = 0; a < terms.size(); ++a)
          for (std::size_t b = a + 1; b < terms.size(); ++b) {
            const double na = std::sqrt(std::abs(inner_product(terms[a], terms[a], q, order)));
            const double nb = std::sqrt(std::abs(inner_product(terms[b], terms[b], q, order)));
            if (na == 0.0 || nb == 0.0) continue;
            const double o = std::abs(inner_product(terms[a], terms[b], q, order)) / (na * nb);
            worst_orth = std::max(worst_orth, o);
            v.require(o <= 1e-7, fmt("Q%d d=%d levels %zu,%zu: overlap %.3e", qi, d, a, b, o));
          }
      } catch (const Error& e) {
        v.require(false, fmt("Q%d d=%d: %s", qi, d, e.what()));
      }
    }
  }
  v.detail = fmt("5 complex Q, d=0..8: Laplacian %.2e (1e-9), resum %.2e (1e-9), overlap %.2e (1e-7)", worst_lap,
                 worst_resum, worst_orth);
  return v;
}

// ---- 5: Maxwell ----
Verdict c5() {
  Verdict v;
  Rng rng(105);
  const QuadForm s = QuadForm::sphere();
  const HPoly n = maxwell_apply(s, {Vec3(0, 0, 1), Vec3(0, 0, 1)});
  const HPoly target = parse_poly("x^2+y^2-2z^2").part(2);
  const cplx c = target.coeffs().dot(n.coeffs()) / target.coeffs().squaredNorm();
  const double dist = (n - c * target).norm() / n.norm();
  v.require(dist <= 1e-10, fmt("N(e_z, e_z) distance %.3e", dist));
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const int d = 1 + t % 4;
    const HPoly h = random_harmonic(rng, d, s, false);
    try {
      const MaxwellRepresentation r = maxwell_from_harmonic(h, s);
      const double cert = (r.lambda * maxwell_apply(s, r.dirs) - h).norm() / h.norm();
      worst = std::max(worst, cert);
      v.require(cert <= 1e-7, fmt("case %d d=%d: certification %.3e", t, d, cert));
    } catch (const Error& e) {
      v.require(false, fmt("case %d d=%d: %s", t, d, e.what()));
    }
  }
  v.detail = fmt("N(e_z,e_z) vs x^2+y^2-2z^2 distance %.2e (1e-10); 50 real harmonics d<=4, worst %.2e (1e-7)", dist,
                 worst);
  return v;
}

// ---- 6: Dirichlet ----
Verdict c6() {
  Verdict v;
  Rng rng(106);
  const QuadForm qs[] = {QuadForm::sphere(), random_ellipsoid(rng), random_quadform(rng, true)};
  double lap = 0.0, surf = 0.0, uniq = 0.0;
  for (int qi = 0; qi < 3; ++qi) {
    for (int t = 0; t < 50; ++t) {
      const Poly m = rng.poly(t % 6, qi == 2);
      const Poly n = rng.poly((t / 6) % 6, qi == 2);
      try {
        const DirichletSolution a = dirichlet_solve(m, n, qs[qi], DirichletOrder::TopDown, 600 + t);
        const DirichletSolution b = dirichlet_solve(m, n, qs[qi], DirichletOrder::BottomUp, 700 + t);
        Poly diff = a.solution;
        diff -= b.solution;
        lap = std::max(lap, a.laplacian_residual);
        surf = std::max(surf, a.surface_residual);
        uniq = std::max(uniq, diff.norm());
        v.require(a.laplacian_residual <= 1e-9, fmt("Q%d case %d: Laplacian %.3e", qi, t, a.laplacian_residual));
        v.require(a.surface_residual <= 1e-8, fmt("Q%d case %d: surface %.3e", qi, t, a.surface_residual));
        v.require(diff.norm() <= 1e-8, fmt("Q%d case %d: orders differ by %.3e", qi, t, diff.norm()));
      } catch (const Error& e) {
        v.require(false, fmt("Q%d case %d: %s", qi, t, e.what()));
      }
    }
  }
  v.detail = fmt("150 pairs over sphere, ellipsoid, complex Q: Laplacian %.2e (1e-9), surface %.2e (1e-8), "
                 "order gap %.2e (1e-8)", lap, surf, uniq);
  return v;
}

// ---- 7: pencil fibers ----
Verdict c7() {
  Verdict v;
  Rng rng(107);
  double worst_viete = 0.0;
  int histogram[4] = {0, 0, 0, 0};  // generic2, double, tangent, generic3 successes
  for (int t = 0; t < 100; ++t) {
    try {
      const QuadForm q = random_quadform(rng, true);
      const PencilCenter c = PencilCenter::make(rng.complex_vec3(), q);
      const auto check = [&](const PencilDivisor& target, std::size_t expected, int slot, const char* what) {
        const auto fiber = gamma_fiber(target, c, q);
        bool back = true;
        for (const auto& f : fiber) back = back && gamma_project(f, c, q).degree() == target.degree();
        v.require(fiber.size() == expected, fmt("case %d %s: fiber %zu, expected %zu", t, what, fiber.size(), expected));
        v.require(back, fmt("case %d %s: fiber member does not project back", t, what));
        if (fiber.size() == expected && back) ++histogram[slot];
      };
      check(PencilDivisor{{{random_point(rng), 1}, {random_point(rng), 1}}}, 4, 0, "generic d=2");
      const PencilDivisor doubled{{{random_point(rng), 2}}};
      check(doubled, 3, 1, "double line");
      const auto tangents = pencil_tangent_lines(c, q);
      v.require(tangents.size() == 2, fmt("case %d: %zu tangent lines", t, tangents.size()));
      if (!tangents.empty()) check(PencilDivisor{{{tangents[0], 1}, {random_point(rng), 1}}}, 2, 2, "tangent line");
      check(PencilDivisor{{{random_point(rng), 1}, {random_point(rng), 1}, {random_point(rng), 1}}}, 8, 3,
            "generic d=3");
      // Viete coordinates (x, y, z) of a double line are (c1, c0, c2) up to the chart; x^2 - 4yz vanishes.
      const auto cf = viete(doubled.lines);
      const double par = std::abs(cf[1] * cf[1] - 4.0 * cf[0] * cf[2]);
      worst_viete = std::max(worst_viete, par);
      v.require(par <= 1e-8, fmt("case %d: parabola residual %.3e", t, par));
    } catch (const Error& e) {
      v.require(false, fmt("case %d: %s", t, e.what()));
    }
  }
  v.detail = fmt("100 conics/centers: generic(4) %d, double(3) %d, tangent(2) %d, d=3 generic(8) %d; "
                 "parabola residual %.2e (1e-8)",
                 histogram[0], histogram[1], histogram[2], histogram[3], worst_viete);
  return v;
}

// ---- 8: tangent-cone nullity ----
Verdict c8() {
  Verdict v;
  Rng rng(108);
  int agree = 0, total = 0, generic_zero = 0, shared_pos = 0;
  std::vector<std::string> discrepancies;
  const auto compare = [&](const std::vector<Vec3>& lines, const QuadForm& q, int nullity, const char* tag, int t) {
    const auto r = is_ramified(lines, q);
    ++total;
    if (r.ramified == (nullity > 0)) {
      ++agree;
    } else {
      std::string w = r.witness ? fmt("witness [%.4g%+.4gi : %.4g%+.4gi] x%d", r.witness->point.u0.real(),
                                      r.witness->point.u0.imag(), r.witness->point.u1.real(),
                                      r.witness->point.u1.imag(), r.witness->multiplicity)
                                : std::string("no witness");
      discrepancies.push_back(fmt("%s %d: ramified=%d nullity=%d, %s", tag, t, int(r.ramified), nullity, w.c_str()));
    }
  };
  for (int d = 2; d <= 4; ++d) {
    for (int t = 0; t < 50; ++t) {
      const QuadForm q = random_quadform(rng, true);
      std::vector<Vec3> lines;
      for (int i = 0; i < d; ++i) lines.push_back(rng.complex_vec3());
      try {
        const int n = tangent_nullity(lines, q);
        v.require(n == 0, fmt("generic d=%d case %d: nullity %d", d, t, n));
        if (n == 0) ++generic_zero;
        compare(lines, q, n, "generic", t);
      } catch (const Error& e) {
        v.require(false, fmt("generic d=%d case %d: %s", d, t, e.what()));
        ++total;
      }
    }
  }
  for (int t = 0; t < 50; ++t) {
    const int d = 2 + t % 3;
    const QuadForm q = random_quadform(rng, true);
    std::vector<Vec3> lines;
    const ProjPoint a = random_point(rng);
    lines.push_back(line_through(a, random_point(rng), q.conic()));
    lines.push_back(line_through(a, random_point(rng), q.conic()));
    for (int i = 2; i < d; ++i) lines.push_back(rng.complex_vec3());
    try {
      const int n = tangent_nullity(lines, q);
      v.require(n >= 1, fmt("shared d=%d case %d: nullity %d", d, t, n));
      if (n >= 1) ++shared_pos;
      compare(lines, q, n, "shared", t);
    } catch (const Error& e) {
      v.require(false, fmt("shared d=%d case %d: %s", d, t, e.what()));
      ++total;
    }
  }
  const double rate = total ? double(agree) / total : 0.0;
  v.require(rate >= 0.95, fmt("agreement %.3f below 0.95", rate));
  for (const auto& s : discrepancies) v.notes.push_back("discrepancy " + s);
  v.detail = fmt("generic nullity 0: %d/150, shared nullity>=1: %d/50, agreement with ramification %.3f (>= 0.95)",
                 generic_zero, shared_pos, rate);
  return v;
}

// ---- 9: dimension facts ----
Verdict c9() {
  Verdict v;
  Rng rng(109);
  for (int d = 0; d <= 8; ++d) {
    int monomials = 0;
    for (int i = 0; i <= d; ++i)
      for (int j = 0; i + j <= d; ++j) ++monomials;
    const std::size_t formula = static_cast<std::size_t>((d + 1) * (d + 2) / 2);
    v.require(monomials == static_cast<int>(formula) && dim_homogeneous(d) == formula && HPoly(d).size() == formula,
              fmt("d=%d: per-degree dimension mismatch", d));
  }
  const QuadForm qs[] = {QuadForm::sphere(), random_quadform(rng, false), random_quadform(rng, true)};
  int corank_ok = 0;
  for (const auto& q : qs)
    for (int d = 0; d <= 8; ++d) {
      try {
        const int c = corank_mul_q(q, d);
        v.require(c == 2 * d + 1, fmt("d=%d: corank %d, expected %d", d, c, 2 * d + 1));
        if (c == 2 * d + 1) ++corank_ok;
      } catch (const Error& e) {
        v.require(false, fmt("d=%d: %s", d, e.what()));
      }
    }
  const std::vector<std::vector<int>> partitions{{2, 2}, {3, 2}, {5, 4, 2}, {7, 3, 3, 2}};
  for (const auto& p : partitions) v.require(dim_defect(2, p) == 0.0, "l=2 defect is not 0");
  const std::vector<std::vector<int>> cubic{{3, 3}, {4, 3}, {5, 4, 3}, {6, 5, 4, 3}};
  for (const auto& p : cubic) {
    const double s1 = static_cast<double>(p.size()) - 1.0;
    v.require(dim_defect(3, p) == s1, fmt("l=3 s=%zu: defect %.3f, expected %.0f", p.size(), dim_defect(3, p), s1));
  }
  v.detail = fmt("(d+1)(d+2)/2 for d<=8; corank 2d+1 in %d/27 cases; defects 0 (l=2) and s-1 (l=3)", corank_ok);
  return v;
}

// ---- 10: real-definite uniqueness ----
Poly shuffled(const Poly& p, std::mt19937_64& g) {
  std::vector<HPoly> terms;
  for (const auto& part : p.parts())
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (part[i] == cplx(0.0)) continue;
      HPoly t(part.degree());
      t[i] = part[i];
      terms.push_back(t);
    }
  std::shuffle(terms.begin(), terms.end(), g);
  Poly out;
  for (const auto& t : terms) out.add(t);
  return out;
}

double canonical_gap(const Decomposition& a, const Decomposition& b) {
  if (a.multipoles.size() != b.multipoles.size()) return INFINITY;
  double gap = 0.0;
  for (std::size_t k = 0; k < a.multipoles.size(); ++k) {
    const Multipole& x = a.multipoles[k];
    const Multipole& y = b.multipoles[k];
    if (x.vectors.size() != y.vectors.size()) return INFINITY;
    gap = std::max(gap, std::abs(x.lambda - y.lambda) / std::max(1.0, std::abs(x.lambda)));
    for (std::size_t i = 0; i < x.vectors.size(); ++i) gap = std::max(gap, (x.vectors[i] - y.vectors[i]).norm());
  }
  return gap;
}

Verdict c10() {
  Verdict v;
  Rng rng(110);
  std::mt19937_64 g(110);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const int d = 1 + t % 6;
    const QuadForm q = t % 2 ? random_ellipsoid(rng) : QuadForm::sphere();
    const Poly p = rng.poly(d, false);
    SylvesterOptions a, b;
    a.seed = 11;
    b.seed = 12345;
    try {
      const Decomposition da = decompose(p, q, Policy::CanonicalReal, a);
      const Decomposition db = decompose(p, q, Policy::CanonicalReal, b);
      const Decomposition dc = decompose(shuffled(p, g), q, Policy::CanonicalReal, a);
      const double gap = std::max(canonical_gap(da, db), canonical_gap(da, dc));
      worst = std::max(worst, gap);
      v.require(da.unique, fmt("case %d: canonical decomposition not flagged unique", t));
      v.require(gap <= 1e-7, fmt("case %d d=%d: seed/order gap %.3e", t, d, gap));
    } catch (const Error& e) {
      v.require(false, fmt("case %d: %s", t, e.what()));
    }
  }
  v.detail = fmt("100 real polynomials d<=6 on sphere and ellipsoids: max seed/ordering gap %.2e (1e-7)", worst);
  return v;
}

// ---- 11: Parseval ----
Verdict c11() {
  Verdict v;
  Rng rng(111);
  const QuadForm qs[] = {QuadForm::sphere(), random_ellipsoid(rng)};
  double worst = 0.0;
  for (int qi = 0; qi < 2; ++qi)
    for (int d = 0; d <= 6; ++d)
      for (int t = 0; t < 5; ++t) {
        const Poly f = rng.poly(d, t % 2 == 1);
        try {
          const FourierResult r = fourier_components(f, qs[qi], d, d + 2);
          const double rel = std::abs(r.parseval_residual) / r.norm_sq;
          worst = std::max(worst, rel);
          v.require(rel <= 1e-6, fmt("Q%d d=%d case %d: Parseval %.3e", qi, d, t, rel));
        } catch (const Error& e) {
          v.require(false, fmt("Q%d d=%d case %d: %s", qi, d, t, e.what()));
        }
      }
  v.detail = fmt("70 polynomials d<=6 on sphere and ellipsoid at order d+2: max relative residual %.2e (1e-6)", worst);
  return v;
}

// ---- 12: product-rule constant ----
// On the sphere, Laplacian(Q T) = Q Laplacian(T) + (4m + 6) T for T of degree m. A second constant,
// 4d - 6 with d = deg(Q T) = m + 2 (that is 4m + 2), also circulates; it is printed for comparison and its
// residual is reported, but only the measured constant is asserted.
Verdict c12() {
  Verdict v;
  Rng rng(112);
  const QuadForm s = QuadForm::sphere();
  const Sparse q = to_sparse(s.poly());
  double worst = 0.0;
  for (int m = 0; m <= 6; ++m) {
    const HPoly t = rng.hpoly(m, false);
    const Sparse ts = to_sparse(t);
    const Sparse lhs = sparse_laplacian(sparse_mul(q, ts));
    const Sparse qlap = sparse_mul(q, sparse_laplacian(ts));
    const auto residual = [&](double k) {
      Sparse rhs = qlap;
      for (const auto& [e, c] : ts) rhs[e] += k * c;
      return sparse_distance(lhs, rhs) / sparse_norm(ts);
    };
    const double measured = 4.0 * m + 6.0;
    const double other = 4.0 * (m + 2) - 6.0;
    const double r_measured = residual(measured);
    const double r_other = residual(other);
    // The library operator agrees with the sparse oracle.
    const double lib = sparse_distance(to_sparse(laplacian_q(s, s.poly() * t)), lhs) / sparse_norm(lhs);
    worst = std::max({worst, r_measured, lib});
    v.require(r_measured <= 1e-12, fmt("m=%d: 4m+6 residual %.3e", m, r_measured));
    v.require(lib <= 1e-12, fmt("m=%d: library Laplacian differs from oracle by %.3e", m, lib));
    v.notes.push_back(fmt("m=%d: 4m+6 = %.0f (residual %.1e); 4d-6 with d=m+2 = %.0f (residual %.1e)", m, measured,
                          r_measured, other, r_other));
  }
  v.detail = fmt("sparse oracle confirms 4m+6 for m<=6 (worst residual %.2e, limit 1e-12)", worst);
  return v;
}

const std::vector<std::pair<const char*, std::function<Verdict()>>>& criteria() {
  static const std::vector<std::pair<const char*, std::function<Verdict()>>> all{
      {"decomposition round-trip", c1},   {"complex fiber cardinality", c2}, {"merge law", c3},
      {"harmonic decomposition", c4},     {"Maxwell", c5},                   {"Dirichlet", c6},
      {"pencil fibers", c7},              {"tangent-cone nullity", c8},      {"dimension facts", c9},
      {"real-definite uniqueness", c10},  {"Parseval", c11},                 {"product-rule constant", c12},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  bool verbose = false;
  app.add_option("--criterion", only, "Run a single criterion (1-12)")->check(CLI::Range(1, 12));
  app.add_flag("-v,--verbose", verbose, "Print notes for passing criteria too");
  CLI11_PARSE(app, argc, argv);

  int failures = 0;
  for (std::size_t i = 0; i < criteria().size(); ++i) {
    if (only != 0 && static_cast<int>(i) + 1 != only) continue;
    const auto& [name, fn] = criteria()[i];
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("uncaught: ") + e.what();
    }
    std::printf("C%zu %s %s: %s\n", i + 1, v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
    if (!v.pass || verbose || i + 1 == 12 || i + 1 == 8)
      for (const auto& n : v.notes) std::printf("    %s\n", n.c_str());
    failures += v.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
