#include <doctest.h>

#include "../support.hpp"
#include "qm/errors.hpp"
#include "qm/moduli.hpp"
#include "qm/parcelling.hpp"
#include "qm/sylvester.hpp"

using namespace qm;
using namespace qm::testing;

namespace {

std::vector<Vec3> random_lines(Rng& rng, int d) {
  std::vector<Vec3> out;
  for (int i = 0; i < d; ++i) out.push_back(rng.complex_vec3());
  return out;
}

ProjPoint random_point(Rng& rng) { return ProjPoint::normalized(rng.complex_normal(), rng.complex_normal()); }

}  // namespace

TEST_CASE("ramification examples") {
  const QuadForm s = QuadForm::sphere();
  CHECK(!is_ramified({Vec3(1, 0, 0), Vec3(0, 1, 0)}, s).ramified);
  const auto zz = is_ramified({Vec3(0, 0, 1), Vec3(0, 0, 1)}, s);
  CHECK(zz.ramified);
  REQUIRE(zz.witness);
  CHECK(zz.witness->multiplicity == 2);
  const auto tangent = is_ramified({Vec3(1, cplx(0, 1), 0), Vec3(0, 1, 0)}, s);
  CHECK(tangent.ramified);
  CHECK(chordal_distance(tangent.witness->point, ProjPoint::normalized(1, cplx(0, 1))) <= 1e-7);
  CHECK_THROWS_AS(is_ramified({Vec3(0, 0, 0)}, s), DivisibleInput);
}

TEST_CASE("ramification matches the parcelling count") {
  Rng rng(70);
  for (int t = 0; t < 40; ++t) {
    const QuadForm q = random_quadform(rng, true);
    const int d = 2 + t % 3;
    std::vector<Vec3> lines = random_lines(rng, d);
    if (t % 2) {
      // force a shared point on the conic
      const ProjPoint a = random_point(rng), b = random_point(rng), c = random_point(rng);
      lines[0] = line_through(a, b, q.conic());
      lines[1] = line_through(a, c, q.conic());
    }
    const auto r = is_ramified(lines, q);
    const bool fewer = count_parcellings(r.divisor.multiplicities()) < kappa(d);
    CHECK(r.ramified == fewer);
    CHECK(r.ramified == (t % 2 == 1));
  }
}

TEST_CASE("tangent nullity") {
  Rng rng(71);
  const QuadForm s = QuadForm::sphere();
  CHECK(tangent_nullity({Vec3(0, 0, 1)}, s) == 0);
  for (int t = 0; t < 30; ++t) {
    const QuadForm q = random_quadform(rng, true);
    const int d = 2 + t % 3;
    std::vector<Vec3> lines = random_lines(rng, d);
    CHECK(tangent_nullity(lines, q) == 0);
    const ProjPoint a = random_point(rng), b = random_point(rng), c = random_point(rng);
    lines[0] = line_through(a, b, q.conic());
    lines[1] = line_through(a, c, q.conic());
    CHECK(tangent_nullity(lines, q) >= 1);
  }
}

TEST_CASE("pencil projection and fibers") {
  Rng rng(72);
  for (int t = 0; t < 30; ++t) {
    const QuadForm q = random_quadform(rng, true);
    const PencilCenter c = PencilCenter::make(rng.complex_vec3(), q);
    const int d = 1 + t % 4;
    ConicDivisor div;
    for (int i = 0; i < d; ++i) div.points.push_back({random_point(rng), 1});
    const PencilDivisor target = gamma_project(div, c, q);
    CHECK(target.degree() == d);
    const auto fiber = gamma_fiber(target, c, q);
    CHECK(fiber.size() == (std::size_t(1) << d));
    bool found = false;
    const ConicDivisor sorted = merge_points(div.points);
    for (const auto& f : fiber) {
      CHECK(f.degree() == d);
      bool same = f.points.size() == sorted.points.size();
      for (std::size_t i = 0; same && i < f.points.size(); ++i)
        same = chordal_distance(f.points[i].point, sorted.points[i].point) <= 1e-7;
      found = found || same;
      // every member projects back onto the target
      const PencilDivisor back = gamma_project(f, c, q);
      REQUIRE(back.lines.size() == target.lines.size());
    }
    CHECK(found);
  }
}

TEST_CASE("fibers over special targets") {
  Rng rng(73);
  const QuadForm q = random_quadform(rng, true);
  const PencilCenter c = PencilCenter::make(rng.complex_vec3(), q);

  // a point and its partner on the same line go to the same line
  const ProjPoint p = random_point(rng);
  const Vec3 line = cross(conic_point(q.conic(), p), c.p);
  const ConicDivisor meet = line_conic_divisor(line, q.conic());
  REQUIRE(meet.points.size() == 2);
  ConicDivisor both;
  both.points = meet.points;
  const PencilDivisor merged = gamma_project(both, c, q);
  REQUIRE(merged.lines.size() == 1);
  CHECK(merged.lines[0].multiplicity == 2);

  PencilDivisor doubled{{{c.dual(line), 2}}};
  CHECK(gamma_fiber(doubled, c, q).size() == 3);

  const auto tangents = pencil_tangent_lines(c, q);
  REQUIRE(tangents.size() == 2);
  PencilDivisor mixed{{{tangents[0], 1}, {c.dual(line), 1}}};
  CHECK(gamma_fiber(mixed, c, q).size() == 2);

  // product formula over chosen multiplicities
  PencilDivisor heavy{{{c.dual(line), 3}, {tangents[1], 2}, {c.dual(cross(rng.complex_vec3(), c.p)), 2}}};
  CHECK(gamma_fiber(heavy, c, q).size() == 4 * 1 * 3);
  PencilDivisor huge{{{c.dual(line), 13}}};
  CHECK_THROWS_AS(gamma_fiber(huge, c, q), ExplosionGuard);
  CHECK_THROWS_AS(PencilCenter::make(conic_point(q.conic(), p), q), InvalidArgument);
}

TEST_CASE("double lines lie on the discriminant parabola") {
  Rng rng(74);
  for (int t = 0; t < 20; ++t) {
    const ProjPoint l = random_point(rng);
    const auto c = viete({{l, 2}});
    CHECK(std::abs(c[1] * c[1] - 4.0 * c[0] * c[2]) <= 1e-8);
    const auto g = viete({{l, 1}, {random_point(rng), 1}});
    CHECK(std::abs(g[1] * g[1] - 4.0 * g[0] * g[2]) > 1e-8);
  }
}

TEST_CASE("dimension counts") {
  CHECK(dim_defect(2, {3, 2}) == 0.0);
  CHECK(dim_defect(2, {5, 4, 2}) == 0.0);
  CHECK(dim_defect(3, {3, 3}) == 1.0);
  CHECK(dim_defect(3, {4, 3, 3}) == 2.0);
  CHECK(dim_defect(1, {4, 3}) == 0.0);
  CHECK(dim_defect(5, {7}) == 0.0);
  // small factors: 9 - 5 - 2 + 1
  CHECK(dim_defect(3, {2, 1}) == 3.0);
  CHECK(dim_defect(4, {5, 2}) == 4.0);  // 26 - 18 - 5 + 1

  Rng rng(75);
  for (int d = 0; d <= 8; ++d) {
    CHECK(corank_mul_q(random_quadform(rng, true), d) == 2 * d + 1);
  }
}

TEST_CASE("fiber size equals the double factorial") {
  Rng rng(76);
  for (int d = 2; d <= 3; ++d) {
    const QuadForm q = random_quadform(rng, true);
    CHECK(enumerate_decompositions(rng.hpoly(d, true), q).size() == kappa(d));
  }
}
