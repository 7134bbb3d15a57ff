#include <doctest.h>

#include "../support.hpp"
#include "qm/errors.hpp"
#include "qm/harmonic.hpp"
#include "qm/maxwell.hpp"

using namespace qm;
using namespace qm::testing;

TEST_CASE("Maxwell numerators by hand") {
  const QuadForm s = QuadForm::sphere();
  CHECK(format_poly(maxwell_apply(s, {})) == "1");
  CHECK(format_poly(maxwell_apply(s, {Vec3(0, 0, 1)})) == "-z");
  const HPoly n2 = maxwell_apply(s, {Vec3(0, 0, 1), Vec3(0, 0, 1)});
  CHECK(format_poly(n2) == "-x^2-y^2+2*z^2");
}

TEST_CASE("numerators are harmonic, symmetric and multilinear") {
  Rng rng(60);
  for (int t = 0; t < 40; ++t) {
    const QuadForm q = random_quadform(rng, t % 2 == 0);
    const int d = 1 + t % 5;
    std::vector<Vec3> dirs;
    for (int j = 0; j < d; ++j) dirs.push_back(rng.complex_vec3());
    const HPoly n = maxwell_apply(q, dirs);
    CHECK(n.degree() == d);
    CHECK(laplacian_q(q, n).norm() <= 1e-8 * n.norm());

    std::vector<Vec3> rev(dirs.rbegin(), dirs.rend());
    CHECK(relative_distance(maxwell_apply(q, rev), n) <= 1e-10);

    const Vec3 v = rng.complex_vec3(), w = rng.complex_vec3();
    const cplx a = rng.complex_normal(), b = rng.complex_normal();
    auto with = [&](const Vec3& u) {
      auto c = dirs;
      c[0] = u;
      return maxwell_apply(q, c);
    };
    CHECK(relative_distance(with(a * v + b * w), with(v) * a + with(w) * b) <= 1e-10);
  }
}

TEST_CASE("numerators span the harmonics") {
  Rng rng(61);
  for (int d = 1; d <= 3; ++d) {
    const QuadForm q = random_quadform(rng, true);
    Eigen::MatrixXcd span(dim_homogeneous(d), 4 * d);
    for (int c = 0; c < 4 * d; ++c) {
      std::vector<Vec3> dirs;
      for (int j = 0; j < d; ++j) dirs.push_back(rng.complex_vec3());
      span.col(c) = maxwell_apply(q, dirs).coeffs();
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(span);
    qr.setThreshold(1e-9);
    CHECK(qr.rank() == 2 * d + 1);
  }
}

TEST_CASE("representing harmonics") {
  const QuadForm s = QuadForm::sphere();
  auto rep = maxwell_from_harmonic(parse_poly("x").part(1), s);
  REQUIRE(rep.dirs.size() == 1);
  CHECK(chordal_distance(rep.dirs[0], Vec3(1, 0, 0)) <= 1e-12);
  CHECK(std::abs(rep.lambda * rep.dirs[0][0] + 1.0) <= 1e-12);

  rep = maxwell_from_harmonic(parse_poly("x^2+y^2-2z^2").part(2), s);
  REQUIRE(rep.dirs.size() == 2);
  CHECK(rep.distance <= 1e-7);

  CHECK_THROWS_AS(maxwell_from_harmonic(s.poly() * HPoly::monomial(1, 0, 0), s), NotHarmonic);

  Rng rng(62);
  for (int t = 0; t < 20; ++t) {
    const QuadForm q = random_quadform(rng, t % 2 == 0);
    const HPoly h = harmonic_split(rng.hpoly(1 + t % 5, true), q).harmonic;
    rep = maxwell_from_harmonic(h, q);
    CHECK(rep.distance <= 1e-7);
    CHECK(rep.parcelling == -1);
  }
}

TEST_CASE("Maxwell sums") {
  const QuadForm s = QuadForm::sphere();
  auto sum = maxwell_sum(s.poly(), s);
  REQUIRE(sum.terms.size() == 1);
  CHECK(sum.terms[0].power == 1);
  CHECK(sum.terms[0].degree == 0);

  sum = maxwell_sum(HPoly::monomial(0, 0, 4), s);
  CHECK(sum.terms.size() == 3);
  CHECK(sum.residual <= 1e-7);

  Rng rng(63);
  for (int t = 0; t < 10; ++t) {
    const QuadForm q = random_quadform(rng, true);
    sum = maxwell_sum(rng.hpoly(t % 7, true), q);
    CHECK(sum.residual <= 1e-7);
  }
}
