#include <doctest.h>

#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>

#include "cymo/jointeigen.hpp"
#include "cymo/models.hpp"
#include "test_common.hpp"

using namespace cymo;
using namespace std::complex_literals;
using testgen::rng;

TEST_CASE("direct criterion on the jordan block") {
  CyclicTuple t = jordan_block_tuple(2);
  DirectEigenResult at0 = direct_joint_eigen(t, {0.0});
  CHECK(at0.exists);
  // T maps e_1 to e_2, so T^adj kills e_1
  REQUIRE(at0.eigenvector.size() == 2);
  CHECK(std::abs(at0.eigenvector(1)) < 1e-10);
  CHECK(std::abs(at0.eigenvector(0)) > 0.9);

  CHECK(!direct_joint_eigen(t, {1.0}).exists);
}

TEST_CASE("direct criterion on a normal tuple") {
  cplx a = 0.4 + 0.9i, b = -0.8 - 0.1i;
  Matrix T(2, 2);
  T.setZero();
  T(0, 0) = a;
  T(1, 1) = b;
  Vector h(2);
  h << 1, 1;
  h /= h.norm();
  CyclicTuple t = CyclicTuple::make({T}, h);
  CHECK(direct_joint_eigen(t, {std::conj(a)}).exists);
  CHECK(direct_joint_eigen(t, {std::conj(b)}).exists);
  CHECK(!direct_joint_eigen(t, {a + 1.0}).exists);
}

TEST_CASE("distance constant geometry") {
  CyclicTuple j2 = jordan_block_tuple(2);
  DistanceResult d0 = distance_constant(j2, {0.0});
  CHECK(d0.distance == doctest::Approx(1.0).epsilon(1e-10));
  REQUIRE(d0.c.has_value());
  CHECK(*d0.c == doctest::Approx(1.0).epsilon(1e-10));

  cplx a = 0.5 + 0.5i, b = -0.25 + 1.0i;
  Matrix T(2, 2);
  T.setZero();
  T(0, 0) = a;
  T(1, 1) = b;
  Vector h(2);
  h << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  CyclicTuple t = CyclicTuple::make({T}, h);
  DistanceResult da = distance_constant(t, {std::conj(a)});
  CHECK(da.distance == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));
  CHECK(*da.c == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));

  // far outside the spectrum the stacked ranges fill the space
  DistanceResult far = distance_constant(t, {5.0});
  CHECK(far.distance < 1e-10);
  CHECK(!far.c.has_value());
}

TEST_CASE("psd criterion on the jordan block") {
  MomentTable mt = moments(jordan_block_tuple(2), 3);
  PsdCriterionResult pass = psd_criterion(mt, {0.0}, 1.0);
  CHECK(pass.psd);
  CHECK(std::abs(pass.min_eigenvalue) < 1e-12);

  PsdCriterionResult fail = psd_criterion(mt, {0.0}, 0.5);
  CHECK(!fail.psd);
  CHECK(fail.min_eigenvalue < -0.7);  // the (0,0) entry alone is -0.75

  PsdCriterionResult nearly = psd_criterion(mt, {0.0}, 0.99);
  CHECK(!nearly.psd);
}

TEST_CASE("psd criterion vanishes identically for a scalar point") {
  cplx a = 0.3 - 0.8i;
  Matrix A(1, 1);
  A << a;
  Vector h(1);
  h << 1.0;
  MomentTable mt = moments(CyclicTuple::make({A}, h), 4);
  PsdCriterionResult r = psd_criterion(mt, {std::conj(a)}, 1.0);
  CHECK(r.psd);
  CHECK(std::abs(r.min_eigenvalue) < 1e-12 * r.scale);
}

TEST_CASE("criteria agree across spectral and non-spectral points") {
  for (std::uint64_t seed : {71u, 72u, 73u}) {
    auto g = rng(seed);
    CyclicTuple t = testgen::random_commuting_tuple(g, 4, 1);
    Eigen::ComplexEigenSolver<Matrix> es(t.T[0]);
    std::vector<std::vector<cplx>> candidates;
    for (int k = 0; k < 4; ++k) candidates.push_back({std::conj(es.eigenvalues()(k))});
    candidates.push_back({3.0 + 3.0i});
    candidates.push_back({testgen::cgauss(g)});

    for (const auto& lambda : candidates) {
      JointEigenReport rep = joint_eigen_report(t, lambda, 4);
      CHECK(rep.consistent);
      CHECK(rep.direct_exists == (rep.distance > 1e-8));
      if (rep.direct_exists) {
        // the distance constant makes the psd test pass and 0.9 of it fail
        CHECK(rep.psd_ok);
        MomentTable mt = moments(t, 4);
        CHECK(!psd_criterion(mt, lambda, 0.9 * rep.psd_c).psd);
      }
    }
  }
}

TEST_CASE("report defaults") {
  CyclicTuple t = jordan_block_tuple(3);
  JointEigenReport rep = joint_eigen_report(t, {0.0}, 3);
  CHECK(rep.degree == 3);
  CHECK(rep.direct_exists);
  CHECK(rep.consistent);
  REQUIRE(rep.c.has_value());
  CHECK(rep.psd_c == doctest::Approx(*rep.c));
}
