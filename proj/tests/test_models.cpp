#include <doctest.h>

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "cymo/error.hpp"
#include "cymo/examples.hpp"
#include "cymo/kernel.hpp"
#include "cymo/models.hpp"
#include "test_common.hpp"

using namespace cymo;
using namespace std::complex_literals;
using testgen::rng;

TEST_CASE("atomic tuple validation") {
  AtomicMeasure empty;
  CHECK_THROWS_AS(atomic_tuple(empty), Error);

  AtomicMeasure mixed;
  mixed.atoms = {{1.0}, {1.0, 2.0}};
  mixed.weights = {1.0, 1.0};
  CHECK_THROWS_AS(atomic_tuple(mixed), Error);

  AtomicMeasure nonpos;
  nonpos.atoms = {{1.0}};
  nonpos.weights = {0.0};
  CHECK_THROWS_AS(atomic_tuple(nonpos), Error);

  AtomicMeasure dup;
  dup.atoms = {{1.0, 0.0}, {1.0, 0.0}};
  dup.weights = {0.5, 0.5};
  CHECK_THROWS_AS(atomic_tuple(dup), Error);
}

TEST_CASE("atomic tuple structure") {
  AtomicMeasure mu;
  mu.atoms = {{0.5 + 0.5i}, {-1.0}};
  mu.weights = {0.25, 0.75};
  CyclicTuple t = atomic_tuple(mu);
  CHECK(t.m == 2);
  CHECK(t.n == 1);
  CHECK(std::abs(t.norm(t.h) * t.norm(t.h) - 1.0) < 1e-14);  // total mass
  CHECK(t.op_norm(0) == doctest::Approx(1.0).epsilon(1e-12));  // max |atom|
  auto rep = validate(t);
  CHECK(rep.is_commuting);
  CHECK(rep.is_cyclic);
}

TEST_CASE("jordan block model") {
  CyclicTuple t = jordan_block_tuple(3, 1.0 - 2.0i);
  Matrix N = t.T[0] - (1.0 - 2.0i) * Matrix::Identity(3, 3);
  CHECK((N * N * N).cwiseAbs().maxCoeff() == 0.0);
  CHECK(N(1, 0) == 1.0);
  CHECK(t.h(0) == 1.0);
  CHECK(std::abs(t.h(1)) + std::abs(t.h(2)) == 0.0);
}

TEST_CASE("zero tuple is the convolution unit kernel") {
  CyclicTuple t = zero_tuple(3);
  auto g = rng(67);
  auto z = testgen::random_point(g, 3, 2.0);
  auto w = testgen::random_point(g, 3, 2.0);
  CHECK(std::abs(eval_F(t, z, w) - 1.0) < 1e-14);
}

TEST_CASE("varopoulos-kaijser data") {
  VkData vk = varopoulos_kaijser();
  CHECK(vk.tuple.m == 5);
  CHECK(vk.tuple.n == 3);
  auto rep = validate(vk.tuple);
  CHECK(rep.is_commuting);
  for (int i = 0; i < 3; ++i) CHECK(vk.tuple.op_norm(i) <= 1.0 + 1e-12);

  CHECK(std::abs(vk.p.eval({1.0, 1.0, -1.0}) - 5.0) < 1e-14);
  CHECK(std::abs(fock_inner(vk.q, vk.q) - 9.0) < 1e-12);

  double pTnorm = vk.tuple.op_norm_of(vk.tuple.poly_matrix(vk.p));
  CHECK(std::abs(pTnorm - 3.0 * std::sqrt(3.0)) < 1e-10);
}

TEST_CASE("polydisc sup") {
  Polynomial z = Polynomial::variable(1, 0);
  CHECK(polydisc_sup(z) == doctest::Approx(1.0).epsilon(1e-9));

  Polynomial two_plus_z = Polynomial::constant(1, 2.0) + z;
  CHECK(polydisc_sup(two_plus_z) == doctest::Approx(3.0).epsilon(1e-9));

  Polynomial z1z2 = Polynomial::monomial({1, 1});
  CHECK(polydisc_sup(z1z2) == doctest::Approx(1.0).epsilon(1e-9));

  VkData vk = varopoulos_kaijser();
  double sup = polydisc_sup(vk.p);
  CHECK(sup >= 4.99);
  CHECK(sup <= 5.0 + 1e-9);
}

TEST_CASE("radial weights") {
  CHECK(RadialWeightModel::drury_arveson(2).weight({1, 1}) == doctest::Approx(0.5));
  CHECK(RadialWeightModel::hardy_ball(2).weight({1, 1}) == doctest::Approx(1.0 / 6.0));
  CHECK(RadialWeightModel::hardy_disk(2.0).weight({3}) == doctest::Approx(64.0));

  // H_t at t = n is the hardy ball; at t = 1, n = 1 every weight is 1
  for (const auto& a : enumerate_upto(3, 5))
    CHECK(RadialWeightModel::ht_scale(3, 3.0).weight(a) ==
          doctest::Approx(RadialWeightModel::hardy_ball(3).weight(a)).epsilon(1e-13));
  for (int k = 0; k <= 8; ++k)
    CHECK(RadialWeightModel::ht_scale(1, 1.0).weight({k}) == doctest::Approx(1.0).epsilon(1e-13));
}

// Pairing the H_t shift against H_(t+s) produces a diagonal kernel whose
// reproducing space has monomial norms equivalent (not equal) to those of
// H_(t+2s).  The ratio depends only on |alpha|, starts at 1, and decreases
// monotonically to Gamma(t+s)^2 / (Gamma(t) Gamma(t+2s)); the observed band
// over |alpha| <= 40 must sit between those two analytic endpoints.
TEST_CASE("ht pairing norms are two-sidedly equivalent to the t+2s scale") {
  for (auto [t, s] : std::vector<std::pair<double, double>>{{1.0, 0.5}, {2.0, 1.0}, {0.5, 0.25}}) {
    RadialWeightModel base = RadialWeightModel::ht_scale(2, t);
    RadialWeightModel middle = RadialWeightModel::ht_scale(2, t + s);
    RadialWeightModel target = RadialWeightModel::ht_scale(2, t + 2 * s);
    auto ratio = [&](const MultiIndex& a) {
      double c = base.weight(a) / (middle.weight(a) * middle.weight(a));
      return 1.0 / (c * target.weight(a));
    };

    double lo = 1e300, hi = -1e300, prev = 2.0;
    for (int k = 0; k <= 40; ++k) {
      double r = ratio({k, 0});
      // |alpha|-dependence only: alpha! cancels between the scales
      CHECK(std::abs(ratio({k / 2, k - k / 2}) - r) < 1e-12 * r);
      CHECK(r <= prev + 1e-12);  // monotone decreasing
      prev = r;
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    double limit = std::exp(2.0 * std::lgamma(t + s) - std::lgamma(t) - std::lgamma(t + 2 * s));
    INFO("t = ", t, ", s = ", s, ": observed ratio band [", lo, ", ", hi, "], limit ", limit);
    CHECK(hi == doctest::Approx(1.0).epsilon(1e-12));        // attained at alpha = 0
    CHECK(lo >= limit - 1e-12);
    CHECK(lo <= limit * 1.05);  // essentially converged by |alpha| = 40
  }
}

TEST_CASE("radial moment tables are diagonal") {
  RadialWeightModel da = RadialWeightModel::drury_arveson(2);
  MomentTable mt = radial_moment_table(da, 4);
  for (const auto& a : mt.basis().list())
    for (const auto& b : mt.basis().list()) {
      if (a == b)
        CHECK(std::abs(mt.value(a, b) - da.weight(a)) < 1e-14);
      else
        CHECK(std::abs(mt.value(a, b)) == 0.0);
    }
}

TEST_CASE("drury-arveson moments telescope") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& a : enumerate_upto(n, 6)) {
      double expect = mi_factorial(a) / mi_factorial({total_degree(a)});
      CHECK(std::abs(da_distribution_moment(n, a, a) - expect) < 1e-12);
      // off-diagonal vanishes
      for (const auto& b : enumerate_upto(n, 3))
        if (b != a) CHECK(da_distribution_moment(n, a, b) == 0.0);
    }
}

TEST_CASE("weighted kernel closed form for the hardy disc") {
  RadialWeightModel disc = RadialWeightModel::hardy_disk(4.0);
  auto g = rng(71);
  for (int s = 0; s < 25; ++s) {
    cplx z = 1.5 * testgen::cgauss(g) / std::sqrt(2.0);
    cplx w = 1.5 * testgen::cgauss(g) / std::sqrt(2.0);
    WeightedKernelValue v = weighted_model_kernel(disc, disc, {z}, {w}, 40);
    cplx expect = 1.0 / (1.0 - z * std::conj(w) / 16.0);
    CHECK(std::abs(v.value - expect) < 1e-12);
    CHECK(v.converged);
    CHECK(v.tail_ratio < 1.0);
  }
  WeightedKernelValue at0 = weighted_model_kernel(disc, disc, {0.0}, {0.0}, 10);
  CHECK(std::abs(at0.value - 1.0) < 1e-15);
}

TEST_CASE("built-in example suites pass") {
  for (const auto& name : example_names()) {
    ExampleResult r = run_example(name);
    for (const auto& c : r.checks) {
      INFO(name, ": ", c.name, " value=", c.value, " bound=", c.bound);
      CHECK(c.pass);
    }
    CHECK(r.pass());
  }
}

TEST_CASE("unknown example is rejected") {
  CHECK_THROWS_AS(run_example("nope"), Error);
}
