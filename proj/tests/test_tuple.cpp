#include <doctest.h>

#include <cmath>
#include <complex>

#include "cymo/error.hpp"
#include "cymo/models.hpp"
#include "cymo/tuple.hpp"
#include "test_common.hpp"

using namespace cymo;
using namespace std::complex_literals;
using testgen::rng;

TEST_CASE("validate jordan block") {
  CyclicTuple t = jordan_block_tuple(2);
  CHECK(t.T[0](1, 0) == 1.0);  // column action: T e_1 = e_2
  auto rep = validate(t);
  CHECK(rep.is_commuting);
  CHECK(rep.gram_ok);
  CHECK(rep.krylov_rank == 2);
  CHECK(rep.is_cyclic);
}

TEST_CASE("validate detects non-cyclic vectors") {
  Matrix T = Matrix::Identity(2, 2);
  Vector h(2);
  h << 1, 0;
  auto rep = validate(CyclicTuple::make({T}, h));
  CHECK(rep.krylov_rank == 1);
  CHECK(!rep.is_cyclic);

  auto scalar = validate(zero_tuple(1));
  CHECK(scalar.is_cyclic);
  CHECK(scalar.krylov_rank == 1);
}

TEST_CASE("validate flags bad gram and zero h") {
  Matrix T = Matrix::Zero(2, 2);
  Vector h(2);
  h << 1, 0;
  Matrix G(2, 2);
  G << 1, 1, 0, 1;  // not Hermitian
  CyclicTuple bad = CyclicTuple::make_weighted({T}, h, G);
  CHECK(!validate(bad).gram_ok);
  CHECK_THROWS_AS(moments(bad, 2), Error);  // computations refuse it

  CyclicTuple zh = CyclicTuple::make({T}, Vector::Zero(2));
  CHECK(!validate(zh).is_cyclic);
  CHECK(validate(zh).krylov_rank == 0);
}

TEST_CASE("moments of the jordan block are kronecker deltas") {
  MomentTable mt = moments(jordan_block_tuple(2), 4);
  for (int k = 0; k <= 4; ++k)
    for (int l = 0; l <= 4; ++l) {
      double expect = (k == l && k <= 1) ? 1.0 : 0.0;
      CHECK(std::abs(mt.value({k}, {l}) - expect) < 1e-15);
    }
}

TEST_CASE("moments of the zero tuple") {
  MomentTable mt = moments(zero_tuple(2), 3);
  CHECK(mt.value({0, 0}, {0, 0}) == 1.0);
  CHECK(std::abs(mt.value({1, 0}, {1, 0})) == 0.0);
  CHECK(std::abs(mt.value({0, 0}, {0, 1})) == 0.0);
}

TEST_CASE("moments of an atomic tuple match the measure moments") {
  auto g = rng(11);
  auto mu = testgen::random_measure(g, 2, 3);
  CyclicTuple t = atomic_tuple(mu);
  MomentTable mt = moments(t, 3);
  for (const auto& a : enumerate_upto(2, 3))
    for (const auto& b : enumerate_upto(2, 3))
      CHECK(std::abs(mt.value(a, b) - atomic_moment(mu, a, b)) < 1e-12);
}

TEST_CASE("moment tables are hermitian and positive semidefinite") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto g = rng(seed);
    CyclicTuple t = testgen::random_commuting_tuple(g, 4, 2);
    MomentTable mt = moments(t, 5);
    CHECK(mt.herm_defect() < 1e-12);
    CHECK(mt.min_eigenvalue() > -1e-10 * mt.table().real().trace());
  }
}

TEST_CASE("moments are unitarily invariant") {
  auto g = rng(7);
  CyclicTuple t = testgen::random_commuting_tuple(g, 3, 2);
  Matrix U = testgen::random_unitary(g, 3);
  std::vector<Matrix> TU;
  for (const auto& Ti : t.T) TU.push_back(U * Ti * U.adjoint());
  CyclicTuple tu = CyclicTuple::make(std::move(TU), U * t.h);
  MomentTable a = moments(t, 4), b = moments(tu, 4);
  CHECK((a.table() - b.table()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("moments reject non-commuting input") {
  Matrix A = Matrix::Zero(2, 2), B = Matrix::Zero(2, 2);
  A(0, 1) = 1.0;
  B(1, 0) = 1.0;
  Vector h(2);
  h << 1, 1;
  CyclicTuple t = CyclicTuple::make({A, B}, h);
  try {
    moments(t, 2);
    FAIL("expected a NonCommuting error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonCommuting);
  }
}

TEST_CASE("translate_moments matches the shifted tuple") {
  auto g = rng(21);
  CyclicTuple t = testgen::random_commuting_tuple(g, 3, 2);
  std::vector<cplx> lambda = {0.8 - 1.1i, -0.5 + 0.3i};
  MomentTable shifted_from_table = translate_moments(moments(t, 4), lambda);

  std::vector<Matrix> TS = t.T;
  for (int i = 0; i < t.n; ++i) TS[i] += lambda[i] * Matrix::Identity(t.m, t.m);
  MomentTable direct = moments(CyclicTuple::make(std::move(TS), t.h), 4);
  CHECK((shifted_from_table.table() - direct.table()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("translate_moments special cases") {
  MomentTable mt = moments(jordan_block_tuple(2), 3);
  MomentTable id = translate_moments(mt, {0.0});
  CHECK((id.table() - mt.table()).cwiseAbs().maxCoeff() < 1e-15);

  cplx lam = 0.7 + 0.2i;
  MomentTable sh = translate_moments(mt, {lam});
  CHECK(std::abs(sh.value({1}, {1}) - (1.0 + std::norm(lam))) < 1e-14);

  // scalar [0] shifted by a has moments a^alpha conj(a)^beta
  MomentTable pt = translate_moments(moments(zero_tuple(1), 3), {lam});
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      CHECK(std::abs(pt.value({a}, {b}) -
                     std::pow(lam, a) * std::pow(std::conj(lam), b)) < 1e-14);
}

TEST_CASE("twist_by_polynomial matches replacing h by p(T)h") {
  auto g = rng(31);
  CyclicTuple t = testgen::random_commuting_tuple(g, 3, 2);
  Polynomial p(2);
  p.add_term({0, 0}, 0.5);
  p.add_term({1, 0}, 1.0i);
  p.add_term({0, 1}, -0.7);

  MomentTable twisted = twist_by_polynomial(moments(t, 5), p);
  CHECK(twisted.degree() == 4);

  CyclicTuple th = CyclicTuple::make(t.T, t.apply_poly(p));
  MomentTable direct = moments(th, 4);
  CHECK((twisted.table() - direct.table()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("twist special cases") {
  MomentTable mt = moments(jordan_block_tuple(2), 3);
  MomentTable one = twist_by_polynomial(mt, Polynomial::constant(1, 1.0));
  CHECK((one.table() - mt.table()).cwiseAbs().maxCoeff() < 1e-15);

  MomentTable four = twist_by_polynomial(mt, Polynomial::constant(1, 2.0));
  CHECK((four.table() - 4.0 * mt.table()).cwiseAbs().maxCoeff() < 1e-14);

  // p = z sends the jordan block vector to e_2, whose only moment is m(0,0) = 1
  MomentTable z = twist_by_polynomial(mt, Polynomial::monomial({1}));
  CHECK(z.degree() == 2);
  CHECK(std::abs(z.value({0}, {0}) - 1.0) < 1e-15);
  CHECK(std::abs(z.value({1}, {1})) < 1e-15);
  CHECK(std::abs(z.value({1}, {0})) < 1e-15);

  // output degree would be negative
  CHECK_THROWS_AS(twist_by_polynomial(moments(jordan_block_tuple(2), 1),
                                      Polynomial::monomial({2})),
                  Error);
}

TEST_CASE("weighted operator norm") {
  Matrix A = Matrix::Zero(2, 2);
  A(1, 0) = 1.0;
  Vector h(2);
  h << 1, 0;
  Matrix G = Matrix::Zero(2, 2);
  G(0, 0) = 4.0;
  G(1, 1) = 1.0;
  CyclicTuple t = CyclicTuple::make_weighted({A}, h, G);
  // G^(1/2) A G^(-1/2) has single entry 1/2
  CHECK(t.op_norm(0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(t.op_norm_of(Matrix::Identity(2, 2)) == doctest::Approx(1.0).epsilon(1e-12));

  CyclicTuple plain = jordan_block_tuple(3);
  CHECK(plain.op_norm(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(plain.op_norm_sum_sq() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("gram adjoint") {
  auto g = rng(5);
  Matrix A = testgen::gaussian_matrix(g, 3);
  Matrix W = testgen::gaussian_matrix(g, 3);
  Matrix G = W.adjoint() * W + Matrix::Identity(3, 3);
  Vector h = testgen::gaussian_unit_vector(g, 3);
  CyclicTuple t = CyclicTuple::make_weighted({Matrix::Zero(3, 3)}, h, G);
  Matrix Ad = t.adjoint(A);
  Vector u = testgen::gaussian_unit_vector(g, 3);
  Vector v = testgen::gaussian_unit_vector(g, 3);
  // <A u, v> = <u, A^dag v>
  CHECK(std::abs(t.inner(A * u, v) - t.inner(u, Ad * v)) < 1e-12);
}

TEST_CASE("polynomial calculus on tuples") {
  CyclicTuple t = jordan_block_tuple(3);
  Polynomial p = Polynomial::monomial({2});
  Matrix P = t.poly_matrix(p);
  CHECK((P - t.T[0] * t.T[0]).cwiseAbs().maxCoeff() == 0.0);
  CHECK((t.apply_poly(p) - P * t.h).cwiseAbs().maxCoeff() == 0.0);
  CHECK((t.power_apply({2}) - P * t.h).cwiseAbs().maxCoeff() == 0.0);
}
