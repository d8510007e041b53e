#include <doctest.h>

#include <complex>

#include "cymo/polynomial.hpp"

using namespace cymo;
using namespace std::complex_literals;

static Polynomial z1_plus_one() {
  Polynomial p = Polynomial::constant(1, 1.0);
  p.add_term({1}, 1.0);
  return p;
}

TEST_CASE("arithmetic and evaluation") {
  Polynomial p = z1_plus_one();
  Polynomial sq = p * p;  // 1 + 2z + z^2
  CHECK(sq.coeff({0}) == 1.0);
  CHECK(sq.coeff({1}) == 2.0);
  CHECK(sq.coeff({2}) == 1.0);
  CHECK(sq.degree() == 2);
  CHECK(std::abs(sq.eval({2.0 + 1.0i}) - (3.0 + 1.0i) * (3.0 + 1.0i)) < 1e-14);

  Polynomial diff = sq - p * p;
  CHECK(diff.pruned(0.0).is_zero());
}

TEST_CASE("fock inner product") {
  Polynomial z2 = Polynomial::monomial({2});
  CHECK(fock_inner(z2, z2) == 2.0);  // ||z^alpha||^2 = alpha!

  Polynomial z1z2 = Polynomial::monomial({1, 1});
  Polynomial z1sq = Polynomial::monomial({2, 0});
  CHECK(fock_inner(z1z2, z1sq) == 0.0);

  // q = z1^2+z2^2+z3^2 - z1z2 - z2z3 - z1z3 has Fock norm^2 = 3*2 + 3*1
  Polynomial q(3);
  q.add_term({2, 0, 0}, 1.0);
  q.add_term({0, 2, 0}, 1.0);
  q.add_term({0, 0, 2}, 1.0);
  q.add_term({1, 1, 0}, -1.0);
  q.add_term({0, 1, 1}, -1.0);
  q.add_term({1, 0, 1}, -1.0);
  CHECK(fock_inner(q, q) == 9.0);

  // conjugate-linear in the second slot
  Polynomial a = Polynomial::constant(1, 1.0i);
  Polynomial b = Polynomial::constant(1, 1.0);
  CHECK(fock_inner(a, b) == 1.0i);
  CHECK(fock_inner(b, a) == -1.0i);
}

TEST_CASE("derivatives") {
  // d/dz1 (z1^2 z2) = 2 z1 z2
  Polynomial p = Polynomial::monomial({2, 1});
  Polynomial d = p.derivative(0);
  CHECK(d.coeff({1, 1}) == 2.0);
  CHECK(d.derivative(1).coeff({1, 0}) == 2.0);
  CHECK(Polynomial::constant(2, 5.0).derivative(0).is_zero());
}

TEST_CASE("apply as differential operator") {
  // (d^2/dz^2) z^3 = 6z
  Polynomial q = Polynomial::monomial({2});
  Polynomial p = Polynomial::monomial({3});
  Polynomial r = q.apply_as_diff_op(p);
  CHECK(r.coeff({1}) == 6.0);
  CHECK(r.degree() == 1);

  // constants act by scaling
  Polynomial c = Polynomial::constant(1, 3.0);
  CHECK(c.apply_as_diff_op(p).coeff({3}) == 3.0);
}

TEST_CASE("coefficient conjugate") {
  Polynomial p(1);
  p.add_term({1}, 2.0 + 3.0i);
  Polynomial pc = p.coeff_conjugate();
  CHECK(pc.coeff({1}) == 2.0 - 3.0i);
  // eval of the conjugate at conj(z) is conj of eval
  cplx z = 0.4 - 0.7i;
  CHECK(std::abs(pc.eval({std::conj(z)}) - std::conj(p.eval({z}))) < 1e-15);
}
