#include <doctest.h>

#include <cmath>

#include "cymo/multiindex.hpp"

using namespace cymo;

TEST_CASE("graded lex enumeration") {
  auto one = enumerate_upto(1, 2);
  REQUIRE(one.size() == 3);
  CHECK(one[0] == MultiIndex{0});
  CHECK(one[1] == MultiIndex{1});
  CHECK(one[2] == MultiIndex{2});

  auto two = enumerate_upto(2, 1);
  REQUIRE(two.size() == 3);
  CHECK(two[0] == (MultiIndex{0, 0}));
  CHECK(two[1] == (MultiIndex{1, 0}));  // (1,0) before (0,1) within a degree
  CHECK(two[2] == (MultiIndex{0, 1}));

  CHECK(enumerate_upto(3, 2).size() == 10);
}

TEST_CASE("enumeration for degree d is a prefix of degree d+1") {
  for (int n = 1; n <= 3; ++n)
    for (int d = 0; d <= 5; ++d) {
      auto small = enumerate_upto(n, d);
      auto big = enumerate_upto(n, d + 1);
      REQUIRE(big.size() >= small.size());
      for (std::size_t i = 0; i < small.size(); ++i) CHECK(big[i] == small[i]);
    }
}

TEST_CASE("basis_size counts the enumeration") {
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 6; ++d)
      CHECK(basis_size(n, d) == static_cast<long>(enumerate_upto(n, d).size()));
  CHECK(basis_size(3, 2) == 10);  // C(5,2)
  CHECK(basis_size(2, 3) == 10);  // C(5,3)
}

TEST_CASE("enumeration is strictly increasing in graded lex order") {
  auto list = enumerate_upto(3, 4);
  for (std::size_t i = 0; i + 1 < list.size(); ++i) {
    CHECK(graded_lex_less(list[i], list[i + 1]));
    CHECK(!graded_lex_less(list[i + 1], list[i]));
  }
}

TEST_CASE("factorial") {
  CHECK(mi_factorial({0, 0, 0}) == 1.0);
  CHECK(mi_factorial({2, 1}) == 2.0);
  CHECK(mi_factorial({3, 3}) == 36.0);
  // beyond 20! the value leaves the 64-bit integer range but stays exact enough
  CHECK(mi_factorial({25}) == doctest::Approx(1.5511210043330986e25).epsilon(1e-12));
}

TEST_CASE("binomial") {
  CHECK(mi_binomial({2, 2}, {1, 1}) == 4.0);
  CHECK(mi_binomial({1, 0}, {0, 1}) == 0.0);
  CHECK(mi_binomial({4}, {2}) == 6.0);
}

TEST_CASE("binomial row sums are products of powers of two") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& alpha : enumerate_upto(n, 6)) {
      double sum = 0.0;
      for (const auto& gamma : enumerate_upto(n, total_degree(alpha)))
        if (mi_leq(gamma, alpha)) sum += mi_binomial(alpha, gamma);
      double expect = 1.0;
      for (int ai : alpha) expect *= std::pow(2.0, ai);
      CHECK(sum == doctest::Approx(expect).epsilon(1e-13));
    }
}

TEST_CASE("graded basis lookup") {
  GradedBasis b(2, 3);
  REQUIRE(b.size() == 10);
  for (int i = 0; i < b.size(); ++i) CHECK(b.find(b.at(i)) == i);
  CHECK(b.find({4, 0}) == -1);
  CHECK(b.find({1, 3}) == -1);
}

TEST_CASE("index arithmetic") {
  CHECK(mi_add({1, 2}, {3, 0}) == (MultiIndex{4, 2}));
  CHECK(mi_sub({4, 2}, {1, 2}) == (MultiIndex{3, 0}));
  CHECK(mi_leq({1, 1}, {2, 1}));
  CHECK(!mi_leq({3, 0}, {2, 1}));
  CHECK(total_degree({2, 0, 5}) == 7);
}
