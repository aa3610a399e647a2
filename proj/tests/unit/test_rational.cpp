#include "digit_dirichlet/rational.hpp"

#include <cstdint>

#include "doctest.h"

using digit_dirichlet::BigInt;
using digit_dirichlet::Rational;

TEST_SUITE_BEGIN("rational");

TEST_CASE("bigint arithmetic round trips") {
  BigInt a(123456789012345678LL);
  BigInt b(-987654321LL);
  CHECK((a + b).to_string() == "123456788024691357");
  CHECK((a * b).to_string() == "-121932631124828531222374638");
  CHECK((a - a).is_zero());
  CHECK((-b).to_string() == "987654321");
}

TEST_CASE("bigint divmod truncates toward zero") {
  auto [q, r] = BigInt::divmod(BigInt(17), BigInt(5));
  CHECK(q.to_string() == "3");
  CHECK(r.to_string() == "2");
  auto [qn, rn] = BigInt::divmod(BigInt(-17), BigInt(5));
  CHECK(qn.to_string() == "-3");
  CHECK(rn.to_string() == "-2");
}

TEST_CASE("bigint factorial matches a known value") {
  BigInt f(1);
  for (int i = 2; i <= 30; ++i) f = f * BigInt(i);
  CHECK(f.to_string() == "265252859812191058636308480000000");
  CHECK(f.to_double() == doctest::Approx(2.652528598121911e32).epsilon(1e-12));
}

TEST_CASE("bigint gcd") {
  CHECK(BigInt::gcd(BigInt(462), BigInt(1071)).to_string() == "21");
  CHECK(BigInt::gcd(BigInt(-6), BigInt(4)).to_string() == "2");
}

TEST_CASE("rational reduces and computes") {
  Rational half(2, 4);
  CHECK(half.to_string() == "1/2");
  Rational sum = Rational(1, 6) + Rational(1, 3);
  CHECK(sum.to_string() == "1/2");
  Rational prod = Rational(-3, 4) * Rational(2, 9);
  CHECK(prod.to_string() == "-1/6");
  CHECK((Rational(1, 3) / Rational(1, 6)).to_string() == "2/1");
  CHECK(Rational(7, -14).to_string() == "-1/2");
  CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0));
}

TEST_SUITE_END();
