#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corelab/exact.hpp"

using namespace corelab;

TEST_CASE("rational rendering is canonical") {
  CHECK(to_string(rational(4, 2)) == "2");
  CHECK(to_string(rational(6, -4)) == "-3/2");
  CHECK(to_string(rational(0, 7)) == "0");
  CHECK(to_string(rational(217728, 60480)) == "18/5");
  CHECK(parse_rational("-10/4") == rational(-5, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("integer helpers") {
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(5, 7) == 0);
  CHECK(factorial(10) == 3628800);
  CHECK(power(BigInt(3), 4) == 81);
  CHECK(power(rational(-1, 2), 3) == rational(-1, 8));
  for (int v = 0; v < 200; ++v) {
    BigInt f = isqrt_floor(BigInt(v)), c = isqrt_ceil(BigInt(v));
    CHECK(f * f <= v);
    CHECK((f + 1) * (f + 1) > v);
    CHECK(c * c >= v);
    CHECK((c == 0 || (c - 1) * (c - 1) < v));
  }
  CHECK(floor_div(BigInt(-7), BigInt(2)) == -4);
  CHECK(floor_of(rational(-7, 2)) == -4);
  CHECK(ceil_of(rational(-7, 2)) == -3);
  CHECK(ceil_of(rational(7, 2)) == 4);
  CHECK(gcd64(12, 18) == 6);
  CHECK(lcm64(4, 6) == 12);
  __int128 big = static_cast<__int128>(1) << 100;
  CHECK(to_bigint(big) == power(BigInt(2), 100));
  CHECK(to_bigint(-big) == -power(BigInt(2), 100));
  CHECK(to_int64(BigInt(-5)) == -5);
  CHECK_THROWS(to_int64(power(BigInt(2), 70)));
  CHECK_THROWS(to_int64(rational(1, 2)));
}

TEST_CASE("exact linear algebra") {
  MatrixQ m(3, 3);
  m << 2, -1, 0, -1, 2, -1, 0, -1, 2;
  CHECK(determinant(m) == 4);
  MatrixQ inv = inverse(m);
  CHECK(inv * m == MatrixQ::Identity(3, 3));
  CHECK(inv(0, 0) == rational(3, 4));
  CHECK(inv(0, 2) == rational(1, 4));
  MatrixQ sing(2, 2);
  sing << 1, 2, 2, 4;
  CHECK(determinant(sing) == 0);
  CHECK_THROWS(inverse(sing));
  CHECK(to_integer(MatrixQ(m * Rational(2))) == (MatrixZ(3, 3) << 4, -2, 0, -2, 4, -2, 0, -2, 4).finished());
  CHECK_THROWS(to_integer(inv));
  CHECK(is_integral(to_rational_vector(VectorZ::Ones(3))));
  CHECK_FALSE(is_integral(VectorQ(inv.col(0))));
}

TEST_CASE("lexicographic order") {
  VectorZ a(2), b(2);
  a << 0, 5;
  b << 1, -3;
  CHECK(lex_less(a, b));
  CHECK_FALSE(lex_less(b, a));
  CHECK_FALSE(lex_less(a, a));
  CHECK(lex_less(to_rational_vector(a), to_rational_vector(b)));
}
