#include <catch2/catch_amalgamated.hpp>

#include "qlie/scalar.hpp"

using namespace qlie;

TEST_CASE("rational scalars are canonical and exact") {
  FieldSpec Q = FieldSpec::rationals();
  Scalar a = Scalar::parse("-14/21", Q);
  CHECK(a.str() == "-2/3");
  Scalar b = Scalar::parse("1/6", Q);
  CHECK((a + b).str() == "-1/2");
  CHECK((a * b).str() == "-1/9");
  CHECK((a - a).is_zero());
  CHECK((b / b).is_one());
  CHECK(Scalar::parse("4/2", Q).str() == "2");
  CHECK(Scalar::of_int(-7, Q).str() == "-7");
  CHECK(a.inverse().str() == "-3/2");
  CHECK(Scalar::parse("2/3", Q).pow(3).str() == "8/27");
}

TEST_CASE("prime field residues") {
  FieldSpec F5 = FieldSpec::prime(5);
  CHECK(Scalar::of_int(-2, F5).str() == "3");
  CHECK(Scalar::parse("7", F5).str() == "2");
  CHECK(Scalar::parse("1/2", F5).str() == "3");  // 2 * 3 = 6 = 1
  Scalar two = Scalar::of_int(2, F5);
  CHECK((two * two.inverse()).is_one());
  CHECK(two.pow(5) == two);  // Fermat
  CHECK((-Scalar::of_int(0, F5)).is_zero());
}

TEST_CASE("scalar input errors") {
  FieldSpec Q = FieldSpec::rationals();
  FieldSpec F5 = FieldSpec::prime(5);
  CHECK_THROWS_AS(Scalar::parse("1/0", Q), input_error);
  CHECK_THROWS_AS(Scalar::parse("abc", Q), input_error);
  CHECK_THROWS_AS(Scalar::parse("", Q), input_error);
  CHECK_THROWS_AS(Scalar::parse("1/5", F5), input_error);  // denominator is 0 mod 5
  CHECK_THROWS_AS(Scalar::of_int(0, Q).inverse(), input_error);
  CHECK_THROWS_AS(FieldSpec::prime(4), input_error);
  CHECK_THROWS_AS(FieldSpec::prime(1), input_error);
  CHECK_NOTHROW(FieldSpec::prime(2147483647));  // 2^31 - 1 is prime
  CHECK_THROWS_AS(FieldSpec::prime(1ull << 31), input_error);
}

TEST_CASE("field mixing is a programming error") {
  Scalar q = Scalar::of_int(1, FieldSpec::rationals());
  Scalar r = Scalar::of_int(1, FieldSpec::prime(3));
  CHECK_THROWS_AS(q + r, std::logic_error);
}
