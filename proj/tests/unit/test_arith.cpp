#include <catch_amalgamated.hpp>

#include <climits>
#include <numeric>
#include <string>

#include "bisetlab/cyclotomic.hpp"
#include "bisetlab/errors.hpp"
#include "bisetlab/linalg.hpp"

using namespace bisetlab;

TEST_CASE("rationals stay reduced") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(1, -2).small_den() == 2);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 2) == 1);
  CHECK(Rational(1, 2) / Rational(1, 4) == 2);
  CHECK(Rational(-3, 4).inverse() == Rational(-4, 3));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("7") == 7);
  CHECK(Rational(-3, 2).to_string() == "-3/2");
  CHECK_THROWS_AS(Rational(1, 0), InvalidInput);
  CHECK_THROWS_AS(Rational(0).inverse(), InvalidInput);
  CHECK_THROWS_AS(Rational::parse("1/x"), InvalidInput);
}

TEST_CASE("rationals promote to GMP and back") {
  const Rational big(LLONG_MAX / 2);
  const Rational sq = big * big;
  CHECK_FALSE(sq.is_small());
  const mpz_class half(std::to_string(LLONG_MAX / 2));
  CHECK(sq.to_mpq() == mpq_class(half * half));
  const Rational back = sq / big;
  CHECK(back.is_small());
  CHECK(back == big);
  CHECK(sq - sq == 0);
  CHECK((sq - sq).is_small());
  Rational acc = 0;
  for (int i = 1; i <= 50; ++i) acc += Rational(1, i);
  CHECK_FALSE(acc.is_small());
  CHECK(acc.numerator() == mpz_class("13943237577224054960759"));
  CHECK(acc.denominator() == mpz_class("3099044504245996706400"));
  for (int i = 1; i <= 50; ++i) acc -= Rational(1, i);
  CHECK(acc.is_zero());
}

TEST_CASE("cyclotomic identities") {
  const Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
  CHECK((1 + z3 + z3 * z3).is_zero());
  const Cyclotomic z4 = Cyclotomic::root_of_unity(4, 1);
  CHECK(z4 * z4 == -1);
  CHECK(z3 * z3 * z3 == 1);
  CHECK(z4.conjugate() == Cyclotomic::root_of_unity(4, 3));
  CHECK(z3 + z3.conjugate() == -1);
  CHECK((z4 + z4.conjugate()).is_rational());
  CHECK_FALSE(z3.is_rational());
  CHECK_THROWS_AS(z3.to_rational(), NotRational);

  // mixed orders lift to the lcm
  const Cyclotomic z12 = Cyclotomic::root_of_unity(12, 1);
  CHECK(z12 * z12 * z12 * z12 == z3);
  CHECK(z12 * z12 * z12 == z4);
  CHECK((z3 * z4).order() == 12);
  CHECK((z3 - z3).is_zero());
  CHECK(Cyclotomic::root_of_unity(6, 3) == -1);

  // sum of all primitive n-th roots is mu(n)
  const int mu[] = {0, 1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
  for (int n = 1; n <= 12; ++n) {
    Cyclotomic s = 0;
    for (int k = 0; k < n; ++k)
      if (std::gcd(k, n) == 1) s += Cyclotomic::root_of_unity(n, k);
    CHECK(s == mu[n]);
  }
  CHECK(euler_phi(12) == 4);
  CHECK(cyclotomic_field(12).degree == 4);
}

TEST_CASE("galois action") {
  const Cyclotomic z5 = Cyclotomic::root_of_unity(5, 1);
  CHECK(z5.galois(2) == z5 * z5);
  CHECK(z5.galois(4) == z5.conjugate());
  CHECK_THROWS_AS(z5.galois(5), NotAUnit);
  const Cyclotomic x = z5 + 3 * z5 * z5 - Rational(1, 2);
  Cyclotomic trace = 0;
  for (int j = 1; j < 5; ++j) trace += x.galois(j);
  CHECK(trace.is_rational());
  CHECK(trace.to_rational() == Rational(-6));  // -1 - 3 - 2
}

TEST_CASE("matrix rank, determinant, minors") {
  const Matrix a = Matrix::from_rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, 3);
  CHECK(determinant(a) == 4);
  CHECK(rank(a) == 3);
  CHECK(leading_principal_minors(a) == RVec{2, 3, 4});
  CHECK(positive_definite(a));
  CHECK_FALSE(positive_definite(a.scaled(-1)));

  const Matrix s = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  CHECK(rank(s) == 2);
  CHECK(determinant(s) == 0);
  const auto ns = nullspace(s);
  REQUIRE(ns.size() == 1);
  const Matrix v = Matrix::from_rows(ns, 3).transpose();
  CHECK((s * v).is_zero());

  // a zero leading minor stops the read-off even if the matrix is invertible
  const Matrix swap = Matrix::from_rows({{0, 1}, {1, 0}}, 2);
  CHECK(determinant(swap) == -1);
  CHECK(leading_principal_minors(swap).empty());
  CHECK_FALSE(positive_definite(swap));

  CHECK(Matrix::identity(3).trace() == 3);
  CHECK(a.is_symmetric());
  CHECK(a.all_integer());
  CHECK_FALSE(a.scaled(Rational(1, 2)).all_integer());
}

TEST_CASE("span builder") {
  SpanBuilder sb(3);
  CHECK(sb.add({1, 1, 0}));
  CHECK(sb.add({0, 1, 1}));
  CHECK_FALSE(sb.add({1, 2, 1}));
  CHECK(sb.contains({2, 0, -2}));
  CHECK_FALSE(sb.contains({0, 0, 1}));
  CHECK(sb.dim() == 2);
  CHECK(sb.add({0, 0, 1}));
  CHECK(sb.dim() == 3);
}
