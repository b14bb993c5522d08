#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tamcox/series.hpp"

using namespace tamcox;

namespace {

// Binomial-series oracle for (1 + u)^{1/2}: coefficient of u^n is
// (1/2 choose n) = prod_{i<n} (1/2 - i) / n!.
Rat half_binomial(long n) {
  Rat c = 1;
  for (long i = 0; i < n; ++i) c *= (Rat(1, 2) - i) / (i + 1);
  return c;
}

}  // namespace

TEST_CASE("series ring basics") {
  const long N = 12;
  const RatSeries one = RatSeries::one(N);
  const RatSeries x = RatSeries::x(N);
  CHECK((one - x) * (one - x).inverse() == one);
  CHECK((one + x) - x == one);
  CHECK_THROWS_AS(RatSeries::one(5) + RatSeries::one(6), TruncationMismatch);
  CHECK_THROWS_AS(x.inverse(), BadConstantTerm);
  CHECK_THROWS_AS(x.sqrt(), BadConstantTerm);
  CHECK_THROWS_AS(x.log(), BadConstantTerm);
  CHECK_THROWS_AS(one.exp(), BadConstantTerm);
}

TEST_CASE("sqrt of 1-4x against the binomial oracle") {
  const long N = 20;
  const RatSeries s = sqrt_one_minus_4x(N);
  CHECK(s.coeff(0) == 1);
  CHECK(s.coeff(1) == -2);
  CHECK(s.coeff(2) == -2);
  CHECK(s.coeff(3) == -4);
  CHECK(s.coeff(4) == -10);
  for (long n = 0; n <= N; ++n) {
    Rat expect = half_binomial(n);
    for (long i = 0; i < n; ++i) expect *= -4;
    CHECK(s.coeff(n) == expect);
  }
}

TEST_CASE("log of the geometric series") {
  const long N = 10;
  const RatSeries lg = (RatSeries::one(N) - RatSeries::x(N)).inverse().log();
  for (long n = 1; n <= N; ++n) CHECK(lg.coeff(n) == Rat(1, n));
  CHECK(lg.coeff(0) == 0);
}

TEST_CASE("sqrt, log and exp round trips on random series") {
  std::mt19937 rng(987654);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  const long N = 14;
  for (int trial = 0; trial < 10; ++trial) {
    RatSeries f(N);
    f.set_coeff(0, 1);
    for (long i = 1; i <= N; ++i) f.set_coeff(i, Rat(num(rng), den(rng)));
    const RatSeries s = f.sqrt();
    CHECK(s * s == f);
    CHECK(f.log().exp() == f);
    CHECK((f * f.inverse()) == RatSeries::one(N));
    CHECK(f.pow_int(Int(3)) == f * f * f);
    CHECK(f.pow_int(Int(-2)) * f * f == RatSeries::one(N));
  }
}

TEST_CASE("appendix Taylor identities") {
  for (int id = 1; id <= 6; ++id) {
    INFO("identity A" << id);
    CHECK(taylor_check(id, 30));
  }
  CHECK(taylor_check(1, 5));
  CHECK_THROWS_AS(taylor_check(7, 5), Error);

  SECTION("spot coefficients") {
    // A3 at x^1: (1/2) C(2,1) = 1.
    const RatSeries rhs =
        -(RatSeries::one(4) + sqrt_one_minus_4x(4)).scale(Rat(1, 2)).log();
    CHECK(rhs.coeff(1) == 1);
    // A6 at x^1: lambda(1)/1 = 1.
    const RatSeries rhs6 =
        -(RatSeries::one(4) - RatSeries::x(4).scale(2) + sqrt_one_plus_4x2(4))
             .scale(Rat(1, 2))
             .log();
    CHECK(rhs6.coeff(1) == 1);
  }
}

TEST_CASE("product form expands infinite products") {
  const long N = 30;

  SECTION("Catalan generating function from a-exponents") {
    const RatSeries prod = product_form([](long d) { return a_val(d); }, N);
    CHECK(prod == fa_closed(N));
    CHECK(prod.coeff(0) == 1);
    CHECK(prod.coeff(1) == 1);
    CHECK(prod.coeff(2) == 2);
    CHECK(prod.coeff(3) == 5);
    CHECK(prod.coeff(4) == 14);
    CHECK(prod.coeff(5) == 42);
  }

  SECTION("b-exponents match the odd closed form") {
    const RatSeries prod = product_form([](long d) { return b_val(d); }, N);
    CHECK(prod == fb_closed(N));
  }

  SECTION("zero exponents give 1") {
    CHECK(product_form(std::map<long, Int>{}, 8) == RatSeries::one(8));
  }

  SECTION("positive and negative exponents agree with direct powers") {
    // (1-x)^{-2} (1-x^3)^{1}: compare against explicit series algebra.
    const std::map<long, Int> e{{1, 2}, {3, -1}};
    RatSeries direct = RatSeries::one(10) - RatSeries::x(10);
    direct = direct.pow_int(Int(-2));
    RatSeries cube = RatSeries::one(10);
    cube.set_coeff(3, -1);
    direct = direct * cube;
    CHECK(product_form(e, 10) == direct);
  }
}

TEST_CASE("fa fb relation") {
  CHECK(verify_fa_fb_relation(10));
  CHECK(verify_fa_fb_relation(30));
  CHECK(verify_fa_fb_relation(1));

  SECTION("coefficient of z^2 on both sides is -1") {
    const RatSeries fa = fa_closed(10);
    const RatSeries lhs = fa.substitute_neg_square(10);
    CHECK(lhs.coeff(2) == -1);
    const RatSeries fb = fb_closed(10);
    CHECK((fb * fb.substitute_neg()).coeff(2) == -1);
  }
}

TEST_CASE("series utilities") {
  RatSeries f(6);
  f.set_coeff(2, 3);
  f.set_coeff(4, -1);
  CHECK(f.shift_down(2).coeff(0) == 3);
  CHECK(f.shift_down(2).order() == 4);
  CHECK_THROWS_AS(RatSeries::one(6).shift_down(1), BadConstantTerm);
  CHECK(f.substitute_neg() == f);  // even series
  RatSeries g(6);
  g.set_coeff(1, 1);
  CHECK(g.substitute_neg().coeff(1) == -1);
  CHECK(RatSeries::one(8).truncate(3) == RatSeries::one(3));
  CHECK_THROWS_AS(RatSeries::one(3).truncate(5), TruncationMismatch);
}
