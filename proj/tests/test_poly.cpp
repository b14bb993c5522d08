#include <catch2/catch_amalgamated.hpp>

#include "tamcox/poly.hpp"

using namespace tamcox;

namespace {

IntPoly from_coeffs(std::vector<long> cs) {
  std::vector<Int> v(cs.begin(), cs.end());
  return IntPoly(std::move(v));
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  const IntPoly p = from_coeffs({-1, 0, 0, 1});  // t^3 - 1
  CHECK(p == IntPoly::t_power_minus_one(3));
  CHECK(p.degree() == 3);
  CHECK((p * IntPoly::one()) == p);
  CHECK((p - p).is_zero());
  CHECK(from_coeffs({1, 2, 1}) == from_coeffs({1, 1}) * from_coeffs({1, 1}));
  CHECK(from_coeffs({1, 1}).pow(2) == from_coeffs({1, 2, 1}));
  CHECK(IntPoly().degree() == -1);
}

TEST_CASE("exact division") {
  const IntPoly p = IntPoly::t_power_minus_one(3);
  CHECK(p.divide_exact(IntPoly::t_power_minus_one(1)) == from_coeffs({1, 1, 1}));
  CHECK_THROWS_AS(p.divide_exact(IntPoly::t_power_minus_one(2)), NotAPolynomial);
  // Random product round trip.
  const IntPoly a = from_coeffs({3, -2, 0, 7, 1});
  const IntPoly b = from_coeffs({-4, 5, 1});
  CHECK((a * b).divide_exact(b) == a);
}

TEST_CASE("polynomial evaluation") {
  const IntPoly p = from_coeffs({1, 1, 1});
  CHECK(p.eval_int(Int(2)) == 7);
  CHECK(p.eval(Rat(1, 2)) == Rat(7, 4));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == from_coeffs({-1, 1}));
  CHECK(cyclotomic(2) == from_coeffs({1, 1}));
  CHECK(cyclotomic(3) == from_coeffs({1, 1, 1}));
  CHECK(cyclotomic(4) == from_coeffs({1, 0, 1}));
  CHECK(cyclotomic(6) == from_coeffs({1, -1, 1}));
  CHECK(cyclotomic(12) == from_coeffs({1, 0, -1, 0, 1}));

  SECTION("product over divisors rebuilds t^n - 1") {
    for (long n = 1; n <= 24; ++n) {
      IntPoly prod = IntPoly::one();
      for (long d : divisors(n)) prod = prod * cyclotomic(d);
      CHECK(prod == IntPoly::t_power_minus_one(n));
    }
  }
}

TEST_CASE("factored form expansion") {
  FactoredForm f(std::map<long, Int>{{3, 1}, {1, -1}});
  CHECK(f.expand() == from_coeffs({1, 1, 1}));
  CHECK(f.degree() == 2);

  const FactoredForm theorem4(std::map<long, Int>{{4, 2}, {1, -1}, {2, -1}});
  // (t+1)(t^2+1)^2 = t^5 + t^4 + 2t^3 + 2t^2 + t + 1
  CHECK(theorem4.expand() == from_coeffs({1, 1, 2, 2, 1, 1}));

  CHECK_THROWS_AS(FactoredForm(std::map<long, Int>{{1, -1}}).expand(), NotAPolynomial);
  CHECK(FactoredForm().expand() == IntPoly::one());
}

TEST_CASE("factored form exponent bookkeeping") {
  FactoredForm f;
  f.add_exponent(6, 2);
  f.add_exponent(6, -2);
  CHECK(f == FactoredForm());
  f.add_exponent(4, 1);
  CHECK(f.exponent(4) == 1);
  CHECK(f.exponent(5) == 0);

  const FactoredForm g(std::map<long, Int>{{6, 1}, {2, -1}});
  // Phi multiplicities: (t^6-1)/(t^2-1) = Phi_3 Phi_6.
  const auto mult = g.cyclotomic_multiplicities();
  CHECK(mult == std::map<long, Int>{{3, 1}, {6, 1}});
  IntPoly direct = IntPoly::one();
  for (const auto& [d, e] : mult) direct = direct * cyclotomic(d).pow(e.get_ui());
  CHECK(direct == g.expand());
}

TEST_CASE("square substitution") {
  CHECK(substitute_square(FactoredForm(std::map<long, Int>{{2, 1}})) ==
        FactoredForm(std::map<long, Int>{{1, 2}}));
  CHECK(substitute_square(FactoredForm(std::map<long, Int>{{3, 1}})) ==
        FactoredForm(std::map<long, Int>{{3, 1}}));
}

TEST_CASE("negate substitution") {
  CHECK(substitute_negate(FactoredForm(std::map<long, Int>{{1, 1}})) ==
        FactoredForm(std::map<long, Int>{{2, 1}, {1, -1}}));
  CHECK(substitute_negate(FactoredForm(std::map<long, Int>{{2, 5}})) ==
        FactoredForm(std::map<long, Int>{{2, 5}}));
  // char(-M) for M = I_2: (t-1)^2 -> (t+1)^2.
  const FactoredForm id2(std::map<long, Int>{{1, 2}});
  CHECK(substitute_negate(id2).expand() == from_coeffs({1, 2, 1}));
}

TEST_CASE("substitutions track matrix squares and negations exactly") {
  // For diag(zeta) of finite order the rules are char-poly identities; spot
  // check on M = companion of t^6-1: M^2 has char poly (t^3-1)^2, -M has
  // char poly (t^6-1) again (6 even).
  const FactoredForm m(std::map<long, Int>{{6, 1}});
  CHECK(substitute_square(m) == FactoredForm(std::map<long, Int>{{3, 2}}));
  CHECK(substitute_negate(m) == m);
}

TEST_CASE("polynomial printing") {
  CHECK(from_coeffs({1, 1, 2, 2, 1, 1}).to_string() ==
        "1 + t + 2*t^2 + 2*t^3 + t^4 + t^5");
  CHECK(from_coeffs({-1, 0, 1}).to_string() == "-1 + t^2");
  CHECK(IntPoly().to_string() == "0");
}
