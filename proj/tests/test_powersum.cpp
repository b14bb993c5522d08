#include <catch2/catch_amalgamated.hpp>

#include "tamcox/powersum.hpp"

using namespace tamcox;

namespace {

Partition parts(std::vector<int> v) { return Partition(std::move(v)); }

}  // namespace

TEST_CASE("partitions") {
  CHECK(parts({2, 1}).weight() == 3);
  CHECK(Partition().weight() == 0);
  CHECK(parts({3, 3, 1}).length() == 3);
  CHECK_THROWS_AS(parts({1, 2}), Error);
  CHECK_THROWS_AS(parts({0}), Error);
  CHECK(parts({2}).merged_with(parts({3, 1})) == parts({3, 2, 1}));
  CHECK(parts({2, 1}).stretched(3) == parts({6, 3}));
  CHECK(Partition::rectangle(2, 3) == parts({2, 2, 2}));

  SECTION("enumeration counts match the partition function") {
    const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 0; n <= 12; ++n) CHECK(partitions_of(n).size() == p[n]);
  }

  SECTION("centralizer orders") {
    CHECK(z_of(Partition()) == 1);
    CHECK(z_of(parts({1, 1, 1})) == 6);   // 1^3: 3! = 6
    CHECK(z_of(parts({2, 1})) == 2);
    CHECK(z_of(parts({3})) == 3);
    CHECK(z_of(parts({2, 2})) == 8);      // 2^2 * 2!
  }
}

TEST_CASE("power sum algebra") {
  const long N = 6;
  const PowerSumPoly p1 = PowerSumPoly::p(1, N);
  const PowerSumPoly p2 = PowerSumPoly::p(2, N);

  PowerSumPoly p11(N);
  p11.add_term(parts({1, 1}), 1);
  CHECK(p1 * p1 == p11);

  // p_2 * p_{(2,1)} = p_{(2,2,1)}
  PowerSumPoly p21(N);
  p21.add_term(parts({2, 1}), 1);
  PowerSumPoly p221(N);
  p221.add_term(parts({2, 2, 1}), 1);
  CHECK(p2 * p21 == p221);

  CHECK(((p1 + p2) * PowerSumPoly::zero(N)).is_zero());
  CHECK_THROWS_AS(p1 + PowerSumPoly::p(1, N + 1), TruncationMismatch);

  SECTION("terms beyond the truncation degree are dropped") {
    const PowerSumPoly high = PowerSumPoly::p(N, N);
    CHECK((high * high).is_zero());
  }
}

TEST_CASE("plethysm on generators") {
  const long N = 8;
  CHECK(plethysm(PowerSumPoly::p(2, N), PowerSumPoly::p(3, N)) == PowerSumPoly::p(6, N));
  CHECK(plethysm(PowerSumPoly::p(2, N), PowerSumPoly::p(1, N) + PowerSumPoly::p(2, N)) ==
        PowerSumPoly::p(2, N) + PowerSumPoly::p(4, N));
  CHECK_THROWS_AS(plethysm(PowerSumPoly::p(2, N), PowerSumPoly::one(N)), ConstantTermError);
}

TEST_CASE("named series low-degree values") {
  const long N = 6;

  SECTION("Lie degree 2 is (p_1^2 - p_2)/2") {
    const PowerSumPoly lie = lie_series(N);
    CHECK(lie.coeff(parts({1, 1})) == Rat(1, 2));
    CHECK(lie.coeff(parts({2})) == Rat(-1, 2));
  }

  SECTION("Brace degree 3 is 2 p_1^3") {
    CHECK(brace_series(N).coeff(parts({1, 1, 1})) == 2);
  }

  SECTION("Z degree 2 is -p_1^2") {
    const PowerSumPoly z = z_series(N);
    CHECK(z.coeff(parts({1, 1})) == -1);
    CHECK(z.coeff(parts({1})) == 1);
    CHECK(z.coeff(parts({2})) == 0);
  }

  SECTION("Com is the sum of complete homogeneous functions") {
    const PowerSumPoly com = com_series(N);
    CHECK(com.coeff(parts({1})) == 1);
    CHECK(com.coeff(parts({1, 1})) == Rat(1, 2));
    CHECK(com.coeff(parts({2})) == Rat(1, 2));
    for (long n = 1; n <= N; ++n) CHECK(com.invariants_dim(n) == 1);
  }

  SECTION("closed plethysm forms at low degree") {
    const PowerSumPoly lb = lie_brace_closed(N);
    CHECK(lb.coeff(parts({1})) == 1);
    CHECK(lb.coeff(parts({1, 1})) == Rat(3, 2));
    CHECK(lb.coeff(parts({2})) == Rat(-1, 2));
    const PowerSumPoly lz = lie_z_closed(N);
    CHECK(lz.coeff(parts({1})) == 1);
  }
}

TEST_CASE("plethysm agreement with the closed forms") {
  const long N = 12;
  const PowerSumPoly lie = lie_series(N);
  CHECK(plethysm(lie, brace_series(N)) == lie_brace_closed(N));
  CHECK(plethysm(lie, z_series(N)) == lie_z_closed(N));
}

TEST_CASE("operadic inversion: (1 + Com) o Lie is the geometric series") {
  const long N = 12;
  const PowerSumPoly composed =
      plethysm(PowerSumPoly::one(N) + com_series(N), lie_series(N));
  PowerSumPoly expected = PowerSumPoly::one(N);
  for (long n = 1; n <= N; ++n) expected.add_term(Partition::rectangle(1, static_cast<int>(n)), 1);
  CHECK(composed == expected);
}

TEST_CASE("invariant dimensions recover the integer sequences") {
  const long N = 20;
  const PowerSumPoly lb = lie_brace_closed(N);
  const PowerSumPoly lz = lie_z_closed(N);
  for (long n = 1; n <= N; ++n) {
    CHECK(lb.invariants_dim(n) == Rat(a_val(n)));
    CHECK(lz.invariants_dim(n) == Rat(b_val(n)));
  }
  CHECK(lb.invariants_dim(4) == 8);
  CHECK(lz.invariants_dim(7) == -3);
}

TEST_CASE("denominators divide centralizer orders") {
  // No floating point anywhere: every coefficient is an exact rational whose
  // denominator divides z_lambda-type products.
  const long N = 10;
  for (const PowerSumPoly& f : {lie_series(N), brace_series(N), z_series(N), com_series(N),
                                lie_brace_closed(N), lie_z_closed(N)}) {
    for (long n = 0; n <= N; ++n) {
      for (const auto& [lam, c] : f.degree_terms(n)) {
        const Int den = c.get_den();
        CHECK(z_of(lam) % den == 0);
      }
    }
  }
}

TEST_CASE("dendriform character") {
  CHECK(dend_character(1) == PowerSumPoly::p(1, 1));

  SECTION("degree 2 is (p_1^2 - p_2)/2") {
    const PowerSumPoly d2 = dend_character(2);
    CHECK(d2.coeff(parts({1, 1})) == Rat(1, 2));
    CHECK(d2.coeff(parts({2})) == Rat(-1, 2));
  }

  SECTION("invariant dimension is the orbit-invariant count") {
    // (1/n) sum_k chi(t^k) for the virtual character [2,-1,-1] at n=3.
    CHECK(dend_character(3).invariants_dim(3) == 0);
    CHECK(dend_character(1).invariants_dim(1) == 1);
    CHECK(dend_character(5).invariants_dim(5) == 2);
  }
}
