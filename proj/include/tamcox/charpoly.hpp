#pragma once

// Two independent exact routes to det(tI - M):
//   * Berkowitz — division-free, works for any square integer matrix,
//     O(dim^4) multiplications; the oracle route.
//   * trace method — for matrices of verified finite order k: eigenvalues
//     are k-th roots of unity, so tr(M^j) determines the cyclotomic
//     multiplicities through Ramanujan sums; needs only k matrix products.

#include <map>
#include <string>
#include <vector>

#include "tamcox/arith.hpp"
#include "tamcox/errors.hpp"
#include "tamcox/matrix.hpp"
#include "tamcox/poly.hpp"

namespace tamcox {

// Monic char poly det(tI - M) by the Berkowitz iteration over leading
// principal submatrices.
inline IntPoly charpoly_berkowitz(const MatZ& m) {
  const long n = m.rows();
  if (n != m.cols()) throw Error("charpoly_berkowitz: non-square matrix");
  if (n == 0) return IntPoly::one();

  // Coefficients in descending degree; starts as t - m[0][0].
  std::vector<Int> v{Int(1), -m.at(0, 0)};
  std::vector<Int> w, mw, q;
  for (long r = 2; r <= n; ++r) {
    const long s = r - 1;  // size of the principal block above row r-1
    // q[j] = R * M^j * S for j = 0..s-1, with M the s x s principal block,
    // R the left part of row r-1, S the top part of column r-1.
    q.assign(static_cast<std::size_t>(s), Int(0));
    w.resize(static_cast<std::size_t>(s));
    for (long i = 0; i < s; ++i) w[static_cast<std::size_t>(i)] = m.at(i, s);
    for (long j = 0; j < s; ++j) {
      Int dot = 0;
      for (long i = 0; i < s; ++i) {
        mpz_addmul(dot.get_mpz_t(), m.at(s, i).get_mpz_t(),
                   w[static_cast<std::size_t>(i)].get_mpz_t());
      }
      q[static_cast<std::size_t>(j)] = dot;
      if (j + 1 < s) {
        mw.assign(static_cast<std::size_t>(s), Int(0));
        for (long i = 0; i < s; ++i) {
          for (long k = 0; k < s; ++k) {
            mpz_addmul(mw[static_cast<std::size_t>(i)].get_mpz_t(), m.at(i, k).get_mpz_t(),
                       w[static_cast<std::size_t>(k)].get_mpz_t());
          }
        }
        w.swap(mw);
      }
    }
    // Toeplitz column c = (1, -m[r-1][r-1], -q_0, ..., -q_{s-1}); the new
    // coefficient vector is the lower-triangular Toeplitz product T(c) * v.
    std::vector<Int> c(static_cast<std::size_t>(r) + 1);
    c[0] = 1;
    c[1] = -m.at(s, s);
    for (long j = 0; j < s; ++j) c[static_cast<std::size_t>(j) + 2] = -q[static_cast<std::size_t>(j)];
    std::vector<Int> nv(static_cast<std::size_t>(r) + 1, Int(0));
    for (long i = 0; i <= r; ++i) {
      Int acc = 0;
      const long jmax = std::min<long>(i, r - 1);
      for (long j = 0; j <= jmax; ++j) {
        mpz_addmul(acc.get_mpz_t(), c[static_cast<std::size_t>(i - j)].get_mpz_t(),
                   v[static_cast<std::size_t>(j)].get_mpz_t());
      }
      nv[static_cast<std::size_t>(i)] = acc;
    }
    v.swap(nv);
  }
  std::reverse(v.begin(), v.end());
  return IntPoly(std::move(v));
}

struct FiniteOrderCharPoly {
  IntPoly poly;
  // Multiplicity of the cyclotomic factor Phi_d per divisor d of the bound.
  std::map<long, long> phi_multiplicities;
  long order_bound = 0;
  // Least j >= 1 with M^j = I (the measured multiplicative order).
  long measured_order = 0;
  std::vector<Int> traces;  // tr(M^j) for j = 0..order_bound-1
};

// Char poly of a matrix M with M^order_bound = I (verified; NotFiniteOrder
// otherwise). Solves tr(M^j) = sum_{d | k} m_d c_d(j) for the cyclotomic
// multiplicities m_d, one equation per gcd class, by exact elimination.
inline FiniteOrderCharPoly charpoly_finite_order(const MatZ& m, long order_bound) {
  const long n = m.rows();
  if (n != m.cols()) throw Error("charpoly_finite_order: non-square matrix");
  if (order_bound < 1) throw Error("charpoly_finite_order: order bound must be positive");

  FiniteOrderCharPoly out;
  out.order_bound = order_bound;
  out.traces.reserve(static_cast<std::size_t>(order_bound));
  out.traces.push_back(Int(n));

  MatZ p = MatZ::identity(n);
  for (long j = 1; j <= order_bound; ++j) {
    p = p * m;
    if (out.measured_order == 0 && p.is_identity()) out.measured_order = j;
    if (j < order_bound) out.traces.push_back(p.trace());
  }
  if (!p.is_identity()) {
    throw NotFiniteOrder("charpoly_finite_order: M^" + std::to_string(order_bound) +
                         " != I");
  }

  const std::vector<long> divs = divisors(order_bound);
  const long nd = static_cast<long>(divs.size());
  // One equation per gcd class g | k, evaluated at j = g (j = 0 for g = k).
  MatQ a(nd, nd);
  std::vector<Rat> rhs(static_cast<std::size_t>(nd));
  for (long gi = 0; gi < nd; ++gi) {
    const long g = divs[static_cast<std::size_t>(gi)];
    const long j = g % order_bound;
    for (long di = 0; di < nd; ++di) {
      a.at(gi, di) = Rat(ramanujan_sum(divs[static_cast<std::size_t>(di)], j));
    }
    rhs[static_cast<std::size_t>(gi)] = Rat(out.traces[static_cast<std::size_t>(j)]);
  }
  const std::vector<Rat> sol = solve_linear(a, rhs);

  Int degree_check = 0;
  for (long di = 0; di < nd; ++di) {
    const long d = divs[static_cast<std::size_t>(di)];
    const Rat& md = sol[static_cast<std::size_t>(di)];
    if (md.get_den() != 1) {
      throw NonIntegerMultiplicity("charpoly_finite_order: multiplicity of Phi_" +
                                   std::to_string(d) + " is " + md.get_str());
    }
    if (md < 0) {
      throw NonIntegerMultiplicity("charpoly_finite_order: negative multiplicity of Phi_" +
                                   std::to_string(d));
    }
    if (md != 0) {
      if (!md.get_num().fits_slong_p()) throw Error("charpoly_finite_order: multiplicity overflow");
      out.phi_multiplicities[d] = md.get_num().get_si();
      degree_check += md.get_num() * euler_phi(d);
    }
  }
  if (degree_check != n) {
    throw NonIntegerMultiplicity("charpoly_finite_order: multiplicities sum to degree " +
                                 degree_check.get_str() + ", expected " + std::to_string(n));
  }
  // All order_bound trace equations must hold, not just the solved ones.
  for (long j = 0; j < order_bound; ++j) {
    Int lhs = 0;
    for (const auto& [d, md] : out.phi_multiplicities) lhs += Int(md) * ramanujan_sum(d, j);
    if (lhs != out.traces[static_cast<std::size_t>(j)]) {
      throw NonIntegerMultiplicity("charpoly_finite_order: trace equation failed at j=" +
                                   std::to_string(j));
    }
  }

  out.poly = IntPoly::one();
  for (const auto& [d, md] : out.phi_multiplicities) {
    out.poly = out.poly * cyclotomic(d).pow(static_cast<unsigned long>(md));
  }
  return out;
}

}  // namespace tamcox
