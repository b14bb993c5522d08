#pragma once

// Cyclic-group modules M_{n,d} = Q[t]/(t^d-1), their characters, induction
// to the symmetric group chi'_{n,d} = (d/n) sum_{l | n/d} phi(l) p_l^{n/l},
// the triangularity/injectivity check over divisors, and the reconciliation
// of the virtual dendriform character with the traces of tau.

#include <algorithm>
#include <vector>

#include "tamcox/arith.hpp"
#include "tamcox/errors.hpp"
#include "tamcox/matrix.hpp"
#include "tamcox/powersum.hpp"
#include "tamcox/spectra.hpp"
#include "tamcox/tamari.hpp"

namespace tamcox {

// Character of a C_n-module as the full value vector chi(t^k), k = 0..n-1.
struct CyclicCharacter {
  long n = 0;
  std::vector<Int> values;

  Int dimension() const { return values.empty() ? Int(0) : values[0]; }

  friend bool operator==(const CyclicCharacter& a, const CyclicCharacter& b) {
    return a.n == b.n && a.values == b.values;
  }
  friend bool operator!=(const CyclicCharacter& a, const CyclicCharacter& b) { return !(a == b); }
};

// chi_{n,d}(t^k) = d if d | k, else 0.
inline CyclicCharacter m_nd_character(long n, long d) {
  if (n < 1) throw Error("m_nd_character: n must be positive");
  if (d < 1 || n % d != 0) {
    throw NotADivisor("m_nd_character: " + std::to_string(d) + " does not divide " +
                      std::to_string(n));
  }
  CyclicCharacter chi;
  chi.n = n;
  chi.values.assign(static_cast<std::size_t>(n), Int(0));
  for (long k = 0; k < n; k += d) chi.values[static_cast<std::size_t>(k)] = d;
  return chi;
}

// Induced character chi'_{n,d} as a degree-n symmetric function.
inline PowerSumPoly induce_to_symmetric(long n, long d) {
  if (n < 1) throw Error("induce_to_symmetric: n must be positive");
  if (d < 1 || n % d != 0) {
    throw NotADivisor("induce_to_symmetric: " + std::to_string(d) + " does not divide " +
                      std::to_string(n));
  }
  PowerSumPoly f(n);
  for (long l : divisors(n / d)) {
    f.add_term(Partition::rectangle(static_cast<int>(l), static_cast<int>(n / l)),
               Rat(d) * euler_phi(l) / n);
  }
  return f;
}

// Linear independence of the induced characters over divisors of n, by
// triangularity: the p_l^{n/l} coefficient of chi'_{n,d} vanishes unless
// l | n/d and is phi(n/d) d/n != 0 at l = n/d.
inline bool injectivity_check(long n) {
  if (n < 1) throw Error("injectivity_check: n must be positive");
  const std::vector<long> divs = divisors(n);
  const long nd = static_cast<long>(divs.size());
  // Row i: chi'_{n, n/m_i} where m_i is the i-th divisor ascending; column
  // j: coefficient on p_{m_j}^{n/m_j}. Triangular with nonzero diagonal in
  // this ordering iff the characters are independent.
  for (long i = 0; i < nd; ++i) {
    const long m = divs[static_cast<std::size_t>(i)];
    const PowerSumPoly chi = induce_to_symmetric(n, n / m);
    // The support must lie inside the rectangle monomials p_l^{n/l}.
    long support = 0;
    for (const auto& [lam, c] : chi.degree_terms(n)) {
      (void)c;
      const auto& parts = lam.parts();
      if (std::count(parts.begin(), parts.end(), parts[0]) != lam.length())
        return false;
      ++support;
    }
    long nonzero = 0;
    for (long j = 0; j < nd; ++j) {
      const long l = divs[static_cast<std::size_t>(j)];
      const Rat c = chi.coeff(Partition::rectangle(static_cast<int>(l), static_cast<int>(n / l)));
      const bool should_vanish = (m % l) != 0;  // l must divide m = n/d
      if (should_vanish && c != 0) return false;
      if (j > i && c != 0) return false;  // strictly upper part of the triangle
      if (j == i && c == 0) return false;  // diagonal must be nonzero
      if (c != 0) ++nonzero;
    }
    if (nonzero != support) return false;
  }
  return true;
}

// sum_{d|n} a_d chi'_{n,d} = (1/2n) sum_{d|n} phi(d) C(2n/d,n/d) p_d^{n/d}.
inline bool verify_module_identity(long n) {
  if (n < 1) throw Error("verify_module_identity: n must be positive");
  PowerSumPoly lhs(n);
  for (long d : divisors(n)) {
    lhs = lhs + induce_to_symmetric(n, d).scale(Rat(a_val(d)));
  }
  PowerSumPoly rhs(n);
  for (long d : divisors(n)) {
    rhs.add_term(Partition::rectangle(static_cast<int>(d), static_cast<int>(n / d)),
                 Rat(euler_phi(d)) * Rat(binomial(2 * n / d, n / d)) / (2 * n));
  }
  return lhs == rhs;
}

// The virtual character 2 c_{n-1} chi_{n,n} - sum_{d|n} a_d chi_{n,d}.
inline CyclicCharacter dend_virtual_character(long n) {
  if (n < 1) throw Error("dend_virtual_character: n must be positive");
  CyclicCharacter chi;
  chi.n = n;
  chi.values.assign(static_cast<std::size_t>(n), Int(0));
  const Int two_c = 2 * catalan(n - 1);
  const CyclicCharacter reg = m_nd_character(n, n);
  for (long k = 0; k < n; ++k) {
    chi.values[static_cast<std::size_t>(k)] = two_c * reg.values[static_cast<std::size_t>(k)];
  }
  for (long d : divisors(n)) {
    const Int a = a_val(d);
    const CyclicCharacter part = m_nd_character(n, d);
    for (long k = 0; k < n; ++k) {
      chi.values[static_cast<std::size_t>(k)] -= a * part.values[static_cast<std::size_t>(k)];
    }
  }
  return chi;
}

struct DendConsistency {
  long n = 0;
  CyclicCharacter character;
  bool dimension_ok = false;   // value at t^0 equals c_{n-1}
  bool traces_checked = false; // tau traces compared (dimension within cap)
  bool traces_ok = true;
  std::vector<Int> tau_traces;

  bool ok() const { return dimension_ok && (!traces_checked || traces_ok); }
  explicit operator bool() const { return ok(); }
};

// End-to-end reconciliation: the virtual-character values against the
// traces of tau^k on the Tamari lattice with n leaves.
inline DendConsistency dend_consistency(long n, const SpectraOptions& opt = {}) {
  DendConsistency out;
  out.n = n;
  out.character = dend_virtual_character(n);
  out.dimension_ok = out.character.dimension() == catalan(n - 1);

  if (n >= 2 && catalan(n - 1) <= opt.max_dim) {
    out.traces_checked = true;
    const TamariLattice lat = TamariLattice::build(n, opt.max_dim);
    const MatZ tau = tau_matrix(lat);
    MatZ p = MatZ::identity(tau.rows());
    for (long k = 0; k < n; ++k) {
      out.tau_traces.push_back(p.trace());
      if (out.tau_traces.back() != out.character.values[static_cast<std::size_t>(k)]) {
        out.traces_ok = false;
      }
      if (k + 1 < n) p = p * tau;
    }
  }
  return out;
}

}  // namespace tamcox
